"""
Maximal dimension of families of subspaces stabilized by one element.

For a semisimple element with eigenspaces of dimensions e_1..e_p, the
m-dimensional stable subspaces form a variety of dimension
max sum f_i (e_i - f_i) over sum f_i = m. For a nilpotent element with
b_k Jordan blocks of size k the dimension is
max sum_p gamma_p (beta_p - gamma_p) over weakly decreasing gamma with
gamma_p <= beta_p = b_q + ... + b_p and sum gamma_p = m.
"""

from typing import Dict, List, Mapping, Sequence, Tuple, Union

from .partitions import Partition

BlockCounts = Union[Partition, Mapping[int, int]]


def _check_range(m: int, n: int) -> None:
    if not 0 <= m <= n:
        raise ValueError(f"m must lie in [0, {n}], got {m}")


def _as_partition(b: BlockCounts) -> Partition:
    if isinstance(b, Partition):
        return b
    return Partition.from_block_counts(dict(b))


def max_semisimple(e: Sequence[int], m: int) -> int:
    """
    Maximize sum f_i (e_i - f_i) over 0 <= f_i <= e_i with sum f_i = m.

    Dynamic programming over prefixes of e.

    Example:
        >>> max_semisimple([9, 6], 3)
        19
    """
    e = [int(x) for x in e]
    _check_range(m, sum(e))
    neg = float("-inf")
    best = [0] + [neg] * m
    for size in e:
        step = [neg] * (m + 1)
        for used, value in enumerate(best):
            if value == neg:
                continue
            for f in range(0, min(size, m - used) + 1):
                candidate = value + f * (size - f)
                if candidate > step[used + f]:
                    step[used + f] = candidate
        best = step
    return int(best[m])


def semisimple_profiles(e: Sequence[int], m: int) -> List[Tuple[int, ...]]:
    """All (f_1, ..., f_p) reaching max_semisimple(e, m)."""
    e = [int(x) for x in e]
    target = max_semisimple(e, m)
    suffix_cap = [0] * (len(e) + 1)
    for i in range(len(e) - 1, -1, -1):
        suffix_cap[i] = suffix_cap[i + 1] + e[i]
    profiles: List[Tuple[int, ...]] = []

    def walk(i: int, left: int, acc: int, chosen: List[int]) -> None:
        if i == len(e):
            if left == 0 and acc == target:
                profiles.append(tuple(chosen))
            return
        for f in range(min(e[i], left), -1, -1):
            if left - f > suffix_cap[i + 1]:
                break
            chosen.append(f)
            walk(i + 1, left - f, acc + f * (e[i] - f), chosen)
            chosen.pop()

    walk(0, m, 0, [])
    return profiles


def _unipotent_search(beta: List[int], m: int, collect: bool) -> Tuple[int, List[Tuple[int, ...]]]:
    q = len(beta)
    # concavity bound: gamma (beta - gamma) <= beta^2 / 4
    tail_bound = [0] * (q + 1)
    for p in range(q - 1, -1, -1):
        tail_bound[p] = tail_bound[p + 1] + beta[p] * beta[p] // 4
    best = -1
    found: List[Tuple[int, ...]] = []

    def walk(p: int, left: int, cap: int, acc: int, chosen: List[int]) -> None:
        nonlocal best, found
        if left == 0:
            value = acc
            if value > best:
                best = value
                found = [tuple(chosen + [0] * (q - p))] if collect else []
            elif value == best and collect:
                found.append(tuple(chosen + [0] * (q - p)))
            return
        if p == q:
            return
        if acc + tail_bound[p] < best or (acc + tail_bound[p] == best and not collect):
            return
        top = min(cap, beta[p], left)
        for g in range(top, 0, -1):
            # remaining mass must fit below g in the later slots
            room = sum(min(g, beta[r]) for r in range(p + 1, q))
            if left - g > room:
                break
            chosen.append(g)
            walk(p + 1, left - g, g, acc + g * (beta[p] - g), chosen)
            chosen.pop()

    walk(0, m, m, 0, [])
    return best, found


def max_unipotent(b: BlockCounts, m: int) -> int:
    """
    Maximize sum_p gamma_p (beta_p - gamma_p) over admissible gamma.

    Args:
        b: Jordan type, or map block size -> count
        m: subspace dimension

    Example:
        >>> max_unipotent(Partition((9, 5, 1)), 3)
        4
    """
    jordan = _as_partition(b)
    _check_range(m, jordan.size)
    if m == 0:
        return 0
    best, _ = _unipotent_search(jordan.partial_sums(), m, collect=False)
    return best


def unipotent_profiles(b: BlockCounts, m: int) -> List[Tuple[int, ...]]:
    """All (gamma_1, ..., gamma_q) reaching max_unipotent(b, m)."""
    jordan = _as_partition(b)
    _check_range(m, jordan.size)
    if m == 0:
        return [tuple([0] * len(jordan.partial_sums()))]
    _, found = _unipotent_search(jordan.partial_sums(), m, collect=True)
    return sorted(set(found), reverse=True)


def unipotent_flag_count(b: BlockCounts, m: int) -> int:
    """
    Independent count of the same maximum through restriction types.

    A stable subspace L has a Jordan type c for the restricted nilpotent;
    its choices contribute sum_p c_p (x_p - y_p) parameters where
    x_p = sum_k min(k, p) b_k and y_p = sum_k min(k, p) c_k. Enumerates all
    c with sum p c_p = m and c_q + ... + c_p <= beta_p.
    """
    jordan = _as_partition(b)
    _check_range(m, jordan.size)
    counts: Dict[int, int] = jordan.block_counts()
    beta = jordan.partial_sums()
    q = len(beta)
    x = [sum(min(k, p) * cnt for k, cnt in counts.items()) for p in range(q + 1)]
    best = -1

    def walk(p: int, left: int, c: Dict[int, int], tail: int) -> None:
        nonlocal best
        # p runs from q down to 1; tail = c_q + ... + c_{p+1}
        if p == 0:
            if left == 0:
                y = [sum(min(k, r) * cnt for k, cnt in c.items()) for r in range(q + 1)]
                value = sum(cnt * (x[k] - y[k]) for k, cnt in c.items())
                best = max(best, value)
            return
        for cp in range(left // p, -1, -1):
            if tail + cp > beta[p - 1]:
                continue
            c[p] = cp
            walk(p - 1, left - cp * p, c, tail + cp)
        c.pop(p, None)

    walk(q, m, {}, 0)
    return best
