"""Orbit enumeration for the pair action, three independent ways.

The engines work on packed state indices: a breadth-first visited sweep, a
canonical-form count (a state is counted when no matrix image has a smaller
index), and class-equation averaging of fixed-point counts.  The three
routes share no code beyond the index packing, which is the point: they are
meant to disagree loudly if any one of them is wrong.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .budget import check_budget
from .formulas import exact_div
from .residues import (
    GroupSpec,
    PairState,
    apply_s,
    apply_t,
    enumerate_sl2,
    state_from_index,
    state_index,
    vector_rank,
    vector_unrank,
)

# Above this many states the visited map is bit-packed (<= 32 MiB at the
# default budget); below it a plain bytearray is faster.
_BYTE_MAP_LIMIT = 1 << 24


@dataclass(frozen=True, slots=True)
class OrbitSummary:
    """One equivalence class: minimal member, size, stabilizer order.

    stabilizer_order is p(p^2 - 1) / size for uniform prime specs and None
    otherwise (the matrix group needs a field and a positive dimension).
    """

    representative: PairState
    size: int
    stabilizer_order: int | None


@dataclass(slots=True)
class CensusReport:
    spec: GroupSpec
    method: str
    orbit_count: int
    summaries: list[OrbitSummary] | None = None


def _require_uniform_prime(spec: GroupSpec) -> None:
    if not spec.is_uniform_prime:
        raise ValueError(
            f"operation needs a uniform prime spec Z_p^n, got moduli {spec.moduli}")


def _index_moves(spec: GroupSpec):
    """Return (s_of, t_of) acting on packed state indices."""
    n = spec.n
    moduli = spec.moduli
    if moduli and all(d == 2 for d in moduli):
        mask = (1 << n) - 1

        def s_of(i: int) -> int:
            # -g == g mod 2
            return ((i & mask) << n) | (i >> n)

        def t_of(i: int) -> int:
            g = i >> n
            return (g << n) | ((i & mask) ^ g)

        return s_of, t_of

    order = spec.group_order

    def s_of(i: int) -> int:
        gr, kr = divmod(i, order)
        g = vector_unrank(gr, moduli)
        neg = tuple((d - e) % d for e, d in zip(g, moduli))
        return kr * order + vector_rank(neg, moduli)

    def t_of(i: int) -> int:
        gr, kr = divmod(i, order)
        g = vector_unrank(gr, moduli)
        k = vector_unrank(kr, moduli)
        ksum = tuple((x + y) % d for x, y, d in zip(k, g, moduli))
        return gr * order + vector_rank(ksum, moduli)

    return s_of, t_of


def orbit_of(s: PairState) -> set[PairState]:
    """Breadth-first closure of {s} under the two moves."""
    seen = {s}
    queue = deque([s])
    while queue:
        cur = queue.popleft()
        for nxt in (apply_s(cur), apply_t(cur)):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def _bfs_census(spec: GroupSpec, budget: int | None, collect: bool):
    """Visited sweep in index order.

    Each unvisited index starts one orbit BFS; the sweep start is therefore
    the minimal index of its orbit.  Returns (count, [(rep, size)] or None).
    """
    total = spec.state_count
    check_budget(total, budget)
    s_of, t_of = _index_moves(spec)
    orbits: list[tuple[int, int]] | None = [] if collect else None
    count = 0
    if total <= _BYTE_MAP_LIMIT:
        visited = bytearray(total)
        for start in range(total):
            if visited[start]:
                continue
            count += 1
            size = 0
            visited[start] = 1
            queue = deque([start])
            while queue:
                i = queue.popleft()
                size += 1
                for j in (s_of(i), t_of(i)):
                    if not visited[j]:
                        visited[j] = 1
                        queue.append(j)
            if collect:
                orbits.append((start, size))
    else:
        visited = bytearray((total + 7) >> 3)
        for start in range(total):
            if visited[start >> 3] & (1 << (start & 7)):
                continue
            count += 1
            size = 0
            visited[start >> 3] |= 1 << (start & 7)
            queue = deque([start])
            while queue:
                i = queue.popleft()
                size += 1
                for j in (s_of(i), t_of(i)):
                    if not visited[j >> 3] & (1 << (j & 7)):
                        visited[j >> 3] |= 1 << (j & 7)
                        queue.append(j)
            if collect:
                orbits.append((start, size))
    return count, orbits


def count_orbits_bfs(spec: GroupSpec, budget: int | None = None,
                     include_summaries: bool = False) -> CensusReport:
    """Exact orbit count by visited-sweep BFS; works for any moduli."""
    count, pairs = _bfs_census(spec, budget, include_summaries)
    summaries = None
    if include_summaries:
        summaries = [_summary(rep, size, spec) for rep, size in pairs]
    return CensusReport(spec, "bfs", count, summaries)


def _summary(rep: int, size: int, spec: GroupSpec) -> OrbitSummary:
    p = spec.prime
    stab = exact_div(p * (p * p - 1), size) if p is not None else None
    return OrbitSummary(state_from_index(rep, spec), size, stab)


@lru_cache(maxsize=None)
def _canonical_engine(spec: GroupSpec):
    """Return (canon, is_min) over packed indices for a uniform prime spec.

    canon(i) is the least index in the full matrix orbit of i; is_min(i)
    short-circuits as soon as any image beats i.
    """
    n = spec.n
    if n == 0:
        return (lambda i: 0), (lambda i: True)
    p = spec.prime
    mats = enumerate_sl2(p)

    if p == 2:
        mask = (1 << n) - 1
        # Column selector code a*2 + c picks g, k, or g^k; 0 cannot occur.
        codes = [(m.a * 2 + m.c, m.b * 2 + m.d) for m in mats]

        def canon(i: int) -> int:
            g = i >> n
            k = i & mask
            vals = (0, k, g, g ^ k)
            best = i
            for cg, ck in codes:
                cand = (vals[cg] << n) | vals[ck]
                if cand < best:
                    best = cand
            return best

        def is_min(i: int) -> bool:
            g = i >> n
            k = i & mask
            vals = (0, k, g, g ^ k)
            for cg, ck in codes:
                if (vals[cg] << n) | vals[ck] < i:
                    return False
            return True

        return canon, is_min

    order = spec.group_order
    # contrib[j][row] is what row value g_i*p + k_i at the j-th least
    # significant position adds to the packed index.
    contrib = [[(p ** j) * ((r // p) * order + r % p) for r in range(p * p)]
               for j in range(n)]
    row_maps = []
    for m in mats:
        a, b, c, d = m.a, m.b, m.c, m.d
        row_maps.append([((a * gi + c * ki) % p) * p + (b * gi + d * ki) % p
                         for gi in range(p) for ki in range(p)])

    def decode_rows(i: int) -> list[int]:
        gr, kr = divmod(i, order)
        rows = []
        for _ in range(n):
            gr, gd = divmod(gr, p)
            kr, kd = divmod(kr, p)
            rows.append(gd * p + kd)
        return rows

    def canon(i: int) -> int:
        rows = decode_rows(i)
        rng = range(n)
        best = i
        for rmap in row_maps:
            cand = 0
            for j in rng:
                cand += contrib[j][rmap[rows[j]]]
            if cand < best:
                best = cand
        return best

    def is_min(i: int) -> bool:
        rows = decode_rows(i)
        rng = range(n)
        for rmap in row_maps:
            cand = 0
            for j in rng:
                cand += contrib[j][rmap[rows[j]]]
            if cand < i:
                return False
        return True

    return canon, is_min


def canonical_form(s: PairState) -> PairState:
    """Minimal matrix image of s under the packed-index order.

    Idempotent and constant on orbits, so it identifies an orbit.
    """
    _require_uniform_prime(s.spec)
    canon, _ = _canonical_engine(s.spec)
    return state_from_index(canon(state_index(s)), s.spec)


def count_orbits_canonical(spec: GroupSpec, budget: int | None = None) -> CensusReport:
    """Count states equal to their own canonical form; O(1) extra memory."""
    _require_uniform_prime(spec)
    check_budget(spec.state_count, budget)
    _, is_min = _canonical_engine(spec)
    count = sum(1 for i in range(spec.state_count) if is_min(i))
    return CensusReport(spec, "canonical", count)


def count_orbits_burnside(spec: GroupSpec) -> CensusReport:
    """Average fixed-point counts over the matrix group.

    A matrix fixes a state iff every row lies in the fixed space of the row
    action, so its fixed count is p^(n * (2 - rank(A - I))).  The averaged
    sum must divide exactly; a remainder is a hard error.
    """
    _require_uniform_prime(spec)
    n = spec.n
    if n == 0:
        return CensusReport(spec, "burnside", 1)
    p = spec.prime
    total = 0
    for m in enumerate_sl2(p):
        e00 = (m.a - 1) % p
        e01 = m.b
        e10 = m.c
        e11 = (m.d - 1) % p
        if not (e00 or e01 or e10 or e11):
            rank = 0
        elif (e00 * e11 - e01 * e10) % p == 0:
            rank = 1
        else:
            rank = 2
        total += p ** (n * (2 - rank))
    return CensusReport(spec, "burnside", exact_div(total, p * (p * p - 1)))


def orbit_summaries(spec: GroupSpec, budget: int | None = None) -> list[OrbitSummary]:
    """One summary per orbit, sorted by representative index."""
    _require_uniform_prime(spec)
    _, pairs = _bfs_census(spec, budget, True)
    return [_summary(rep, size, spec) for rep, size in pairs]
