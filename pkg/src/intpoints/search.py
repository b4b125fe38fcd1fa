"""Exhaustive search for plane integral point sets in general position.

The search anchors every point set at its diameter edge: p1 = (0,0) and
p2 = (d,0) where d is the largest distance (canonical form always puts it
first).  Every further point lies at integral distances a, b <= d from the
base points, which makes the triangle (d, a, b) strict and forces all
candidate points for one set to share a single square-free characteristic
k.  Candidate generation therefore runs per (d, k), and point sets are
cliques in the candidate compatibility graph, filtered by the exact
no-three-collinear and no-four-concyclic predicates and emitted once in
canonical form.

Writing u = a + b and v = a - b turns the characteristic of (d, a, b)
into the square-free part of (u^2 - d^2)(d^2 - v^2), so the u- and v-halves
can be decomposed independently (all prime factors are at most 3*d_max and
come from a sieve) and candidates for a fixed k are found by table lookup
instead of scanning all (a, b) pairs.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .arith import merge_squarefree, squarefree_part
from .pointset import DistanceMatrix, canonical_form

# ---------------------------------------------------------------------------
# smallest-prime-factor sieve, shared by all searches in the process
# ---------------------------------------------------------------------------

_SPF: list[int] = [0, 1]


def _spf_sieve(limit: int) -> list[int]:
    """Smallest prime factor for every integer up to ``limit`` (grows a cache)."""
    global _SPF
    if limit < len(_SPF):
        return _SPF
    spf = list(range(limit + 1))
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    _SPF = spf
    return spf


def _decompose_sieved(n: int, spf: list[int]) -> tuple[int, int]:
    """Square-free decomposition (k, s) with n = k*s**2, n within the sieve."""
    k = s = 1
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e & 1:
            k *= p
        s *= p ** (e >> 1)
    return k, s


def _tri_char_sieved(a: int, b: int, c: int, spf: list[int]) -> tuple[int, int]:
    """(k, s) of the Heron product of a strict triangle, factors sieved."""
    k, s = _decompose_sieved(a + b + c, spf)
    for f in (a + b - c, a - b + c, -a + b + c):
        fk, fs = _decompose_sieved(f, spf)
        k, s = merge_squarefree(k, s, fk, fs)
    return k, s


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CharFilter:
    """Characteristic restriction: everything, one value, or divisors of one."""

    kind: str = "any"  # "any" | "fixed" | "divisor"
    value: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("any", "fixed", "divisor"):
            raise ValueError(f"unknown characteristic filter kind {self.kind!r}")
        if self.kind == "any":
            if self.value is not None:
                raise ValueError("'any' filter takes no value")
        else:
            if self.value is None or self.value < 1:
                raise ValueError(f"filter value must be a positive integer, got {self.value}")
            if squarefree_part(self.value) != self.value:
                raise ValueError(f"filter value {self.value} is not square-free")

    @staticmethod
    def any_char() -> "CharFilter":
        return CharFilter("any")

    @staticmethod
    def fixed(k: int) -> "CharFilter":
        return CharFilter("fixed", k)

    @staticmethod
    def divisor_of(n: int) -> "CharFilter":
        return CharFilter("divisor", n)

    @staticmethod
    def parse(text: str) -> "CharFilter":
        text = text.strip()
        if text == "any":
            return CharFilter.any_char()
        if text.startswith("div:"):
            return CharFilter.divisor_of(int(text[4:]))
        return CharFilter.fixed(int(text))

    def admits(self, k: int) -> bool:
        if self.kind == "any":
            return True
        if self.kind == "fixed":
            return k == self.value
        return self.value % k == 0

    def __str__(self):
        if self.kind == "any":
            return "any"
        if self.kind == "fixed":
            return str(self.value)
        return f"div:{self.value}"


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one search run."""

    target_n: int
    d_min: int
    d_max: int
    char_filter: CharFilter = field(default_factory=CharFilter.any_char)
    require_general_position: bool = True
    cluster_mode: bool = False
    shard: tuple[int, int] = (0, 1)

    def __post_init__(self):
        if self.target_n < 3:
            raise ValueError(f"target size must be >= 3, got {self.target_n}")
        if not (1 <= self.d_min <= self.d_max):
            raise ValueError(f"need 1 <= d_min <= d_max, got [{self.d_min}, {self.d_max}]")
        index, total = self.shard
        if total < 1 or not (0 <= index < total):
            raise ValueError(f"invalid shard {self.shard}")
        if self.cluster_mode and self.char_filter.kind == "fixed" and self.char_filter.value != 1:
            raise ValueError(
                f"cluster mode needs characteristic 1, conflicting filter {self.char_filter}"
            )

    def effective_filter(self) -> CharFilter:
        """Cluster mode pins the characteristic to 1 (integral-coordinate sets)."""
        return CharFilter.fixed(1) if self.cluster_mode else self.char_filter


@dataclass(frozen=True)
class CandidatePoint:
    """A point at integral distances from both base points.

    Lies at ``(x, y_coeff*sqrt(k))`` with distance ``a`` to p1 = (0,0) and
    ``b`` to p2 = (d_base,0); the triangle (d_base, a, b) is strict with
    characteristic exactly ``k``, so ``y_coeff != 0``.
    """

    d_base: int
    k: int
    a: int
    b: int
    x: Fraction
    y_coeff: Fraction

    @property
    def sign(self) -> int:
        return 1 if self.y_coeff > 0 else -1


# ---------------------------------------------------------------------------
# triangle and candidate enumeration
# ---------------------------------------------------------------------------


def enumerate_triangles(
    d_max: int, char_filter: Optional[CharFilter] = None
) -> Iterator[tuple[int, int, int]]:
    """All integer triangles a >= b >= c with a <= d_max, strict inequalities.

    Streamed in lexicographically decreasing (a, b, c) order, optionally
    filtered by characteristic.
    """
    if d_max < 1:
        raise ValueError(f"d_max must be >= 1, got {d_max}")
    filt = char_filter or CharFilter.any_char()
    spf = _spf_sieve(3 * d_max) if filt.kind != "any" else None
    for a in range(d_max, 0, -1):
        for b in range(a, 0, -1):
            lo = max(1, a - b + 1)
            for c in range(b, lo - 1, -1):
                if spf is not None:
                    k, _ = _tri_char_sieved(a, b, c, spf)
                    if not filt.admits(k):
                        continue
                yield a, b, c


def _squarefree_divisors(n: int) -> list[int]:
    """All divisors of a square-free ``n``, ascending."""
    divs = [1]
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            divs += [d * p for d in divs]
        p += 1
    if m > 1:
        divs += [d * m for d in divs]
    return sorted(divs)


def _candidate_groups(
    d: int, cap_ab: int, char_filter: CharFilter
) -> dict[int, list[tuple[int, int, int, int]]]:
    """Raw candidates over base (0,0)-(d,0), grouped by characteristic.

    Each entry is ``(a, b, X, S)`` in coordinates scaled by 2d: the point is
    ``(X/(2d), (S/(2d))*sqrt(k))`` before sign choice.  ``cap_ab`` bounds the
    distances a, b to the base points.

    A fixed target characteristic k admits, for each u-part ka, exactly one
    v-part (the square-free part of ka*k), so fixed and divisor filters are
    answered by table lookup; a divisor filter expands into one lookup per
    divisor of its square-free bound.  Only the unrestricted filter scans
    every v.
    """
    spf = _spf_sieve(max(3 * d, d + 2 * cap_ab))
    d2 = d * d

    # decompositions of d^2 - v^2 for v in [0, d), split by parity of v
    by_kb: dict[int, tuple[list[int], list[int]]] = {}
    v_decomp: list[tuple[int, int]] = []
    for v in range(d):
        kv, sv = _decompose_sieved(d - v, spf)
        kw, sw = _decompose_sieved(d + v, spf)
        kb, sb = merge_squarefree(kv, sv, kw, sw)
        v_decomp.append((kb, sb))
        by_kb.setdefault(kb, ([], []))[v & 1].append(v)

    targets: Optional[list[int]] = None
    if char_filter.kind == "fixed":
        targets = [char_filter.value]
    elif char_filter.kind == "divisor":
        divisors = _squarefree_divisors(char_filter.value)
        if len(divisors) < d // 2:  # lookups beat scanning all v
            targets = divisors

    groups: dict[int, list[tuple[int, int, int, int]]] = {}

    for u in range(d + 1, 2 * cap_ab + 1):
        ku1, su1 = _decompose_sieved(u - d, spf)
        ku2, su2 = _decompose_sieved(u + d, spf)
        ka, sa = merge_squarefree(ku1, su1, ku2, su2)
        vlim = min(d - 1, u - 2, 2 * cap_ab - u)
        if vlim < 0:
            continue

        def emit(v: int) -> None:
            kb, sb = v_decomp[v]
            k, s = merge_squarefree(ka, sa, kb, sb)
            if not char_filter.admits(k):
                return
            a, b = (u + v) // 2, (u - v) // 2
            bucket = groups.setdefault(k, [])
            bucket.append((a, b, u * v + d2, s))
            if v:
                bucket.append((b, a, d2 - u * v, s))

        if targets is not None:
            for k in targets:
                g = math.gcd(ka, k)
                lists = by_kb.get((ka // g) * (k // g))
                if lists is None:
                    continue
                vs = lists[u & 1]
                for v in vs[: bisect_right(vs, vlim)]:
                    emit(v)
        else:
            for v in range(u & 1, vlim + 1, 2):
                emit(v)

    for bucket in groups.values():
        bucket.sort()
    return groups


def candidate_points(d_base: int, k: int, d_max: int) -> list[CandidatePoint]:
    """All candidate points with characteristic exactly ``k`` over the base.

    Both y signs are emitted; points on the base line cannot occur because
    the base triangle is strict.
    """
    if not (1 <= d_base <= d_max):
        raise ValueError(f"need 1 <= d_base <= d_max, got {d_base}, {d_max}")
    if k < 1 or squarefree_part(k) != k:
        raise ValueError(f"characteristic must be square-free positive, got {k}")
    raw = _candidate_groups(d_base, d_max, CharFilter.fixed(k)).get(k, [])
    out = []
    for a, b, x2d, s in raw:
        x = Fraction(x2d, 2 * d_base)
        q = Fraction(s, 2 * d_base)
        out.append(CandidatePoint(d_base, k, a, b, x, -q))
        out.append(CandidatePoint(d_base, k, a, b, x, q))
    out.sort(key=lambda c: (c.a, c.b, c.y_coeff))
    return out


def integral_pair_check(p: CandidatePoint, q: CandidatePoint) -> Optional[int]:
    """Integer distance between two candidates, or None when not integral."""
    if p.d_base != q.d_base or p.k != q.k:
        raise ValueError("candidates come from different bases or characteristics")
    sq = (p.x - q.x) ** 2 + p.k * (p.y_coeff - q.y_coeff) ** 2
    if sq.denominator != 1:
        return None
    root = math.isqrt(sq.numerator)
    return root if root * root == sq.numerator else None


# ---------------------------------------------------------------------------
# clique extension
# ---------------------------------------------------------------------------


def _clique_stream(
    d: int,
    k: int,
    verts: list[tuple[int, int, int, int]],
    config: SearchConfig,
) -> Iterator[DistanceMatrix]:
    """Canonical point sets from cliques over signed scaled candidates.

    ``verts`` holds (a, b, X, Y) with X = 2d*x and Y = 2d*y_coeff, both
    signs present.  Pairwise distances are capped at min(d, config.d_max):
    the base edge must stay the diameter, so any longer pair belongs to a
    different base.
    """
    need = config.target_n - 2
    cap = min(d, config.d_max)
    two_d = 2 * d
    nv = len(verts)
    general = config.require_general_position

    adj: list[set[int]] = [set() for _ in range(nv)]
    dist: dict[tuple[int, int], int] = {}
    for i in range(nv):
        ai, bi, xi, yi = verts[i]
        for j in range(i + 1, nv):
            aj, bj, xj, yj = verts[j]
            n2 = (xi - xj) ** 2 + k * (yi - yj) ** 2
            r = math.isqrt(n2)
            if r * r != n2 or r % two_d:
                continue
            t = r // two_d
            if 1 <= t <= cap:
                adj[i].add(j)
                adj[j].add(i)
                dist[(i, j)] = t

    # base points in the same scaled coordinates
    base_pts = [(0, 0), (2 * d * d, 0)]

    def collinear(p, q, r) -> bool:
        return (q[0] - p[0]) * (r[1] - p[1]) == (r[0] - p[0]) * (q[1] - p[1])

    def concyclic(p, q, r, s) -> bool:
        rows = [(x * x + k * y * y, x, y) for x, y in (p, q, r, s)]

        def det3(r1, r2, r3, c0, c1, c2):
            return (
                r1[c0] * (r2[c1] * r3[c2] - r2[c2] * r3[c1])
                - r1[c1] * (r2[c0] * r3[c2] - r2[c2] * r3[c0])
                + r1[c2] * (r2[c0] * r3[c1] - r2[c1] * r3[c0])
            )

        # expansion along the all-ones column
        m0 = det3(rows[1], rows[2], rows[3], 0, 1, 2)
        m1 = det3(rows[0], rows[2], rows[3], 0, 1, 2)
        m2 = det3(rows[0], rows[1], rows[3], 0, 1, 2)
        m3 = det3(rows[0], rows[1], rows[2], 0, 1, 2)
        return m0 - m1 + m2 - m3 == 0

    def admissible(pts: list[tuple[int, int]], newpt: tuple[int, int]) -> bool:
        if not general:
            return True
        for p, q in combinations(pts, 2):
            if collinear(p, q, newpt):
                return False
        for p, q, r in combinations(pts, 3):
            if concyclic(p, q, r, newpt):
                return False
        return True

    seen: set[tuple[tuple[int, ...], ...]] = set()
    chosen: list[int] = []
    pts: list[tuple[int, int]] = list(base_pts)

    def emit() -> Optional[DistanceMatrix]:
        n = config.target_n
        rows = [[0] * n for _ in range(n)]
        rows[0][1] = rows[1][0] = d
        for ci, vi in enumerate(chosen):
            a, b, _, _ = verts[vi]
            rows[0][ci + 2] = rows[ci + 2][0] = a
            rows[1][ci + 2] = rows[ci + 2][1] = b
        for ci, vi in enumerate(chosen):
            for cj in range(ci + 1, len(chosen)):
                t = dist[(vi, chosen[cj])]
                rows[ci + 2][cj + 2] = rows[cj + 2][ci + 2] = t
        canon, _ = canonical_form(DistanceMatrix(rows))
        if canon.rows in seen:
            return None
        seen.add(canon.rows)
        return canon

    def dfs(start: int) -> Iterator[DistanceMatrix]:
        if len(chosen) == need:
            out = emit()
            if out is not None:
                yield out
            return
        for idx in range(start, nv):
            if len(chosen) + (nv - idx) < need:
                break
            if any(idx not in adj[c] for c in chosen):
                continue
            newpt = verts[idx][2:]
            if not admissible(pts, newpt):
                continue
            chosen.append(idx)
            pts.append(newpt)
            yield from dfs(idx + 1)
            chosen.pop()
            pts.pop()

    yield from dfs(0)


def _signed(raw: Iterable[tuple[int, int, int, int]]) -> list[tuple[int, int, int, int]]:
    verts = []
    for a, b, x2d, s in raw:
        verts.append((a, b, x2d, -s))
        verts.append((a, b, x2d, s))
    verts.sort()
    return verts


def extend_cliques(
    candidates: Sequence[CandidatePoint], base_d: int, config: SearchConfig
) -> Iterator[DistanceMatrix]:
    """Grow candidate cliques over the base edge into full point sets.

    Every emitted matrix has config.target_n points, passes the general
    position constraints, and is canonical; duplicates (mirror images,
    base-pair swaps) are emitted once.
    """
    if not candidates:
        return
    ks = {c.k for c in candidates}
    if len(ks) != 1 or any(c.d_base != base_d for c in candidates):
        raise ValueError("candidates must share one base and characteristic")
    k = ks.pop()
    verts = []
    for c in candidates:
        x2d = c.x * 2 * base_d
        y2d = c.y_coeff * 2 * base_d
        if x2d.denominator != 1 or y2d.denominator != 1:
            raise ValueError(f"candidate {c} is not valid over base {base_d}")
        verts.append((c.a, c.b, int(x2d), int(y2d)))
    verts.sort()
    yield from _clique_stream(base_d, k, verts, config)


# ---------------------------------------------------------------------------
# top-level search
# ---------------------------------------------------------------------------


def _load_checkpoint(path) -> set[tuple[int, int]]:
    done = set()
    try:
        with open(path) as fh:
            for line in fh:
                parts = line.split()
                if len(parts) == 2:
                    done.add((int(parts[0]), int(parts[1])))
    except FileNotFoundError:
        pass
    return done


def search(config: SearchConfig, checkpoint: Optional[str] = None) -> Iterator[DistanceMatrix]:
    """All canonical point sets of the configured size and diameter range.

    Iterates the base diameter d over [d_min, d_max] and, per d, every
    admissible characteristic; the base edge carries the diameter, so each
    set is found at exactly one (d, k) key.  With ``checkpoint`` given,
    completed keys are appended to that file and previously completed keys
    are skipped (their results are assumed already consumed).
    """
    filt = config.effective_filter()
    shard_index, shard_total = config.shard
    done = _load_checkpoint(checkpoint) if checkpoint else set()
    counter = 0
    for d in range(config.d_min, config.d_max + 1):
        groups = _candidate_groups(d, d, filt)
        for k in sorted(groups):
            key_index = counter
            counter += 1
            if key_index % shard_total != shard_index:
                continue
            if (d, k) in done:
                continue
            yield from _clique_stream(d, k, _signed(groups[k]), config)
            if checkpoint:
                with open(checkpoint, "a") as fh:
                    fh.write(f"{d} {k}\n")


def minimum_diameter(
    target_n: int, d_cap: int, char_filter: Optional[CharFilter] = None
) -> Optional[int]:
    """Smallest diameter up to ``d_cap`` admitting a general-position set."""
    filt = char_filter or CharFilter.any_char()
    for d in range(1, d_cap + 1):
        cfg = SearchConfig(target_n=target_n, d_min=d, d_max=d, char_filter=filt)
        for _ in search(cfg):
            return d
    return None


def partition(config: SearchConfig, total_shards: int) -> list[SearchConfig]:
    """Split a search into independent shards over the (d, k) outer loop."""
    if total_shards < 1:
        raise ValueError(f"total_shards must be >= 1, got {total_shards}")
    return [replace(config, shard=(i, total_shards)) for i in range(total_shards)]
