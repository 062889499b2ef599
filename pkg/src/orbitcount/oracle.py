"""Exhaustive enumeration ground truth for every counting formula.

All enumerations are exact and refuse up front when the scan would exceed the
budget.  The matrix index space is ordered row-major over entries with
little-endian coefficient digits (entry (0,0) coefficient 0 is the least
significant digit), so shard boundaries and recorded counts are reproducible.
Shards are scanned independently and combined by addition, which makes the
shard count observationally irrelevant.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product

import numpy as np

from .counting import gl_count
from .errors import BudgetExceeded, InvalidParams, PreconditionViolation, SingularMatrix
from .fields import GF, field_of_order
from .linalg import iter_affine_space, rank, solve_affine
from .poly import NEG_INF, Poly
from .polymat import PolyMatrix, det, hnf

DEFAULT_MAX_ITEMS = 10**8


@dataclass(frozen=True)
class EnumerationBudget:
    max_items: int = DEFAULT_MAX_ITEMS
    partitions: int = 1

    def check(self, cost: int, what: str):
        if cost > self.max_items:
            raise BudgetExceeded(f"{what}: {cost} items exceed budget {self.max_items}")


def _budget(budget) -> EnumerationBudget:
    return budget if budget is not None else EnumerationBudget()


def _field(q) -> GF:
    return q if isinstance(q, GF) else field_of_order(q)


def shard_ranges(total: int, partitions: int):
    """Contiguous [start, stop) shards covering range(total)."""
    if total <= 0:
        return []
    partitions = max(1, partitions)
    step = -(-total // partitions)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step) if lo < total]


# -- polynomial and matrix enumeration ---------------------------------------


def iter_polys(q, max_deg):
    """Yield each polynomial of degree <= max_deg exactly once.

    ``max_deg = NEG_INF`` yields only the zero polynomial.
    """
    fld = _field(q)
    if max_deg == NEG_INF:
        yield Poly.zero(fld)
        return
    if max_deg < 0:
        raise InvalidParams(f"max_deg must be >= 0 or NEG_INF, got {max_deg}")
    width = max_deg + 1
    for idx in range(fld.q**width):
        coeffs = []
        v = idx
        for _ in range(width):
            coeffs.append(v % fld.q)
            v //= fld.q
        yield Poly(fld, coeffs)


def _decode_matrix(fld: GF, n: int, width: int, idx: int) -> PolyMatrix:
    q = fld.q
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            coeffs = []
            for _ in range(width):
                coeffs.append(idx % q)
                idx //= q
            row.append(Poly(fld, coeffs))
        rows.append(row)
    return PolyMatrix(rows)


def iter_matrices(q, n: int, k: int, start: int = 0, stop: int | None = None):
    """All n x n matrices with entry degrees <= k, in index order."""
    fld = _field(q)
    total = fld.q ** (n * n * (k + 1))
    if stop is None:
        stop = total
    for idx in range(start, stop):
        yield _decode_matrix(fld, n, k + 1, idx)


# -- orbit scans -------------------------------------------------------------


def count_orbit_bruteforce(rep: PolyMatrix, k: int, budget=None) -> int:
    """Scan every degree-<=k matrix and count those in the left orbit of rep
    (equal canonical form)."""
    budget = _budget(budget)
    fld = rep.field
    n = rep.rows
    target = hnf(rep).h.key()
    total = fld.q ** (n * n * (k + 1))
    budget.check(total, "orbit scan")
    count = 0
    for lo, hi in shard_ranges(total, budget.partitions):
        part = 0
        for m in iter_matrices(fld, n, k, lo, hi):
            if det(m).is_zero():
                continue
            if hnf(m).h.key() == target:
                part += 1
        count += part
    return count


def orbit_census(q, n: int, k: int, budget=None):
    """One full scan, bucketed by canonical form.

    Returns ``(buckets, singular)`` where buckets maps the canonical-form
    structural key to the number of degree-<=k matrices in that orbit.
    """
    budget = _budget(budget)
    fld = _field(q)
    total = fld.q ** (n * n * (k + 1))
    budget.check(total, "orbit census")
    shard_buckets = []
    singular = 0
    for lo, hi in shard_ranges(total, budget.partitions):
        buckets = {}
        part_singular = 0
        for m in iter_matrices(fld, n, k, lo, hi):
            if det(m).is_zero():
                part_singular += 1
                continue
            key = hnf(m).h.key()
            buckets[key] = buckets.get(key, 0) + 1
        shard_buckets.append(buckets)
        singular += part_singular
    merged = {}
    for buckets in shard_buckets:
        for key, c in buckets.items():
            merged[key] = merged.get(key, 0) + c
    return merged, singular


@dataclass(frozen=True)
class DetDegreeCensus:
    n: int
    q: int
    k: int
    buckets: dict = dc_field(default_factory=dict)  # det degree -> count
    singular: int = 0

    def total(self) -> int:
        return self.singular + sum(self.buckets.values())

    def to_json(self) -> dict:
        out = {str(t): str(c) for t, c in sorted(self.buckets.items())}
        out["singular"] = str(self.singular)
        return {"n": self.n, "q": self.q, "k": self.k, "buckets": out}


def census_by_det_degree(n: int, q, k: int, budget=None) -> DetDegreeCensus:
    """Bucket counts by determinant degree over all degree-<=k matrices."""
    budget = _budget(budget)
    fld = _field(q)
    total = fld.q ** (n * n * (k + 1))
    budget.check(total, "determinant census")
    buckets = {}
    singular = 0
    for lo, hi in shard_ranges(total, budget.partitions):
        for m in iter_matrices(fld, n, k, lo, hi):
            d = det(m)
            if d.is_zero():
                singular += 1
            else:
                buckets[d.degree] = buckets.get(d.degree, 0) + 1
    return DetDegreeCensus(n, fld.q, k, buckets, singular)


# -- the unipotent-at-zero family (constant term I) --------------------------


def _free_positions(n: int, bounds):
    """Free coefficient slots (i, j, d) for the constant-term-I scan, in index
    order (least significant first)."""
    return [
        (i, j, d)
        for j, kj in enumerate(bounds)
        for d in range(1, kj + 1)
        for i in range(n)
    ]


def _p_scan_vectorized(fld: GF, bounds, budget: EnumerationBudget):
    """Unimodularity mask over the whole candidate space, via layerwise
    determinant convolution in numpy.  Prime fields, n <= 3."""
    q = fld.q
    n = len(bounds)
    positions = _free_positions(n, bounds)
    nfree = len(positions)
    total = q**nfree
    budget.check(total, "unipotent family scan")
    kmax = max(bounds)
    member_indices = []

    def polymul(a, b):
        out = np.zeros((a.shape[0], a.shape[1] + b.shape[1] - 1), dtype=np.int64)
        for i in range(a.shape[1]):
            for j in range(b.shape[1]):
                out[:, i + j] += a[:, i] * b[:, j]
        return out

    chunk = 1 << 16
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        coeff = np.zeros((hi - lo, n, n, kmax + 1), dtype=np.int64)
        for i in range(n):
            coeff[:, i, i, 0] = 1
        div = 1
        for (i, j, d) in positions:
            coeff[:, i, j, d] = (idx // div) % q
            div *= q
        if n == 1:
            detc = coeff[:, 0, 0, :]
        elif n == 2:
            detc = polymul(coeff[:, 0, 0], coeff[:, 1, 1]) - polymul(
                coeff[:, 0, 1], coeff[:, 1, 0]
            )
        elif n == 3:
            def m2(r0, c0, r1, c1):
                return polymul(coeff[:, r0, c0], coeff[:, r1, c1]) - polymul(
                    coeff[:, r0, c1], coeff[:, r1, c0]
                )
            detc = (
                polymul(coeff[:, 0, 0], m2(1, 1, 2, 2))
                - polymul(coeff[:, 0, 1], m2(1, 0, 2, 2))
                + polymul(coeff[:, 0, 2], m2(1, 0, 2, 1))
            )
        else:
            raise InvalidParams("vectorized scan supports n <= 3")
        detc %= q
        mask = (detc[:, 1:] == 0).all(axis=1) & (detc[:, 0] != 0)
        member_indices.append(idx[mask])
    return np.concatenate(member_indices) if member_indices else np.array([], dtype=np.int64)


def _decode_p_member(fld: GF, bounds, idx: int) -> PolyMatrix:
    n = len(bounds)
    q = fld.q
    kmax = max(bounds) if bounds else 0
    coeff = [[[0] * (kmax + 1) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        coeff[i][i][0] = 1
    for (i, j, d) in _free_positions(n, bounds):
        coeff[i][j][d] = idx % q
        idx //= q
    return PolyMatrix([[Poly(fld, coeff[i][j]) for j in range(n)] for i in range(n)])


@lru_cache(maxsize=64)
def _p_members_cached(fld: GF, bounds: tuple, max_items: int):
    budget = EnumerationBudget(max_items=max_items)
    n = len(bounds)
    q = fld.q
    if fld.e == 1 and n <= 3:
        indices = _p_scan_vectorized(fld, bounds, budget)
        return tuple(_decode_p_member(fld, bounds, int(i)) for i in indices)
    # generic fallback: walk the whole candidate space
    positions = _free_positions(n, bounds)
    budget.check(q ** len(positions), "unipotent family scan")
    members = []
    kmax = max(bounds) if bounds else 0
    for digits in product(range(q), repeat=len(positions)):
        coeff = [[[0] * (kmax + 1) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            coeff[i][i][0] = 1
        for (i, j, d), v in zip(positions, digits):
            coeff[i][j][d] = v
        m = PolyMatrix([[Poly(fld, coeff[i][j]) for j in range(n)] for i in range(n)])
        d = det(m)
        if d.is_constant() and not d.is_zero():
            members.append(m)
    return tuple(members)


def p_members(bounds, q, budget=None):
    """All unimodular matrices with constant term I and per-column degree
    bounds, in index order."""
    budget = _budget(budget)
    fld = _field(q)
    bounds = tuple(bounds)
    if any(b < 0 for b in bounds) or not bounds:
        raise InvalidParams(f"bad bounds {bounds}")
    return _p_members_cached(fld, bounds, budget.max_items)


def _leading_layers(m: PolyMatrix, bounds):
    return [m.coeff_layer(j, kj) for j, kj in enumerate(bounds)]


def count_P_bruteforce(bounds, q, budget=None, check_dependence=True) -> int:
    """Brute-force cardinality of the constant-term-I unimodular family.

    Also asserts, on every member, that the top coefficient-layer vectors are
    linearly dependent whenever any bound is positive (a consequence of the
    determinant being constant).
    """
    fld = _field(q)
    members = p_members(bounds, fld, budget)
    if check_dependence and sum(bounds) >= 1:
        n = len(bounds)
        for m in members:
            if rank(_leading_layers(m, bounds), fld) >= n:
                raise AssertionError(f"independent leading layers in {m!r}")
    return len(members)


def count_QR_bruteforce(kind: str, i: int, bounds, q, budget=None) -> int:
    """Brute-force count of family members whose leading layers from column i
    on are linearly dependent (kind "R"), with independence from column i+1 on
    additionally required for kind "Q"."""
    if kind not in ("Q", "R"):
        raise InvalidParams(f"kind must be 'Q' or 'R', got {kind!r}")
    bounds = tuple(bounds)
    n = len(bounds)
    if not 1 <= i <= n:
        raise PreconditionViolation(f"index i = {i} outside [1, {n}]")
    fld = _field(q)
    members = p_members(bounds, fld, budget)
    count = 0
    for m in members:
        layers = _leading_layers(m, bounds)
        tail = layers[i - 1 :]
        if rank(tail, fld) == len(tail):
            continue  # tail independent: in neither set
        if kind == "Q":
            tail2 = layers[i:]
            if rank(tail2, fld) < len(tail2):
                continue  # dependence starts before column i
        count += 1
    return count


# -- canonical form enumeration ----------------------------------------------


def _compositions(t, n):
    if n == 1:
        yield (t,)
        return
    for first in range(t + 1):
        for rest in _compositions(t - first, n - 1):
            yield (first,) + rest


def enumerate_hnf_reps(n: int, q, t: int, budget=None):
    """Every canonical form with determinant degree t, exactly once."""
    budget = _budget(budget)
    fld = _field(q)
    cost = sum(
        fld.q ** sum((j + 1) * tj for j, tj in enumerate(parts))
        for parts in _compositions(t, n)
    )
    budget.check(cost, "canonical form enumeration")
    reps = []
    for parts in _compositions(t, n):
        # monic diagonal entries of the prescribed degrees
        diag_choices = []
        for tj in parts:
            choices = []
            for p in iter_polys(fld, tj - 1) if tj > 0 else [None]:
                if p is None:
                    choices.append(Poly.one(fld))
                else:
                    choices.append(p + Poly(fld, (0,) * tj + (1,)))
            diag_choices.append(choices)
        # above-diagonal entries of column j run over degrees < t_j
        above_choices = []
        for j, tj in enumerate(parts):
            col = []
            for _ in range(j):
                if tj == 0:
                    col.append([Poly.zero(fld)])
                else:
                    col.append(list(iter_polys(fld, tj - 1)))
            above_choices.append(col)
        flat = [c for col in above_choices for c in col]
        for diag in product(*diag_choices):
            for above in product(*flat):
                rows = [[Poly.zero(fld)] * n for _ in range(n)]
                pos = 0
                for j in range(n):
                    rows[j][j] = diag[j]
                    for i in range(j):
                        rows[i][j] = above[pos]
                        pos += 1
                reps.append(PolyMatrix(rows))
    return reps


# -- orbit-side exact counting ----------------------------------------------


def count_orbit_members(rep: PolyMatrix, k: int, budget=None) -> int:
    """Exact count of degree-<=k matrices in the left orbit of rep, by direct
    enumeration of the orbit side.

    Members are U*H with H the canonical form and U unimodular.  Factoring U
    by its (invertible) constant term reduces to counting unimodular V with
    V(0) = I and V*H of entry degree <= k; the rows of V range over affine
    F_q-spaces determined by H, and for fixed first n-1 rows the unit-
    determinant condition is affine-linear in the last row, so the last row is
    counted by linear algebra instead of enumeration.  Cross-checked against
    the ambient scan in the test suite.
    """
    budget = _budget(budget)
    form = hnf(rep)
    H = form.h
    fld = rep.field
    n, q = rep.rows, fld.q
    if k < 0:
        return 0
    nunk = n * k  # coefficients v_j[d], d = 1..k; constant layer is pinned

    def unk(j, d):
        return j * k + (d - 1)

    spaces = []
    for i in range(n):
        rows_a, rhs = [], []
        for c in range(n):
            maxdeg = k + max(
                (int(H.entries[j][c].degree) for j in range(n) if H.entries[j][c]),
                default=0,
            )
            for dp in range(k + 1, maxdeg + 1):
                row = [0] * nunk
                for j in range(n):
                    hj = H.entries[j][c]
                    if hj.is_zero():
                        continue
                    for d in range(1, k + 1):
                        coef = hj[dp - d]
                        if coef:
                            row[unk(j, d)] = coef
                rows_a.append(row)
                rhs.append(fld.neg(H.entries[i][c][dp]))
        sol = solve_affine(rows_a, rhs, fld, ncols=nunk)
        if sol is None:
            return 0
        spaces.append(sol)

    def to_polys(vec, i):
        out = []
        for j in range(n):
            coeffs = [1 if j == i else 0] + [vec[unk(j, d)] for d in range(1, k + 1)]
            out.append(Poly(fld, coeffs))
        return out

    outer_cost = 1
    for i in range(n - 1):
        outer_cost *= q ** len(spaces[i][1])
    budget.check(outer_cost, "orbit member enumeration")

    outer_rows = [
        [to_polys(v, i) for v in iter_affine_space(spaces[i][0], spaces[i][1], fld)]
        for i in range(n - 1)
    ]
    last_part = spaces[n - 1][0]
    last_basis = spaces[n - 1][1]
    # last-row value rows as polynomials; basis rows have zero constant layer
    last_part_polys = to_polys(last_part, n - 1)
    last_basis_polys = [
        [
            Poly(fld, [0] + [bv[unk(j, d)] for d in range(1, k + 1)])
            for j in range(n)
        ]
        for bv in last_basis
    ]

    def cofactors(rows):
        """C_j with det(V) = sum_j v_last[j] * C_j for the given first rows."""
        if n == 1:
            return [Poly.one(fld)]
        out = []
        for j in range(n):
            minor = [[r[c] for c in range(n) if c != j] for r in rows]
            d = minor_det(minor)
            if (n - 1 + j) % 2 == 1:
                d = -d
            out.append(d)
        return out

    def minor_det(m):
        sz = len(m)
        if sz == 1:
            return m[0][0]
        if sz == 2:
            return m[0][0] * m[1][1] - m[0][1] * m[1][0]
        acc = Poly.zero(fld)
        for r in range(sz):
            if m[r][0].is_zero():
                continue
            sub = [row[1:] for rr, row in enumerate(m) if rr != r]
            term = m[r][0] * minor_det(sub)
            acc = acc + term if r % 2 == 0 else acc - term
        return acc

    total = 0
    nb = len(last_basis_polys)
    for combo in product(*outer_rows) if n > 1 else [()]:
        cofs = cofactors(list(combo))
        base = Poly.zero(fld)
        for j in range(n):
            if last_part_polys[j] and cofs[j]:
                base = base + last_part_polys[j] * cofs[j]
        gs = []
        for bp in last_basis_polys:
            g = Poly.zero(fld)
            for j in range(n):
                if bp[j] and cofs[j]:
                    g = g + bp[j] * cofs[j]
            gs.append(g)
        maxd = max(
            [int(base.degree) if base else 0]
            + [int(g.degree) if g else 0 for g in gs]
        )
        rows_a = [[g[d] for g in gs] for d in range(1, maxd + 1)]
        rhs = [fld.neg(base[d]) for d in range(1, maxd + 1)]
        sol = solve_affine(rows_a, rhs, fld, ncols=nb)
        if sol is not None:
            total += q ** len(sol[1])
    return gl_count(n, q) * total
