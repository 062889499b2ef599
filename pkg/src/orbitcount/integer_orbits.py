"""Integer-matrix companion: left and two-sided orbit classes of 2x2 integer
matrices with fixed determinant, norm-ball censuses, and the asymptotic
density constant for determinant surfaces.

All matrix arithmetic is exact; norm thresholds compare the squared Frobenius
norm against T^2 so no square roots are taken.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BudgetExceeded,
    InvalidParams,
    MissingZetaValue,
    NonPositiveDeterminant,
    SingularMatrix,
    UnsupportedDimension,
)

IntMatrix = tuple  # nested tuple of exact ints, row-major


def det_int(m) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    acc = 0
    for i in range(n):
        if m[i][0]:
            minor = tuple(row[1:] for r, row in enumerate(m) if r != i)
            term = m[i][0] * det_int(minor)
            acc += term if i % 2 == 0 else -term
    return acc


def frobenius_sq(m) -> int:
    return sum(v * v for row in m for v in row)


def hnf_int(m) -> IntMatrix:
    """Canonical representative of the left orbit under determinant-one
    integer matrices: upper triangular, positive diagonal, above-diagonal
    entries reduced into [0, d_j).

    For det(m) > 0 the unique transform reaching this form has determinant +1,
    so the form classifies left SL-orbits, not just GL-orbits.
    """
    m = tuple(tuple(row) for row in m)
    n = len(m)
    if det_int(m) <= 0:
        raise NonPositiveDeterminant(f"det = {det_int(m)} must be positive")
    h = [list(row) for row in m]
    for c in range(n):
        while True:
            live = [i for i in range(c, n) if h[i][c]]
            piv = min(live, key=lambda i: abs(h[i][c]))
            if piv != c:
                h[c], h[piv] = h[piv], h[c]
                h[piv] = [-v for v in h[piv]]  # keep the transform in SL
            below = [i for i in range(c + 1, n) if h[i][c]]
            if not below:
                break
            for i in below:
                q = h[i][c] // h[c][c]
                h[i] = [a - q * b for a, b in zip(h[i], h[c])]
    # positive diagonal (n is even-swappable; fix sign pairwise via -1 rows)
    for c in range(n):
        if h[c][c] < 0:
            # flip this row and the next negative one to stay in SL; with
            # det > 0 the number of negative diagonal entries is even
            other = next(j for j in range(c + 1, n) if h[j][j] < 0)
            h[c] = [-v for v in h[c]]
            h[other] = [-v for v in h[other]]
    # reduce above-diagonal entries into [0, d_c)
    for c in range(1, n):
        for i in range(c):
            q = h[i][c] // h[c][c]
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[c])]
    return tuple(tuple(row) for row in h)


def snf_int(m) -> IntMatrix:
    """Smith normal form: positive diagonal with a divisibility chain, the
    invariant of two-sided unimodular equivalence."""
    m = tuple(tuple(row) for row in m)
    n = len(m)
    if det_int(m) == 0:
        raise SingularMatrix("Smith form requested for a singular matrix")
    a = [list(row) for row in m]
    for t in range(n):
        while True:
            # move a minimal nonzero entry of the trailing block to (t, t)
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            bi, bj = best
            if bi != t:
                a[t], a[bi] = a[bi], a[t]
            if bj != t:
                for row in a:
                    row[t], row[bj] = row[bj], row[t]
            done = True
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        done = False
            if done:
                break
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
    # enforce the divisibility chain
    for t in range(n - 1):
        for j in range(t + 1, n):
            while a[j][j] % a[t][t]:
                g = math.gcd(a[t][t], a[j][j])
                a[j][j] = a[t][t] * a[j][j] // g
                a[t][t] = g
    return tuple(tuple(a[i][j] if i == j else 0 for j in range(n)) for i in range(n))


# -- enumeration -------------------------------------------------------------


def enumerate_det_norm(n: int, det_value: int, T: int, budget_items: int = 10**8):
    """Yield every n x n integer matrix with the given determinant and
    squared Frobenius norm <= T^2, exactly once, in a deterministic order.

    Only n = 2 is supported; the iteration solves d from a*d = det + b*c.
    """
    if n != 2:
        raise UnsupportedDimension("only 2x2 enumeration is supported")
    if T < 1:
        raise InvalidParams(f"T must be >= 1, got {T}")
    if (2 * T + 1) ** 3 > budget_items:
        raise BudgetExceeded(f"norm-ball scan at T = {T} exceeds {budget_items}")
    T2 = T * T
    side = np.arange(-T, T + 1)
    for a in range(-T, T + 1):
        ra = T2 - a * a
        if ra < 0:
            continue
        if a == 0:
            # b*c = -det; d free within the norm ball
            for b in side:
                b = int(b)
                if b * b > ra:
                    continue
                if b == 0:
                    if det_value != 0:
                        continue
                    for c in side:
                        c = int(c)
                        rc = ra - c * c
                        if rc < 0:
                            continue
                        dmax = math.isqrt(rc)
                        for d in range(-dmax, dmax + 1):
                            yield ((0, b), (c, d))
                    continue
                if det_value % b:
                    continue
                c = -det_value // b
                rc = ra - b * b - c * c
                if rc < 0:
                    continue
                dmax = math.isqrt(rc)
                for d in range(-dmax, dmax + 1):
                    yield ((0, b), (c, d))
            continue
        bmax = math.isqrt(ra)
        bs = np.arange(-bmax, bmax + 1)
        for b in bs:
            b = int(b)
            rb = ra - b * b
            cmax = math.isqrt(rb)
            cs = np.arange(-cmax, cmax + 1)
            num = det_value + b * cs
            ok = num % a == 0
            ds = num[ok] // a
            csel = cs[ok]
            within = ds * ds <= rb - csel * csel
            for c, d in zip(csel[within], ds[within]):
                yield ((a, b), (int(c), int(d)))


@dataclass(frozen=True)
class RatioReport:
    det_value: int
    ladder: tuple  # of T values
    class_counts: dict  # T -> {snf diagonal -> count}
    hnf_counts: dict  # T -> {hnf form -> count}

    def counts_at(self, T):
        return self.class_counts[T]

    def ratio_at(self, T, o1, o2):
        counts = self.class_counts[T]
        return counts.get(o1, 0) / counts.get(o2, 1)

    def to_json(self) -> dict:
        def fmt_cls(d):
            return {repr(list(map(list, k))): str(v) for k, v in sorted(d.items())}

        return {
            "det": self.det_value,
            "ladder": list(self.ladder),
            "two_sided_classes": {str(T): fmt_cls(d) for T, d in self.class_counts.items()},
            "left_classes": {str(T): fmt_cls(d) for T, d in self.hnf_counts.items()},
        }


def orbit_ratio_experiment(det_value: int, T: int, ladder=None, budget_items: int = 10**8) -> RatioReport:
    """Census of the determinant surface inside nested norm balls, bucketed by
    two-sided (Smith) class and by left (Hermite) class."""
    if det_value <= 0:
        raise NonPositiveDeterminant("the experiment needs det > 0")
    ladder = tuple(sorted(set(ladder or ()) | {T}))
    class_counts = {L: {} for L in ladder}
    hnf_counts = {L: {} for L in ladder}
    thresholds = [(L, L * L) for L in ladder]
    for m in enumerate_det_norm(2, det_value, max(ladder), budget_items):
        s = snf_int(m)
        h = hnf_int(m)
        nsq = frobenius_sq(m)
        for L, L2 in thresholds:
            if nsq <= L2:
                class_counts[L][s] = class_counts[L].get(s, 0) + 1
                hnf_counts[L][h] = hnf_counts[L].get(h, 0) + 1
    return RatioReport(det_value, ladder, class_counts, hnf_counts)


def count_det_norm(det_value: int, T: int, budget_items: int = 10**8) -> int:
    """N(T) for the whole determinant surface."""
    return sum(1 for _ in enumerate_det_norm(2, det_value, T, budget_items))


def hnf_classes_for_det(det_value: int):
    """Direct enumeration of the canonical left-class representatives with the
    given positive determinant: [[a, b], [0, d]], a*d = det, 0 <= b < d."""
    if det_value <= 0:
        raise NonPositiveDeterminant("need det > 0")
    out = []
    for d in range(1, det_value + 1):
        if det_value % d:
            continue
        a = det_value // d
        for b in range(d):
            out.append(((a, b), (0, d)))
    return out


# -- asymptotic constant -----------------------------------------------------


def factorize(k: int):
    out = {}
    d = 2
    while d * d <= k:
        while k % d == 0:
            out[d] = out.get(d, 0) + 1
            k //= d
        d += 1
    if k > 1:
        out[k] = out.get(k, 0) + 1
    return out


def drs_constant(n: int, k: int, zeta_values: dict | None = None) -> float:
    """The density constant c for the asymptotics N(T) ~ c * T^(n^2 - n) of
    integer matrices with determinant k in the Frobenius norm ball."""
    if n < 2 or k < 1:
        raise InvalidParams(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    zetas = {2: math.pi**2 / 6}
    if zeta_values:
        zetas.update(zeta_values)
    zeta_prod = 1.0
    for j in range(2, n + 1):
        if j not in zetas:
            raise MissingZetaValue(f"zeta({j}) must be supplied for n = {n}")
        zeta_prod *= zetas[j]
    lead = math.pi ** (n * n / 2) / (
        math.gamma((n * n - n + 2) / 2) * math.gamma(n / 2) * zeta_prod
    )
    divisor_part = 1.0
    for p, a in factorize(k).items():
        for i in range(1, n):
            divisor_part *= (p ** (a + i) - 1) / (p**i - 1)
    return lead * k ** (1 - n) * divisor_part
