"""Symmetric eigensolver and exact characteristic polynomials.

Two independent routes to a spectrum live here on purpose:

* ``sym_eigenvalues`` is a cyclic-by-row Jacobi iteration in float64.
* ``charpoly_exact`` + ``poly_roots_real`` go through exact rational
  arithmetic (integer Faddeev-LeVerrier, Yun square-free splitting,
  Sturm bisection) and never touch floating point until the final
  root refinement.

Keep them independent; tests compare one against the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

SYM_EIG_MAX_N = 2000
CHARPOLY_MAX_N = 64
JACOBI_REL_TOL = 1e-12   # off-diagonal Frobenius target, relative to ||M||_F
JACOBI_MAX_SWEEPS = 100
GROUP_TOL = 1e-7         # eigenvalue clustering width for multiplicities


@dataclass(frozen=True)
class SymMatrix:
    """Square, finite, exactly symmetric float matrix."""

    data: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.data, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"matrix must be square, got shape {a.shape}")
        if not np.isfinite(a).all():
            raise ValueError("matrix entries must be finite")
        if not (a == a.T).all():
            raise ValueError("matrix must be exactly symmetric")
        a.setflags(write=False)
        object.__setattr__(self, "data", a)

    @property
    def n(self) -> int:
        return self.data.shape[0]


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in non-increasing order plus clustered multiplicities."""

    values: tuple[float, ...]
    groups: tuple[tuple[float, int], ...]


def _cluster(values: Sequence[float], tol: float) -> tuple[tuple[float, int], ...]:
    groups: list[tuple[float, int]] = []
    rep, count = None, 0
    for v in values:
        if rep is not None and abs(v - rep) <= tol:
            count += 1
        else:
            if rep is not None:
                groups.append((rep, count))
            rep, count = v, 1
    if rep is not None:
        groups.append((rep, count))
    return tuple(groups)


def make_spectrum(values: Iterable[float],
                  trace: Optional[float] = None,
                  scale: Optional[float] = None,
                  group_tol: float = GROUP_TOL) -> Spectrum:
    """Sort values and cluster multiplicities.

    When ``trace`` is given, the sum of values must reproduce it within
    1e-9 * n * scale (scale = max matrix entry magnitude).
    """
    vals = tuple(sorted((float(v) for v in values), reverse=True))
    if trace is not None:
        tol = 1e-9 * max(1, len(vals)) * (scale if scale is not None else 1.0)
        err = abs(math.fsum(vals) - trace)
        if err > tol:
            raise ValueError(f"eigenvalue sum off trace by {err:.3e} (tol {tol:.3e})")
    return Spectrum(values=vals, groups=_cluster(vals, group_tol))


def multiset_deviation(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Max elementwise gap between two sorted multisets of reals."""
    if len(xs) != len(ys):
        raise ValueError(f"multiset size mismatch: {len(xs)} vs {len(ys)}")
    if not xs:
        return 0.0
    a = sorted(xs)
    b = sorted(ys)
    return max(abs(x - y) for x, y in zip(a, b))


# ----------------------------------------------------------------------
# cyclic Jacobi

def _jacobi(a0: np.ndarray, want_vectors: bool) -> tuple[np.ndarray, Optional[np.ndarray]]:
    a = np.array(a0, dtype=float)
    n = a.shape[0]
    v = np.eye(n) if want_vectors else None
    target = JACOBI_REL_TOL * float(np.linalg.norm(a0))
    if n == 1:
        return a.diagonal().copy(), v
    skip = target / (2 * n)   # elements below this cannot push off-norm past target

    def offnorm() -> float:
        off = a - np.diag(a.diagonal())
        return float(np.linalg.norm(off))

    converged = False
    for _ in range(JACOBI_MAX_SWEEPS):
        if offnorm() <= target:
            converged = True
            break
        for i in range(n - 1):
            for j in range(i + 1, n):
                aij = a[i, j]
                if abs(aij) <= skip:
                    continue
                app, aqq = a[i, i], a[j, j]
                theta = (aqq - app) / (2.0 * aij)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                ai = a[i].copy()
                aj = a[j].copy()
                a[i] = ai - s * (aj + tau * ai)
                a[j] = aj + s * (ai - tau * aj)
                a[:, i] = a[i]
                a[:, j] = a[j]
                a[i, i] = app - t * aij
                a[j, j] = aqq + t * aij
                a[i, j] = 0.0
                a[j, i] = 0.0
                if want_vectors:
                    vi = v[:, i].copy()
                    vj = v[:, j].copy()
                    v[:, i] = vi - s * (vj + tau * vi)
                    v[:, j] = vj + s * (vi - tau * vj)
    if not converged and offnorm() > target:
        raise ArithmeticError(f"Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps")
    return a.diagonal().copy(), v


def _as_sym(m: SymMatrix | np.ndarray) -> SymMatrix:
    return m if isinstance(m, SymMatrix) else SymMatrix(np.asarray(m))


def sym_eigensystem(m: SymMatrix | np.ndarray) -> tuple[Spectrum, np.ndarray]:
    """Spectrum plus an orthogonal matrix whose columns are eigenvectors."""
    sm = _as_sym(m)
    if sm.n < 1 or sm.n > SYM_EIG_MAX_N:
        raise ValueError(f"matrix dimension {sm.n} outside 1..{SYM_EIG_MAX_N}")
    d, v = _jacobi(sm.data, want_vectors=True)
    order = np.argsort(-d, kind="stable")
    scale = float(np.abs(sm.data).max()) if sm.n else 0.0
    spec = make_spectrum(d[order], trace=float(sm.data.trace()), scale=scale)
    return spec, v[:, order]


def sym_eigenvalues(m: SymMatrix | np.ndarray) -> Spectrum:
    sm = _as_sym(m)
    if sm.n < 1 or sm.n > SYM_EIG_MAX_N:
        raise ValueError(f"matrix dimension {sm.n} outside 1..{SYM_EIG_MAX_N}")
    d, _ = _jacobi(sm.data, want_vectors=False)
    scale = float(np.abs(sm.data).max()) if sm.n else 0.0
    return make_spectrum(sorted(d, reverse=True), trace=float(sm.data.trace()), scale=scale)


# ----------------------------------------------------------------------
# exact characteristic polynomial

@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with exact rational coefficients, ascending degree."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients",
                           tuple(Fraction(c) for c in self.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def poly_eval(pl: RationalPoly, x: float) -> float:
    acc = 0.0
    for c in reversed(pl.coefficients):
        acc = acc * x + float(c)
    return acc


def _matmul_int(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _trace_int(a: list[list[int]]) -> int:
    return sum(a[i][i] for i in range(len(a)))


def charpoly_exact(mat: Sequence[Sequence[Fraction | int]]) -> RationalPoly:
    """det(xI - M) by Faddeev-LeVerrier over scaled integers; exact."""
    rows = [[Fraction(x) for x in row] for row in mat]
    n = len(rows)
    if n < 1:
        raise ValueError("matrix must be at least 1x1")
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n > CHARPOLY_MAX_N:
        raise ValueError(f"matrix dimension {n} exceeds cap {CHARPOLY_MAX_N}")
    s = 1
    for row in rows:
        for x in row:
            s = math.lcm(s, x.denominator)
    nmat = [[int(x * s) for x in row] for row in rows]

    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = [row[:] for row in nmat]
    coeffs[n - 1] = -_trace_int(work)
    for k in range(2, n + 1):
        shift = coeffs[n - k + 1]
        for i in range(n):
            work[i][i] += shift
        work = _matmul_int(nmat, work)
        t, rem = divmod(-_trace_int(work), k)
        if rem:
            raise ArithmeticError("Faddeev-LeVerrier trace division was not exact")
        coeffs[n - k] = t
    return RationalPoly(tuple(Fraction(coeffs[j], s ** (n - j)) for j in range(n + 1)))


# ----------------------------------------------------------------------
# integer polynomial helpers (coefficients ascending, index = degree)

def _strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _content(c: Sequence[int]) -> int:
    g = 0
    for x in c:
        g = math.gcd(g, x)
    return g or 1


def _primitive(c: Sequence[int]) -> list[int]:
    """Divide by positive content; sign of leading coefficient is kept."""
    g = _content(c)
    return [x // g for x in c]


def _deriv_int(c: Sequence[int]) -> list[int]:
    return [i * c[i] for i in range(1, len(c))]


def _pseudo_rem(u: Sequence[int], v: Sequence[int]) -> tuple[list[int], int]:
    """Pseudo-remainder of u by v and the sign of the implied multiplier.

    Returns (r, sign) with lc(v)^k * u = q*v + r for some k >= 0, where
    sign = sign(lc(v)^k), so that sign*r has the sign of the true
    rational remainder.
    """
    r = list(u)
    dv = len(v) - 1
    lv = v[-1]
    sign = 1
    while len(_strip(r)) - 1 >= dv and r:
        r = _strip(r)
        k = len(r) - 1 - dv
        lead = r[-1]
        r = [lv * x for x in r]
        for idx in range(dv + 1):
            r[k + idx] -= lead * v[idx]
        if lv < 0:
            sign = -sign
        r = _strip(r)
        if not r:
            break
    return r, sign


def _gcd_int(u: Sequence[int], v: Sequence[int]) -> list[int]:
    a = _strip(list(u))
    b = _strip(list(v))
    while b:
        r, _ = _pseudo_rem(a, b)
        a, b = b, _primitive(_strip(r)) if r else []
    a = _primitive(a)
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _div_exact(u: Sequence[int], v: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials (raises if not exact)."""
    num = [Fraction(x) for x in u]
    dv = len(v) - 1
    lv = Fraction(v[-1])
    quot = [Fraction(0)] * (len(u) - dv)
    for k in range(len(num) - 1, dv - 1, -1):
        c = num[k] / lv
        quot[k - dv] = c
        if c:
            for idx in range(dv + 1):
                num[k - dv + idx] -= c * v[idx]
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    out = []
    for c in quot:
        if c.denominator != 1:
            raise ArithmeticError("polynomial quotient was not integral")
        out.append(int(c))
    return _strip(out)


def _sub_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _strip(out)


def _yun_squarefree(f: list[int]) -> list[tuple[list[int], int]]:
    """Square-free decomposition: [(factor, multiplicity)], factors primitive."""
    fp = _deriv_int(f)
    d = _gcd_int(f, fp)
    if len(d) - 1 == 0:
        return [(_primitive(f), 1)]
    w = _div_exact(f, d)
    y = _div_exact(fp, d)
    z = _sub_int(y, _deriv_int(w))
    out: list[tuple[list[int], int]] = []
    i = 1
    while len(w) - 1 > 0:
        g = _gcd_int(w, z)
        if len(g) - 1 > 0:
            out.append((g, i))
        w = _div_exact(w, g)
        z = _sub_int(_div_exact(z, g), _deriv_int(w))
        i += 1
    total = sum((len(g) - 1) * mult for g, mult in out)
    if total != len(f) - 1:
        raise ArithmeticError("square-free decomposition lost degree")
    return out


def _sign_at(c: Sequence[int], x: Fraction) -> int:
    """Sign of the integer polynomial at a rational point.

    Evaluates den^n * f(num/den) = sum c_j num^j den^(n-j), an integer,
    by Horner in num with accumulated powers of den.
    """
    num, den = x.numerator, x.denominator
    n = len(c) - 1
    acc = 0
    dp = 1
    for k in range(n + 1):
        acc = acc * num + c[n - k] * dp
        if k < n:
            dp *= den
    return (acc > 0) - (acc < 0)


def _sturm_chain(f: list[int]) -> list[list[int]]:
    chain = [list(f), _primitive(_deriv_int(f))]
    while len(chain[-1]) - 1 > 0:
        r, sign = _pseudo_rem(chain[-2], chain[-1])
        r = _strip(r)
        if not r:
            raise ArithmeticError("Sturm chain hit a zero remainder (input not square-free)")
        nxt = [-sign * x for x in _primitive(r)]
        chain.append(nxt)
    return chain


def _variations(chain: Sequence[Sequence[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(c, x) for c in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _cauchy_bound(f: Sequence[int]) -> Fraction:
    lead = abs(f[-1])
    top = max(abs(c) for c in f[:-1]) if len(f) > 1 else 0
    return Fraction(top, lead) + 2


def _nonroot_point(f: Sequence[int], lo: Fraction, hi: Fraction) -> Fraction:
    mid = (lo + hi) / 2
    if _sign_at(f, mid) != 0:
        return mid
    span = hi - lo
    for k in (3, 5, 7, 11, 13, 17, 19, 23):
        cand = mid + span / (2 * k)
        if cand < hi and _sign_at(f, cand) != 0:
            return cand
    raise ArithmeticError("could not find a non-root bisection point")


def _isolate(f: list[int], chain: list[list[int]],
             lo: Fraction, hi: Fraction, count: int,
             depth: int = 0) -> list[tuple[Fraction, Fraction]]:
    if count == 0:
        return []
    if count == 1:
        return [(lo, hi)]
    if depth > 200:
        raise ArithmeticError("root isolation failed to separate roots")
    mid = _nonroot_point(f, lo, hi)
    left = _variations(chain, lo) - _variations(chain, mid)
    return (_isolate(f, chain, lo, mid, left, depth + 1)
            + _isolate(f, chain, mid, hi, count - left, depth + 1))


def _refine(f: Sequence[int], lo: Fraction, hi: Fraction) -> float:
    """Bisect a bracketing interval with exact signs down to ~1e-13 width."""
    slo = _sign_at(f, lo)
    shi = _sign_at(f, hi)
    if slo == 0:
        return float(lo)
    if shi == 0:
        return float(hi)
    if slo * shi > 0:
        raise ArithmeticError("interval does not bracket a sign change")
    width_tol = Fraction(1, 10 ** 13)
    for _ in range(220):
        if hi - lo <= width_tol:
            break
        mid = (lo + hi) / 2
        sm = _sign_at(f, mid)
        if sm == 0:
            return float(mid)
        if sm * slo < 0:
            hi = mid
        else:
            lo, slo = mid, sm
    return float((lo + hi) / 2)


def poly_roots_real(pl: RationalPoly) -> list[float]:
    """All real roots with multiplicity, descending.

    Intended for polynomials known to have only real roots (e.g. the
    characteristic polynomial of a symmetric matrix); raises if any
    square-free factor has fewer real roots than its degree.
    """
    coeffs = list(pl.coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial has no well-defined root set")
    if len(coeffs) == 1:
        return []
    s = 1
    for c in coeffs:
        s = math.lcm(s, c.denominator)
    f = _primitive([int(c * s) for c in coeffs])
    if f[-1] < 0:
        f = [-x for x in f]
    roots: list[float] = []
    for factor, mult in _yun_squarefree(f):
        deg = len(factor) - 1
        if deg == 0:
            continue
        if deg == 1:
            roots.extend([float(Fraction(-factor[0], factor[1]))] * mult)
            continue
        chain = _sturm_chain(factor)
        bound = _cauchy_bound(factor)
        lo, hi = -bound, bound
        n_real = _variations(chain, lo) - _variations(chain, hi)
        if n_real != deg:
            raise ArithmeticError(
                f"factor of degree {deg} has only {n_real} real roots")
        for a, b in _isolate(factor, chain, lo, hi, n_real):
            roots.extend([_refine(factor, a, b)] * mult)
    roots.sort(reverse=True)
    if len(roots) != len(coeffs) - 1:
        raise ArithmeticError("lost roots during isolation")
    return roots
