"""Independent oracles and generators shared by the test modules.

The oracles evaluate the defining identities directly with Algebra.bracket
and LinMap application, and get ranks from sympy, so they share no code
with the row generators used by the solver.
"""

from fractions import Fraction
from fractions import Fraction as F
from random import Random

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from leibniz_bider.algebra import Algebra, is_right_leibniz
from leibniz_bider.maps import Bider, LinMap


def sym_rank(rows, ncols):
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    data = [[QQ(int(F(v).numerator), int(F(v).denominator)) for v in r] for r in rows]
    return DomainMatrix(data, (len(rows), ncols), QQ).rank()


def sym_nullity(rows, ncols):
    return ncols - sym_rank(rows, ncols)


def _sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def _add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def der_residuals(a, d):
    e = [a.basis_vector(i) for i in range(a.dim)]
    br = a.bracket
    out = []
    for x in e:
        for y in e:
            out += _sub(d(br(x, y)), _add(br(d(x), y), br(x, d(y))))
    return out


def antider_residuals(a, D, left=False):
    e = [a.basis_vector(i) for i in range(a.dim)]
    br = a.bracket
    out = []
    for x in e:
        for y in e:
            if left:
                rhs = _sub(br(x, D(y)), br(y, D(x)))
            else:
                rhs = _sub(br(D(x), y), br(D(y), x))
            out += _sub(D(br(x, y)), rhs)
    return out


def compat_residuals(a, d, D):
    e = [a.basis_vector(i) for i in range(a.dim)]
    return [v for x in e for y in e for v in _sub(a.bracket(x, d(y)), a.bracket(x, D(y)))]


def oracle_is_derivation(a, d):
    return not any(der_residuals(a, d))


def oracle_is_antiderivation(a, D, left=False):
    return not any(antider_residuals(a, D, left))


def oracle_is_biderivation(a, b):
    return oracle_is_derivation(a, b.d) and oracle_is_antiderivation(a, b.D) and not any(
        compat_residuals(a, b.d, b.D)
    )


def _unit(n, k):
    return LinMap.from_entries(n, {divmod(k, n): 1})


def oracle_dim(a, kind, left=False):
    """Kernel dimension of the defining operator, built column by column."""
    n = a.dim
    zero = LinMap.zero(n)
    cols = []
    if kind == "der":
        cols = [der_residuals(a, _unit(n, k)) for k in range(n * n)]
    elif kind == "antider":
        cols = [antider_residuals(a, _unit(n, k), left) for k in range(n * n)]
    else:
        for k in range(2 * n * n):
            d, D = (_unit(n, k), zero) if k < n * n else (zero, _unit(n, k - n * n))
            cols.append(der_residuals(a, d) + antider_residuals(a, D) + compat_residuals(a, d, D))
    rows = [list(r) for r in zip(*cols)]
    return len(cols) - sym_rank(rows, len(cols))


def brute_bider_bracket(b1, b2):
    """(d d' - d' d, D d' - d' D) from explicit matrix products via sympy."""
    m = lambda f: sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in f.matrix])
    back = lambda s: LinMap(tuple(tuple(Fraction(int(v.p), int(v.q)) for v in s.row(i)) for i in range(s.rows)))
    d1, D1, d2 = m(b1.d), m(b1.D), m(b2.d)
    return Bider(back(d1 * d2 - d2 * d1), back(D1 * d2 - d2 * D1))


# -- random right Leibniz algebras -----------------------------------------------


def _random_invertible(rng, n):
    while True:
        p = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if sym_rank(p, n) == n:
            return p


def _inverse(p):
    s = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in p]).inv()
    return [[Fraction(int(s[i, j].p), int(s[i, j].q)) for j in range(s.cols)] for i in range(s.rows)]


def change_basis(a, p):
    """Structure constants of ``a`` in the basis f_j = sum_i p[i][j] e_i."""
    n = a.dim
    q = _inverse(p)
    f = [tuple(p[i][j] for i in range(n)) for j in range(n)]
    table = {}
    for i in range(n):
        for j in range(n):
            z = a.bracket(f[i], f[j])
            coords = {k: sum((q[k][t] * z[t] for t in range(n)), Fraction(0)) for k in range(n)}
            coords = {k: v for k, v in coords.items() if v}
            if coords:
                table[(i, j)] = coords
    return Algebra(n, table)


def _hemisemidirect(rng, dim):
    """g (+) M with [(x, m), (y, m')] = ([x, y], rho(y) m) for a right g-module M.

    g is one of: 1-dim, 2-dim abelian, or 2-dim with [a, b] = a acting
    through b only.  The module condition is then automatic.
    """
    kind = rng.choice(["one", "abelian2", "affine2"])
    k = 1 if kind == "one" else 2
    m = dim - k
    rnd = lambda: [[rng.randint(-2, 2) for _ in range(m)] for _ in range(m)]
    if kind == "one":
        rhos = [rnd()]
    elif kind == "abelian2":
        a = rnd()
        c0, c1 = rng.randint(-1, 1), rng.randint(-1, 1)
        b = [[c0 * (i == j) + c1 * a[i][j] for j in range(m)] for i in range(m)]
        rhos = [a, b]
    else:
        rhos = [[[0] * m for _ in range(m)], rnd()]
    table = {}
    if kind == "affine2":
        table[(0, 1)] = {0: 1}
        table[(1, 0)] = {0: -1}
    for mi in range(m):
        for y in range(k):
            img = {k + r: rhos[y][r][mi] for r in range(m) if rhos[y][r][mi]}
            if img:
                table[(k + mi, y)] = img
    return Algebra(dim, table)


def random_right_leibniz(rng: Random, dim: int = 4) -> Algebra:
    a = change_basis(_hemisemidirect(rng, dim), _random_invertible(rng, dim))
    assert is_right_leibniz(a)
    return a


def random_algebras(seed: int, count: int, dim: int = 4) -> list:
    rng = Random(seed)
    return [random_right_leibniz(rng, dim) for _ in range(count)]
