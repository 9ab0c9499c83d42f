"""Group constructors: families of permutation groups and matrix groups over
small finite fields turned into permutation actions.

Matrices act on row vectors from the right, so composing the point maps
left to right matches matrix multiplication order. Points are ordered
lexicographically on normalized coordinates.
"""

__all__ = [
    "CONSTRUCTORS",
    "symmetric",
    "alternating",
    "cyclic",
    "dihedral",
    "elementary_abelian",
    "direct_product",
    "semidirect",
    "special_linear",
    "general_linear",
    "projective_special_linear",
    "projective_general_linear",
    "projective_semilinear",
    "mathieu10",
    "aut_a6",
    "psl34_graph_field",
    "suzuki8",
    "affine",
    "monomial_a4",
]

import logging
from math import gcd

from grpinv.catalog.fields import field
from grpinv.core.common import GroupComputationError
from grpinv.perm.group import FiniteGroup

logger = logging.getLogger(__name__)


def _cycle(points, degree):
    images = list(range(degree))
    for i, x in enumerate(points):
        images[x] = points[(i + 1) % len(points)]
    return tuple(images)


def _action(points, maps, normalize=None):
    index = {pt: i for i, pt in enumerate(points)}
    generators = []
    for f in maps:
        images = []
        for pt in points:
            image = f(pt)
            if normalize is not None:
                image = normalize(image)
            if image not in index:
                raise GroupComputationError("map leaves the point set at {}".format(pt))
            images.append(index[image])
        generators.append(tuple(images))
    return generators


# -- permutation families ----------------------------------------------------


def symmetric(n):
    gens = []
    if n >= 2:
        gens = [_cycle(list(range(n)), n), _cycle([0, 1], n)]
    return FiniteGroup(gens, degree=n, name="S{}".format(n))


def alternating(n):
    gens = []
    if n >= 3:
        gens.append(_cycle([0, 1, 2], n))
        if n >= 4:
            tail = list(range(n)) if n % 2 else list(range(1, n))
            gens.append(_cycle(tail, n))
    return FiniteGroup(gens, degree=n, name="A{}".format(n))


def cyclic(n):
    gens = [_cycle(list(range(n)), n)] if n > 1 else []
    return FiniteGroup(gens, degree=n, name="Z{}".format(n))


def dihedral(n):
    """dihedral group of order 2n on the n-gon"""
    if n < 3:
        raise ValueError("Dih(n) needs n >= 3")
    rotation = _cycle(list(range(n)), n)
    reflection = tuple((-i) % n for i in range(n))
    return FiniteGroup([rotation, reflection], degree=n, name="D{}".format(n))


def direct_product(*groups):
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            images = list(range(degree))
            for i, x in enumerate(g):
                images[offset + i] = offset + x
            gens.append(tuple(images))
        offset += G.degree
    name = "x".join(G.name for G in groups)
    return FiniteGroup(gens, degree=degree, name=name)


def elementary_abelian(p, k):
    G = direct_product(*[cyclic(p) for _ in range(k)])
    G.name = "{}^{}".format(p, k)
    return G


def semidirect(m, n, r):
    """Z_m x| Z_n = <a, b | a^m, b^n, b^-1 a b = a^r> on its own elements"""
    if gcd(r, m) != 1 or pow(r, n, m) != 1 % m:
        raise ValueError("{} does not define an automorphism of order dividing {}".format(r, n))
    points = [(i, j) for i in range(m) for j in range(n)]

    def times_a(pt):
        i, j = pt
        return ((i + pow(r, -j, m)) % m if m > 1 else 0, j)

    def times_b(pt):
        i, j = pt
        return (i, (j + 1) % n)

    G = FiniteGroup(
        _action(points, [times_a, times_b]),
        degree=len(points),
        name="{}:{}".format(m, n),
    )
    return G


# -- linear groups -------------------------------------------------------------


def _identity_matrix(F, n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _elementary(F, n, i, j, a):
    M = _identity_matrix(F, n)
    M[i][j] = a
    return M


def _diagonal(F, values):
    n = len(values)
    M = [[0] * n for _ in range(n)]
    for i, a in enumerate(values):
        M[i][i] = a
    return M


def _sl_matrices(F, n):
    w = F.primitive
    matrices = []
    for i in range(n - 1):
        values = [1] * n
        values[i] = w
        values[i + 1] = F.inv(w)
        matrices.append(_diagonal(F, values))
        matrices.append(_elementary(F, n, i, i + 1, 1))
        matrices.append(_elementary(F, n, i + 1, i, 1))
    return [M for M in matrices if M != _identity_matrix(F, n)]


def _gl_matrices(F, n):
    matrices = _sl_matrices(F, n)
    if F.q > 2:
        matrices.append(_diagonal(F, [F.primitive] + [1] * (n - 1)))
    return matrices


def _linear(F, M):
    return lambda v: F.vector_times_matrix(v, M)


def _semilinear(F, M, times=1):
    return lambda v: F.vector_times_matrix(
        tuple(F.frobenius(x, times) for x in v), M
    )


def _nonzero_vectors(F, n):
    return [v for v in F.vectors(n) if any(v)]


def special_linear(n, q):
    """SL(n,q) on the nonzero vectors"""
    F = field(q)
    maps = [_linear(F, M) for M in _sl_matrices(F, n)]
    return FiniteGroup(
        _action(_nonzero_vectors(F, n), maps),
        degree=q ** n - 1,
        name="SL({},{})".format(n, q),
    )


def general_linear(n, q):
    """GL(n,q) on the nonzero vectors"""
    F = field(q)
    maps = [_linear(F, M) for M in _gl_matrices(F, n)]
    return FiniteGroup(
        _action(_nonzero_vectors(F, n), maps),
        degree=q ** n - 1,
        name="GL({},{})".format(n, q),
    )


def _projective(F, n, maps, name):
    points = F.projective_points(n)
    return FiniteGroup(
        _action(points, maps, F.normalize), degree=len(points), name=name
    )


def projective_special_linear(n, q):
    F = field(q)
    return _projective(
        F, n, [_linear(F, M) for M in _sl_matrices(F, n)], "PSL({},{})".format(n, q)
    )


def projective_general_linear(n, q):
    F = field(q)
    return _projective(
        F, n, [_linear(F, M) for M in _gl_matrices(F, n)], "PGL({},{})".format(n, q)
    )


def projective_semilinear(q, full=False):
    """PSigmaL(2,q), or PGammaL(2,q) when ``full``"""
    F = field(q)
    matrices = _gl_matrices(F, 2) if full else _sl_matrices(F, 2)
    maps = [_linear(F, M) for M in matrices]
    if F.k > 1:
        maps.append(_semilinear(F, _identity_matrix(F, 2)))
    name = "{}(2,{})".format("PGammaL" if full else "PSigmaL", q)
    return _projective(F, 2, maps, name)


def mathieu10():
    """PSL(2,9) extended by z -> nu z^3 with nu a non-square"""
    F = field(9)
    nu = F.non_square()
    maps = [_linear(F, M) for M in _sl_matrices(F, 2)]
    maps.append(_semilinear(F, _diagonal(F, [nu, 1])))
    return _projective(F, 2, maps, "M10")


def aut_a6():
    G = projective_semilinear(9, full=True)
    G.name = "Aut(A6)"
    return G


def psl34_graph_field():
    """PSL(3,4) with the graph-field automorphism, on points and lines of PG(2,4).

    A point x lies on a line l when x.l = 0; matrices send lines to
    l M^-T and the automorphism swaps x with the line x^2.
    """
    F = field(4)
    projective = F.projective_points(3)
    points = [("p",) + v for v in projective] + [("l",) + v for v in projective]

    def inverse_transpose(M):
        n = len(M)
        A = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(M)]
        for col in range(n):
            pivot = next(r for r in range(col, n) if A[r][col])
            A[col], A[pivot] = A[pivot], A[col]
            scale = F.inv(A[col][col])
            A[col] = [F.mul(scale, x) for x in A[col]]
            for r in range(n):
                if r != col and A[r][col]:
                    factor = A[r][col]
                    A[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(A[r], A[col])]
        inverse = [row[n:] for row in A]
        return [[inverse[j][i] for j in range(n)] for i in range(n)]

    def matrix_map(M):
        N = inverse_transpose(M)

        def f(pt):
            v = pt[1:]
            if pt[0] == "p":
                return ("p",) + F.normalize(F.vector_times_matrix(v, M))
            return ("l",) + F.normalize(F.vector_times_matrix(v, N))

        return f

    def graph_field(pt):
        other = "l" if pt[0] == "p" else "p"
        return (other,) + F.normalize(tuple(F.frobenius(x) for x in pt[1:]))

    maps = [matrix_map(M) for M in _sl_matrices(F, 3)] + [graph_field]
    return FiniteGroup(_action(points, maps), degree=len(points), name="PSL(3,4):2")


def suzuki8():
    """Sz(8) on the 65 points of the Tits ovoid in PG(3,8)"""
    F = field(8)

    def sigma(x):
        return F.frobenius(x, 2)

    def sigma_plus(x, k):
        return F.mul(sigma(x), F.power(x, k))

    ovoid = [(0, 0, 0, 1)]
    for x in F:
        for y in F:
            z = F.add(F.add(F.mul(x, y), sigma_plus(x, 2)), sigma(y))
            ovoid.append((1, x, y, z))
    ovoid.sort()

    def translation(a, b):
        c = F.add(F.add(F.mul(a, b), sigma_plus(a, 2)), sigma(b))
        return [
            [1, a, b, c],
            [0, 1, sigma(a), F.add(b, sigma_plus(a, 1))],
            [0, 0, 1, a],
            [0, 0, 0, 1],
        ]

    w = F.primitive
    matrices = [
        translation(1, 0),
        translation(0, 1),
        _diagonal(F, [1, w, sigma_plus(w, 1), sigma_plus(w, 2)]),
        [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
    ]
    maps = [_linear(F, M) for M in matrices]
    G = FiniteGroup(
        _action(ovoid, maps, F.normalize), degree=len(ovoid), name="Sz(8)"
    )
    if len(ovoid) != 65:
        raise GroupComputationError("Tits ovoid has {} points".format(len(ovoid)))
    return G


def affine(n, q, special=True):
    """ASL(n,q) or AGL(n,q) on the vectors of GF(q)^n"""
    F = field(q)
    matrices = _sl_matrices(F, n) if special else _gl_matrices(F, n)
    maps = [_linear(F, M) for M in matrices]
    if n == 1:
        shifts = [(F.power(F.primitive, m),) for m in range(F.k)]
    else:
        shifts = [(1,) + (0,) * (n - 1)]
    for shift in shifts:
        maps.append(lambda v, s=shift: tuple(F.add(x, y) for x, y in zip(v, s)))
    name = "{}({},{})".format("ASL" if special else "AGL", n, q)
    return FiniteGroup(_action(F.vectors(n), maps), degree=q ** n, name=name)


def monomial_a4(p):
    """GF(p)^3 extended by A4 acting as sign changes of determinant 1 and
    cyclic coordinate shifts"""
    if p == 2:
        raise ValueError("sign changes are trivial in characteristic 2")
    F = field(p)
    minus = F.neg(1)
    matrices = [
        _diagonal(F, [minus, minus, 1]),
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
    ]
    maps = [_linear(F, M) for M in matrices]
    maps.append(lambda v: (F.add(v[0], 1),) + tuple(v[1:]))
    return FiniteGroup(
        _action(F.vectors(3), maps), degree=p ** 3, name="{}^3:A4".format(p)
    )


def _sigma_line(n, q):
    if n != 2:
        raise ValueError("semilinear groups are built on the projective line only")
    return projective_semilinear(q)


def _gamma_line(n, q):
    if n != 2:
        raise ValueError("semilinear groups are built on the projective line only")
    return projective_semilinear(q, full=True)


def _suzuki(q):
    if q != 8:
        raise ValueError("Sz({}) is not constructible here".format(q))
    return suzuki8()


def _general_affine(n, q):
    return affine(n, q, special=False)


# name -> (callable, number of integer arguments or None for group arguments)
CONSTRUCTORS = {
    "Sym": (symmetric, 1),
    "Alt": (alternating, 1),
    "Cyc": (cyclic, 1),
    "Dih": (dihedral, 1),
    "ElemAb": (elementary_abelian, 2),
    "Direct": (direct_product, None),
    "Semidirect": (semidirect, 3),
    "SL": (special_linear, 2),
    "GL": (general_linear, 2),
    "PSL": (projective_special_linear, 2),
    "PGL": (projective_general_linear, 2),
    "PSigmaL": (_sigma_line, 2),
    "PGammaL": (_gamma_line, 2),
    "M10": (mathieu10, 0),
    "AutA6": (aut_a6, 0),
    "PSL34U": (psl34_graph_field, 0),
    "Sz": (_suzuki, 1),
    "ASL": (affine, 2),
    "AGL": (_general_affine, 2),
    "MonomialA4": (monomial_a4, 1),
}
