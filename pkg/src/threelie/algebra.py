"""3-Lie algebras given by structure constants, and their representations.

Indices are 1-based everywhere a caller can see them.  A vector is a plain
list of :class:`Scalar` of length ``dim``; position ``m - 1`` holds the
coefficient of ``e_m``.  Matrices are lists of rows, and ``M[m-1][c-1]`` is
the ``e_m`` coefficient of the image of ``e_c``.
"""
from __future__ import annotations

from itertools import combinations, product

from .report import Report
from .scalar import ONE, ZERO, Scalar, substitute

_PERM3 = (
    ((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
    ((1, 0, 2), -1), ((0, 2, 1), -1), ((2, 1, 0), -1),
)


def sort_sign(idx):
    """Sort ``idx`` ascending; return (sorted tuple, permutation sign).

    The sign is 0 when an index repeats.
    """
    idx = list(idx)
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


def zero_vector(n):
    return [ZERO] * n


def basis_vector(n, i):
    v = [ZERO] * n
    v[i - 1] = ONE
    return v


def vadd(u, v):
    return [a + b for a, b in zip(u, v)]


def vsub(u, v):
    return [a - b for a, b in zip(u, v)]


def vscale(c, v):
    c = Scalar.coerce(c)
    return [c * a for a in v]


def vis_zero(v):
    return all(a.is_zero() for a in v)


def zero_matrix(n, m=None):
    m = n if m is None else m
    return [[ZERO] * m for _ in range(n)]


def matmul(A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = zero_matrix(n, m)
    for i in range(n):
        row = A[i]
        for l in range(k):
            a = row[l]
            if a.is_zero():
                continue
            brow = B[l]
            orow = out[i]
            for j in range(m):
                b = brow[j]
                if not b.is_zero():
                    orow[j] = orow[j] + a * b
    return out


def matadd(A, B):
    return [vadd(r, s) for r, s in zip(A, B)]


def matsub(A, B):
    return [vsub(r, s) for r, s in zip(A, B)]


def matscale(c, A):
    return [vscale(c, r) for r in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def matvec(A, v):
    out = []
    for row in A:
        acc = ZERO
        for a, b in zip(row, v):
            if not a.is_zero() and not b.is_zero():
                acc = acc + a * b
        out.append(acc)
    return out


def mat_is_zero(A):
    return all(vis_zero(r) for r in A)


class ThreeLieAlgebra:
    """Totally antisymmetric ternary bracket on ``dim`` basis vectors.

    ``brackets`` maps index triples (any order, 1-based) to a vector of
    ``dim`` values; values are coerced to Scalars.  Only sorted triples are
    stored.  Whether the Fundamental Identity holds is not assumed; see
    :func:`check_fundamental_identity`.
    """

    def __init__(self, dim: int, brackets=None, name: str | None = None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        self.name = name
        structure = {}
        for ijk, value in (brackets or {}).items():
            if len(ijk) != 3 or not all(1 <= i <= dim for i in ijk):
                raise ValueError(f"bad bracket index {ijk} for dim {dim}")
            if len(value) != dim:
                raise ValueError(f"bracket value for {ijk} has length {len(value)}, expected {dim}")
            vec = [Scalar.coerce(x) for x in value]
            key, sign = sort_sign(ijk)
            if sign == 0:
                if not vis_zero(vec):
                    raise ValueError(f"repeated index {ijk} with nonzero value")
                continue
            if sign < 0:
                vec = [-x for x in vec]
            if key in structure:
                raise ValueError(f"bracket {key} given twice")
            if not vis_zero(vec):
                structure[key] = tuple(vec)
        self.structure = structure
        # ordered-triple lookup: sparse list of (m, coefficient)
        self._table = {}
        for key, vec in structure.items():
            nz = tuple((m + 1, c) for m, c in enumerate(vec) if not c.is_zero())
            for perm, sgn in _PERM3:
                k = (key[perm[0]], key[perm[1]], key[perm[2]])
                self._table[k] = nz if sgn > 0 else tuple((m, -c) for m, c in nz)
        self._ad_cache = {}

    # -- access -------------------------------------------------------------

    def basis_bracket(self, i, j, k):
        """Vector ``[e_i, e_j, e_k]``."""
        v = [ZERO] * self.dim
        for m, c in self._table.get((i, j, k), ()):
            v[m - 1] = c
        return v

    def sparse_bracket(self, i, j, k):
        """``[e_i, e_j, e_k]`` as a tuple of ``(m, coefficient)`` pairs."""
        return self._table.get((i, j, k), ())

    def T(self, i, j, k, m) -> Scalar:
        """Structure constant: coefficient of ``e_m`` in ``[e_i, e_j, e_k]``."""
        for mm, c in self._table.get((i, j, k), ()):
            if mm == m:
                return c
        return ZERO

    def bracket(self, x, y, z):
        n = self.dim
        for v in (x, y, z):
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} in dimension {n}")
        out = [ZERO] * n
        xs = [(i + 1, c) for i, c in enumerate(x) if not c.is_zero()]
        ys = [(i + 1, c) for i, c in enumerate(y) if not c.is_zero()]
        zs = [(i + 1, c) for i, c in enumerate(z) if not c.is_zero()]
        for (i, a), (j, b), (k, c) in product(xs, ys, zs):
            entry = self._table.get((i, j, k))
            if not entry:
                continue
            abc = a * b * c
            for m, t in entry:
                out[m - 1] = out[m - 1] + abc * t
        return out

    def adjoint(self, s, t):
        """Matrix of ``ad_{e_s, e_t}``."""
        n = self.dim
        if not (1 <= s <= n and 1 <= t <= n):
            raise IndexError(f"adjoint index ({s}, {t}) out of range 1..{n}")
        cached = self._ad_cache.get((s, t))
        if cached is None:
            M = zero_matrix(n)
            for c in range(1, n + 1):
                for m, v in self._table.get((s, t, c), ()):
                    M[m - 1][c - 1] = v
            cached = self._ad_cache[(s, t)] = M
        return [list(r) for r in cached]

    # -- misc ---------------------------------------------------------------

    def is_abelian(self) -> bool:
        return not self.structure

    def parameters(self) -> set:
        return {name for vec in self.structure.values() for c in vec for name in c.variables()}

    def substitute(self, bindings) -> ThreeLieAlgebra:
        return ThreeLieAlgebra(
            self.dim,
            {k: [substitute(c, bindings) for c in v] for k, v in self.structure.items()},
            name=self.name,
        )

    def __eq__(self, other):
        if not isinstance(other, ThreeLieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.structure == other.structure

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<ThreeLieAlgebra{label} dim={self.dim} brackets={len(self.structure)}>"

    def table(self):
        """Nonzero brackets as ``{(i, j, k): {m: coefficient}}``, i<j<k."""
        return {
            key: {m + 1: c for m, c in enumerate(vec) if not c.is_zero()}
            for key, vec in sorted(self.structure.items())
        }


def bracket(A: ThreeLieAlgebra, x, y, z):
    return A.bracket(x, y, z)


def adjoint(A: ThreeLieAlgebra, s: int, t: int):
    return A.adjoint(s, t)


def _fi_defect(A, x1, x2, x3, x4, x5):
    """[x1,x2,[x3,x4,x5]] minus the three-term right side, on basis indices."""
    n = A.dim
    e = lambda i: basis_vector(n, i)  # noqa: E731
    lhs = A.bracket(e(x1), e(x2), A.basis_bracket(x3, x4, x5))
    rhs = A.bracket(A.basis_bracket(x1, x2, x3), e(x4), e(x5))
    rhs = vadd(rhs, A.bracket(e(x3), A.basis_bracket(x1, x2, x4), e(x5)))
    rhs = vadd(rhs, A.bracket(e(x3), e(x4), A.basis_bracket(x1, x2, x5)))
    return vsub(lhs, rhs)


def check_fundamental_identity(A: ThreeLieAlgebra, reduced: bool = True) -> Report:
    """Evaluate the Fundamental Identity on basis 5-tuples.

    With ``reduced`` only x1<x2 and x3<x4<x5 are visited; both sides are
    antisymmetric in (x1, x2) and in (x3, x4, x5), so this is enough.
    ``reduced=False`` walks all ``dim**5`` tuples.
    """
    n = A.dim
    report = Report("fundamental identity")
    if reduced:
        tuples = (p + q for p in combinations(range(1, n + 1), 2)
                  for q in combinations(range(1, n + 1), 3))
    else:
        tuples = product(range(1, n + 1), repeat=5)
    for tup in tuples:
        d = _fi_defect(A, *tup)
        if not vis_zero(d):
            report.add(tup, d)
    return report


def check_derivation(A: ThreeLieAlgebra) -> Report:
    """The Fundamental Identity restated as: ad_{x1,x2} is a derivation.

    Computed from adjoint matrices rather than nested brackets, so it is an
    independent route to the same per-tuple defects.
    """
    n = A.dim
    report = Report("ad derivation")
    for x1, x2 in combinations(range(1, n + 1), 2):
        ad = A.adjoint(x1, x2)
        col = lambda c: [ad[m][c - 1] for m in range(n)]  # noqa: E731
        e = lambda i: basis_vector(n, i)  # noqa: E731
        for x3, x4, x5 in combinations(range(1, n + 1), 3):
            lhs = matvec(ad, A.basis_bracket(x3, x4, x5))
            rhs = A.bracket(col(x3), e(x4), e(x5))
            rhs = vadd(rhs, A.bracket(e(x3), col(x4), e(x5)))
            rhs = vadd(rhs, A.bracket(e(x3), e(x4), col(x5)))
            d = vsub(lhs, rhs)
            if not vis_zero(d):
                report.add((x1, x2, x3, x4, x5), d)
    return report


class Representation:
    """Skew map rho from pairs of basis vectors to carrier endomorphisms.

    ``rho`` maps pairs (s, t), s<t, to ``carrier_dim``-square matrices.
    ``algebra_dim`` is the dimension of the acting algebra.
    """

    def __init__(self, algebra_dim: int, carrier_dim: int, rho=None):
        self.algebra_dim = algebra_dim
        self.carrier_dim = carrier_dim
        self.rho = {}
        for (s, t), M in (rho or {}).items():
            key, sign = sort_sign((s, t))
            if sign == 0:
                raise ValueError("rho(x, x) must be zero; do not store diagonal pairs")
            M = [[Scalar.coerce(x) for x in row] for row in M]
            if len(M) != carrier_dim or any(len(r) != carrier_dim for r in M):
                raise ValueError("matrix size does not match carrier dimension")
            self.rho[key] = M if sign > 0 else matscale(-1, M)

    def __call__(self, s, t):
        if s == t:
            return zero_matrix(self.carrier_dim)
        key, sign = sort_sign((s, t))
        M = self.rho.get(key)
        if M is None:
            return zero_matrix(self.carrier_dim)
        return M if sign > 0 else matscale(-1, M)

    def on_vector(self, x, t):
        """rho(x, e_t) for a general vector x."""
        out = zero_matrix(self.carrier_dim)
        for s, c in enumerate(x, start=1):
            if not c.is_zero():
                out = matadd(out, matscale(c, self(s, t)))
        return out

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        keys = set(self.rho) | set(other.rho)
        return (self.algebra_dim == other.algebra_dim
                and self.carrier_dim == other.carrier_dim
                and all(self(*k) == other(*k) for k in keys))


def adjoint_representation(A: ThreeLieAlgebra) -> Representation:
    n = A.dim
    return Representation(n, n, {(s, t): A.adjoint(s, t) for s, t in combinations(range(1, n + 1), 2)})


def zero_representation(algebra_dim: int, carrier_dim: int) -> Representation:
    return Representation(algebra_dim, carrier_dim)


def dual_representation(rho: Representation) -> Representation:
    """rho*(s, t) = -rho(s, t)^T, the sign forced by the dual pairing."""
    return Representation(
        rho.algebra_dim, rho.carrier_dim,
        {k: matscale(-1, transpose(M)) for k, M in rho.rho.items()},
    )


def check_representation(A: ThreeLieAlgebra, rho: Representation) -> Report:
    """Both representation axioms on every basis 4-tuple."""
    n = A.dim
    if rho.algebra_dim != n:
        raise ValueError("representation and algebra dimensions differ")
    report = Report("representation")
    r1 = Report("commutator axiom")
    r2 = Report("bracket axiom")
    for x1, x2, x3, x4 in product(range(1, n + 1), repeat=4):
        b123 = A.basis_bracket(x1, x2, x3)
        b124 = A.basis_bracket(x1, x2, x4)
        lhs = matsub(matmul(rho(x1, x2), rho(x3, x4)), matmul(rho(x3, x4), rho(x1, x2)))
        rhs = matsub(rho.on_vector(b123, x4), rho.on_vector(b124, x3))
        d = matsub(lhs, rhs)
        if not mat_is_zero(d):
            r1.add((x1, x2, x3, x4), d)
        lhs = rho.on_vector(b123, x4)
        rhs = matmul(rho(x1, x2), rho(x3, x4))
        rhs = matadd(rhs, matmul(rho(x2, x3), rho(x1, x4)))
        rhs = matadd(rhs, matmul(rho(x3, x1), rho(x2, x4)))
        d = matsub(lhs, rhs)
        if not mat_is_zero(d):
            r2.add((x1, x2, x3, x4), d)
    report.checks = [r1, r2]
    return report


# -- JSON -------------------------------------------------------------------

def algebra_to_json(A: ThreeLieAlgebra, encode=str) -> dict:
    return {
        "dim": A.dim,
        "brackets": [
            {"ijk": list(k), "value": [encode(c) for c in v]}
            for k, v in sorted(A.structure.items())
        ],
    }


def algebra_from_json(data: dict, name=None) -> ThreeLieAlgebra:
    from .scalar import from_json

    try:
        dim = int(data["dim"])
        brackets = {tuple(int(i) for i in b["ijk"]): [from_json(c) for c in b["value"]]
                    for b in data.get("brackets", [])}
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed algebra JSON: {exc}") from exc
    return ThreeLieAlgebra(dim, brackets, name=name or data.get("name"))
