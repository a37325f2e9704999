"""The 3-Lie classical Yang-Baxter equation and the coproducts it induces.

Write ``r = Σ a^{ij} e_i⊗e_j``.  The residual ``[[r, r, r]]`` lives in the
fourth tensor power.  :func:`cybe_residual_naive` expands the four
slot-embedded brackets term by term and works for any r;
:func:`cybe_residual_skew` assembles it from the signed products
``D^{ijk}_{pqr}`` and 4-fold wedges and requires r to be skew.
"""
from __future__ import annotations

from itertools import combinations

from .algebra import ThreeLieAlgebra, basis_vector
from .scalar import ZERO, Scalar, substitute
from .tensor import Coproduct, RMatrix, Tensor, basis_wedge, permute_factors, wedge

__all__ = [
    "Coproduct", "RMatrix", "d_coefficient", "minor", "cybe_residual_naive",
    "cybe_residual_skew", "cybe_conditions", "wedge_coefficients",
    "induced_coproduct_components", "induced_coproduct_wedge", "skew_normalize",
]

_S3 = (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
       ((1, 0, 2), -1), ((0, 2, 1), -1), ((2, 1, 0), -1))


def _check_indices(r, *idx):
    for i in idx:
        if not 1 <= i <= r.dim:
            raise IndexError(f"index {i} out of range 1..{r.dim}")


def d_coefficient(r: RMatrix, ijk, pqr) -> Scalar:
    """``D^{ijk}_{pqr} = Σ_σ sgn(σ) a^{σ(i)p} a^{σ(j)q} a^{σ(k)r}``."""
    _check_indices(r, *ijk, *pqr)
    p, q, s = pqr
    acc = ZERO
    for perm, sgn in _S3:
        i, j, k = (ijk[perm[0]], ijk[perm[1]], ijk[perm[2]])
        term = r.a(i, p) * r.a(j, q) * r.a(k, s)
        acc = acc + term if sgn > 0 else acc - term
    return acc


def minor(r: RMatrix, ij, pq) -> Scalar:
    """``D^{ij}_{pq} = a^{ip} a^{jq} - a^{jp} a^{iq}``."""
    (i, j), (p, q) = ij, pq
    _check_indices(r, i, j, p, q)
    return r.a(i, p) * r.a(j, q) - r.a(j, p) * r.a(i, q)


def _check_dims(A, r):
    if A.dim != r.dim:
        raise ValueError(f"r-matrix dim {r.dim} does not match algebra dim {A.dim}")


def cybe_residual_naive(A: ThreeLieAlgebra, r: RMatrix) -> Tensor:
    """Term-by-term expansion of the four slot-embedded brackets.

    With ``x_u = e_u`` and ``y_u = Σ_v a^{uv} e_v`` the residual is
    ``Σ [x_i,x_j,x_k]⊗y_i⊗y_j⊗y_k + x_i⊗[y_i,x_j,x_k]⊗y_j⊗y_k
    + x_i⊗x_j⊗[y_i,y_j,x_k]⊗y_k + x_i⊗x_j⊗x_k⊗[y_i,y_j,y_k]``.
    No skew-symmetry is assumed.
    """
    _check_dims(A, r)
    n = A.dim
    out = Tensor.zero(4, n)
    pairs = [(u, v, r.a(u, v)) for u in range(1, n + 1) for v in range(1, n + 1)
             if not r.a(u, v).is_zero()]
    br = A.sparse_bracket
    for u1, v1, c1 in pairs:
        for u2, v2, c2 in pairs:
            c12 = c1 * c2
            for u3, v3, c3 in pairs:
                c = c12 * c3
                for m, t in br(u1, u2, u3):
                    out.add_term((m, v1, v2, v3), c * t)
                for m, t in br(v1, u2, u3):
                    out.add_term((u1, m, v2, v3), c * t)
                for m, t in br(v1, v2, u3):
                    out.add_term((u1, u2, m, v3), c * t)
                for m, t in br(v1, v2, v3):
                    out.add_term((u1, u2, u3, m), c * t)
    return out


def cybe_residual_skew(A: ThreeLieAlgebra, r: RMatrix) -> Tensor:
    """``Σ_{p<q<r} Σ_{i<j<k} Σ_l D^{ijk}_{pqr} T^l_{ijk} e_l∧e_p∧e_q∧e_r``."""
    _check_dims(A, r)
    if not r.is_skew():
        raise ValueError("cybe_residual_skew needs a skew-symmetric r; use cybe_residual_naive")
    n = A.dim
    out = Tensor.zero(4, n)
    for ijk, vec in sorted(A.structure.items()):
        for pqr in combinations(range(1, n + 1), 3):
            D = d_coefficient(r, ijk, pqr)
            if D.is_zero():
                continue
            for l, t in enumerate(vec, start=1):
                if t.is_zero() or l in pqr:
                    continue
                w = basis_wedge(n, (l,) + pqr, D * t)
                for idx, c in w.coeffs.items():
                    out.add_term(idx, c)
    return out


def wedge_coefficients(t: Tensor) -> dict:
    """Coefficients of a fully antisymmetric 4-tensor on e_l∧e_p∧e_q∧e_r, l<p<q<r."""
    return {idx: c for idx, c in t.items() if all(a < b for a, b in zip(idx, idx[1:]))}


def skew_normalize(x: Scalar) -> Scalar:
    """Rewrite ``a_j_i`` (j>i) as ``-a_i_j`` and ``a_i_i`` as 0."""
    x = Scalar.coerce(x)
    bindings = {}
    for name in x.variables():
        parts = name.split("_")
        if len(parts) == 3 and parts[0] == "a" and parts[1].isdigit() and parts[2].isdigit():
            i, j = int(parts[1]), int(parts[2])
            if i > j:
                bindings[name] = -Scalar.symbol(f"a_{j}_{i}")
            elif i == j:
                bindings[name] = ZERO
    return substitute(x, bindings)


def cybe_conditions(A: ThreeLieAlgebra) -> list:
    """Polynomial conditions on a skew r for ``[[r, r, r]] = 0``.

    These are the distinct wedge-basis coefficients of the residual for a
    fully symbolic skew r (parameters ``a_i_j``, i<j), each scaled to
    leading coefficient 1.  An empty list means every skew r solves it.
    """
    res = cybe_residual_skew(A, RMatrix.symbolic_skew(A.dim))
    seen = {}
    for _, c in sorted(wedge_coefficients(res).items()):
        m = c.monic()
        seen.setdefault(m, None)
    return list(seen)


def _direct_delta1(A, r, x):
    """Δ1(x) = Σ_{i,j} a^{ip} a^{jq} [x, e_i, e_j] ⊗ e_p ⊗ e_q."""
    n = A.dim
    out = Tensor.zero(3, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            b = A.bracket(x, basis_vector(n, i), basis_vector(n, j))
            nz = [(m, c) for m, c in enumerate(b, start=1) if not c.is_zero()]
            if not nz:
                continue
            for p in range(1, n + 1):
                aip = r.a(i, p)
                if aip.is_zero():
                    continue
                for q in range(1, n + 1):
                    coeff = aip * r.a(j, q)
                    if coeff.is_zero():
                        continue
                    for m, c in nz:
                        out.add_term((m, p, q), coeff * c)
    return out


def induced_coproduct_components(A: ThreeLieAlgebra, r: RMatrix):
    """(Δ1, Δ2, Δ3) induced by r, each evaluated by direct summation.

    With ``x_i = e_i`` and ``y_i = Σ_p a^{ip} e_p``::

        Δ1(x) = Σ [x, x_i, x_j] ⊗ y_i ⊗ y_j
        Δ2(x) = Σ y_j ⊗ [x, x_i, x_j] ⊗ y_i
        Δ3(x) = Σ y_i ⊗ y_j ⊗ [x, x_i, x_j]

    so that Δ2 = φ13 φ12 Δ1 and Δ3 = φ12 φ13 Δ1 slotwise, and
    Δ1 + Δ2 + Δ3 equals :func:`induced_coproduct_wedge`.  Listing the legs
    as ``y_j ⊗ y_i`` instead negates all three maps.
    """
    _check_dims(A, r)
    n = A.dim
    d1, d2, d3 = {}, {}, {}
    for c in range(1, n + 1):
        t1 = _direct_delta1(A, r, basis_vector(n, c))
        d1[c] = t1
        t2 = Tensor.zero(3, n)
        t3 = Tensor.zero(3, n)
        for (m, p, q), v in t1.coeffs.items():
            # term [x,e_i,e_j]_m ⊗ e_p ⊗ e_q with e_p from y_i, e_q from y_j
            t2.add_term((q, m, p), v)
            t3.add_term((p, q, m), v)
        d2[c] = t2
        d3[c] = t3
    return Coproduct(n, d1), Coproduct(n, d2), Coproduct(n, d3)


def induced_coproduct_wedge(A: ThreeLieAlgebra, r: RMatrix) -> Coproduct:
    """Δ(x) = Σ_{i<j} Σ_{p<q} D^{ij}_{pq} [x, e_i, e_j] ∧ e_p ∧ e_q."""
    _check_dims(A, r)
    if not r.is_skew():
        raise ValueError("induced_coproduct_wedge needs a skew-symmetric r")
    n = A.dim
    minors = {}
    for ij in combinations(range(1, n + 1), 2):
        for pq in combinations(range(1, n + 1), 2):
            d = minor(r, ij, pq)
            if not d.is_zero():
                minors[ij, pq] = d
    comps = {}
    for c in range(1, n + 1):
        x = basis_vector(n, c)
        t = Tensor.zero(3, n)
        for (ij, pq), d in minors.items():
            b = A.bracket(x, basis_vector(n, ij[0]), basis_vector(n, ij[1]))
            if all(v.is_zero() for v in b):
                continue
            w = wedge([b, pq[0], pq[1]], n)
            for idx, v in w.coeffs.items():
                t.add_term(idx, d * v)
        comps[c] = t
    return Coproduct(n, comps)


def phi_relations(d1: Coproduct):
    """(φ13 φ12 Δ1, φ12 φ13 Δ1), the slot permutations giving Δ2 and Δ3."""
    two = d1.map_slots(lambda t: permute_factors(permute_factors(t, 1, 2), 1, 3))
    three = d1.map_slots(lambda t: permute_factors(permute_factors(t, 1, 3), 1, 2))
    return two, three
