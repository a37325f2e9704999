"""Double construction bialgebras and the standard Manin triple on A⊕A*.

With ``[e_a,e_b,e_c] = Σ T^i_{abc} e_i`` and ``Δ(e_i) = Σ C_i^{pqr}
e_p⊗e_q⊗e_r`` the two compatibility conditions read, coefficientwise::

    cocycle constraint
        Σ_i T^i_{abc} C_i^{pqr}
            = Σ_i T^r_{bci} C_a^{pqi} + T^r_{cai} C_b^{pqi} + T^r_{abi} C_c^{pqi}
    Φ constraint
        Σ_i T^i_{abc} C_i^{pqr}
            = Σ_i T^r_{bci} C_a^{pqi} + T^q_{bci} C_a^{pir} + T^p_{bci} C_a^{iqr}

The first says ``Δ`` is a 1-cocycle for ad acting on the last slot; the
second says ``Δ([x,y,z]) = Φ_{y,z} Δ(x)`` with Φ the slotwise sum of ad.
For an alternating Δ it is enough to visit a<b<c in the first and b<c,
p<q<r in the second.  The evaluators keep the names ``eq26``/``eq27``.

The double ``A⊕A*`` uses the basis e_1..e_n, f_1..f_n (f the dual basis),
the hyperbolic pairing ``(x+ξ, y+η) = <x,η> + <ξ,y>`` and the bracket

    [x+ξ, y+η, z+γ] = [x,y,z] + ad*_{x,y}γ + ad*_{y,z}ξ + ad*_{z,x}η
                      + ad*_{ξ,η}z + ad*_{η,γ}x + ad*_{γ,ξ}y + [ξ,η,γ]*

where both coadjoint actions are ``<ad*_{u,v} w, t> = -<w, [u,v,t]>``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from . import catalog
from .algebra import ThreeLieAlgebra, algebra_to_json, check_fundamental_identity, sort_sign
from .cocycle import dual_algebra
from .linalg import determinant, echelon, nullspace
from .report import Report
from .scalar import ONE, ZERO, Scalar, substitute, to_text
from .tensor import Coproduct, Tensor, basis_wedge

K, C = Scalar.symbol("k"), Scalar.symbol("c")
K1, K2, K3 = (Scalar.symbol(f"k{i}") for i in (1, 2, 3))
C1, C2, C3 = (Scalar.symbol(f"c{i}") for i in (1, 2, 3))


# -- the two constraint systems ---------------------------------------------

def _require_alternating(delta: Coproduct):
    if not delta.is_alternating():
        raise ValueError("Δ must be fully antisymmetric in every component")


def _check_dims(A, delta):
    if A.dim != delta.dim:
        raise ValueError(f"Δ has dim {delta.dim}, algebra has dim {A.dim}")


def _lhs(A, delta, a, b, c, p, q, r):
    acc = ZERO
    for i, t in A.sparse_bracket(a, b, c):
        acc = acc + t * delta.C(i, p, q, r)
    return acc


def eq26_defect(A: ThreeLieAlgebra, delta: Coproduct, a, b, c, p, q, r) -> Scalar:
    n = A.dim
    rhs = ZERO
    for i in range(1, n + 1):
        rhs = (rhs + A.T(b, c, i, r) * delta.C(a, p, q, i)
               + A.T(c, a, i, r) * delta.C(b, p, q, i)
               + A.T(a, b, i, r) * delta.C(c, p, q, i))
    return _lhs(A, delta, a, b, c, p, q, r) - rhs


def eq27_defect(A: ThreeLieAlgebra, delta: Coproduct, a, b, c, p, q, r) -> Scalar:
    n = A.dim
    rhs = ZERO
    for i in range(1, n + 1):
        rhs = (rhs + A.T(b, c, i, r) * delta.C(a, p, q, i)
               + A.T(b, c, i, q) * delta.C(a, p, i, r)
               + A.T(b, c, i, p) * delta.C(a, i, q, r))
    return _lhs(A, delta, a, b, c, p, q, r) - rhs


def constraint_eq26(A: ThreeLieAlgebra, delta: Coproduct) -> Report:
    """The cocycle-type constraint on all p, q, r and a<b<c.

    Defect tuples are ``(a, b, c, p, q, r)``.
    """
    _check_dims(A, delta)
    _require_alternating(delta)
    n = A.dim
    report = Report("cocycle constraint")
    for a, b, c in combinations(range(1, n + 1), 3):
        for p, q, r in product(range(1, n + 1), repeat=3):
            d = eq26_defect(A, delta, a, b, c, p, q, r)
            if not d.is_zero():
                report.add((a, b, c, p, q, r), d)
    return report


def constraint_eq27(A: ThreeLieAlgebra, delta: Coproduct) -> Report:
    """The Φ-type constraint on all a and b<c, p<q<r."""
    _check_dims(A, delta)
    _require_alternating(delta)
    n = A.dim
    report = Report("Φ constraint")
    for a in range(1, n + 1):
        for b, c in combinations(range(1, n + 1), 2):
            for p, q, r in combinations(range(1, n + 1), 3):
                d = eq27_defect(A, delta, a, b, c, p, q, r)
                if not d.is_zero():
                    report.add((a, b, c, p, q, r), d)
    return report


# -- linear systems in the wedge coefficients --------------------------------

def unknown_name(i, p, q, r) -> str:
    return f"u_{i}_{p}_{q}_{r}"


def generic_alternating(n: int):
    """Δ with every wedge coefficient C_i^{pqr} (p<q<r) a fresh symbol.

    Returns ``(delta, names)`` with names ordered by (i, p, q, r).
    """
    names = []
    data = {}
    for i in range(1, n + 1):
        data[i] = {}
        for pqr in combinations(range(1, n + 1), 3):
            name = unknown_name(i, *pqr)
            names.append(name)
            data[i][pqr] = Scalar.symbol(name)
    return Coproduct.from_wedges(n, data), names


def linear_rows(values, unknowns):
    """Coefficient rows of linear forms in ``unknowns``.

    Each value must be homogeneous of degree one in the unknowns; any other
    parameters (e.g. ``alpha``) stay inside the coefficients.
    """
    col = {u: j for j, u in enumerate(unknowns)}
    rows = []
    for v in values:
        row = [[] for _ in unknowns]
        for mono, c in v.items():
            hits = [(name, e) for name, e in mono if name in col]
            if len(hits) != 1 or hits[0][1] != 1:
                raise ValueError(f"{to_text(v)} is not linear in the unknowns")
            rest = tuple(m for m in mono if m[0] != hits[0][0])
            row[col[hits[0][0]]].append((rest, c))
        rows.append([Scalar.from_terms(t) for t in row])
    return rows


def eq26_system(A: ThreeLieAlgebra):
    """(rows, unknowns) of the cocycle constraint for a generic alternating Δ."""
    delta, names = generic_alternating(A.dim)
    values = [d.value for d in constraint_eq26(A, delta).defects]
    return linear_rows(values, names), names


def eq26_nullspace(A: ThreeLieAlgebra):
    rows, names = eq26_system(A)
    return nullspace(rows, len(names)), names


def coefficient_vector(delta: Coproduct, names) -> list:
    """Wedge coefficients of Δ in the order of ``names`` (``u_i_p_q_r``)."""
    out = []
    for name in names:
        i, p, q, r = (int(x) for x in name.split("_")[1:])
        out.append(delta.C(i, p, q, r))
    return out


# -- Δ families ---------------------------------------------------------------

@dataclass
class DeltaFamily:
    catalog_id: str
    parameters: tuple
    coproduct: Coproduct
    nullity: int | None = None
    notes: list = field(default_factory=list)

    def substitute(self, bindings) -> Coproduct:
        return self.coproduct.substitute(bindings)

    def parameter_jacobian(self, names) -> list:
        """Rows = wedge unknowns, columns = family parameters."""
        vec = coefficient_vector(self.coproduct, names)
        return linear_rows(vec, list(self.parameters)) if self.parameters else [[] for _ in vec]


def _w(*entries):
    return {pqr: c for c, pqr in entries}


# Δ(e_i) as wedge coefficients, as printed for each classified algebra
_FAMILIES = {
    "dim3": ((), {}),
    "dim4-1": (("k",), {
        1: _w((K, (2, 3, 4))),
        2: _w((K, (1, 3, 4))),
        3: _w((K, (1, 2, 4))),
        4: _w((K, (1, 2, 3))),
    }),
    "dim4-2": (("k", "c1", "c2"), {
        2: _w((K, (1, 2, 4)), (C1, (1, 3, 4))),
        3: _w((-K, (1, 3, 4)), (C2, (1, 2, 4))),
    }),
    "dim4-3": (("k1", "k2", "k3", "c1", "c2", "c3"), {
        2: _w((K1, (1, 2, 3)), (K2, (1, 2, 4)), (C1, (1, 3, 4))),
        3: _w((K3, (1, 2, 3)), (-K2, (1, 3, 4)), (C2, (1, 2, 4))),
        4: _w((-K3, (1, 2, 4)), (K1, (1, 3, 4)), (C3, (1, 2, 3))),
    }),
    "dim4-4": (("k", "c1", "c2"), {
        3: _w((K, (1, 2, 3)), (C1, (1, 2, 4))),
        4: _w((-K, (1, 3, 4)), (C2, (1, 2, 3))),
    }),
    "dim4-5": (("k", "c1", "c2"), {
        3: _w((K, (1, 2, 3)), (C1, (1, 2, 4))),
        4: _w((-K, (1, 2, 4)), (C2, (1, 2, 3))),
    }),
    "dim4-6": (("k", "c1", "c2"), {
        3: _w((K, (1, 2, 3)), (C1, (1, 2, 4))),
        4: _w((-K, (1, 2, 4)), (C2, (1, 2, 3))),
    }),
    "dim4-7": (("c",), {
        4: _w((C, (1, 2, 3))),
    }),
}

# printed entries that break the cocycle constraint; value is (printed, corrected)
FAMILY_CORRECTIONS = {
    "dim4-4": {(4, (1, 3, 4)): (-K, ZERO), (4, (1, 2, 4)): (ZERO, -K)},
}


def printed_family(cid: str) -> DeltaFamily:
    """The family exactly as transcribed, typos included."""
    params, data = _FAMILIES[catalog.get(cid).id]
    n = catalog.algebra(cid).dim
    return DeltaFamily(cid, params, Coproduct.from_wedges(n, data))


def delta_family(cid: str) -> DeltaFamily:
    """The family with known transcription corrections applied."""
    params, data = _FAMILIES[catalog.get(cid).id]
    data = {i: dict(w) for i, w in data.items()}
    notes = []
    for (i, pqr), (printed, fixed) in FAMILY_CORRECTIONS.get(cid, {}).items():
        row = data.setdefault(i, {})
        if row.get(pqr, ZERO) != printed:
            raise AssertionError(f"correction table out of date for {cid} Δ(e_{i}) {pqr}")
        if fixed.is_zero():
            row.pop(pqr, None)
        else:
            row[pqr] = fixed
        notes.append(f"Δ(e_{i}) coefficient on e{''.join(map(str, pqr))}: printed "
                     f"{to_text(printed)}, corrected {to_text(fixed)}")
    n = catalog.algebra(cid).dim
    return DeltaFamily(cid, params, Coproduct.from_wedges(n, data), notes=notes)


def solve_delta_families(entry) -> DeltaFamily:
    """The parametric family for a catalog entry, checked against the cocycle constraint.

    Independently of the transcription, the exact null space of the
    linear cocycle constraint in the wedge unknowns is computed; the family
    must satisfy it and its parameter Jacobian must have rank equal to the
    nullity, so that it spans every alternating solution.
    """
    cid = entry if isinstance(entry, str) else entry.id
    A = catalog.algebra(cid)
    fam = delta_family(cid)
    basis, names = eq26_nullspace(A)
    fam.nullity = len(basis)
    if not constraint_eq26(A, fam.coproduct).passed:
        raise AssertionError(f"family for {cid} does not satisfy the cocycle constraint")
    jac = fam.parameter_jacobian(names)
    rank = len(echelon(jac, len(fam.parameters))[1]) if fam.parameters else 0
    if rank != fam.nullity:
        raise AssertionError(f"family for {cid} has rank {rank}, null space has dimension {fam.nullity}")
    return fam


def forced_parameters(A: ThreeLieAlgebra, family: DeltaFamily, constraint=constraint_eq27):
    """Solve ``constraint(family) = 0`` for the family parameters.

    The defects are linear in the parameters.  Returns ``(basis, pivots)``:
    a null-space basis (empty means every parameter is forced to zero) and
    the pivot entries used, so a caller can confirm they never vanish
    under side conditions such as ``alpha != 0``.
    """
    params = list(family.parameters)
    values = [d.value for d in constraint(A, family.coproduct).defects]
    if not params:
        return [], []
    rows = linear_rows(values, params)
    ech, pivots = echelon(rows, len(params))
    pivot_values = [row[c] for row, c in zip(ech, pivots)]
    return nullspace(rows, len(params)), pivot_values


# -- Φ ------------------------------------------------------------------------

def phi_action(A: ThreeLieAlgebra, s: int, t: int, w: Tensor) -> Tensor:
    """Φ_{e_s,e_t} = ad⊗id⊗id + id⊗ad⊗id + id⊗id⊗ad applied to ``w``."""
    n = A.dim
    if not (1 <= s <= n and 1 <= t <= n):
        raise IndexError(f"index ({s}, {t}) out of range 1..{n}")
    if w.arity != 3 or w.dim != n:
        raise ValueError("phi_action acts on 3-tensors of the algebra's dimension")
    ad = A.adjoint(s, t)
    return w.apply_slot(1, ad) + w.apply_slot(2, ad) + w.apply_slot(3, ad)


def phi_eigen_form(A: ThreeLieAlgebra, s, t, p, q, r):
    """``(m1, m2, m3, m4)`` if ad_{e_s,e_t} is triangular on (e_p, e_q, e_r).

    That is ad(e_p) = m1 e_p + m4 e_q, ad(e_q) = m2 e_q, ad(e_r) = m3 e_r.
    Returns None when ad does not have this shape.
    """
    n = A.dim
    ad = A.adjoint(s, t)
    col = lambda c: {m + 1: ad[m][c - 1] for m in range(n) if not ad[m][c - 1].is_zero()}  # noqa: E731
    cp, cq, cr = col(p), col(q), col(r)
    if set(cp) - {p, q} or set(cq) - {q} or set(cr) - {r}:
        return None
    return cp.get(p, ZERO), cq.get(q, ZERO), cr.get(r, ZERO), cp.get(q, ZERO)


# -- bilinear forms and the double ------------------------------------------

@dataclass
class BilinearForm:
    dim: int
    gram: list

    def __call__(self, x, y) -> Scalar:
        acc = ZERO
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                g = self.gram[i][j]
                if not yj.is_zero() and not g.is_zero():
                    acc = acc + xi * g * yj
        return acc

    def is_symmetric(self) -> bool:
        return all(self.gram[i][j] == self.gram[j][i] for i in range(self.dim) for j in range(i))

    def determinant(self) -> Scalar:
        return determinant(self.gram)

    def is_nondegenerate(self) -> bool:
        return not self.determinant().is_zero()

    @classmethod
    def hyperbolic(cls, n: int) -> BilinearForm:
        m = 2 * n
        gram = [[ZERO] * m for _ in range(m)]
        for i in range(n):
            gram[i][n + i] = ONE
            gram[n + i][i] = ONE
        return cls(m, gram)


def _coadjoint(B: ThreeLieAlgebra, u, v, w):
    """<ad*_{u,v} w, e_m> = -<w, [u, v, e_m]> for vectors u, v in B, w in B*."""
    n = B.dim
    out = [ZERO] * n
    for m in range(n):
        em = [ZERO] * n
        em[m] = ONE
        b = B.bracket(u, v, em)
        acc = ZERO
        for wc, bc in zip(w, b):
            if not wc.is_zero() and not bc.is_zero():
                acc = acc + wc * bc
        out[m] = -acc
    return out


def double_bracket(A: ThreeLieAlgebra, dual: ThreeLieAlgebra, X, Y, Z):
    """The bracket on A⊕A* for vectors of length 2n (A part first)."""
    n = A.dim
    x, xi = X[:n], X[n:]
    y, eta = Y[:n], Y[n:]
    z, gam = Z[:n], Z[n:]

    def plus(*vs):
        out = [ZERO] * n
        for v in vs:
            out = [a + b for a, b in zip(out, v)]
        return out

    a_part = plus(A.bracket(x, y, z),
                  _coadjoint(dual, xi, eta, z),
                  _coadjoint(dual, eta, gam, x),
                  _coadjoint(dual, gam, xi, y))
    f_part = plus(_coadjoint(A, x, y, gam),
                  _coadjoint(A, y, z, xi),
                  _coadjoint(A, z, x, eta),
                  dual.bracket(xi, eta, gam))
    return a_part + f_part


@dataclass
class DoubleAlgebra:
    base_dim: int
    algebra: ThreeLieAlgebra
    form: BilinearForm
    base: ThreeLieAlgebra | None = None
    dual: ThreeLieAlgebra | None = None

    def label(self, i: int) -> str:
        n = self.base_dim
        return f"e{i}" if i <= n else f"f{i - n}"

    def bracket_text(self):
        """``{"[e1,e2,f3]": "-1*f4", ...}`` over sorted basis triples."""
        out = {}
        for ijk, vec in sorted(self.algebra.structure.items()):
            key = "[" + ",".join(self.label(i) for i in ijk) + "]"
            parts = []
            for m, c in enumerate(vec, start=1):
                if not c.is_zero():
                    parts.append(f"({to_text(c)})*{self.label(m)}")
            out[key] = " + ".join(parts)
        return out


def build_double(A: ThreeLieAlgebra, dual: ThreeLieAlgebra, require_dual_fi: bool = True) -> DoubleAlgebra:
    """Assemble A⊕A* from the bracket formula on basis triples.

    The result is not assumed to satisfy the Fundamental Identity; use
    :func:`check_manin_triple`.
    """
    if A.dim != dual.dim:
        raise ValueError(f"dimension mismatch: {A.dim} vs {dual.dim}")
    if require_dual_fi and not check_fundamental_identity(dual).passed:
        raise ValueError("dual bracket fails the Fundamental Identity")
    n = A.dim
    m = 2 * n

    def e(i):
        v = [ZERO] * m
        v[i - 1] = ONE
        return v

    brackets = {}
    for ijk in combinations(range(1, m + 1), 3):
        v = double_bracket(A, dual, *(e(i) for i in ijk))
        if any(not c.is_zero() for c in v):
            brackets[ijk] = v
    name = f"{A.name}⊕dual" if A.name else None
    return DoubleAlgebra(n, ThreeLieAlgebra(m, brackets, name=name), BilinearForm.hyperbolic(n), A, dual)


def check_manin_triple(D: DoubleAlgebra) -> Report:
    """The six Manin triple conditions for the pair of halves of D."""
    n, m = D.base_dim, 2 * D.base_dim
    alg, form = D.algebra, D.form
    report = Report("Manin triple")

    fi = check_fundamental_identity(alg)
    report.checks.append(fi)

    sym = Report("form symmetric and nondegenerate")
    for i, j in combinations(range(m), 2):
        if form.gram[i][j] != form.gram[j][i]:
            sym.add((i + 1, j + 1), form.gram[i][j] - form.gram[j][i], "asymmetric")
    det = form.determinant()
    if det.is_zero():
        sym.add((), det, "determinant is zero")
    else:
        sym.notes.append(f"determinant {to_text(det)}")
    report.checks.append(sym)

    def e(i):
        v = [ZERO] * m
        v[i - 1] = ONE
        return v

    inv = Report("form invariance")
    for x1, x2 in combinations(range(1, m + 1), 2):
        for x3, x4 in product(range(1, m + 1), repeat=2):
            d = form(alg.basis_bracket(x1, x2, x3), e(x4)) + form(alg.basis_bracket(x1, x2, x4), e(x3))
            if not d.is_zero():
                inv.add((x1, x2, x3, x4), d)
    report.checks.append(inv)

    halves = (range(1, n + 1), range(n + 1, m + 1))
    iso = Report("isotropic halves")
    for half in halves:
        for i, j in product(half, repeat=2):
            v = form(e(i), e(j))
            if not v.is_zero():
                iso.add((i, j), v)
    report.checks.append(iso)

    closed = Report("halves closed under the bracket")
    for h, half in enumerate(halves):
        other = halves[1 - h]
        for ijk in combinations(half, 3):
            v = alg.basis_bracket(*ijk)
            if any(not v[o - 1].is_zero() for o in other):
                closed.add(ijk, v)
    report.checks.append(closed)

    proj = Report("projection conditions")
    for h, half in enumerate(halves):
        other = halves[1 - h]
        for i, j in combinations(half, 2):
            for k in other:
                v = alg.basis_bracket(i, j, k)
                if any(not v[o - 1].is_zero() for o in half):
                    proj.add((i, j, k), v)
    report.checks.append(proj)
    return report


def bialgebra_verdict(A: ThreeLieAlgebra, delta: Coproduct) -> Report:
    """Both constraints and the Fundamental Identity of Δ* together."""
    report = Report("double construction bialgebra")
    report.checks.append(constraint_eq26(A, delta))
    report.checks.append(constraint_eq27(A, delta))
    report.checks.append(check_fundamental_identity(dual_algebra(delta)))
    report.checks[-1].name = "Δ* fundamental identity"
    return report


def double_to_json(D: DoubleAlgebra, base_id=None, params=None, encode=to_text) -> dict:
    return {
        "base": base_id if base_id is not None else D.base.name if D.base is not None else None,
        "params": {k: encode(Scalar.coerce(v)) for k, v in sorted((params or {}).items())},
        "base_dim": D.base_dim,
        "algebra": algebra_to_json(D.algebra, encode),
        "gram": [[encode(c) for c in row] for row in D.form.gram],
    }


def family_double(cid: str, bindings=None) -> DoubleAlgebra:
    """The double of a catalog algebra with the dual from its Δ family."""
    fam = delta_family(cid)
    delta = fam.coproduct if not bindings else fam.substitute(bindings)
    return build_double(catalog.algebra(cid), dual_algebra(delta))


__all__ = [
    "BilinearForm", "DoubleAlgebra", "DeltaFamily", "constraint_eq26", "constraint_eq27",
    "eq26_system", "eq26_nullspace", "solve_delta_families", "delta_family", "printed_family",
    "forced_parameters", "phi_action", "phi_eigen_form", "build_double", "check_manin_triple",
    "bialgebra_verdict", "double_bracket", "double_to_json", "family_double", "sort_sign", "substitute",
]
