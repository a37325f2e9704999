"""1-cocycles with values in A⊗A⊗A and the local cocycle bialgebra check."""
from __future__ import annotations

from itertools import combinations, product

from .algebra import Representation, ThreeLieAlgebra, check_fundamental_identity
from .report import Report
from .scalar import ZERO
from .tensor import Coproduct, Tensor, is_fully_antisymmetric, permute_factors

# a linear map A -> A⊗A⊗A is stored exactly like a coproduct
LinearMapToTensor3 = Coproduct

SLOT_NAMES = {1: "ad⊗id⊗id", 2: "id⊗ad⊗id", 3: "id⊗id⊗ad"}


def slot_action(A: ThreeLieAlgebra, slot: int):
    """rho(e_s, e_t) acting by ad_{e_s,e_t} on one tensor slot."""
    if slot not in SLOT_NAMES:
        raise ValueError("slot must be 1, 2 or 3")

    def act(s, t, w: Tensor) -> Tensor:
        if s == t:
            return Tensor.zero(3, A.dim)
        return w.apply_slot(slot, A.adjoint(s, t))

    return act


def _flatten(n, idx):
    p, q, r = idx
    return ((p - 1) * n + (q - 1)) * n + (r - 1)


def _unflatten(n, k):
    r = k % n
    q = (k // n) % n
    p = k // (n * n)
    return (p + 1, q + 1, r + 1)


def representation_action(rho: Representation, n: int):
    """Act with a representation on the flattened n**3 tensor space.

    Basis e_p⊗e_q⊗e_r sits at position ``((p-1)*n + (q-1))*n + (r-1)``.
    """
    if rho.carrier_dim != n ** 3:
        raise ValueError(f"carrier must have dimension {n ** 3}")

    def act(s, t, w: Tensor) -> Tensor:
        M = rho(s, t)
        out = Tensor.zero(3, n)
        for idx, c in w.coeffs.items():
            col = _flatten(n, idx)
            for k in range(n ** 3):
                v = M[k][col]
                if not v.is_zero():
                    out.add_term(_unflatten(n, k), c * v)
        return out

    return act


def check_one_cocycle(A: ThreeLieAlgebra, rho, f: Coproduct) -> Report:
    """f([x1,x2,x3]) = rho(x1,x2)f(x3) + rho(x2,x3)f(x1) + rho(x3,x1)f(x2).

    ``rho`` is a slot number (1, 2, 3 for ad acting on that slot) or a
    :class:`Representation` on the n**3-dimensional tensor space.  Both
    sides are antisymmetric in the x's, so basis triples x1<x2<x3 suffice.
    """
    n = A.dim
    if f.dim != n:
        raise ValueError("map and algebra dimensions differ")
    if isinstance(rho, int):
        act, label = slot_action(A, rho), SLOT_NAMES[rho]
    else:
        act, label = representation_action(rho, n), "representation"
    report = Report(f"1-cocycle for {label}")
    for x1, x2, x3 in combinations(range(1, n + 1), 3):
        lhs = f.apply(A.basis_bracket(x1, x2, x3))
        rhs = act(x1, x2, f[x3]) + act(x2, x3, f[x1]) + act(x3, x1, f[x2])
        d = lhs - rhs
        if not d.is_zero():
            report.add((x1, x2, x3), d)
    return report


def dual_algebra(delta: Coproduct) -> ThreeLieAlgebra:
    """The bracket on the dual space: [f_p, f_q, f_r]* = Σ_i C_i^{pqr} f_i."""
    for i, t in delta.components.items():
        if not is_fully_antisymmetric(t):
            raise ValueError(f"component Δ(e_{i}) is not fully antisymmetric")
    n = delta.dim
    brackets = {}
    for pqr in combinations(range(1, n + 1), 3):
        vec = [delta.C(i, *pqr) for i in range(1, n + 1)]
        if any(not c.is_zero() for c in vec):
            brackets[pqr] = vec
    return ThreeLieAlgebra(n, brackets, name="dual")


def check_local_cocycle_bialgebra(A: ThreeLieAlgebra, d1: Coproduct, d2: Coproduct, d3: Coproduct) -> Report:
    """Each Δi a 1-cocycle for its slot, and Δ* a 3-Lie bracket on A*."""
    report = Report("local cocycle 3-Lie bialgebra")
    for slot, d in ((1, d1), (2, d2), (3, d3)):
        sub = check_one_cocycle(A, slot, d)
        sub.name = f"Δ{slot} 1-cocycle ({SLOT_NAMES[slot]})"
        report.checks.append(sub)
    delta = d1 + d2 + d3
    anti = Report("Δ* skew-symmetric")
    n = A.dim
    for i in range(1, n + 1):
        t = delta[i]
        for p in range(1, 3):
            d = permute_factors(t, p, p + 1) + t
            if not d.is_zero():
                anti.add((i, p, p + 1), d)
    report.checks.append(anti)
    if anti.passed:
        fi = check_fundamental_identity(dual_algebra(delta))
        fi.name = "Δ* fundamental identity"
    else:
        fi = Report("Δ* fundamental identity", notes=["skipped: Δ* is not skew-symmetric"])
        fi.add((), None, "not evaluated")
    report.checks.append(fi)
    return report


def slot_representation(A: ThreeLieAlgebra, slot: int) -> Representation:
    """The slot action as an explicit matrix representation on n**3 space."""
    n = A.dim
    N = n ** 3
    act = slot_action(A, slot)
    rho = {}
    for s, t in combinations(range(1, n + 1), 2):
        M = [[ZERO] * N for _ in range(N)]
        for col, idx in enumerate(product(range(1, n + 1), repeat=3)):
            img = act(s, t, Tensor.basis(n, idx))
            for jdx, c in img.coeffs.items():
                M[_flatten(n, jdx)][col] = c
        rho[(s, t)] = M
    return Representation(n, N, rho)
