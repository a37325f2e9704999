"""Tensor powers of the underlying space, wedges and slot permutations.

Wedges carry no ``1/k!``: ``wedge(x, y) = x⊗y - y⊗x`` and in general the
signed sum over all orderings.  Residual coefficients downstream depend on
this normalization.
"""
from __future__ import annotations

from itertools import permutations, product

from .algebra import sort_sign
from .scalar import ONE, ZERO, Scalar, substitute


def _perm_sign(perm):
    return sort_sign(perm)[1]


class Tensor:
    """Sparse element of the ``arity``-fold tensor power of a ``dim``-space.

    ``coeffs`` maps 1-based index tuples to Scalars; zeros are dropped.
    """

    __slots__ = ("arity", "dim", "coeffs")

    def __init__(self, arity: int, dim: int, coeffs=None):
        if arity < 1:
            raise ValueError("arity must be at least 1")
        self.arity = arity
        self.dim = dim
        self.coeffs = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != arity or not all(1 <= i <= dim for i in idx):
                raise ValueError(f"index {idx} invalid for arity {arity}, dim {dim}")
            c = Scalar.coerce(c)
            if not c.is_zero():
                self.coeffs[idx] = c

    @classmethod
    def _raw(cls, arity, dim, coeffs):
        t = cls.__new__(cls)
        t.arity, t.dim, t.coeffs = arity, dim, coeffs
        return t

    @classmethod
    def zero(cls, arity, dim):
        return cls._raw(arity, dim, {})

    @classmethod
    def basis(cls, dim, idx, coeff=ONE):
        return cls(len(idx), dim, {tuple(idx): coeff})

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Tensor):
            return False
        if (self.arity, self.dim) != (other.arity, other.dim):
            raise ValueError("tensor shapes differ")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return Tensor._raw(self.arity, self.dim, out)

    def __neg__(self):
        return Tensor._raw(self.arity, self.dim, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> Tensor:
        c = Scalar.coerce(c)
        if c.is_zero():
            return Tensor.zero(self.arity, self.dim)
        return Tensor._raw(self.arity, self.dim, {k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        if isinstance(c, Tensor):
            return NotImplemented
        return self.scale(c)

    def add_term(self, idx, c):
        """In-place accumulate; used by builders that own the tensor."""
        if c.is_zero():
            return
        s = self.coeffs.get(idx)
        if s is None:
            self.coeffs[idx] = c
        else:
            s = s + c
            if s.is_zero():
                del self.coeffs[idx]
            else:
                self.coeffs[idx] = s

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.arity, self.dim) == (other.arity, other.dim) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.arity, self.dim, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, idx):
        return self.coeffs.get(tuple(idx), ZERO)

    def items(self):
        return sorted(self.coeffs.items())

    def substitute(self, bindings) -> Tensor:
        out = Tensor.zero(self.arity, self.dim)
        for k, c in self.coeffs.items():
            out.add_term(k, substitute(c, bindings))
        return out

    def parameters(self) -> set:
        return {n for c in self.coeffs.values() for n in c.variables()}

    def apply_slot(self, slot: int, M) -> Tensor:
        """Apply the matrix ``M`` to tensor slot ``slot`` (1-based)."""
        if not 1 <= slot <= self.arity:
            raise IndexError(f"slot {slot} out of range 1..{self.arity}")
        s = slot - 1
        out = Tensor.zero(self.arity, self.dim)
        for idx, c in self.coeffs.items():
            col = idx[s]
            for m in range(self.dim):
                v = M[m][col - 1]
                if not v.is_zero():
                    out.add_term(idx[:s] + (m + 1,) + idx[s + 1:], c * v)
        return out

    def __repr__(self):
        return f"<Tensor arity={self.arity} dim={self.dim} terms={len(self.coeffs)}>"

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"({c})*" + "⊗".join(f"e{i}" for i in idx) for idx, c in self.items()
        )

    def to_json(self, encode=str) -> dict:
        return {
            "arity": self.arity,
            "dim": self.dim,
            "terms": [{"idx": list(idx), "coeff": encode(c)} for idx, c in self.items()],
        }

    @classmethod
    def from_json(cls, data) -> Tensor:
        from .scalar import from_json

        try:
            return cls(int(data["arity"]), int(data["dim"]),
                       {tuple(int(i) for i in t["idx"]): from_json(t["coeff"]) for t in data["terms"]})
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed tensor JSON: {exc}") from exc


def _as_vector(v, dim):
    if isinstance(v, int):
        out = [ZERO] * dim
        out[v - 1] = ONE
        return out
    return [Scalar.coerce(x) for x in v]


def tensor_product(vectors, dim=None) -> Tensor:
    """``v1 ⊗ v2 ⊗ ...``; ints stand for basis vectors (needs ``dim``)."""
    if dim is None:
        dim = next(len(v) for v in vectors if not isinstance(v, int))
    vecs = [_as_vector(v, dim) for v in vectors]
    if any(len(v) != dim for v in vecs):
        raise ValueError("vectors of different dimensions")
    nz = [[(i + 1, c) for i, c in enumerate(v) if not c.is_zero()] for v in vecs]
    out = Tensor.zero(len(vecs), dim)
    for combo in product(*nz):
        c = ONE
        for _, x in combo:
            c = c * x
        out.add_term(tuple(i for i, _ in combo), c)
    return out


def wedge(vectors, dim=None) -> Tensor:
    """Signed sum over all orderings of the tensor product, no ``1/k!``."""
    vectors = list(vectors)
    if dim is None:
        dim = next((len(v) for v in vectors if not isinstance(v, int)), None)
        if dim is None:
            dim = max(vectors)
    vecs = [_as_vector(v, dim) for v in vectors]
    if any(len(v) != dim for v in vecs):
        raise ValueError("vectors of different dimensions")
    k = len(vecs)
    out = Tensor.zero(k, dim)
    for perm in permutations(range(k)):
        sgn = _perm_sign(perm)
        t = tensor_product([vecs[p] for p in perm], dim)
        for idx, c in t.coeffs.items():
            out.add_term(idx, c if sgn > 0 else -c)
    return out


def basis_wedge(dim, idx, coeff=ONE) -> Tensor:
    """``coeff * e_{i1} ∧ ... ∧ e_{ik}`` built directly on basis indices."""
    coeff = Scalar.coerce(coeff)
    out = Tensor.zero(len(idx), dim)
    if coeff.is_zero():
        return out
    for perm in permutations(range(len(idx))):
        sgn = _perm_sign(perm)
        out.add_term(tuple(idx[p] for p in perm), coeff if sgn > 0 else -coeff)
    return out


def permute_factors(t: Tensor, p: int, q: int) -> Tensor:
    """Swap tensor slots ``p`` and ``q`` (1-based) in every term."""
    if not (1 <= p <= t.arity and 1 <= q <= t.arity):
        raise IndexError(f"slots ({p}, {q}) out of range 1..{t.arity}")
    if p == q:
        return Tensor._raw(t.arity, t.dim, dict(t.coeffs))
    a, b = p - 1, q - 1
    out = {}
    for idx, c in t.coeffs.items():
        j = list(idx)
        j[a], j[b] = j[b], j[a]
        out[tuple(j)] = c
    return Tensor._raw(t.arity, t.dim, out)


def is_fully_antisymmetric(t: Tensor) -> bool:
    return all(permute_factors(t, p, p + 1) == -t for p in range(1, t.arity))


class RMatrix:
    """Element ``sum a^{ij} e_i ⊗ e_j`` of A⊗A as an n×n Scalar matrix."""

    def __init__(self, entries):
        self.entries = [[Scalar.coerce(x) for x in row] for row in entries]
        self.dim = len(self.entries)
        if any(len(r) != self.dim for r in self.entries):
            raise ValueError("r-matrix must be square")

    def a(self, i, j) -> Scalar:
        return self.entries[i - 1][j - 1]

    def is_skew(self) -> bool:
        n = self.dim
        return all(self.entries[i][j] == -self.entries[j][i] for i in range(n) for j in range(i, n))

    @classmethod
    def zero(cls, n):
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def symbolic(cls, n):
        """Generic r with independent parameters ``a_i_j`` for all i, j."""
        return cls([[Scalar.symbol(f"a_{i}_{j}") for j in range(1, n + 1)] for i in range(1, n + 1)])

    @classmethod
    def symbolic_skew(cls, n):
        """Skew r with parameters ``a_i_j`` (i<j) and ``a^{ji} = -a^{ij}``."""
        return cls.from_upper(n, {(i, j): Scalar.symbol(f"a_{i}_{j}")
                                  for i in range(1, n + 1) for j in range(i + 1, n + 1)})

    @classmethod
    def from_upper(cls, n, upper):
        """Skew r from its entries above the diagonal, keyed (i, j) with i<j."""
        M = [[ZERO] * n for _ in range(n)]
        for (i, j), v in upper.items():
            if not (1 <= i < j <= n):
                raise ValueError(f"skew entries need 1 <= i < j <= {n}, got ({i}, {j})")
            v = Scalar.coerce(v)
            M[i - 1][j - 1] = v
            M[j - 1][i - 1] = -v
        return cls(M)

    @classmethod
    def from_entries(cls, n, entries):
        """General r from a sparse ``{(i, j): value}`` map."""
        M = [[ZERO] * n for _ in range(n)]
        for (i, j), v in entries.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"entry ({i}, {j}) out of range 1..{n}")
            M[i - 1][j - 1] = Scalar.coerce(v)
        return cls(M)

    def substitute(self, bindings) -> RMatrix:
        return RMatrix([[substitute(x, bindings) for x in row] for row in self.entries])

    def as_tensor(self) -> Tensor:
        return Tensor(2, self.dim, {(i + 1, j + 1): self.entries[i][j]
                                    for i in range(self.dim) for j in range(self.dim)})

    def __eq__(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"<RMatrix dim={self.dim}>"


class Coproduct:
    """Linear map A → A⊗A⊗A given on the basis: ``components[i] = Δ(e_i)``.

    The coefficient ``C_i^{pqr}`` is ``components[i][p, q, r]``.
    """

    def __init__(self, dim: int, components=None):
        self.dim = dim
        self.components = {}
        for i, t in (components or {}).items():
            if not 1 <= i <= dim:
                raise ValueError(f"component index {i} out of range")
            if (t.arity, t.dim) != (3, dim):
                raise ValueError("components must be arity-3 tensors of matching dim")
            if not t.is_zero():
                self.components[i] = t

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def from_wedges(cls, dim, data):
        """Build from ``{i: {(p, q, r): c}}`` meaning Δ(e_i) = Σ c e_p∧e_q∧e_r."""
        comps = {}
        for i, wedges in data.items():
            t = Tensor.zero(3, dim)
            for pqr, c in wedges.items():
                t = t + basis_wedge(dim, pqr, c)
            comps[i] = t
        return cls(dim, comps)

    def __getitem__(self, i) -> Tensor:
        return self.components.get(i, Tensor.zero(3, self.dim))

    def C(self, i, p, q, r) -> Scalar:
        t = self.components.get(i)
        return ZERO if t is None else t.coeffs.get((p, q, r), ZERO)

    def __add__(self, other):
        if not isinstance(other, Coproduct):
            return NotImplemented
        return Coproduct(self.dim, {i: self[i] + other[i] for i in range(1, self.dim + 1)})

    def __sub__(self, other):
        if not isinstance(other, Coproduct):
            return NotImplemented
        return Coproduct(self.dim, {i: self[i] - other[i] for i in range(1, self.dim + 1)})

    def __neg__(self):
        return Coproduct(self.dim, {i: -t for i, t in self.components.items()})

    def __eq__(self, other):
        if not isinstance(other, Coproduct):
            return NotImplemented
        return self.dim == other.dim and self.components == other.components

    def is_zero(self):
        return not self.components

    def is_alternating(self) -> bool:
        return all(is_fully_antisymmetric(t) for t in self.components.values())

    def map_slots(self, fn) -> Coproduct:
        return Coproduct(self.dim, {i: fn(t) for i, t in self.components.items()})

    def apply(self, x) -> Tensor:
        """Δ(x) for a general vector x."""
        out = Tensor.zero(3, self.dim)
        for i, c in enumerate(x, start=1):
            c = Scalar.coerce(c)
            if not c.is_zero() and i in self.components:
                out = out + self.components[i].scale(c)
        return out

    def substitute(self, bindings) -> Coproduct:
        return Coproduct(self.dim, {i: t.substitute(bindings) for i, t in self.components.items()})

    def parameters(self) -> set:
        return set().union(*(t.parameters() for t in self.components.values()))

    def wedge_coefficients(self):
        """``{i: {(p, q, r): C_i^{pqr}}}`` over p<q<r, nonzero entries only."""
        out = {}
        for i, t in sorted(self.components.items()):
            row = {idx: c for idx, c in t.items() if idx[0] < idx[1] < idx[2]}
            if row:
                out[i] = row
        return out

    def to_json(self, encode=str) -> dict:
        return {
            "dim": self.dim,
            "components": [{"i": i, "tensor": t.to_json(encode)} for i, t in sorted(self.components.items())],
        }

    @classmethod
    def from_json(cls, data) -> Coproduct:
        try:
            dim = int(data["dim"])
            comps = {int(c["i"]): Tensor.from_json(c["tensor"]) for c in data.get("components", [])}
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed coproduct JSON: {exc}") from exc
        return cls(dim, comps)

    def __repr__(self):
        return f"<Coproduct dim={self.dim} nonzero={sorted(self.components)}>"
