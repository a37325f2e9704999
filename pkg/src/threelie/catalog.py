"""The classified non-trivial complex 3-Lie algebras of dimension 3 and 4.

Ids are ``dim3`` and ``dim4-1`` ... ``dim4-7``, numbered as in the standard
classification list.  Case ``dim4-6`` keeps its parameter ``alpha``
symbolic; ``alpha != 0`` is recorded as metadata only.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import ThreeLieAlgebra
from .scalar import ONE, ZERO, Scalar

ALPHA = Scalar.symbol("alpha")


def _e(n, i, c=ONE):
    v = [ZERO] * n
    v[i - 1] = c
    return v


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    algebra: ThreeLieAlgebra
    parameters: tuple = ()
    constraints: tuple = field(default=())


def _build():
    e3 = lambda i: _e(3, i)  # noqa: E731
    e4 = lambda i: _e(4, i)  # noqa: E731
    tables = {
        "dim3": (3, {(1, 2, 3): e3(1)}),
        "dim4-1": (4, {(1, 2, 3): e4(4), (1, 2, 4): e4(3), (1, 3, 4): e4(2), (2, 3, 4): e4(1)}),
        "dim4-2": (4, {(1, 2, 3): e4(1)}),
        "dim4-3": (4, {(2, 3, 4): e4(1)}),
        "dim4-4": (4, {(2, 3, 4): e4(1), (1, 3, 4): e4(2)}),
        "dim4-5": (4, {(2, 3, 4): e4(2), (1, 3, 4): e4(1)}),
        "dim4-6": (4, {(2, 3, 4): [ALPHA, ONE, ZERO, ZERO], (1, 3, 4): e4(2)}),
        "dim4-7": (4, {(1, 2, 4): e4(3), (1, 3, 4): e4(2), (2, 3, 4): e4(1)}),
    }
    out = {}
    for cid, (n, brackets) in tables.items():
        params, constraints = ((), ())
        if cid == "dim4-6":
            params, constraints = (("alpha",), ("alpha != 0",))
        out[cid] = CatalogEntry(cid, ThreeLieAlgebra(n, brackets, name=cid), params, constraints)
    return out


CATALOG = _build()
IDS = tuple(CATALOG)


def get(cid: str) -> CatalogEntry:
    try:
        return CATALOG[cid]
    except KeyError:
        raise KeyError(f"unknown catalog id {cid!r}; expected one of {', '.join(IDS)}") from None


def algebra(cid: str) -> ThreeLieAlgebra:
    return get(cid).algebra
