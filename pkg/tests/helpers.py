"""Shared generators and comparisons for the test modules."""
from __future__ import annotations

import random
from fractions import Fraction

from reference_tables import (DOUBLE_CORRECTIONS, DOUBLE_SCHEMATIC, PRINTED_DOUBLES,
                              induced_delta_corrections, induced_delta_table, vec)
from threelie import catalog
from threelie.algebra import sort_sign
from threelie.cybe import cybe_conditions
from threelie.double import family_double
from threelie.scalar import ZERO, Scalar, substitute
from threelie.tensor import RMatrix


def rand_fraction(rng: random.Random, lo=-5, hi=5, den=4, nonzero=False) -> Fraction:
    while True:
        f = Fraction(rng.randint(lo, hi), rng.randint(1, den))
        if f or not nonzero:
            return f


def random_skew(rng: random.Random, n: int, density=1.0) -> RMatrix:
    upper = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < density:
                upper[i, j] = rand_fraction(rng)
    return RMatrix.from_upper(n, upper)


def random_solution(rng: random.Random, cid: str) -> RMatrix:
    """A random rational skew r on which every CYBE condition of ``cid`` vanishes.

    Each generator is linear in ``a_1_2``: draw the other entries, solve
    for ``a_1_2``, and redraw if its coefficient vanishes.
    """
    A = catalog.algebra(cid)
    n = A.dim
    gens = cybe_conditions(A)
    names = [f"a_{i}_{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    while True:
        values = {name: Scalar.const(rand_fraction(rng)) for name in names}
        if gens:
            del values["a_1_2"]
            roots = set()
            for g in gens:
                h = substitute(g, values)
                q = substitute(h, {"a_1_2": 0})
                p = substitute(h, {"a_1_2": 1}) - q
                if p.is_zero() or not (p.is_constant() and q.is_constant()):
                    break
                roots.add(-q.constant_value() / p.constant_value())
            else:
                if len(roots) != 1:
                    continue
                values["a_1_2"] = Scalar.const(roots.pop())
            if "a_1_2" not in values:
                continue
        r = RMatrix.symbolic_skew(n).substitute(values)
        assert all(substitute(g, values).is_zero() for g in gens)
        return r


def induced_expected(cid):
    """Printed induced-Δ table with allowlisted cells replaced."""
    r, printed = induced_delta_table(cid)
    fixes = induced_delta_corrections(cid)
    expected = {i: dict(row) for i, row in printed.items()}
    for (i, pqr), (_, fixed) in fixes.items():
        expected.setdefault(i, {})[pqr] = fixed
    clean = {}
    for i, row in expected.items():
        row = {k: v for k, v in row.items() if not v.is_zero()}
        if row:
            clean[i] = row
    return r, clean


# -- 8-dimensional tables -----------------------------------------------------

def _index(label: str, n=4) -> int:
    return int(label[1:]) + (n if label[0] == "f" else 0)


def _label(i: int, n=4) -> str:
    return f"e{i}" if i <= n else f"f{i - n}"


def normalize(table: dict, n=4) -> dict:
    """Sorted-triple keys, sign folded into the value, zeros dropped."""
    out = {}
    for key, v in table.items():
        skey, sgn = sort_sign(tuple(_index(lbl, n) for lbl in key))
        if sgn == 0:
            raise ValueError(f"repeated index in {key}")
        row = out.setdefault(tuple(_label(i, n) for i in skey), {})
        for lbl, c in v.items():
            row[lbl] = row.get(lbl, ZERO) + (c if sgn > 0 else -c)
    return {k: {lbl: c for lbl, c in row.items() if not c.is_zero()}
            for k, row in out.items() if any(not c.is_zero() for c in row.values())}


def derived_double(cid: str) -> dict:
    D = family_double(cid)
    return {tuple(_label(i) for i in ijk): {_label(m): c for m, c in row.items()}
            for ijk, row in D.algebra.table().items()}


def expected_double(cid: str) -> dict:
    """Printed 8-dimensional table with the allowlisted corrections applied."""
    table = {k: dict(v) for k, v in PRINTED_DOUBLES[cid].items()}
    for fix in DOUBLE_CORRECTIONS.get(cid, []):
        for key, val in fix["drop"]:
            k = tuple(key.split(","))
            if table.get(k) != vec(val):
                raise AssertionError(f"allowlist drop {key} not in printed table")
            del table[k]
        for key, val in fix["add"]:
            table[tuple(key.split(","))] = vec(val)
    return normalize(table)


def schematic_ok(cid: str, derived: dict) -> list:
    """Check the unsigned schematic rows; returns the keys they cover."""
    schema = DOUBLE_SCHEMATIC.get(cid)
    if schema is None:
        return []
    covered = []
    for key, row in derived.items():
        kinds = "".join(lbl[0] for lbl in key)
        if kinds not in schema:
            continue
        idx = {int(lbl[1:]) for lbl in key}
        if len(idx) != 3:
            raise AssertionError(f"schematic row with repeated index: {key}")
        (m,) = {1, 2, 3, 4} - idx
        target = ("f" if kinds == "eef" else "e") + str(m)
        if set(row) != {target} or row[target] not in (schema[kinds], -schema[kinds]):
            raise AssertionError(f"{key} = {row}, expected ±{schema[kinds]}*{target}")
        covered.append(key)
    return covered
