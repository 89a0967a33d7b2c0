"""Finite-horizon algebra of growth-type functions N -> N.

Every relation here (``preceq_sim``, ``preceq_approx``, ``theta_equiv``) is a
verdict on a finite prefix: the returned witness records the range of r on
which the defining inequality was actually evaluated.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Sequence


@dataclass(frozen=True)
class FunctionTable:
    """Values f(1), ..., f(N) of a function N -> N (index origin 1)."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        if not vals:
            raise ValueError("a FunctionTable needs a positive horizon")
        if any(v < 0 for v in vals):
            raise ValueError("FunctionTable values must be non-negative")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_function(cls, fn: Callable[[int], int], horizon: int) -> "FunctionTable":
        return cls(fn(r) for r in range(1, horizon + 1))

    @property
    def horizon(self) -> int:
        return len(self.values)

    def __call__(self, r: int) -> int:
        if not 1 <= r <= len(self.values):
            raise IndexError(f"r={r} outside horizon 1..{len(self.values)}")
        return self.values[r - 1]

    def __len__(self) -> int:
        return len(self.values)

    def items(self):
        return enumerate(self.values, start=1)

    def truncate(self, horizon: int) -> "FunctionTable":
        return FunctionTable(self.values[:horizon])

    # serialization -----------------------------------------------------

    def to_csv(self) -> str:
        return "r,value\n" + "".join(f"{r},{v}\n" for r, v in self.items())

    @classmethod
    def from_csv(cls, text: str) -> "FunctionTable":
        rows = list(csv.DictReader(io.StringIO(text)))
        if not rows or set(rows[0]) != {"r", "value"}:
            raise ValueError("expected CSV header 'r,value'")
        rs = [int(row["r"]) for row in rows]
        if rs != list(range(1, len(rs) + 1)):
            raise ValueError("rows must be r = 1..N in increasing order without gaps")
        return cls(int(row["value"]) for row in rows)

    def to_json(self) -> str:
        # big integers are rendered as exact JSON numbers
        return json.dumps({"horizon": self.horizon, "values": list(self.values)})

    @classmethod
    def from_json(cls, text: str) -> "FunctionTable":
        obj = json.loads(text)
        table = cls(obj["values"])
        if obj.get("horizon", table.horizon) != table.horizon:
            raise ValueError("horizon does not match the number of values")
        return table


class Relation(str, Enum):
    SIM = "SIM"
    APPROX = "APPROX"
    THETA = "THETA"


@dataclass(frozen=True)
class EquivalenceWitness:
    relation: Relation
    c: int
    verified_range: tuple[int, int]  # inclusive range of r actually checked

    def to_dict(self) -> dict:
        return {"relation": self.relation.value, "c": self.c,
                "verified_range": list(self.verified_range)}


@dataclass(frozen=True)
class Check:
    """Outcome of a pointwise predicate; falsy when a violation was found."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


# ----------------------------------------------------------------------
# additivity and monotonicity


def superadditive_closure(f: FunctionTable) -> FunctionTable:
    """Least superadditive majorant: max over partitions r = n_1+...+n_s of sum f(n_i)."""
    g = [0] * (f.horizon + 1)
    for r in range(1, f.horizon + 1):
        best = f(r)
        for k in range(1, r // 2 + 1):
            v = g[k] + g[r - k]
            if v > best:
                best = v
        g[r] = best
    return FunctionTable(g[1:])


def is_superadditive(f: FunctionTable) -> Check:
    """f(r+s) >= f(r) + f(s) for all r+s <= N; witness is the least (r, s)."""
    N = f.horizon
    for r in range(1, N):
        for s in range(1, N - r + 1):
            if f(r + s) < f(r) + f(s):
                return Check(False, (r, s))
    return Check(True)


def is_subadditive(f: FunctionTable) -> Check:
    N = f.horizon
    for r in range(1, N):
        for s in range(1, N - r + 1):
            if f(r + s) > f(r) + f(s):
                return Check(False, (r, s))
    return Check(True)


def is_nondecreasing(f: FunctionTable) -> Check:
    for r in range(1, f.horizon):
        if f(r + 1) < f(r):
            return Check(False, (r, r + 1))
    return Check(True)


def is_increasing(f: FunctionTable) -> Check:
    for r in range(1, f.horizon):
        if f(r + 1) <= f(r):
            return Check(False, (r, r + 1))
    return Check(True)


# ----------------------------------------------------------------------
# equivalences


def _scaled_search(f, g, c_max, relation, value_factor: bool):
    if c_max < 1:
        raise ValueError("c_max must be >= 1")
    for c in range(1, c_max + 1):
        top = min(f.horizon, g.horizon // c)
        if top < 1:
            break  # nothing evaluable for this or any larger c
        k = c if value_factor else 1
        if all(f(r) <= k * g(c * r) for r in range(1, top + 1)):
            return EquivalenceWitness(relation, c, (1, top))
    return None


def preceq_sim(f: FunctionTable, g: FunctionTable, c_max: int) -> EquivalenceWitness | None:
    """Least c <= c_max with f(r) <= g(cr) wherever both sides are tabulated."""
    return _scaled_search(f, g, c_max, Relation.SIM, value_factor=False)


def preceq_approx(f: FunctionTable, g: FunctionTable, c_max: int) -> EquivalenceWitness | None:
    """Least c <= c_max with f(r) <= c*g(cr) wherever both sides are tabulated."""
    return _scaled_search(f, g, c_max, Relation.APPROX, value_factor=True)


def sim_equiv(f, g, c_max):
    a, b = preceq_sim(f, g, c_max), preceq_sim(g, f, c_max)
    return (a, b) if a and b else None


def approx_equiv(f: FunctionTable, g: FunctionTable, c_max: int):
    """Both directions of preceq_approx, or None if either fails."""
    a, b = preceq_approx(f, g, c_max), preceq_approx(g, f, c_max)
    return (a, b) if a and b else None


def theta_equiv(f: FunctionTable, g: FunctionTable, c_max: int) -> EquivalenceWitness | None:
    """Least c with f <= c*g and g <= c*f pointwise (no argument rescaling)."""
    if f.horizon != g.horizon:
        raise ValueError("theta_equiv needs tables with the same horizon")
    if c_max < 1:
        raise ValueError("c_max must be >= 1")
    need = 1
    for a, b in zip(f.values, g.values):
        if a == 0 and b == 0:
            continue
        if a == 0 or b == 0:
            return None
        need = max(need, -(-a // b), -(-b // a))
        if need > c_max:
            return None
    return EquivalenceWitness(Relation.THETA, need, (1, f.horizon))


# ----------------------------------------------------------------------
# partitions


def partition_counts(n: int) -> list[int]:
    """[p(0), ..., p(n)] by the bounded-part dynamic program."""
    if n < 0:
        raise ValueError("n must be >= 0")
    p = [1] + [0] * n
    for part in range(1, n + 1):
        for r in range(part, n + 1):
            p[r] += p[r - part]
    return p


def partition_count(r: int) -> int:
    """Number of partitions of r into positive summands; p(0) = 1."""
    return partition_counts(r)[r]


def partitions(r: int, max_part: int | None = None):
    """All partitions of r as non-increasing tuples."""
    if max_part is None:
        max_part = r
    if r == 0:
        yield ()
        return
    for first in range(min(r, max_part), 0, -1):
        for rest in partitions(r - first, first):
            yield (first,) + rest


def exp_sqrt_constant(values: Sequence[int], c_max: int = 10) -> int | None:
    """Least c <= c_max with values[r] <= c * 2**sqrt(c*r) for every listed r >= 1.

    Comparison is done on log2 with a small slack only in the direction that
    could reject a true inequality, never accept a false one.
    """
    for c in range(1, c_max + 1):
        ok = True
        for r, v in enumerate(values):
            if r == 0 or v <= c:
                continue
            # exact sufficient test first: 2**isqrt(c r) <= 2**sqrt(c r)
            if v <= c << math.isqrt(c * r):
                continue
            if math.log2(v) - math.log2(c) > math.sqrt(c * r):
                ok = False
                break
        if ok:
            return c
    return None
