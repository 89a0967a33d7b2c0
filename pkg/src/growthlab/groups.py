"""Canonical-form arithmetic for a few concrete groups and exact Cayley balls.

Supported groups (CLI names in brackets):

* free abelian group Z^d            [``z^d``]
* free group on k letters           [``free:k``]
* 3-dimensional Heisenberg group    [``heis3`` or ``heis3:ab``]
* Baumslag-Solitar group BS(1,2)    [``bs12``]

Elements are plain hashable tuples in canonical form, so equality of tuples is
equality in the group and a ``dict`` doubles as the visited set of a BFS.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .asymptotics import FunctionTable

DEFAULT_BUDGET = 5_000_000

Element = tuple


class BudgetExceeded(RuntimeError):
    """Ball enumeration hit the configured element cap."""

    def __init__(self, budget: int, radius_reached: int):
        self.budget = budget
        self.radius_reached = radius_reached
        super().__init__(
            f"ball exceeded budget of {budget} elements; "
            f"complete only up to radius {radius_reached}"
        )


def default_budget() -> int:
    env = os.environ.get("GROWTHLAB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class Group:
    """Base class: a group with a fixed, symmetrized finite generating set."""

    name: str = "group"

    def identity(self) -> Element:
        raise NotImplementedError

    def multiply(self, e1: Element, e2: Element) -> Element:
        raise NotImplementedError

    def inverse(self, e: Element) -> Element:
        raise NotImplementedError

    def named_generators(self) -> list[tuple[str, Element]]:
        """Generators without inverses, as (name, element)."""
        raise NotImplementedError

    def cyclic_coordinate(self, g0: Element, h: Element) -> int | None:
        """Return n with h == g0**n, or None if h is not in <g0>."""
        raise NotImplementedError

    def format_key(self, e: Element) -> str:
        return f"{self.name}:" + ",".join(str(v) for v in e)

    # ------------------------------------------------------------------

    @property
    def generators(self) -> list[Element]:
        """Symmetrized generating set X^{+-1}, duplicates removed, fixed order."""
        out: list[Element] = []
        for _, g in self.named_generators():
            for s in (g, self.inverse(g)):
                if s not in out:
                    out.append(s)
        return out

    def generator(self, name: str) -> Element:
        for n, g in self.named_generators():
            if n == name:
                return g
        if name.endswith("^-1"):
            return self.inverse(self.generator(name[:-3]))
        raise KeyError(f"{self.name} has no generator {name!r}")

    def power(self, e: Element, n: int) -> Element:
        if n < 0:
            e, n = self.inverse(e), -n
        result = self.identity()
        while n:
            if n & 1:
                result = self.multiply(result, e)
            e = self.multiply(e, e)
            n >>= 1
        return result

    def evaluate(self, word: Iterable[Element]) -> Element:
        out = self.identity()
        for s in word:
            out = self.multiply(out, s)
        return out

    def commutator(self, x: Element, y: Element) -> Element:
        """[x, y] = x y x^-1 y^-1."""
        return self.evaluate([x, y, self.inverse(x), self.inverse(y)])

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


class FreeAbelian(Group):
    def __init__(self, d: int):
        if d < 1:
            raise ValueError("rank must be >= 1")
        self.d = d
        self.name = f"z^{d}"

    def identity(self):
        return (0,) * self.d

    def multiply(self, e1, e2):
        return tuple(a + b for a, b in zip(e1, e2))

    def inverse(self, e):
        return tuple(-a for a in e)

    def named_generators(self):
        names = "abcdefghijklmnopqrstuvwxyz"
        out = []
        for i in range(self.d):
            v = [0] * self.d
            v[i] = 1
            out.append((names[i] if i < len(names) else f"e{i}", tuple(v)))
        return out

    def cyclic_coordinate(self, g0, h):
        if not any(g0):
            raise ValueError("generator of a cyclic subgroup must have infinite order")
        i = next(j for j, v in enumerate(g0) if v)
        if h[i] % g0[i]:
            return None
        n = h[i] // g0[i]
        return n if all(n * a == b for a, b in zip(g0, h)) else None


class Free(Group):
    """Free group; letters are +-1..+-k, words are reduced tuples."""

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("rank must be >= 1")
        self.k = k
        self.name = f"free:{k}"

    def identity(self):
        return ()

    def multiply(self, e1, e2):
        i = 0
        n = min(len(e1), len(e2))
        while i < n and e1[-1 - i] == -e2[i]:
            i += 1
        return e1[: len(e1) - i] + e2[i:]

    def inverse(self, e):
        return tuple(-x for x in reversed(e))

    def named_generators(self):
        names = "abcdefghijklmnopqrstuvwxyz"
        return [(names[i] if i < len(names) else f"x{i}", (i + 1,)) for i in range(self.k)]

    def format_key(self, e):
        return f"{self.name}:" + ".".join(str(x) for x in e)

    def cyclic_coordinate(self, g0, h):
        if not g0:
            raise ValueError("generator of a cyclic subgroup must have infinite order")
        if not h:
            return 0
        # g0 = u c u^-1 with c cyclically reduced; |g0^n| = 2|u| + |n||c|
        u = 0
        while u < len(g0) - 1 - u and g0[u] == -g0[-1 - u]:
            u += 1
        core = len(g0) - 2 * u
        q, rem = divmod(len(h) - 2 * u, core)
        if rem or q <= 0:
            return None
        for n in (q, -q):
            if self.power(g0, n) == h:
                return n
        return None


class Heisenberg(Group):
    """Integer Heisenberg group with law (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy').

    a = (1,0,0), b = (0,1,0), c = (0,0,1) = [a, b].  ``gens="ab"`` drops c from
    the generating set.
    """

    def __init__(self, gens: str = "abc"):
        if gens not in ("abc", "ab"):
            raise ValueError("heis3 generating set must be 'abc' or 'ab'")
        self.gens = gens
        self.name = "heis3" if gens == "abc" else "heis3:ab"

    def identity(self):
        return (0, 0, 0)

    def multiply(self, e1, e2):
        x, y, z = e1
        u, v, w = e2
        return (x + u, y + v, z + w + x * v)

    def inverse(self, e):
        x, y, z = e
        return (-x, -y, x * y - z)

    def named_generators(self):
        out = [("a", (1, 0, 0)), ("b", (0, 1, 0))]
        if self.gens == "abc":
            out.append(("c", (0, 0, 1)))
        return out

    def format_key(self, e):
        return "heis3:" + ",".join(str(v) for v in e)

    def cyclic_coordinate(self, g0, h):
        x0, y0, z0 = g0
        if x0 or y0:
            n = h[0] // x0 if x0 else h[1] // y0
            return n if self.power(g0, n) == h else None
        if not z0:
            raise ValueError("generator of a cyclic subgroup must have infinite order")
        if h[0] or h[1] or h[2] % z0:
            return None
        return h[2] // z0


def _dyadic(p: int, q: int) -> tuple[int, int]:
    """Reduce p / 2**q so that q == 0 or p is odd."""
    if p == 0:
        return 0, 0
    if q > 0:
        s = min(q, (p & -p).bit_length() - 1)
        p >>= s
        q -= s
    elif q < 0:
        p <<= -q
        q = 0
    return p, q


def _dyadic_add(p1: int, q1: int, p2: int, q2: int) -> tuple[int, int]:
    if q1 < q2:
        p1 <<= q2 - q1
        q1 = q2
    elif q2 < q1:
        p2 <<= q1 - q2
    return _dyadic(p1 + p2, q1)


class BS12(Group):
    """BS(1,2) = <a, b | b a b^-1 = a^2> as affine maps t -> 2^k t + p/2^q.

    Elements are (k, p, q) with q >= 0 and (q == 0 or p odd); a = t+1, b = 2t.
    The product e1*e2 is the composition e1 o e2.
    """

    name = "bs12"

    def identity(self):
        return (0, 0, 0)

    def multiply(self, e1, e2):
        k1, p1, q1 = e1
        k2, p2, q2 = e2
        # 2^k1 * (p2 / 2^q2) + p1 / 2^q1
        p, q = _dyadic(p2, q2 - k1)
        p, q = _dyadic_add(p, q, p1, q1)
        return (k1 + k2, p, q)

    def inverse(self, e):
        k, p, q = e
        # t -> 2^-k t - 2^-k m
        np_, nq = _dyadic(-p, q + k)
        return (-k, np_, nq)

    def named_generators(self):
        return [("a", (0, 1, 0)), ("b", (1, 0, 0))]

    def cyclic_coordinate(self, g0, h):
        k0, p0, q0 = g0
        if k0:
            if h[0] % k0:
                return None
            n = h[0] // k0
            return n if self.power(g0, n) == h else None
        if not p0:
            raise ValueError("generator of a cyclic subgroup must have infinite order")
        if h[0]:
            return None
        # g0^n = (0, n*m0); solve n*p0/2^q0 = p/2^q
        num = h[1] << q0
        den = p0 << h[2]
        if num % den:
            return None
        return num // den


def parse_group(name: str) -> Group:
    """Build a group from its CLI name (``z^2``, ``free:2``, ``heis3``, ``heis3:ab``, ``bs12``)."""
    s = name.strip().lower()
    try:
        if s.startswith("z^"):
            return FreeAbelian(int(s[2:]))
        if s.startswith("free:"):
            return Free(int(s[5:]))
    except ValueError:
        raise ValueError(f"bad group name {name!r}") from None
    if s == "heis3":
        return Heisenberg("abc")
    if s == "heis3:ab":
        return Heisenberg("ab")
    if s == "bs12":
        return BS12()
    raise ValueError(f"unknown group {name!r}")


# ----------------------------------------------------------------------
# subgroups


@dataclass(frozen=True)
class CyclicSubgroup:
    """Infinite cyclic subgroup <g0>; intrinsic length of g0^n is |n|."""

    group: Group
    generator: Element
    name: str = ""

    def coordinate(self, h: Element) -> int | None:
        return self.group.cyclic_coordinate(self.generator, h)

    def contains(self, h: Element) -> bool:
        return self.coordinate(h) is not None

    def intrinsic_length(self, h: Element) -> int:
        n = self.coordinate(h)
        if n is None:
            raise ValueError(f"{h} is not in {self.name or 'subgroup'}")
        return abs(n)

    def element(self, n: int) -> Element:
        return self.group.power(self.generator, n)


def cyclic(group: Group, g0: Element | str, name: str | None = None) -> CyclicSubgroup:
    if isinstance(g0, str):
        label = name or f"<{g0}>"
        g0 = group.generator(g0)
    else:
        label = name or f"<{g0}>"
    group.cyclic_coordinate(g0, group.identity())  # rejects torsion generators
    return CyclicSubgroup(group, g0, label)


def center(group: Heisenberg) -> CyclicSubgroup:
    """The centre <c> of the Heisenberg group; members are (0, 0, z)."""
    if not isinstance(group, Heisenberg):
        raise TypeError("center() is only defined for heis3")
    return CyclicSubgroup(group, (0, 0, 1), "center")


def axis(group: FreeAbelian, i: int) -> CyclicSubgroup:
    if not 0 <= i < group.d:
        raise ValueError(f"axis index {i} out of range for {group.name}")
    v = [0] * group.d
    v[i] = 1
    return CyclicSubgroup(group, tuple(v), f"axis:{i}")


def parse_subgroup(group: Group, name: str) -> CyclicSubgroup:
    """``center``, ``axis:i``, or ``cyclic:<generator name>``."""
    s = name.strip()
    if s == "center":
        return center(group)
    if s.startswith("axis:"):
        return axis(group, int(s[5:]))
    if s.startswith("cyclic:"):
        return cyclic(group, s[7:], name=s)
    raise ValueError(f"unknown subgroup {name!r}")


# ----------------------------------------------------------------------
# balls


@dataclass
class BallIndex:
    """Exact word lengths of every element of B_G(radius)."""

    group: Group
    radius: int
    lengths: dict = field(repr=False)
    sphere_sizes: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.lengths)

    def __contains__(self, e) -> bool:
        return e in self.lengths

    def length(self, e: Element) -> int | None:
        return self.lengths.get(e)

    def elements(self, max_length: int | None = None) -> Iterator[Element]:
        if max_length is None:
            return iter(self.lengths)
        return (e for e, n in self.lengths.items() if n <= max_length)

    def to_csv(self) -> str:
        rows = sorted(self.lengths.items(), key=lambda kv: (kv[1], kv[0]))
        fmt = self.group.format_key
        return "key,length\n" + "".join(f'"{fmt(e)}",{n}\n' for e, n in rows)


def ball(group: Group, radius: int, budget: int | None = None) -> BallIndex:
    """Breadth-first enumeration of B_G(radius) with right multiplication by X^{+-1}."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    budget = default_budget() if budget is None else budget
    gens = group.generators
    mul = group.multiply
    e0 = group.identity()
    lengths = {e0: 0}
    sizes = [1]
    frontier = [e0]
    for r in range(1, radius + 1):
        nxt = []
        for e in frontier:
            for s in gens:
                f = mul(e, s)
                if f not in lengths:
                    lengths[f] = r
                    nxt.append(f)
            if len(lengths) > budget:
                raise BudgetExceeded(budget, r - 1)
        sizes.append(len(nxt))
        frontier = nxt
    return BallIndex(group, radius, lengths, sizes)


def growth_function(group: Group, radius: int, budget: int | None = None,
                    index: BallIndex | None = None) -> FunctionTable:
    b = index if index is not None else ball(group, radius, budget)
    if b.radius < radius:
        raise ValueError("supplied ball is smaller than the requested radius")
    total, out = 1, []
    for r in range(1, radius + 1):
        total += b.sphere_sizes[r]
        out.append(total)
    return FunctionTable(out)


def _subgroup_profile(index: BallIndex, sub: CyclicSubgroup, radius: int):
    counts = [0] * (radius + 1)
    reach = [0] * (radius + 1)
    for e, n in index.lengths.items():
        if n > radius:
            continue
        k = sub.coordinate(e)
        if k is not None:
            counts[n] += 1
            if abs(k) > reach[n]:
                reach[n] = abs(k)
    return counts, reach


def _check_radius(index, radius):
    if index.radius < radius:
        raise ValueError("supplied ball is smaller than the requested radius")


def relative_growth(group: Group, sub: CyclicSubgroup, radius: int,
                    budget: int | None = None, index: BallIndex | None = None) -> FunctionTable:
    """r -> #(B_G(r) ∩ H) for r = 1..radius."""
    b = index if index is not None else ball(group, radius, budget)
    _check_radius(b, radius)
    counts, _ = _subgroup_profile(b, sub, radius)
    out, total = [], counts[0]
    for r in range(1, radius + 1):
        total += counts[r]
        out.append(total)
    return FunctionTable(out)


def distortion(group: Group, sub: CyclicSubgroup, radius: int,
               budget: int | None = None, index: BallIndex | None = None) -> FunctionTable:
    """r -> max{|h|_Y : h in H, |h|_X <= r} for r = 1..radius."""
    b = index if index is not None else ball(group, radius, budget)
    _check_radius(b, radius)
    _, reach = _subgroup_profile(b, sub, radius)
    out, best = [], 0
    for r in range(1, radius + 1):
        best = max(best, reach[r])
        out.append(best)
    return FunctionTable(out)


def word_length(group: Group, e: Element, radius: int, budget: int | None = None,
                index: BallIndex | None = None) -> int | None:
    """Exact |e|_X if it is at most ``radius``, else None."""
    b = index if index is not None and index.radius >= radius else ball(group, radius, budget)
    n = b.length(e)
    return n if n is not None and n <= radius else None


def change_of_generators_constant(sub: CyclicSubgroup, index: BallIndex) -> int | None:
    """max over Y^{+-1} of |y|_X, read from a ball (None if some y lies outside it)."""
    g = sub.group
    lens = [index.length(y) for y in (sub.generator, g.inverse(sub.generator))]
    return None if None in lens else max(lens)


def random_word(group: Group, length: int, rng) -> list[Element]:
    gens = group.generators
    return [gens[rng.randrange(len(gens))] for _ in range(length)]

