"""Length functions: (C)/(D) checks and the explicit constructions built on them.

A length function on Z is stored in one of two forms:

* explicit values l(0), ..., l(M), symmetric in n;
* "levels" for functions nondecreasing in |n|: ``levels[m]`` is the largest
  n >= 0 with l(n) <= m.  This is how the inverse of a fast-growing
  superadditive function is stored, since its domain can be astronomically
  large while the number of distinct values is small.

``complete_up_to`` is the largest r such that every n in Z with l(n) <= r
lies inside the tabulated range; counts and maxima over level sets are only
reported up to it.
"""

from __future__ import annotations

import heapq
import json
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import numpy as np

from .asymptotics import FunctionTable, is_increasing, is_superadditive

DEFAULT_MAX_WINDOW = 20_000_000
_INF = 1 << 60


class HorizonExhausted(ValueError):
    """The input table ends before the construction can take its next step."""


class IncompleteTabulation(ValueError):
    """A length value needed by a shortest-path computation is not tabulated."""


class WindowTooLarge(MemoryError):
    pass


def _ceil_root(v: int, r: int) -> int:
    """Least integer a with a**r >= v (v >= 1, r >= 1)."""
    if v <= 1:
        return 1
    lo, hi = 1, 1 << (v.bit_length() // r + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** r >= v:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _least_base(counts: Iterable[tuple[int, int]]) -> int | None:
    """Least a >= 2 with count <= a**r for all given (r, count), r >= 1."""
    base = None
    for r, cnt in counts:
        a = max(2, _ceil_root(cnt, r))
        base = a if base is None else max(base, a)
    return base


# ----------------------------------------------------------------------
# length tables on Z


@dataclass(frozen=True)
class LengthTable:
    horizon: int
    complete_up_to: int
    values: tuple[int, ...] | None = field(default=None, repr=False)
    levels: tuple[int, ...] | None = field(default=None, repr=False)

    @classmethod
    def from_values(cls, values: Sequence[int], complete_up_to: int | None = None) -> "LengthTable":
        """Explicit table l(0..M).

        Without ``complete_up_to``, a table nondecreasing in |n| is assumed to
        stay >= l(M) beyond M, giving completeness up to l(M) - 1; any other
        table is treated as complete only for r = 0.
        """
        vals = tuple(int(v) for v in values)
        if not vals:
            raise ValueError("need at least l(0)")
        levels = None
        if all(a <= b for a, b in zip(vals, vals[1:])) and vals[0] == 0:
            levels = _levels_of(vals)
        if complete_up_to is None:
            complete_up_to = max(vals[-1] - 1, 0) if levels is not None else 0
        return cls(len(vals) - 1, complete_up_to, vals, levels)

    @classmethod
    def from_function(cls, fn: Callable[[int], int], horizon: int,
                      complete_up_to: int | None = None) -> "LengthTable":
        return cls.from_values([fn(n) for n in range(horizon + 1)], complete_up_to)

    @classmethod
    def from_levels(cls, levels: Sequence[int]) -> "LengthTable":
        """``levels[m]`` = max{n >= 0 : l(n) <= m}; levels[0] must be 0."""
        lv = tuple(int(v) for v in levels)
        if not lv or lv[0] != 0:
            raise ValueError("levels[0] must be 0 (only n = 0 has length 0)")
        if any(a > b for a, b in zip(lv, lv[1:])):
            raise ValueError("levels must be nondecreasing")
        return cls(lv[-1], len(lv) - 1, None, lv)

    @property
    def monotone(self) -> bool:
        return self.levels is not None

    def __call__(self, n: int) -> int:
        n = abs(n)
        if n > self.horizon:
            raise IndexError(f"|n|={n} outside tabulated range 0..{self.horizon}")
        if self.values is not None:
            return self.values[n]
        return bisect_left(self.levels, n)

    def level_count(self, r: int) -> int:
        """#{n in Z : l(n) <= r}."""
        if r > self.complete_up_to:
            raise IncompleteTabulation(f"count at r={r} needs completeness beyond {self.complete_up_to}")
        if self.levels is not None:
            top = self.levels[min(r, len(self.levels) - 1)]
            return 2 * top + 1 if r >= 0 else 0
        pos = sum(1 for v in self.values[1:] if v <= r)
        return 2 * pos + (1 if self.values[0] <= r else 0)

    def max_within(self, r: int) -> int:
        """max{|n| : l(n) <= r}."""
        if r > self.complete_up_to:
            raise IncompleteTabulation(f"max at r={r} needs completeness beyond {self.complete_up_to}")
        if self.levels is not None:
            return self.levels[min(r, len(self.levels) - 1)]
        return max((n for n, v in enumerate(self.values) if v <= r), default=0)

    def explicit(self, limit: int = 10_000_000) -> tuple[int, ...]:
        if self.values is not None:
            return self.values
        if self.horizon > limit:
            raise ValueError(f"table over 0..{self.horizon} is too large to list")
        return tuple(self(n) for n in range(self.horizon + 1))

    def to_csv(self) -> str:
        return "n,l\n" + "".join(f"{n},{v}\n" for n, v in enumerate(self.explicit()))

    @classmethod
    def from_csv(cls, text: str) -> "LengthTable":
        lines = [ln.strip() for ln in text.strip().splitlines()]
        if lines[0].replace(" ", "") != "n,l":
            raise ValueError("expected CSV header 'n,l'")
        pairs = [tuple(int(x) for x in ln.split(",")) for ln in lines[1:] if ln]
        if [p[0] for p in pairs] != list(range(len(pairs))):
            raise ValueError("rows must be n = 0..M in order")
        return cls.from_values([p[1] for p in pairs])


def _levels_of(vals: Sequence[int]) -> tuple[int, ...]:
    top = vals[-1]
    out = []
    n = 0
    for m in range(top + 1):
        while n + 1 < len(vals) and vals[n + 1] <= m:
            n += 1
        out.append(n)
    return tuple(out)


@dataclass
class CDReport:
    c1_ok: bool
    c2_ok: bool
    c3_base: int | None
    c1_witness: object = None
    c2_witness: tuple | None = None
    checked_up_to: int = 0

    @property
    def ok(self) -> bool:
        return self.c1_ok and self.c2_ok and self.c3_base is not None

    def to_dict(self) -> dict:
        w1 = self.c1_witness
        return {
            "c1_ok": self.c1_ok, "c1_witness": list(w1) if isinstance(w1, tuple) else w1,
            "c2_ok": self.c2_ok, "c2_witness": list(self.c2_witness) if self.c2_witness else None,
            "c3_base": self.c3_base, "c3_checked_up_to": self.checked_up_to,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), default=str)


def check_C(l: LengthTable, method: str = "auto") -> CDReport:
    """Check (C1)-(C3) on the tabulated range.

    (C2) is checked for all n, m with |n|, |m|, |n+m| <= M.  For tables
    nondecreasing in |n| the check reduces exactly to one test per pair of
    levels, which is what ``method="auto"`` uses; ``"exhaustive"`` forces the
    pairwise scan.
    """
    if l.values is not None:
        c1_ok = l.values[0] == 0 and all(v >= 1 for v in l.values[1:])
        c1_w = None
        if not c1_ok:
            c1_w = 0 if l.values[0] != 0 else next(n for n, v in enumerate(l.values) if n and v < 1)
    else:
        c1_ok, c1_w = True, None

    if method == "exhaustive" or (method == "auto" and not l.monotone):
        c2_w = _c2_exhaustive(l)
    else:
        c2_w = _c2_levels(l)

    top = l.complete_up_to
    base = _least_base((r, l.level_count(r)) for r in range(1, top + 1)) if top >= 1 else None
    return CDReport(c1_ok, c2_w is None, base, c1_w, c2_w, top)


def _c2_exhaustive(l: LengthTable):
    vals = l.explicit()
    M = l.horizon
    for n in range(1, M + 1):
        ln = vals[n]
        for m in range(1, M - n + 1):
            if vals[n + m] > ln + vals[m]:
                return (n, m)
    # mixed signs: |n - m| < max(n, m)
    for n in range(1, M + 1):
        ln = vals[n]
        for m in range(1, M + 1):
            if vals[abs(n - m)] > ln + vals[m]:
                return (n, -m)
    return None


def _c2_levels(l: LengthTable):
    lv = l.levels
    M = l.horizon
    L = len(lv) - 1
    for A in range(1, L + 1):
        if lv[A] == lv[A - 1]:
            continue
        lo_a, hi_a = lv[A - 1] + 1, min(lv[A], M)
        for B in range(A, L + 1):
            if lv[B] == lv[B - 1]:
                continue
            lo_b, hi_b = lv[B - 1] + 1, min(lv[B], M)
            if lo_a + lo_b > M:
                break
            target = min(hi_a + hi_b, M)
            if l(target) > A + B:
                n = min(hi_a, target - lo_b)
                return (n, target - n)
    return None


# ----------------------------------------------------------------------
# length functions on groups


@dataclass
class GroupLengthTable:
    """A length function tabulated on a finite part of a group.

    Every element h with l(h) <= ``complete_up_to`` must be present.
    """

    lengths: Mapping[Hashable, int]
    multiply: Callable
    inverse: Callable
    identity: Hashable
    complete_up_to: int
    carrier: str = "group"

    @classmethod
    def from_ball(cls, index) -> "GroupLengthTable":
        g = index.group
        return cls(dict(index.lengths), g.multiply, g.inverse, g.identity(), index.radius,
                   f"ball:{g.name}")


def check_D(t: GroupLengthTable) -> CDReport:
    """(D1)-(D3) over the tabulated carrier; (D2) over every tabulated pair."""
    L = t.lengths
    top = t.complete_up_to
    c1_w = None
    if L.get(t.identity) != 0:
        c1_w = (t.identity,)
    else:
        for h, v in L.items():
            if h != t.identity and v < 1:
                c1_w = (h,)
                break
            hi = t.inverse(h)
            w = L.get(hi)
            if (w is None and v <= top) or (w is not None and w != v):
                c1_w = (h, hi)
                break

    items = sorted(L.items(), key=lambda kv: kv[1])
    c2_w = None
    mul = t.multiply
    for h1, v1 in items:
        for h2, v2 in items:
            p = mul(h1, h2)
            w = L.get(p)
            if w is None:
                if v1 + v2 <= top:
                    c2_w = (h1, h2)
                    break
            elif w > v1 + v2:
                c2_w = (h1, h2)
                break
        if c2_w:
            break

    counts = [0] * (top + 1)
    for v in L.values():
        if v <= top:
            counts[v] += 1
    cum, pairs = 0, []
    for r in range(top + 1):
        cum += counts[r]
        if r >= 1:
            pairs.append((r, cum))
    base = _least_base(pairs) if pairs else None
    return CDReport(c1_w is None, c2_w is None, base, c1_w, c2_w, top)


# ----------------------------------------------------------------------
# inverse of a superadditive function


def build_from_superadditive(f: FunctionTable) -> LengthTable:
    """l(r) = least m with f(m) >= r, l(0) = 0, extended symmetrically.

    The tabulated range is |r| <= f(N) and #{r > 0 : l(r) <= n} = f(n).
    """
    chk = is_superadditive(f)
    if not chk:
        raise ValueError(f"f is not superadditive: violation at {chk.witness}")
    if not any(f.values):
        raise ValueError("f is identically zero")
    return LengthTable.from_levels((0,) + f.values)


# ----------------------------------------------------------------------
# signed sums: l(n) = min sum of a_i over n = sum +-n_i


@dataclass(frozen=True)
class WeightedSystem:
    """Pairs (n_i, a_i): values n_1 = 1 < n_2 < ... with positive weights.

    ``complete_cost`` (optional) says the system lists every generator of
    the underlying infinite construction whose weight is <= that cost.
    """

    pairs: tuple[tuple[int, int], ...]
    complete_cost: int | None = None

    def __post_init__(self):
        pairs = tuple((int(n), int(a)) for n, a in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs or pairs[0][0] != 1:
            raise ValueError("a weighted system must start with n_1 = 1")
        if any(n2 <= n1 for (n1, _), (n2, _) in zip(pairs, pairs[1:])):
            raise ValueError("values n_i must be strictly increasing")
        if any(a <= 0 for _, a in pairs):
            raise ValueError("weights must be positive")

    @property
    def values(self) -> list[int]:
        return [n for n, _ in self.pairs]

    @property
    def weights(self) -> list[int]:
        return [a for _, a in self.pairs]

    def to_json(self) -> str:
        obj = {"pairs": [list(p) for p in self.pairs]}
        if self.complete_cost is not None:
            obj["complete_cost"] = self.complete_cost
        return json.dumps(obj)

    @classmethod
    def from_json(cls, text: str) -> "WeightedSystem":
        obj = json.loads(text)
        return cls(tuple(tuple(p) for p in obj["pairs"]), obj.get("complete_cost"))


def signed_sum_reach(sys: WeightedSystem, horizon: int) -> FunctionTable:
    """d(r) = max{|n| : l(n) <= r} for r = 1..horizon, by unbounded knapsack.

    The maximum is attained by an all-positive representation, so
    d(r) = max sum k_i n_i subject to sum k_i a_i <= r, k_i >= 0.
    """
    best = [0] * (horizon + 1)
    pairs = sys.pairs
    for c in range(1, horizon + 1):
        b = best[c - 1]
        for n, a in pairs:
            if a <= c:
                v = best[c - a] + n
                if v > b:
                    b = v
        best[c] = b
    return FunctionTable(best[1:])


def _completeness(sys: WeightedSystem, M: int) -> int:
    """Largest r with d(r) <= M, i.e. every n with l(n) <= r has |n| <= M."""
    best = [0]
    c = 0
    cap = sys.complete_cost
    while True:
        c += 1
        b = best[c - 1]
        for n, a in sys.pairs:
            if a <= c:
                b = max(b, best[c - a] + n)
        if b > M:
            r = c - 1
            return r if cap is None else min(r, cap)
        best.append(b)
        if cap is not None and c >= cap:
            return cap


@dataclass
class SignedSumSolution:
    system: WeightedSystem
    M: int
    bound: int  # window is [-bound, bound]
    dist: np.ndarray
    active: tuple[int, ...]  # indices of generators that can occur in minimal representations

    def __call__(self, n: int) -> int:
        return int(self.dist[n + self.bound])

    def table(self) -> LengthTable:
        B, M = self.bound, self.M
        vals = [int(v) for v in self.dist[B: B + M + 1]]
        return LengthTable.from_values(vals, complete_up_to=_completeness(self.system, M))

    def representation(self, n: int) -> tuple[int, ...]:
        """Net coefficients k_i of one minimal representation of n."""
        if abs(n) > self.bound:
            raise IndexError("n outside the solved window")
        B = self.bound
        k = [0] * len(self.system.pairs)
        x = n
        dist = self.dist
        while x != 0:
            here = int(dist[x + B])
            for i in self.active:
                v, a = self.system.pairs[i]
                for sgn in (1, -1):
                    y = x - sgn * v
                    if -B <= y <= B and int(dist[y + B]) + a == here:
                        k[i] += sgn
                        x = y
                        break
                else:
                    continue
                break
            else:  # pragma: no cover - impossible for exact distances
                raise RuntimeError("no predecessor found; distance table is inconsistent")
        return tuple(k)


def _dijkstra(steps, B):
    W = 2 * B + 1
    dist = np.full(W, _INF, dtype=np.int64)
    dist[B] = 0
    heap = [(0, 0)]
    while heap:
        d, x = heapq.heappop(heap)
        if d > dist[x + B]:
            continue
        for v, a in steps:
            nd = d + a
            for y in (x + v, x - v):
                if -B <= y <= B and nd < dist[y + B]:
                    dist[y + B] = nd
                    heapq.heappush(heap, (nd, y))
    return dist


def _closure_pass(dist, v, a, reverse):
    """dist[x] = min_k dist[x -+ k v] + k a along each residue class mod v."""
    src = dist[::-1] if reverse else dist
    W = src.shape[0]
    rows = -(-W // v)
    pad = np.full(rows * v, _INF, dtype=np.int64)
    pad[:W] = src
    grid = pad.reshape(rows, v)
    t = (np.arange(rows, dtype=np.int64) * a)[:, None]
    out = np.minimum.accumulate(grid - t, axis=0) + t
    out = np.minimum(out, _INF)
    res = out.reshape(-1)[:W]
    return res[::-1].copy() if reverse else res


def _sweep(steps, B):
    W = 2 * B + 1
    dist = np.full(W, _INF, dtype=np.int64)
    dist[B] = 0
    while True:
        before = dist.copy()
        for v, a in steps:
            dist = _closure_pass(dist, v, a, reverse=False)
            dist = _closure_pass(dist, v, a, reverse=True)
        if np.array_equal(before, dist):
            return dist


def signed_sum_solve(sys: WeightedSystem, M: int, method: str = "auto",
                     max_window: int = DEFAULT_MAX_WINDOW) -> SignedSumSolution:
    """Exact l(n) for |n| <= M as a shortest path on Z from 0 with steps +-n_i of cost a_i.

    Positions are restricted to [-(M + v), M + v] where v is the largest step
    that can occur in a minimal representation: the steps of a representation
    commute, and taking positive steps while below the target and negative
    ones while above keeps every partial sum within v of the target.
    Generators with a_i larger than the current upper bound on max l over
    |n| <= M are never used and are dropped; the bound is refined until no
    further generator can be admitted.
    """
    if M < 0:
        raise ValueError("M must be >= 0")
    pairs = sys.pairs
    active = [i for i, (v, _) in enumerate(pairs) if v <= max(M, 1)]
    while True:
        steps = [pairs[i] for i in active]
        B = M + max(v for v, _ in steps)
        if 2 * B + 1 > max_window:
            raise WindowTooLarge(f"window of {2 * B + 1} positions exceeds {max_window}")
        use = method if method != "auto" else ("dijkstra" if B <= 50_000 else "sweep")
        if use == "dijkstra":
            dist = _dijkstra(steps, B)
        elif use == "sweep":
            dist = _sweep(steps, B)
        else:
            raise ValueError(f"unknown method {method!r}")
        ub = int(dist[B - M: B + M + 1].max())
        extra = [i for i, (_, a) in enumerate(pairs) if i not in active and a <= ub]
        if not extra:
            return SignedSumSolution(sys, M, B, dist, tuple(active))
        active = sorted(active + extra)


def signed_sum_length(sys: WeightedSystem, M: int, method: str = "auto",
                      max_window: int = DEFAULT_MAX_WINDOW) -> LengthTable:
    return signed_sum_solve(sys, M, method, max_window).table()


def _coefficient_boxes(pairs, budget):
    """All coefficient vectors over ``pairs`` with sum |k_i| a_i <= budget.

    Returns arrays (cost, center).  Uses int64 when no overflow is possible.
    """
    bound = budget
    for n, a in pairs:
        bound += (budget // a) * n
    dtype = np.int64 if bound < (1 << 62) else object
    C = np.zeros(1, dtype=dtype)
    X = np.zeros(1, dtype=dtype)
    for n, a in sorted(pairs, key=lambda p: -p[1]):
        kmax = (budget - C) // a
        cnt = (2 * kmax + 1).astype(np.int64)
        idx = np.repeat(np.arange(C.shape[0]), cnt)
        start = np.cumsum(cnt) - cnt
        pos = np.arange(int(cnt.sum()), dtype=np.int64) - np.repeat(start, cnt)
        k = (pos - kmax[idx].astype(np.int64)).astype(dtype)
        C = C[idx] + np.abs(k) * a
        X = X[idx] + k * n
    return C, X


def signed_sum_level_set(sys: WeightedSystem, r: int) -> tuple[int, int]:
    """(#{n in Z : l(n) <= r}, max{|n| : l(n) <= r}) computed exactly.

    Every n with l(n) <= r is sum k_i n_i (i >= 2) plus a unit part costing
    a_1 per unit, so the level set is a union of intervals, one per
    coefficient vector of cost <= r.  The union is measured directly.
    """
    if sys.complete_cost is not None and r > sys.complete_cost:
        raise IncompleteTabulation(f"system is only complete for costs <= {sys.complete_cost}")
    unit_a = sys.pairs[0][1]
    rest = [p for p in sys.pairs[1:] if p[1] <= r]
    C, X = _coefficient_boxes(rest, r)
    rad = (r - C) // unit_a
    left, right = X - rad, X + rad
    order = np.argsort(left, kind="stable")
    left, right = left[order], right[order]
    runmax = np.maximum.accumulate(right)
    starts = np.ones(left.shape[0], dtype=bool)
    starts[1:] = left[1:] > runmax[:-1] + 1
    s_idx = np.flatnonzero(starts)
    e_idx = np.append(s_idx[1:] - 1, left.shape[0] - 1)
    total = int(sum(int(v) for v in (runmax[e_idx] - left[s_idx] + 1)))
    return total, int(runmax[-1])


# ----------------------------------------------------------------------
# target-distortion system


def ps_system_from_target(f: FunctionTable, count: int | None = None) -> WeightedSystem:
    """Generators of weight l_i and value n_i = f(l_i) with l_1 = 2 and
    l_{i+1} least such that f(l_{i+1}) >= 2 f(l_i); the unit generator
    (1, 1) comes first.

    Without ``count`` all generators whose weight lies within f's horizon are
    produced, so the system is complete for costs up to the horizon.
    """
    if f.horizon < 2:
        raise HorizonExhausted("need f on at least 1..2")
    inc = is_increasing(f)
    if not inc:
        raise ValueError(f"f is not increasing: {inc.witness}")
    sup = is_superadditive(f)
    if not sup:
        raise ValueError(f"f is not superadditive: {sup.witness}")
    if f(1) < 1:
        raise ValueError("f must take values in N = {1, 2, ...}")
    ls = [2]
    while count is None or len(ls) < count:
        target = 2 * f(ls[-1])
        nxt = next((m for m in range(ls[-1] + 1, f.horizon + 1) if f(m) >= target), None)
        if nxt is None:
            if count is not None:
                raise HorizonExhausted(f"f's table ends before l_{len(ls) + 1}")
            break
        if not ls[-1] < nxt <= 2 * ls[-1]:
            raise AssertionError(f"l_{len(ls) + 1} = {nxt} violates l_i < l_(i+1) <= 2 l_i")
        ls.append(nxt)
    pairs = [(1, 1)] + [(f(l), l) for l in ls]
    complete = f.horizon if count is None else ls[-1]
    return WeightedSystem(tuple(pairs), complete)


def distortion_of_length(l: LengthTable) -> FunctionTable:
    """d(r) = max{|n| : l(n) <= r} on the exactly known prefix r = 1..complete_up_to."""
    if l.complete_up_to < 1:
        raise IncompleteTabulation("no r >= 1 is covered by the table")
    return FunctionTable(l.max_within(r) for r in range(1, l.complete_up_to + 1))


def growth_of_length(l: LengthTable) -> FunctionTable:
    """g(r) = #{n : l(n) <= r} on the exactly known prefix r = 1..complete_up_to."""
    if l.complete_up_to < 1:
        raise IncompleteTabulation("no r >= 1 is covered by the table")
    return FunctionTable(l.level_count(r) for r in range(1, l.complete_up_to + 1))


# ----------------------------------------------------------------------
# locally finite construction on the direct sum of copies of Z/2


@dataclass
class LocallyFiniteLength:
    """l on H = (+)_{i>=1} Z/2, elements as bitmasks; H_i = first i coordinates.

    weights[i-1] = l_i is the least integer with l_i > l_{i-1} and
    min(l_i, F(floor(sqrt(l_i)))) > n_i = 2^i.
    """

    weights: tuple[int, ...]
    next_weight: int | None  # l_{i_max+1} when F's table reaches it

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(2 ** (i + 1) for i in range(len(self.weights)))

    @property
    def complete_up_to(self) -> int:
        return (self.next_weight - 1) if self.next_weight else self.weights[-1]

    def __call__(self, h: int) -> int:
        total, i = 0, 0
        while h:
            if h & 1:
                total += self.weights[i]
            h >>= 1
            i += 1
        return total

    def table(self) -> GroupLengthTable:
        k = len(self.weights)
        lengths = {h: self(h) for h in range(2 ** k)}
        return GroupLengthTable(lengths, lambda x, y: x ^ y, lambda x: x, 0,
                                self.complete_up_to, "direct_sum_z2")

    def count_within(self, r: int) -> int:
        if r > self.complete_up_to:
            raise IncompleteTabulation(f"count at r={r} needs l_{len(self.weights) + 1}")
        return sum(1 for h in range(2 ** len(self.weights)) if self(h) <= r)


def locally_finite_length(F: FunctionTable, i_max: int) -> LocallyFiniteLength:
    chk = [F(r) <= F(r + 1) for r in range(1, F.horizon)]
    if not all(chk):
        raise ValueError("F must be nondecreasing")

    def pick(i, prev):
        n_i = 2 ** i
        s = next((r for r in range(1, F.horizon + 1) if F(r) > n_i), None)
        if s is None:
            return None
        return max(prev + 1, n_i + 1, s * s)

    ws: list[int] = []
    for i in range(1, i_max + 1):
        w = pick(i, ws[-1] if ws else 0)
        if w is None:
            raise HorizonExhausted(f"F never exceeds 2^{i} on its horizon")
        ws.append(w)
    return LocallyFiniteLength(tuple(ws), pick(i_max + 1, ws[-1]))


# ----------------------------------------------------------------------
# extension of a length function from a cyclic subgroup


@dataclass
class ExtensionResult:
    values: dict
    radius: int
    exact: bool
    group: object

    def __call__(self, g) -> int:
        return self.values[g]

    def table(self) -> GroupLengthTable:
        g = self.group
        return GroupLengthTable(self.values, g.multiply, g.inverse, g.identity(),
                                self.radius if self.exact else 0, f"extension:{g.name}")


def extension_length(group, index, sub, l: LengthTable, radius: int | None = None) -> ExtensionResult:
    """L(g) = min over factorizations into generators (weight 1) and subgroup
    elements h (weight l(h)), on the ball ``index``.

    Computed by Dijkstra on the ball with unit generator edges and jump
    edges g -> g h.  Ties are broken by canonical key order.  The values are
    exact for every element of the ball when each jump h with l(h) <= R
    satisfies |h|_X <= l(h) (then no optimal path leaves the ball); the
    ``exact`` flag records whether that holds.
    """
    R = index.radius if radius is None else radius
    if R > index.radius:
        raise ValueError("radius exceeds the ball")
    if l.complete_up_to < R:
        raise IncompleteTabulation(
            f"l is complete only up to {l.complete_up_to}; jump edges of weight <= {R} needed")
    jumps = []
    exact = True
    for n in range(1, l.horizon + 1):
        w = l(n)
        if w > R:
            continue
        for m in (n, -n):
            h = sub.element(m)
            jumps.append((w, h))
            hx = index.length(h)
            if hx is None or hx > w:
                exact = False
    jumps.sort()
    mul = group.multiply
    gens = group.generators
    inball = index.lengths
    e0 = group.identity()
    dist = {e0: 0}
    heap = [(0, e0)]
    done = set()
    while heap:
        d, g = heapq.heappop(heap)
        if g in done:
            continue
        done.add(g)
        for s in gens:
            x = mul(g, s)
            if x in inball and inball[x] <= R and d + 1 < dist.get(x, _INF):
                dist[x] = d + 1
                heapq.heappush(heap, (d + 1, x))
        for w, h in jumps:
            if d + w > R:
                break
            x = mul(g, h)
            if x in inball and inball[x] <= R and d + w < dist.get(x, _INF):
                dist[x] = d + w
                heapq.heappush(heap, (d + w, x))
    return ExtensionResult(dist, R, exact, group)


# ----------------------------------------------------------------------
# specialness profile


@dataclass
class SpecialnessProfile:
    f1: FunctionTable
    f2: FunctionTable
    ratio_max: Fraction
    pairs: list[tuple] = field(default_factory=list)  # (a_k, b_k, k, n_k)


def specialness_profile(lengths: Mapping[Hashable, int], intrinsic: Callable[[Hashable], int],
                        radius: int, k_max: int = 64) -> SpecialnessProfile:
    """f1(r) = max{l(h) : |h|_Y = r}, f2(r) = min{l(h) : r <= |h|_Y <= radius}.

    ``lengths`` must contain every h with |h|_Y <= radius.  Pairs (a_k, b_k)
    with l(a_k) >= k^3 l(b_k) are reported for k >= 2 (k = 1 is always
    satisfied by a_k = b_k) at increasing intrinsic radii n_k.
    """
    spheres: dict[int, list] = {r: [] for r in range(radius + 1)}
    for h, v in lengths.items():
        r = intrinsic(h)
        if r <= radius:
            spheres[r].append((v, h))
    for r in range(1, radius + 1):
        if not spheres[r]:
            raise ValueError(f"no element of intrinsic length {r}; carrier incomplete")
    top = [max(spheres[r], key=lambda t: (t[0], repr(t[1]))) for r in range(radius + 1)]
    low = [None] * (radius + 2)
    for r in range(radius, 0, -1):
        cand = min(spheres[r], key=lambda t: (t[0], repr(t[1])))
        low[r] = cand if low[r + 1] is None or cand[0] < low[r + 1][0] else low[r + 1]
    f1 = FunctionTable(top[r][0] for r in range(1, radius + 1))
    f2 = FunctionTable(low[r][0] for r in range(1, radius + 1))
    ratio = max(Fraction(f1(r), f2(r)) for r in range(1, radius + 1))
    pairs = []
    prev = 0
    for k in range(2, k_max + 1):
        hit = next((r for r in range(prev + 1, radius + 1) if f1(r) >= k ** 3 * f2(r)), None)
        if hit is None:
            break
        pairs.append((top[hit][1], low[hit][1], k, hit))
        prev = hit
    return SpecialnessProfile(f1, f2, ratio, pairs)
