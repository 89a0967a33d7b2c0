"""Sequence pairs (a_i, n_i) for the o(r^2)-growth / huge-distortion construction.

The original construction diagonalizes against every recursive function; that
step cannot be executed, so ``build_seq`` takes a surrogate family g_1, g_2, ...
of increasing functions instead and records its identifier.  Nothing here
claims the resulting n_i escape every recursive bound.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .lenfun import (IncompleteTabulation, LengthTable, WeightedSystem,
                     signed_sum_level_set, signed_sum_reach, signed_sum_solve)

SurrogateFamily = Callable[[int, int], int]  # (j, x) -> g_j(x)

SURROGATES: dict[str, SurrogateFamily] = {
    "poly": lambda j, x: x ** j,
    "none": lambda j, x: 0,
}


class BoxTooLarge(MemoryError):
    pass


@dataclass(frozen=True)
class SeqPair:
    a: tuple[int, ...]
    n: tuple[int, ...]
    surrogate: str = "poly"

    def __len__(self) -> int:
        return len(self.a)

    @property
    def next_a(self) -> int:
        """a_{s+1}; it depends only on n_s, so it is known without n_{s+1}."""
        s = len(self.a)
        return 2 ** (s + 4) * self.n[-1] + 1

    def system(self) -> WeightedSystem:
        """Signed-sum system (n_i, a_i); complete for every cost below a_{s+1}."""
        return WeightedSystem(tuple(zip(self.n, self.a)), self.next_a - 1)

    def to_json(self) -> str:
        return json.dumps({"a": list(self.a), "n": list(self.n), "surrogate": self.surrogate})

    @classmethod
    def from_json(cls, text: str) -> "SeqPair":
        obj = json.loads(text)
        return cls(tuple(obj["a"]), tuple(obj["n"]), obj.get("surrogate", "custom"))


def build_seq(count: int, surrogate: str | SurrogateFamily = "poly",
              surrogate_id: str | None = None) -> SeqPair:
    if count < 2:
        raise ValueError("count must be >= 2")
    if isinstance(surrogate, str):
        if surrogate not in SURROGATES:
            raise ValueError(f"unknown surrogate {surrogate!r}; known: {sorted(SURROGATES)}")
        fam, sid = SURROGATES[surrogate], surrogate
    else:
        fam, sid = surrogate, surrogate_id or "custom"
    a, n = [1], [1]
    for i in range(2, count + 1):
        ai = 2 ** (i + 3) * n[-1] + 1
        base = -(-(n[-1] * ai) // a[-1]) + 1
        try:
            gmax = max(int(fam(j, ai)) for j in range(1, i + 1))
        except Exception as exc:  # surrogate cannot be evaluated at a_i
            raise ValueError(f"surrogate {sid!r} failed at a_{i}={ai}: {exc}") from exc
        n.append(n[-1] * max(base, gmax + 1))
        a.append(ai)
    seq = SeqPair(tuple(a), tuple(n), sid)
    bad = verify_seq(seq)
    if bad:
        raise AssertionError(f"constructed sequence violates {bad}")
    return seq


def verify_seq(seq: SeqPair) -> list[str]:
    """Independent re-check of the implementable invariants; returns the failures."""
    a, n = seq.a, seq.n
    out = []
    if a[0] != 1 or n[0] != 1:
        out.append("a_1 = n_1 = 1")
    for i in range(1, len(a)):
        idx = i + 1
        if a[i] < 2 ** (idx + 2) * n[i - 1]:
            out.append(f"a_{idx} >= 2^{idx + 2} n_{idx - 1}")
        if n[i] * a[i - 1] <= n[i - 1] * a[i]:
            out.append(f"n_{idx} > n_{idx - 1} a_{idx} / a_{idx - 1}")
        if n[i] % n[i - 1]:
            out.append(f"n_{idx - 1} | n_{idx}")
        if a[i] <= a[i - 1]:
            out.append(f"a_{idx} > a_{idx - 1}")
        if n[i] <= n[i - 1]:
            out.append(f"n_{idx} > n_{idx - 1}")
    return out


def _j_of(seq: SeqPair, r: int) -> int:
    """1-based j with a_{j-1} <= r < a_j (a_{s+1} is known from n_s)."""
    a = list(seq.a) + [seq.next_a]
    if r >= a[-1]:
        raise IncompleteTabulation(f"r={r} >= a_{len(a)}; extend the sequence")
    return next(i + 1 for i, v in enumerate(a) if v > r)


def _count(seq: SeqPair, r: int, l: LengthTable | None) -> int:
    if l is not None:
        return l.level_count(r)
    return signed_sum_level_set(seq.system(), r)[0]


def fpt_upper_bound_check(seq: SeqPair, r_values, l: LengthTable | None = None) -> dict:
    """Exact #{n : l(n) <= r} against r^2 / a_{j-2} for each r.

    Counts come from ``l`` when given (negative controls use this), otherwise
    from the exact level-set computation on the sequence's system.  r with
    j < 3 are skipped: the bound is not defined there.
    """
    rows = []
    for r in r_values:
        j = _j_of(seq, r)
        if j < 3:
            rows.append({"r": r, "j": j, "status": "skipped", "reason": "j < 3"})
            continue
        cnt = _count(seq, r, l)
        bound = Fraction(r * r, seq.a[j - 3])
        ok = cnt <= bound
        rows.append({"r": r, "j": j, "count": cnt, "bound": str(bound),
                     "status": "pass" if ok else "fail"})
    return {"surrogate": seq.surrogate, "rows": rows,
            "ok": all(row["status"] != "fail" for row in rows)}


def minimal_representation_properties(seq: SeqPair, n_values, solution=None) -> dict:
    """Coefficient bounds on recovered minimal representations.

    Checks |k_i| a_i <= r (r = l(n)) for every i, and |k_i| < n_{i+1}/n_i for
    2 <= i < j-1.  The number of non-vacuous instances of the second bound is
    reported, since for small n it rarely applies.
    """
    n_values = list(n_values)
    M = max((abs(v) for v in n_values), default=0)
    sol = solution or signed_sum_solve(seq.system(), M)
    failures = []
    nonvacuous = 0
    for v in n_values:
        k = sol.representation(v)
        r = sol(v)
        cost = sum(abs(ki) * ai for ki, ai in zip(k, seq.a))
        if cost != r or sum(ki * ni for ki, ni in zip(k, seq.n)) != v:
            failures.append({"n": v, "k": list(k), "check": "representation"})
            continue
        for i, (ki, ai) in enumerate(zip(k, seq.a), start=1):
            if abs(ki) * ai > r:
                failures.append({"n": v, "k": list(k), "check": f"lsl i={i}"})
        if r >= 1:
            j = _j_of(seq, r)
            for i in range(2, j - 1):
                if i >= len(seq.n):
                    break
                nonvacuous += 1
                if abs(k[i - 1]) * seq.n[i - 1] >= seq.n[i]:
                    failures.append({"n": v, "k": list(k), "check": f"atpy i={i}"})
    return {"checked": len(n_values), "atpy_nonvacuous": nonvacuous,
            "failures": failures, "ok": not failures}


def box_bounds(seq: SeqPair, i: int) -> list[int]:
    """Number of admissible values of k_1..k_i (each k_j ranges over 0..count-1).

    Combines the generic bound 0 <= k_j < n_{j+1}((j+1)^2 - 1) / (n_j (j+1)^2)
    with the tightenings k_{i-1} < n_i / (3 n_{i-1}) and k_i <= r / (3 a_i),
    r = n_i.  The generic bound for j = i is used only if n_{i+1} is known.
    """
    if not 1 <= i <= len(seq.n):
        raise ValueError(f"i must be in 1..{len(seq.n)}")
    n, a = seq.n, seq.a
    r = n[i - 1]
    counts = []
    for j in range(1, i + 1):
        lim = None
        if j < len(n):
            num = n[j] * ((j + 1) ** 2 - 1)
            den = n[j - 1] * (j + 1) ** 2
            lim = (num - 1) // den + 1
        if i > 1 and j == i - 1:
            t = (n[i - 1] - 1) // (3 * n[i - 2]) + 1
            lim = t if lim is None else min(lim, t)
        if j == i:
            t = r // (3 * a[i - 1]) + 1
            lim = t if lim is None else min(lim, t)
        counts.append(max(lim, 0))
    return counts


def coefficient_box_count(seq: SeqPair, i: int, max_box: int = 1_000_000,
                          enumerate_box: bool = True) -> dict:
    """Checks on the coefficient box at r = n_i.

    (a) all sums k_1 n_1 + ... + k_i n_i are distinct, (b) each has l <= r in the
    exact table, (c) box size * 20 * a_i > r^2.  With ``enumerate_box=False``
    only (c) is evaluated, which needs no enumeration.
    """
    counts = box_bounds(seq, i)
    size = math.prod(counts)
    r = seq.n[i - 1]
    a_i = seq.a[i - 1]
    rep = {"i": i, "r": r, "counts": counts, "size": size,
           "lower_bound": str(Fraction(r * r, 20 * a_i)),
           "size_exceeds_bound": size * 20 * a_i > r * r}
    if not enumerate_box:
        return rep
    if size > max_box:
        raise BoxTooLarge(f"box has {size} points (> {max_box})")
    vals = np.zeros(1, dtype=object)
    for cnt, nj in zip(counts, seq.n):
        vals = (vals[:, None] + np.arange(cnt, dtype=object)[None, :] * nj).reshape(-1)
    sums = sorted(int(v) for v in vals)
    distinct = all(x < y for x, y in zip(sums, sums[1:]))
    top = sums[-1] if sums else 0
    sol = signed_sum_solve(seq.system(), top)
    worst = max((sol(v) for v in sums), default=0)
    rep.update({"distinct": distinct, "max_length": worst, "within_r": worst <= r,
                "ok": distinct and worst <= r and rep["size_exceeds_bound"]})
    return rep


def distortion_witness(seq: SeqPair, exact_cap: int = 1_000_000) -> list[dict]:
    """d(a_i) >= n_i for each term.

    For a_i <= ``exact_cap`` d(a_i) is computed exactly; beyond that the
    certificate is the one-term representation n_i = n_i of cost a_i.
    """
    sysm = seq.system()
    top = max((v for v in seq.a if v <= exact_cap), default=0)
    reach = signed_sum_reach(sysm, top) if top else None
    rows = []
    for idx, (ai, ni) in enumerate(zip(seq.a, seq.n), start=1):
        if reach is not None and ai <= top:
            d = reach(ai)
            rows.append({"i": idx, "a": ai, "n": ni, "d": d, "exact": True, "ok": d >= ni})
        else:
            rows.append({"i": idx, "a": ai, "n": ni, "d": None, "exact": False,
                         "ok": True, "certificate": "single generator of weight a_i"})
    return rows
