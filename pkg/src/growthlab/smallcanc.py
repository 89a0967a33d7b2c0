"""Letter combinatorics of the words v_k = (1 2)(1 1 2)...(1^k 2) and the piece ratio."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class VkWord:
    k: int
    letters: str

    @property
    def length(self) -> int:
        return len(self.letters)


def build_vk(k: int) -> VkWord:
    if k < 1:
        raise ValueError("k must be >= 1")
    return VkWord(k, "".join("1" * i + "2" for i in range(1, k + 1)))


def _positions(word: str, length: int) -> dict[str, list[int]]:
    pos: dict[str, list[int]] = defaultdict(list)
    for s in range(len(word) - length + 1):
        pos[word[s:s + length]].append(s)
    return pos


def subword_uniqueness(v: VkWord) -> dict:
    """(a) every subword of length 2k-1 occurs once; (b) every subword occurring at
    two positions is a subword of 1^{k-2} 2 1^{k-1}.

    Clause (a) reports its first offending subword; clause (b) lists every
    repeated subword that falls outside the pattern, with its positions.
    """
    k, w = v.k, v.letters
    if k < 2:
        raise ValueError("k must be >= 2")
    long_rep = next(((u, p) for u, p in _positions(w, 2 * k - 1).items() if len(p) > 1), None)
    pattern = "1" * (k - 2) + "2" + "1" * (k - 1)
    bad = []
    longest = 0
    for length in range(1, 2 * k - 1):
        repeated = [(u, p) for u, p in _positions(w, length).items() if len(p) > 1]
        if not repeated:
            break
        longest = length
        for u, p in repeated:
            if u not in pattern:
                bad.append({"subword": u, "positions": p})
    return {
        "k": k,
        "clause_a": long_rep is None,
        "clause_a_witness": None if long_rep is None else {"subword": long_rep[0], "positions": long_rep[1]},
        "clause_b": not bad,
        "clause_b_exceptions": bad,
        "longest_repeated": longest,
    }


def c_prime_ratio(k: int) -> Fraction:
    """(4k - 4) / (k (k + 3)): piece bound over relator syllable length."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Fraction(4 * k - 4, k * (k + 3))


def check(k_max: int, k_min: int = 2) -> list[dict]:
    rows = []
    for k in range(k_min, k_max + 1):
        v = build_vk(k)
        rep = subword_uniqueness(v)
        q = c_prime_ratio(k)
        rep.update({"m_k": v.length, "ratio": f"{q.numerator}/{q.denominator}",
                    "c_prime_1_10": q < Fraction(1, 10),
                    "ones": v.letters.count("1"), "twos": v.letters.count("2")})
        rows.append(rep)
    return rows
