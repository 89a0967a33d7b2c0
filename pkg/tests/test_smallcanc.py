from fractions import Fraction

import pytest

from growthlab.smallcanc import build_vk, c_prime_ratio, check, subword_uniqueness


def test_build_examples():
    assert build_vk(1).letters == "12" and build_vk(1).length == 2
    assert build_vk(3).letters == "121121112"
    assert build_vk(40).length == 860
    with pytest.raises(ValueError):
        build_vk(0)


@pytest.mark.parametrize("k", range(1, 70))
def test_letter_counts(k):
    v = build_vk(k)
    assert v.length == k * (k + 3) // 2
    assert v.letters.count("2") == k
    assert v.letters.count("1") == k * (k + 1) // 2


def test_k3_scan():
    rep = subword_uniqueness(build_vk(3))
    assert rep["clause_a"]
    w = build_vk(3).letters
    subs = [w[i:i + 5] for i in range(len(w) - 4)]
    assert len(subs) == len(set(subs))
    assert w.count("11") >= 2 and "11" in "12111"


def test_k2_boundary():
    rep = subword_uniqueness(build_vk(2))
    assert rep["clause_a"]
    assert [e["subword"] for e in rep["clause_b_exceptions"]] == ["12"]


@pytest.mark.parametrize("k", range(2, 65))
def test_clause_a_and_exact_failure_set_of_clause_b(k):
    rep = subword_uniqueness(build_vk(k))
    assert rep["clause_a"]
    # the only repeated subword outside 1^{k-2} 2 1^{k-1} is 1^{k-1} 2
    assert [e["subword"] for e in rep["clause_b_exceptions"]] == ["1" * (k - 1) + "2"]
    assert rep["longest_repeated"] == 2 * k - 2


def test_brute_force_repeated_subwords_k6():
    k = 6
    w = build_vk(k).letters
    rep = {w[i:j] for i in range(len(w)) for j in range(i + 1, len(w) + 1)
           if w.count(w[i:j]) >= 2 or w.find(w[i:j], w.find(w[i:j]) + 1) >= 0}
    assert max(len(u) for u in rep) == 2 * k - 2
    outside = {u for u in rep if u not in "1" * (k - 2) + "2" + "1" * (k - 1)}
    assert outside == {"1" * (k - 1) + "2"}


def test_ratio_examples():
    assert c_prime_ratio(40) == Fraction(156, 1720) < Fraction(1, 10)
    assert c_prime_ratio(10) == Fraction(36, 130) > Fraction(1, 10)
    assert c_prime_ratio(1) == 0


def test_ratio_threshold():
    tenth = Fraction(1, 10)
    assert all(c_prime_ratio(k) < tenth for k in range(40, 10_001))
    below = [k for k in range(2, 40) if c_prime_ratio(k) < tenth]
    assert below == [36, 37, 38, 39]  # the inequality already holds from k = 36


def test_check_report_rows():
    rows = check(8)
    assert [r["k"] for r in rows] == list(range(2, 9))
    assert all(r["ones"] == r["k"] * (r["k"] + 1) // 2 for r in rows)
