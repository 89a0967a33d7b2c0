import pytest

from growthlab import lenfun as lf
from growthlab import seqgen as sg


def test_count_two_by_hand():
    s = sg.build_seq(2)
    assert s.a == (1, 33)
    # n_2 = 1 * max(ceil(1*33/1) + 1, max(33, 33^2) + 1) = 1090
    assert s.n == (1, 1090)


@pytest.mark.parametrize("count,sur", [(4, "poly"), (5, "poly"), (5, "none")])
def test_invariants_rechecked(count, sur):
    s = sg.build_seq(count, sur)
    assert sg.verify_seq(s) == []
    for i in range(1, count):
        assert s.a[i] == 2 ** (i + 4) * s.n[i - 1] + 1
        assert s.n[i] % s.n[i - 1] == 0
        assert s.n[i] > s.a[i] ** min(i + 1, 1)  # dominates g_1(a_i) = a_i
    if sur == "poly":
        for i in range(1, count):
            assert s.n[i] > max(s.a[i] ** j for j in range(1, i + 2))


def test_custom_surrogate_and_errors():
    s = sg.build_seq(3, lambda j, x: 3 * x + j, surrogate_id="affine")
    assert s.surrogate == "affine" and sg.verify_seq(s) == []
    with pytest.raises(ValueError):
        sg.build_seq(1)
    with pytest.raises(ValueError):
        sg.build_seq(3, "nope")
    with pytest.raises(ValueError):
        sg.build_seq(3, lambda j, x: 1 // 0)


def test_verify_catches_broken_sequence():
    bad = sg.SeqPair((1, 33, 40), (1, 1090, 2000))
    assert sg.verify_seq(bad)


def test_json_round_trip():
    s = sg.build_seq(4)
    back = sg.SeqPair.from_json(s.to_json())
    assert back == s
    assert '"surrogate": "poly"' in s.to_json()


def test_fpt_examples():
    s = sg.build_seq(4)
    rep = sg.fpt_upper_bound_check(s, [5, 32, 33, 500, s.a[2], 3 * s.a[2]])
    status = {row["r"]: row["status"] for row in rep["rows"]}
    assert status[5] == status[32] == "skipped"
    assert rep["ok"]
    assert [row["j"] for row in rep["rows"]] == [2, 2, 3, 3, 4, 4]


def test_fpt_counts_match_dijkstra():
    s = sg.build_seq(3)
    sol = lf.signed_sum_solve(s.system(), 30_000)
    t = sol.table()
    rs = [33, 40, t.complete_up_to]
    a = sg.fpt_upper_bound_check(s, rs)
    b = sg.fpt_upper_bound_check(s, rs, l=t)
    assert [r["count"] for r in a["rows"]] == [r["count"] for r in b["rows"]]


def test_fpt_negative_control():
    s = sg.build_seq(4)
    corrupt = lf.LengthTable.from_values([0] + [1] * 5000, complete_up_to=40)
    rep = sg.fpt_upper_bound_check(s, [33, 40], l=corrupt)
    assert not rep["ok"]


def test_fpt_beyond_sequence_is_an_error():
    s = sg.build_seq(2)
    with pytest.raises(lf.IncompleteTabulation):
        sg.fpt_upper_bound_check(s, [s.next_a])


def test_minimal_representations():
    s = sg.build_seq(3)
    rep = sg.minimal_representation_properties(s, range(0, 201))
    assert rep["ok"] and rep["checked"] == 201
    sol = lf.signed_sum_solve(s.system(), s.n[1])
    k = sol.representation(s.n[1])
    assert k == (0, 1, 0) and k[1] < s.n[2] // s.n[1]
    assert sol.representation(0) == (0, 0, 0)


def test_box_i2():
    s = sg.build_seq(4)
    rep = sg.coefficient_box_count(s, 2)
    assert rep["counts"] == [364, 12]
    assert rep["distinct"] and rep["within_r"] and rep["size_exceeds_bound"] and rep["ok"]


def test_box_i3_size_and_too_large():
    s = sg.build_seq(4)
    rep = sg.coefficient_box_count(s, 3, enumerate_box=False)
    assert rep["size_exceeds_bound"]
    with pytest.raises(sg.BoxTooLarge):
        sg.coefficient_box_count(s, 3)


def test_box_degenerate_single_term():
    s = sg.SeqPair((1,), (1,), "custom")
    rep = sg.coefficient_box_count(s, 1)
    assert rep["counts"] == [1] and rep["distinct"]


def test_box_below_count_below_fpt():
    s = sg.build_seq(4)
    r = s.n[1]
    box = sg.coefficient_box_count(s, 2)
    count = lf.signed_sum_level_set(s.system(), r)[0]
    assert box["size"] <= count <= r * r  # j = 3 here, so the bound is r^2 / a_1


def test_distortion_witness():
    s = sg.build_seq(4)
    rows = sg.distortion_witness(s)
    assert all(row["ok"] for row in rows)
    assert [row["exact"] for row in rows] == [True, True, True, False]
    assert rows[2]["d"] >= s.n[2]
