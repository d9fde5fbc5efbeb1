import pytest

import ekrwords as ekr


def test_bounds_and_star_counts():
    assert ekr.max_bound(3, 4) == 27
    assert ekr.max_bound(2, 5) == 16
    assert ekr.count_stars(3, 4) == 12
    assert ekr.count_stars(2, 4) == 8


def test_star_classification_round_trip():
    spec = ekr.StarSpec(position=3, letter=0)
    family = ekr.star(2, 3, spec)
    assert len(family) == 4
    assert family.words() == ["000", "010", "100", "110"]
    back = ekr.classify_star(family)
    assert back == spec


def test_intersection_predicates():
    even = ekr.Family(2, 3, ["000", "011", "101", "110"])
    assert ekr.is_intersecting(even)
    assert ekr.is_r_wise_intersecting(even, 2)
    assert not ekr.is_r_wise_intersecting(even, 3)
    assert ekr.classify_star(even) is None

    x = ekr.Word.parse(2, "0000")
    y = ekr.Word.parse(2, "1110")
    assert ekr.intersects(x, y)
    assert ekr.common_position([x, y]) == 4


def test_family_text_round_trip():
    family = ekr.read_family_text("# comment\n2 3\n000\n010\n100\n110\n")
    assert ekr.classify_star(family) == ekr.StarSpec(3, 0)
    text = ekr.family_to_text(family)
    assert ekr.read_family_text(text) == family


def test_partition_devices():
    cells = ekr.coset_cells(3, 2)
    assert len(cells) == 3
    assert [str(w) for w in cells[1].members] == ["01", "12", "20"]

    pairs = ekr.complementary_pairs(3)
    assert len(pairs) == 4
    chosen = [p.low for p in pairs]
    family = ekr.family_from_selection(chosen)
    assert ekr.is_intersecting(family)
    assert sorted(map(str, ekr.selection_from_family(family))) == sorted(map(str, chosen))


def test_enumeration_counts():
    assert ekr.enumerate_max_intersecting(2, 3).count == 16
    assert ekr.enumerate_max_rwise(2, 4, 3).count == 8
    best = ekr.max_family_size(3, 3, 2)
    assert best.size == 9
    assert ekr.is_intersecting(best.witness)

    nonstar = ekr.first_nonstar_max(2, 3, 2)
    assert nonstar is not None
    assert ekr.classify_star(nonstar) is None
    assert ekr.first_nonstar_max(3, 3, 2) is None


def test_theorem_certificates():
    thm3 = ekr.theorem3_certificate(4)
    assert thm3.all_stars
    assert thm3.num_extremal_families == 8
    assert ekr.conclusion_holds(thm3)

    thm2_fail = ekr.theorem2_certificate(2, 3)
    assert not thm2_fail.all_stars
    assert not ekr.conclusion_holds(thm2_fail)
    assert ["000", "011", "101", "110"] in [f.words() for f in thm2_fail.families]

    text = thm3.to_text()
    assert ekr.certificate_from_text(text).to_text() == text
    assert ekr.revalidate(thm3)


def test_claim2_and_double_count():
    family = ekr.star(3, 2, ekr.StarSpec(2, 1))
    case = ekr.claim2_analyze(family, ekr.Word.parse(3, "0"))
    assert case.classification == ekr.Claim2Kind.CommonSingleton
    assert case.sum == 3

    report = ekr.double_count_check(family)
    assert report.passed
    assert report.metrics["double_sum"] == 9
    assert report.metrics["maximal"] == 1


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        ekr.max_bound(1, 3)
    with pytest.raises(ValueError):
        ekr.Word.parse(2, "012")
    with pytest.raises(ValueError):
        ekr.read_family_text("2 2\n01\n01\n")
