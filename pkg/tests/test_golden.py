from m5index.golden import RECIPES, check_golden, load_golden, write_golden


def test_stored_golden_series_are_reproduced():
    rows = check_golden()
    assert [r[0] for r in rows] == sorted(RECIPES)
    for name, same, stored, fresh in rows:
        assert same, name


def test_write_then_load(tmp_path):
    paths = write_golden(str(tmp_path))
    assert len(paths) == len(RECIPES)
    assert load_golden("chi_gl2_q3", str(tmp_path)) == load_golden("chi_gl2_q3")


def test_golden_sugra_leading_terms():
    s = load_golden("chi_sugra_q4")
    assert s.order2 == 8
    assert s[(0, 0, 1, 2)] == 1  # y q
