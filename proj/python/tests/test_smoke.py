import orbitcy


def test_catalog_lists_exceptional_presets():
    names = orbitcy.catalog()
    assert "E7t5" in names and "E8t8" in names


def test_counts_for_e7t5():
    c = orbitcy.Category("E7t5")
    assert len(c) == 35
    assert len(c.rigids()) == 5
    mr = c.maximal_rigids()
    assert len(mr) == 5
    assert not any(ct for _, ct in mr)


def test_serre_duality_on_a_preset():
    c = orbitcy.Category("A(2,1)")
    for x in range(len(c)):
        for y in range(len(c)):
            assert c.hom_dim(x, y, 1) == c.hom_dim(y, x, 1)


def test_endo_presentation_is_a_dict():
    c = orbitcy.Category("E7t2")
    objects, _ = c.maximal_rigids()[0]
    p = orbitcy.endo("E7t2", objects)
    assert isinstance(p, dict)


def test_compare_and_tables():
    rep = orbitcy.compare("D4tphi", "E7t2")
    assert rep["supports_equivalence"] is True
    tables = orbitcy.verify_tables(n=2, t=2, k=2)
    assert tables["all_pass"] is True


def test_gorenstein_demo():
    demo = orbitcy.gorenstein_demo()
    assert demo["pass"]
    assert any("NOT 2-CY-tilted" in line for line in demo["lines"])
