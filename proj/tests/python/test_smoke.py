import json

import pytest

import torsionlab as tl


def test_catalan_lattices():
    assert [tl.catalan_number(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert len(tl.dyck_lattice(4)) == 14
    assert len(tl.tamari_lattice(4)) == 14
    assert sorted(tl.dyck_paths(2)) == ["UDUD", "UUDD"]
    assert tl.is_distributive(tl.dyck_lattice(4))
    assert not tl.is_distributive(tl.tamari_lattice(4))
    assert tl.is_congruence_uniform(tl.tamari_lattice(4))


def test_posets_and_ideals():
    p = tl.interval_poset(3)
    assert len(p) == 6
    assert len(tl.order_ideals(p)) == 14
    assert len(tl.order_ideals(tl.opposite(p))) == 14
    with pytest.raises(ValueError):
        tl.Poset.from_relation(["a", "b"], [(0, 1), (1, 0)])


def test_congruences():
    con, blocks = tl.congruence_lattice(tl.tamari_lattice(4))
    assert len(con) == 14 == len(blocks)
    assert tl.lattice_isomorphic(con, tl.ideal_lattice(tl.forcing_poset(tl.tamari_lattice(4))))


def test_example_algebra():
    a = tl.example_algebra()
    assert a.dimension() == 5
    assert tl.global_dimension(a) == (2, False)
    assert a.projective(1).dims == [1, 2]
    assert tl.isomorphic(a, a.projective(1), a.injective(1))
    mods = tl.indecomposables(a)
    assert len(mods) == 5
    assert sorted(tl.describe(a, m) for m in mods) == ["I1", "P1", "P2", "S1", "S2"]
    s1, s2 = a.simple(0), a.simple(1)
    assert tl.ext_dim(a, s1, s2, 1) == tl.ext_dim_injective(a, s1, s2, 1)


def test_torsion_pairs():
    c = tl.Catalog(tl.example_algebra())
    t = tl.enumerate_torsion_pairs(c)
    assert len(t) == 6
    omega = [p for p in t.pairs if tl.is_omega_n(c, p, 1)]
    omega2 = [p for p in t.pairs if tl.is_omega_n(c, p, 2, "syzygy")]
    assert len(omega) == 2
    assert len(omega2) == 4
    doc = json.loads(tl.torsion_lattice_to_json(c, t))
    assert doc["count"] == 6

    c2 = tl.Catalog(tl.incidence_algebra(tl.interval_poset(2)))
    assert len(tl.enumerate_torsion_pairs(c2)) == 14


def test_budget():
    c = tl.Catalog(tl.algebra_from_spec("int:3"))
    with pytest.raises(tl.BudgetExceeded):
        tl.enumerate_torsion_pairs(c, cap=50)


def test_omega_lattices():
    sizes = [len(tl.omega_lattice_via_simples(tl.incidence_algebra(tl.opposite(tl.interval_poset(n)))))
             for n in (2, 3, 4)]
    assert sizes == [5, 14, 42]
    assert len(tl.verify_theorem_1(5)) == 42


def test_json_round_trip():
    a = tl.example_algebra(3)
    b = tl.algebra_from_json(a.to_json())
    assert b.prime == 3 and b.dimension() == 5
    m = a.projective(1)
    assert a.module_from_json(a.module_to_json(m)) == m
    with pytest.raises(tl.ParseError):
        tl.algebra_from_json('{"vertices": ["1"]}')
