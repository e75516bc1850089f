import pytest
from hypothesis import given, strategies as st

from polaract import rootsys
from polaract.rootsys import borel_de_siebenthal, build_root_system, weyl_dimension

SYSTEMS = [("A", 2), ("A", 5), ("B", 3), ("B", 4), ("C", 3), ("D", 4), ("D", 5), ("E", 6), ("E", 7),
           ("E", 8), ("F", 4), ("G", 2)]
ALG_DIMS = {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}


@pytest.mark.parametrize("typ,rank", SYSTEMS)
def test_root_counts_and_adjoint_dimension(typ, rank):
    sys_ = build_root_system(typ, rank)
    assert len(sys_.roots) == rootsys.expected_root_count(typ, rank)
    assert all(tuple(-x for x in r) in sys_.index for r in sys_.roots)
    dim_g = ALG_DIMS.get((typ, rank), len(sys_.roots) + rank)
    assert len(sys_.roots) + rank == dim_g
    assert weyl_dimension(typ, rank, rootsys.highest_root_weight(sys_)) == dim_g
    assert weyl_dimension(typ, rank, [0] * rank) == 1


@pytest.mark.parametrize("typ,rank", SYSTEMS)
def test_bds_subsets_closed_and_symmetric(typ, rank):
    sys_ = build_root_system(typ, rank)
    for v in range(rank + 1):
        s = borel_de_siebenthal(sys_, v)
        assert s.is_closed() and s.is_symmetric()
        assert s.rank() == rank


def test_marks():
    assert build_root_system("E", 6).marks() == (1, 2, 3, 2, 1, 2)
    assert build_root_system("E", 8).marks() == (2, 3, 4, 5, 6, 4, 2, 3)


def test_bds_enumerations():
    f4 = build_root_system("F", 4)
    assert sorted(rootsys.maximal_rank_subsystems(f4)) == ["A2+A2", "B4", "C3+A1"]
    assert sorted(rootsys.maximal_rank_subsystems(build_root_system("G", 2))) == ["A1+A1", "A2"]
    assert borel_de_siebenthal(build_root_system("E", 6), 3).label == "A2+A2+A2"
    assert borel_de_siebenthal(f4, 0).label == "F4"
    with pytest.raises(ValueError):
        borel_de_siebenthal(f4, 5)


@pytest.mark.parametrize("typ,rank,weight,degree", [
    ("A", 2, (1, 1), 8), ("B", 3, (0, 0, 1), 8), ("B", 4, (0, 0, 0, 1), 16), ("C", 3, (0, 1, 0), 14),
    ("F", 4, (1, 0, 0, 0), 26), ("G", 2, (1, 0), 7), ("D", 4, (0, 0, 1, 0), 8), ("E", 6, (1, 0, 0, 0, 0, 0), 27),
    ("E", 7, (0, 0, 0, 0, 0, 1, 0), 56),
])
def test_weyl_dimensions(typ, rank, weight, degree):
    assert weyl_dimension(typ, rank, weight) == degree


@given(st.integers(1, 6), st.lists(st.integers(0, 3), min_size=2, max_size=2))
def test_weyl_dimension_of_sl3_matches_closed_form(n, w):
    a, b = w
    assert weyl_dimension("A", 2, (a, b)) == (a + 1) * (b + 1) * (a + b + 2) // 2


def test_maximal_rank_slices():
    e6 = build_root_system("E", 6)
    s = rootsys.find_subsystem(e6, "A5+A1")
    s2 = rootsys.relative_position(e6, s, rootsys.find_subsystem(e6, "D5+T1"))
    assert (len(s), len(s2)) == (32, 40)
    iso, sl = rootsys.maximal_rank_slice(e6, s, s2)
    assert len(sl) == 16 and len(iso) + 6 == 22
    f4 = build_root_system("F", 4)
    b4 = rootsys.find_subsystem(f4, "B4")
    assert len(rootsys.maximal_rank_slice(f4, b4, b4)[1]) == 16
    full = rootsys.make_subset(f4, f4.roots)
    assert len(rootsys.maximal_rank_slice(f4, full, full)[1]) == 0


def test_invalid_inputs():
    with pytest.raises(ValueError):
        build_root_system("E", 5)
    with pytest.raises(ValueError):
        weyl_dimension("A", 2, (1,))
    e6, f4 = build_root_system("E", 6), build_root_system("F", 4)
    with pytest.raises(ValueError):
        rootsys.maximal_rank_slice(e6, rootsys.find_subsystem(f4, "B4"), rootsys.find_subsystem(f4, "B4"))
