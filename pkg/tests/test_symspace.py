import numpy as np
import pytest
from hypothesis import given, strategies as st

from polaract import symspace
from polaract.linalg import orthonormalize
from polaract.symspace import build_symmetric_pair, cartan_residuals, is_lie_triple, parse_space, space_rank

# (space, dim p, rank) from the type I formulas.
SPACES = [("AI:3", 5, 2), ("AII:3", 14, 2), ("AIII:2,3", 12, 2), ("BDI:2,5", 10, 2), ("CI:3", 12, 3),
          ("CII:1,2", 8, 1), ("DIII:4", 12, 2), ("DIII:5", 20, 2), ("G", 8, 2)]


@pytest.mark.parametrize("space,dim_p,rank", SPACES)
def test_pairs_match_table_formulas(space, dim_p, rank):
    pair = parse_space(space)
    assert pair.p.dim == dim_p
    assert space_rank(pair) == rank
    res = cartan_residuals(pair)
    assert max(res.values()) < 1e-8


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_space("XYZ:3")
    with pytest.raises(ValueError):
        build_symmetric_pair("BDI", 1, 1)


def test_maximal_abelian_is_flat_lie_triple():
    pair = parse_space("BDI:3,4")
    a = symspace.maximal_abelian(pair)
    assert a.dim == 3
    ok, res = is_lie_triple(a, pair)
    assert ok and res < 1e-10


def test_full_p_is_lie_triple_and_random_line_pair_is_not():
    pair = parse_space("AIII:2,2")
    assert is_lie_triple(pair.p, pair)[0]
    rng = np.random.default_rng(5)
    nu = orthonormalize(rng.standard_normal((2, pair.p.dim)) @ pair.p.basis)
    assert not is_lie_triple(nu, pair)[0]


@given(st.integers(0, 10_000))
def test_involution_is_automorphism(seed):
    pair = parse_space("CII:1,2")
    rng = np.random.default_rng(seed)
    x, y = (pair.g.element(rng.standard_normal(pair.g.dim)) for _ in range(2))
    lhs = pair.involution(x @ y - y @ x)
    X, Y = pair.involution(x), pair.involution(y)
    assert np.abs(lhs - (X @ Y - Y @ X)).max() < 1e-10


def test_section_bound_and_catalog():
    assert symspace.section_dim_bound(parse_space("BDI:2,5")) == 3 + 1 + 2
    cat = symspace.catalog(8)
    assert "G" in cat and "BDI:1,2" in cat
    assert all(symspace.ambient_of(s) <= 8 for s in cat)
