import numpy as np
import pytest

from chrelax.params import (
    ALPHA_CRITICAL,
    FieldState,
    Grid,
    ModelParams,
    cell_centers,
    new_state,
    zero_state,
)


def test_cell_centers_unit_interval():
    g = Grid(nx=2, xl=0.0, xr=1.0)
    assert np.allclose(cell_centers(g), [0.25, 0.75])


def test_cell_centers_symmetric_interval():
    g = Grid(nx=4, xl=-1.0, xr=1.0)
    assert np.allclose(cell_centers(g), [-0.75, -0.25, 0.25, 0.75])


def test_cell_centers_fine_grid_first_center():
    g = Grid(nx=60000, xl=0.0, xr=0.6)
    x = cell_centers(g)
    assert x[0] == pytest.approx(5.0e-6, rel=1e-12)


def test_cell_widths_sum_to_domain_length():
    g = Grid(nx=977, xl=-0.3, xr=2.7)
    assert 977 * g.dx == pytest.approx(3.0, abs=1e-15)


def test_grid_validation():
    with pytest.raises(ValueError):
        Grid(nx=10, xl=1.0, xr=0.0)
    with pytest.raises(ValueError):
        Grid(nx=10, xl=0.0, xr=1.0, ny=4, yl=1.0, yr=0.0)
    with pytest.raises(ValueError):
        Grid(nx=10, xl=0.0, xr=1.0, boundary="dirichlet")
    # geometry allows tiny grids; solvers enforce their stencil widths
    g = Grid(nx=4, xl=0.0, xr=1.0)
    with pytest.raises(ValueError, match="5 cells"):
        g.require_stencil_width(5)


def test_model_params_reject_inadmissible_alpha():
    with pytest.raises(ValueError):
        ModelParams(gamma=1e-3, alpha=0.5)
    # the critical value itself is admissible
    ModelParams(gamma=1e-3, alpha=ALPHA_CRITICAL)
    for bad in ({"gamma": -1.0}, {"beta": 0.0}, {"tau": -2.0}):
        with pytest.raises(ValueError):
            ModelParams(**{"gamma": 1e-3, **bad})


def test_new_state_zero_fields():
    g = Grid(nx=10, xl=0.0, xr=1.0)
    st = zero_state(g)
    assert st.time == 0.0
    assert st.c.shape == (10,)
    assert st.q.shape == (1, 10)


def test_new_state_shape_mismatch():
    g = Grid(nx=10, xl=0.0, xr=1.0)
    z = np.zeros(10)
    with pytest.raises(ValueError, match="shape"):
        new_state(g, np.zeros(9), z, z, np.zeros((1, 10)), np.zeros((1, 10)))


def test_new_state_rejects_nan():
    g = Grid(nx=10, xl=0.0, xr=1.0)
    z = np.zeros(10)
    bad = z.copy()
    bad[3] = np.nan
    with pytest.raises(ValueError, match="finite"):
        new_state(g, bad, z, z, np.zeros((1, 10)), np.zeros((1, 10)))


def test_pack_unpack_roundtrip():
    rng = np.random.default_rng(7)
    for shape, d in (((12,), 1), ((6, 5), 2)):
        st = FieldState(
            c=rng.standard_normal(shape),
            phi=rng.standard_normal(shape),
            w=rng.standard_normal(shape),
            q=rng.standard_normal((d,) + shape),
            p=rng.standard_normal((d,) + shape),
            time=0.3,
        )
        back = FieldState.unpack(st.pack(), time=st.time)
        assert np.array_equal(back.c, st.c)
        assert np.array_equal(back.q, st.q)
        assert np.array_equal(back.p, st.p)
        assert np.array_equal(back.phi, st.phi)
        assert back.time == st.time
