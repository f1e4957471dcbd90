import pytest
from hypothesis import given
from hypothesis import strategies as st

from fano4.chow import LatticeMismatchError
from fano4.surfaces import (
    AdjunctionError,
    SurfaceData,
    del_pezzo,
    intersect,
    k3_sextic,
    quadric,
    surface_data,
)


def test_del_pezzo_preset():
    s = del_pezzo(2)
    assert s.lattice.names == ("h", "e1", "e2")
    assert intersect(s, s.K, s.K) == 7
    assert (s.chiO, s.h11, s.h20, s.b1) == (1, 3, 0, 0)
    p2 = del_pezzo(0)
    h = p2.cls({"h": 1})
    assert intersect(p2, h, h) == 1


@pytest.mark.parametrize("k", range(9))
def test_del_pezzo_degree(k):
    s = del_pezzo(k)
    assert intersect(s, s.K, s.K) == 9 - k


def test_k3_preset():
    s = k3_sextic(0)
    c = s.cls({"h": 5, "C0": -3})
    assert intersect(s, c, c) == 132
    assert s.K.is_zero()
    assert (s.chiO, s.h11, s.h20, s.b1) == (2, 20, 1, 0)


def test_quadric_preset():
    s = quadric()
    assert intersect(s, s.K, s.K) == 8
    h = s.cls({"f1": 1, "f2": 1})
    assert intersect(s, h, h) == 2
    assert intersect(s, s.K, h) == -4


def test_intersect_rejects_foreign_class():
    with pytest.raises(LatticeMismatchError):
        intersect(del_pezzo(1), k3_sextic(0).K, k3_sextic(0).K)


@given(st.integers(0, 8), st.data())
def test_intersect_symmetric_bilinear(k, data):
    s = del_pezzo(k)
    vec = st.lists(st.integers(-9, 9), min_size=k + 1, max_size=k + 1).map(s.cls)
    a, b, c = data.draw(vec), data.draw(vec), data.draw(vec)
    assert intersect(s, a, b) == intersect(s, b, a)
    assert intersect(s, a + c, b) == intersect(s, a, b) + intersect(s, c, b)
    assert intersect(s, 3 * a, b) == 3 * intersect(s, a, b)


def k3_pieces(r):
    s = k3_sextic(r)
    h = s.cls({"h": 1})
    nodes = s.lattice.total(f"C{i}" for i in range(r + 1))
    return s, -(5 * h - 3 * nodes), (2 * h - nodes, 3 * h - 2 * nodes)


@pytest.mark.parametrize("r", range(5))
def test_k3_normal_bundle(r):
    s, KW, pieces = k3_pieces(r)
    # K_S = 0, so the pieces add up to -K_W|S
    assert pieces[0] + pieces[1] == -KW
    data = surface_data(s, KW, normal_pieces=pieces)
    assert data == SurfaceData(0, 0, 132 - 18 * r, 32 - 4 * r, 2, 20, 1, 0)


def test_k3_c2_r0():
    s, KW, pieces = k3_pieces(0)
    assert surface_data(s, KW, normal_pieces=pieces).c2N == 32


def quadric_blowup(r):
    s = del_pezzo(r + 1, start=0)
    rest = s.lattice.total(f"e{i}" for i in range(2, r + 1))
    # H|S = 2h - e0 - e1, D1|S = h - e0 - e1, Di|S = ei for i >= 2, D0|S = 0
    minus_KW = 5 * s.cls({"h": 2, "e0": -1, "e1": -1}) - 3 * s.cls({"h": 1, "e0": -1, "e1": -1}) - 3 * rest
    pieces = (s.cls({"h": 1}) - rest, -s.K)
    return s, -minus_KW, pieces


@pytest.mark.parametrize("r", [1, 2])
def test_quadric_family_adjunction(r):
    s, KW, pieces = quadric_blowup(r)
    residual = pieces[0] + pieces[1] - (s.K - KW)
    assert residual.is_zero()
    data = surface_data(s, KW, normal_pieces=pieces)
    assert data.c2N == 4 - r
    assert (data.KS2, data.KS_dot_KW, data.KW2) == (8 - r, 20 - 3 * r, 50 - 9 * r)


def test_quadric_family_r2_c2():
    s, KW, pieces = quadric_blowup(2)
    assert surface_data(s, KW, normal_pieces=pieces).c2N == 2


def test_adjunction_failure_reports_residual():
    s = del_pezzo(1)
    h = s.cls({"h": 1})
    with pytest.raises(AdjunctionError) as info:
        surface_data(s, s.lattice.zero(), normal_pieces=(h, h))
    # h + h - K = 5h - e1
    assert info.value.residual == s.cls({"h": 5, "e1": -1})


def test_surface_data_needs_c2_source():
    s = del_pezzo(1)
    with pytest.raises(ValueError):
        surface_data(s, s.K)
    with pytest.raises(ValueError):
        surface_data(s, s.K, normal_pieces=(s.K, s.K), c2N=3)


def test_surface_data_rejects_negative_hodge():
    with pytest.raises(ValueError):
        SurfaceData(0, 0, 0, 0, 1, -1, 0, 0)
    with pytest.raises(TypeError):
        SurfaceData(0, 0, 0.5, 0, 1, 1, 0, 0)


def test_gram_must_be_symmetric():
    from fano4.chow import Lattice
    from fano4.surfaces import SurfaceModel

    lat = Lattice("bad", ("a", "b"))
    with pytest.raises(ValueError):
        SurfaceModel(lat, ((0, 1), (2, 0)), lat.zero(), 1, 2, 0, 0)
