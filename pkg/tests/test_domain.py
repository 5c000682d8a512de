import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mlradii.domain import (
    PlanePoint,
    Transform,
    WiStatus,
    apply_transform,
    in_wa,
    in_wb,
    in_Wi,
    in_wi,
    replay,
    wb_beta_intervals,
    wi_status_for,
)
from mlradii.errors import DomainError, InvalidQuery


def test_plane_point_validation():
    with pytest.raises(DomainError):
        PlanePoint(1.0, 1.0)
    with pytest.raises(DomainError):
        PlanePoint(0.5, 0.0)
    assert PlanePoint.from_alpha(4, 1).x == 0.25


def test_apply_transform_examples():
    a = apply_transform("A", PlanePoint(1 / 3, 0.75))
    assert (a.x, a.beta) == pytest.approx((1 / 6, 0.75))
    b = apply_transform(Transform.B, PlanePoint(0.45, 1.0))
    assert (b.x, b.beta) == pytest.approx((0.225, 1 / 0.45 + 1))
    c = apply_transform("C", PlanePoint(0.3, 0.8))
    assert (c.x, c.beta) == (0.3, 0.8)
    c2 = apply_transform("C", PlanePoint(0.3, 1.8))
    assert c2.beta == pytest.approx(0.8)


@pytest.mark.parametrize("x, beta, expected", [(0.6, 0.8, True), (0.6, 1.2, False), (0.4, 0.9, False),
                                               (0.6, 0.7, True), (0.6, 2.0, True), (0.6, 2.01, False)])
def test_in_wa(x, beta, expected):
    assert in_wa(PlanePoint(x, beta)) is expected


def test_wb_intervals_examples():
    iv = wb_beta_intervals(1 / 3)
    for lo, hi in [(0.5, 1), (1.5, 2), (2, 2.5), (3, 3.5)]:
        assert any(a - 1e-12 <= lo and hi <= b + 1e-12 for a, b in iv)
    assert wb_beta_intervals(0.45)[0] == pytest.approx((1 / 0.9 - 1, 1))
    lows = [lo for lo, _ in wb_beta_intervals(0.26)]
    assert lows[0] == pytest.approx(1 / 0.52 - 1)
    for bad in (0.25, 0.5, 0.1):
        with pytest.raises(DomainError):
            wb_beta_intervals(bad)


def test_wb_intervals_sorted_disjoint():
    for y in (0.26, 0.3, 1 / 3, 0.4, 0.49):
        iv = wb_beta_intervals(y)
        assert all(lo <= hi for lo, hi in iv)
        assert all(a[1] < b[0] for a, b in zip(iv, iv[1:]))


def test_in_wi_examples():
    v = in_wi(PlanePoint(1 / 3, 0.75))
    assert v.status is WiStatus.Member and v.witness == ()
    v = in_wi(PlanePoint(1 / 6, 0.75))
    assert v.status is WiStatus.Member
    assert v.witness == (Transform.A,)
    assert (v.seed.x, v.seed.beta) == pytest.approx((1 / 3, 0.75))
    assert in_wi(PlanePoint(0.6, 1.0)).status is WiStatus.NonMember
    assert in_Wi is in_wi


def test_c_witness():
    v = in_wi(PlanePoint(1 / 3, 0.1))
    assert v.status is WiStatus.Member
    assert v.witness == (Transform.C, Transform.C)
    assert v.seed.beta == pytest.approx(2.1)


def test_boundary_cases():
    assert in_wi(PlanePoint(0.5, 2.0)).status is WiStatus.Boundary
    assert in_wi(PlanePoint(0.25, 0.9)).status is WiStatus.Boundary
    # top end of the highest interval at y = 1/3; C only moves seeds upward
    assert in_wi(PlanePoint(1 / 3, 3.5)).status is WiStatus.Boundary
    # 1.0 ends [0.5, 1] but is interior to [1.5, 2.5] after one C
    assert in_wi(PlanePoint(1 / 3, 1.0)).witness == (Transform.C,)


def test_wi_status_for_alpha_le_one():
    assert wi_status_for(1.0, 1.0).status is WiStatus.NonMember
    assert wi_status_for(3.0, 0.75).status is WiStatus.Member


def test_replay_only_for_members():
    with pytest.raises(InvalidQuery):
        in_wi(PlanePoint(0.6, 1.0)).replay()


def test_eps_dom_validation():
    with pytest.raises(DomainError):
        in_wi(PlanePoint(0.3, 1.0), eps_dom=0.0)


def test_shortest_witness_prefers_fewer_c():
    v = in_wi(PlanePoint(1 / 3, 2.25))
    assert v.status is WiStatus.Member and v.witness == ()


points = st.tuples(st.floats(0.02, 0.49), st.floats(0.01, 12.0))


@given(points)
@settings(max_examples=300, deadline=None)
def test_witness_soundness(pt):
    x, beta = pt
    v = in_wi(PlanePoint(x, beta))
    if v.status is WiStatus.Member:
        q = v.replay()
        assert abs(q.x - x) <= 1e-12 and abs(q.beta - beta) <= 1e-12
        assert in_wb(v.seed)
        assert x < 0.5 - 1e-9


@given(points, st.sampled_from(list(Transform)))
@settings(max_examples=300, deadline=None)
def test_forward_closure(pt, t):
    x, beta = pt
    v = in_wi(PlanePoint(x, beta))
    assume(v.status is WiStatus.Member)
    q = apply_transform(t, PlanePoint(x, beta))
    assume(q.x > 1e-6)
    assert in_wi(q).status is WiStatus.Member


@given(points)
@settings(max_examples=100, deadline=None)
def test_determinism(pt):
    p = PlanePoint(*pt)
    assert in_wi(p) == in_wi(p)


def test_replay_function():
    seed = PlanePoint(1 / 3, 0.75)
    q = replay(seed, ("B", "A", "C"))
    assert q.x == pytest.approx(1 / 12)
    assert q.beta == pytest.approx(0.75 + 3 - 1)
