import pytest

from coprimax.scanner import h_density, scan_H, scan_records


def test_known_hits():
    assert [r.t for r in scan_H(300)] == [209]
    assert [r.t for r in scan_H(2000)] == [209, 1823]
    assert scan_H(100) == []


def test_density():
    assert h_density(2000) == (2, 2000, 0.001)
    assert h_density(100) == (0, 100, 0.0)
    assert h_density(250) == (1, 250, 0.004)


def test_hits_satisfy_exact_inequalities():
    for r in scan_H(2000):
        assert r.p_t7 * r.p_t8 < r.p_t * r.p_t9
        assert r.p_t9 < r.p_t * r.p_t
        assert r.holds


def test_prefix_monotone():
    long = [r.t for r in scan_H(2000)]
    for t_max in (1, 150, 209, 210, 1000, 1822, 1823):
        prefix = [r.t for r in scan_H(t_max)]
        assert prefix == [t for t in long if t <= t_max]


def test_records_cover_every_t():
    records = scan_records(50)
    assert [r.t for r in records] == list(range(1, 51))
    assert records[0].p_t == 2


def test_rejects_bad_t_max():
    with pytest.raises(ValueError):
        scan_H(0)
