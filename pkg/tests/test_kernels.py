import pytest

from planar2tree import kernels, _pykernels


def test_python_always_available():
    assert "python" in kernels.available()
    assert kernels.select("python") is _pykernels


def test_select_errors():
    with pytest.raises(ValueError):
        kernels.select("fortran")
    if kernels.compiled is not None:
        with pytest.raises(ValueError):
            kernels.select("compiled", 65)


def test_auto_selection(monkeypatch):
    auto = kernels.select(None, 10)
    assert auto.IMPLEMENTATION == ("compiled" if kernels.compiled is not None else "python")
    assert kernels.select(None, 100) is _pykernels
    monkeypatch.setenv("PLANAR2TREE_PURE", "1")
    assert kernels.select(None, 10) is _pykernels


def test_gosper_enumerates_fixed_popcount():
    got = list(_pykernels._same_popcount(6, 3))
    assert len(got) == 20 and len(set(got)) == 20
    assert all(bin(x).count("1") == 3 for x in got) and got == sorted(got)
