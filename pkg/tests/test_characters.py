from concurrent.futures import ThreadPoolExecutor

import pytest

from kronstab import _kernels
from kronstab.characters import (
    CharacterCache,
    character,
    class_sizes,
    dimension,
    sign,
    z,
)
from kronstab.partitions import partitions_of, transpose
from oracles import character as oracle_character

BACKENDS = _kernels.available_backends()


@pytest.fixture(params=BACKENDS)
def cache(request):
    return CharacterCache(backend=request.param)


def test_examples(cache):
    for rho in partitions_of(5):
        assert cache.character((5,), rho) == 1
        assert cache.character((1,) * 5, rho) == sign(rho) == (-1) ** (5 - len(rho))
    assert cache.character((2, 1), (1, 1, 1)) == 2


def test_z_values():
    assert z((1, 1, 1)) == 6
    assert z((3,)) == 3
    assert z((2, 1)) == 2
    assert z(()) == 1
    assert sum(class_sizes(6)) == 720


def test_weight_mismatch(cache):
    with pytest.raises(ValueError):
        cache.character((2, 1), (2,))


@pytest.mark.parametrize("n", range(0, 7))
def test_matches_determinant_oracle(cache, n):
    for lam in partitions_of(n):
        for rho in partitions_of(n):
            assert cache.character(lam, rho) == oracle_character(lam, rho), (lam, rho)


@pytest.mark.parametrize("n", range(1, 9))
def test_column_orthogonality(cache, n):
    shapes = partitions_of(n)
    rows = {lam: cache.row(lam) for lam in shapes}
    for a, rho in enumerate(shapes):
        for b, sigma in enumerate(shapes):
            total = sum(rows[lam][a] * rows[lam][b] for lam in shapes)
            assert total == (z(rho) if a == b else 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_conjugate_twists_by_sign(cache, n):
    for lam in partitions_of(n):
        for rho in partitions_of(n):
            assert cache.character(transpose(lam), rho) == sign(rho) * cache.character(lam, rho)


def test_identity_column_is_dimension(cache):
    for lam in partitions_of(9):
        d = cache.character(lam, (1,) * 9)
        assert d == dimension(lam) > 0


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernel not built")
def test_backends_agree():
    py, cy = CharacterCache("python"), CharacterCache("cython")
    for n in (10, 14):
        for lam in partitions_of(n)[::7]:
            assert py.row(lam) == cy.row(lam)


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernel not built")
def test_compiled_kernel_overflow_is_reported():
    lam = (9, 7, 6, 4, 3, 3, 2, 1, 1)
    with pytest.raises(OverflowError):
        _kernels.mn_cy.CharacterKernel(36).value(lam, (1,) * 36)
    assert _kernels.mn_py.CharacterKernel(36).value(lam, (1,) * 36) == dimension(lam) > 2**63


def test_cache_falls_back_on_overflow(monkeypatch):
    class Overflowing:
        def row(self, lam):
            raise OverflowError

    real = _kernels.make_kernel

    def fake(n, backend=None):
        return real(n, "python") if backend == "python" else Overflowing()

    monkeypatch.setattr(_kernels, "make_kernel", fake)
    cache = CharacterCache()
    assert cache.character((2, 1), (1, 1, 1)) == 2
    with pytest.raises(OverflowError):
        CharacterCache(backend="cython").row((2, 1))


def test_module_level_character():
    assert character((3, 1), (2, 2)) == -1
    assert character((), ()) == 1


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.make_kernel(3, "fortran")


def test_concurrent_rows_are_deterministic():
    shapes = partitions_of(12)
    serial = [CharacterCache().row(lam) for lam in shapes]
    shared = CharacterCache()
    with ThreadPoolExecutor(max_workers=8) as pool:
        threaded = list(pool.map(shared.row, shapes))
    assert threaded == serial
    assert len(shared) == len(shapes)
