import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grs import _kernels_py as pure
from grs import kernels

compiled = pytest.importorskip("grs._kernels")

exps = st.integers(-4, 4)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)
polys = st.dictionaries(st.tuples(exps, exps), coeffs, max_size=3)


@st.composite
def monos(draw):
    k, l = draw(st.sampled_from([(0, 0), (1, 0), (2, 0), (0, 1), (0, 2)]))
    return (k, l, draw(st.integers(-2, 2)), draw(st.integers(0, 2)), draw(st.integers(0, 2)), draw(st.integers(-1, 1)))


elems = st.dictionaries(monos(), polys.filter(bool), max_size=3)
tensors = st.dictionaries(st.tuples(monos(), monos()), polys.filter(bool), max_size=2)


def _norm(pairs):
    return dict(pairs)


def test_selected_implementation():
    assert kernels.IMPLEMENTATION == ("python" if os.environ.get("GRS_PURE_PYTHON") else "cython")
    assert compiled.IMPLEMENTATION == "cython" and pure.IMPLEMENTATION == "python"


def test_environment_forces_fallback():
    env = dict(os.environ, GRS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from grs import kernels; print(kernels.IMPLEMENTATION)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"


def test_da_product():
    # d * a = Det + r b c, r stored with doubled exponent
    want = {(0, 0, 0, 0, 0, 1): {(0, 0): 1}, (0, 0, 0, 1, 1, 0): {(2, 0): 1}}
    for impl in (pure, compiled):
        impl.clear_cache()
        assert _norm(impl.mono_mul((0, 1, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0))) == want


@given(polys, polys, coeffs)
def test_poly_parity(p, q, k):
    assert compiled.poly_add(p, q, k) == pure.poly_add(p, q, k)
    assert compiled.poly_mul(p, q) == pure.poly_mul(p, q)
    assert compiled.poly_iadd(dict(p), q) == pure.poly_iadd(dict(p), q)


@given(monos(), monos())
def test_mono_parity(x, y):
    assert _norm(compiled.mono_mul(x, y)) == _norm(pure.mono_mul(x, y))


@given(elems, elems)
def test_elem_parity(x, y):
    assert compiled.elem_mul(x, y) == pure.elem_mul(x, y)


@given(tensors, tensors)
def test_tensor_parity(x, y):
    assert compiled.tensor_mul(x, y) == pure.tensor_mul(x, y)


def test_no_zero_coefficients_survive():
    p = {(0, 0): Fraction(1)}
    assert pure.poly_add(p, p, -1) == {} == compiled.poly_add(p, p, -1)
