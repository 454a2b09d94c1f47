import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from hopnorms.bell import bell_polynomial, unweighted_norm_bell
from hopnorms.errors import DomainError
from hopnorms.families import hermite, laguerre, norm_constant_log
from hopnorms.norms import unweighted_norm_quad

from .helpers import FAMILY_CONFIGS


def bell_by_enumeration(m, l, args):
    """Direct sum over partitions: j_1+...+j_k = l, j_1+2j_2+...+k j_k = m."""
    k = m - l + 1
    total = 0.0
    for js in itertools.product(range(l + 1), repeat=k):
        if sum(js) != l or sum((i + 1) * j for i, j in enumerate(js)) != m:
            continue
        term = math.factorial(m)
        for i, j in enumerate(js):
            term /= math.factorial(j)
            term *= (args[i] / math.factorial(i + 1)) ** j
        total += term
    return total


def test_bell_base_cases():
    # B_{m,1}(c_1..c_m) = c_m
    assert bell_polynomial(5, 1, [1.0, 2.0, 3.0, 4.0, 7.0]) == 7.0
    # B_{2,2}(c_1) = c_1^2
    assert bell_polynomial(2, 2, [3.0]) == 9.0
    # B_{3,2}(c_1, c_2) = 3 c_1 c_2
    assert bell_polynomial(3, 2, [2.0, 5.0]) == 30.0
    # B_{4,2}(c_1, c_2, c_3) = 3 c_2^2 + 4 c_1 c_3
    assert bell_polynomial(4, 2, [1.0, 2.0, 3.0]) == 24.0


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=7), st.data())
def test_bell_matches_enumeration(m, data):
    l = data.draw(st.integers(min_value=1, max_value=m))
    args = data.draw(st.lists(st.floats(min_value=-3, max_value=3),
                              min_size=m - l + 1, max_size=m - l + 1))
    got = bell_polynomial(m, l, args)
    want = bell_by_enumeration(m, l, args)
    assert got == pytest.approx(want, rel=1e-10, abs=1e-9)


def test_bell_argument_validation():
    with pytest.raises(DomainError):
        bell_polynomial(3, 0, [1.0])
    with pytest.raises(DomainError):
        bell_polynomial(3, 4, [1.0])
    with pytest.raises(DomainError):
        bell_polynomial(3, 2, [1.0])  # needs 2 args


def test_norm_bell_examples():
    r = unweighted_norm_bell(hermite(), 1, 2)
    assert r.to_float() == pytest.approx(2.0 * math.sqrt(math.pi), rel=1e-12)
    assert r.method == "bell"
    r = unweighted_norm_bell(hermite(), 1, 4)
    assert r.to_float() == pytest.approx(12.0 * math.sqrt(math.pi), rel=1e-12)
    r = unweighted_norm_bell(laguerre(0.0), 1, 2)
    assert r.to_float() == pytest.approx(1.0, rel=1e-12)


def test_norm_bell_rejections():
    with pytest.raises(DomainError):
        unweighted_norm_bell(hermite(), 1, 3)
    with pytest.raises(DomainError):
        unweighted_norm_bell(hermite(), 1, 2.0)  # non-integer type
    with pytest.raises(DomainError):
        unweighted_norm_bell(hermite(), 61, 4)


def test_engine_equivalence():
    # bell vs quadrature within 1e-8 relative for q in {2,4}, n <= 6
    for fam in FAMILY_CONFIGS:
        for q in (2, 4):
            for n in (0, 1, 3, 6):
                b = unweighted_norm_bell(fam, n, q).value.log_abs
                g = unweighted_norm_quad(fam, n, float(q)).value.log_abs
                assert abs(b - g) < 1e-8, (fam.label(), n, q, b, g)


def test_norm_bell_q2_is_kappa():
    for fam in FAMILY_CONFIGS:
        for n in (0, 2, 5):
            r = unweighted_norm_bell(fam, n, 2)
            assert r.value.log_abs == pytest.approx(
                norm_constant_log(fam, n).log_abs, abs=1e-8)
