import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from primdec.arith import totient
from primdec.errors import NotPrime, ToleranceExceeded, TooLarge
from primdec.field import (build_field, characteristic_profile,
                           characteristic_tolerance,
                           characteristic_via_characters, chi2_table,
                           is_primitive, primitive_set, quadratic_character)

import oracles
from conftest import field


def test_smallest_field():
    f = field(3)
    assert f.g == 2
    assert f.ind[1] == 0 and f.ind[2] == 1
    assert primitive_set(f).elements() == [2]


def test_p13_primitive_set_matches_printed_decomposition():
    # {0,5} + {2,6} sums to exactly these four residues
    assert primitive_set(field(13)).elements() == [2, 6, 7, 11]


def test_p19_primitive_set_matches_printed_decomposition():
    assert primitive_set(field(19)).elements() == [2, 3, 10, 13, 14, 15]


def test_build_rejects_non_primes():
    for bad in (25, 9, 2, 1, 0, -7, 91):
        with pytest.raises(NotPrime):
            build_field(bad)


def test_build_respects_cap(monkeypatch):
    with pytest.raises(TooLarge):
        build_field(1031, table_cap=1000)
    monkeypatch.setenv("PRIMDEC_TABLE_CAP", "100")
    with pytest.raises(TooLarge):
        build_field(101)
    assert build_field(97).p == 97


def test_index_table_is_a_discrete_log():
    for p in (5, 13, 19, 97):
        f = field(p)
        assert f.ind[1] == 0
        assert f.ind[f.g] == 1
        for x in range(1, p):
            assert pow(f.g, f.ind[x], p) == x


def test_generator_is_least_primitive_root():
    for p in (3, 5, 7, 13, 19, 41, 191):
        f = field(p)
        roots = oracles.brute_primitive_elements(p)
        assert f.g == min(roots)


@settings(max_examples=200)
@given(st.integers(1, 96), st.integers(1, 96))
def test_index_is_additive_on_products(x, y):
    f = field(97)
    assert f.ind[x * y % 97] == (f.ind[x] + f.ind[y]) % 96


def test_primitive_set_count_is_totient():
    for p in (3, 5, 7, 11, 13, 19, 31, 61, 97, 211):
        assert primitive_set(field(p)).count == totient(p - 1)


def test_primitive_set_matches_order_computation():
    for p in (5, 13, 19, 31):
        assert set(primitive_set(field(p)).elements()) == oracles.brute_primitive_elements(p)


def test_is_primitive_examples(f13):
    assert not is_primitive(f13, 1)
    assert is_primitive(f13, 2)
    assert not is_primitive(f13, 0)


def test_quadratic_character_examples(f13):
    assert quadratic_character(f13, 0) == 0
    assert quadratic_character(f13, 4) == 1
    for x in primitive_set(f13).elements():
        assert quadratic_character(f13, x) == -1


def test_quadratic_character_agrees_with_euler_criterion():
    for p in (3, 5, 13, 19, 61, 97):
        f = field(p)
        for x in range(p):
            assert quadratic_character(f, x) == oracles.euler_chi2(x, p)


def test_quadratic_character_is_balanced():
    for p in (13, 19, 61):
        t = chi2_table(field(p))
        assert t.count(1) == (p - 1) // 2
        assert t.count(-1) == (p - 1) // 2


def test_characteristic_examples(f13):
    one = characteristic_via_characters(f13, 2)
    zero = characteristic_via_characters(f13, 1)
    eps = characteristic_tolerance(f13)
    assert abs(one - 1) < eps
    assert abs(zero) < eps
    assert characteristic_via_characters(f13, 0) == 0


def test_characteristic_matches_index_test_everywhere_p31():
    f = field(31)
    eps = characteristic_tolerance(f)
    for x in range(1, 31):
        v = characteristic_via_characters(f, x)
        want = 1 if is_primitive(f, x) else 0
        assert abs(v - want) < eps


def test_characteristic_profile_matches_pointwise():
    f = field(31)
    prof = characteristic_profile(f)
    for x in range(31):
        assert prof[x] == pytest.approx(characteristic_via_characters(f, x), abs=1e-12)


def test_characteristic_rounds_to_indicator_for_many_primes():
    for p in (5, 7, 13, 19, 61, 97, 151):
        f = field(p)
        prof = characteristic_profile(f)
        eps = characteristic_tolerance(f)
        indicator = np.array([1 if is_primitive(f, x) else 0 for x in range(p)])
        assert np.max(np.abs(prof - indicator)) < eps


def test_tolerance_gate_fires_on_garbage(f13, monkeypatch):
    # sabotage one table entry and make sure the numeric gate notices
    from primdec import field as field_mod
    tables = field_mod._order_sum_tables(f13)
    broken = tuple((d, coef + (0.5 if d == 1 else 0.0), tab)
                   for d, coef, tab in tables)
    monkeypatch.setattr(field_mod, "_order_sum_tables", lambda _: broken)
    with pytest.raises(ToleranceExceeded):
        characteristic_via_characters(f13, 2)


def test_element_range_is_validated(f13):
    with pytest.raises(ValueError):
        is_primitive(f13, 13)
    with pytest.raises(ValueError):
        quadratic_character(f13, -1)
