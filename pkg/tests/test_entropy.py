import math
import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from netentropy.entropy import (
    Distribution,
    conceptual_multiplier,
    eta,
    ideal_entropy,
    network_entropy,
    shannon_entropy,
    value_delta,
)
from netentropy.errors import (
    InvalidCoefficientError,
    InvalidCountError,
    InvalidDistributionError,
    InvalidLogBaseError,
    InvalidRateError,
    NegativeEntropyError,
)

counts = st.floats(1, 1e15)
bases = st.floats(1.05, 50)
coefficients = st.floats(0, 1)


def test_eta_three_generations():
    assert eta(27, 3) == 3.0


@pytest.mark.parametrize("L", [1.5, 2.49, math.e, 10])
def test_eta_single_node(L):
    assert eta(1, L) == 0.0


def test_eta_thesaurus_lexicon():
    g = eta(616000, 3.16)
    assert g == pytest.approx(11.586, abs=1e-3)
    assert 0.53 * g == pytest.approx(6.14, abs=0.01)


@pytest.mark.parametrize("L", [1, 0.5, 0, -2, math.inf])
def test_eta_invalid_base(L):
    with pytest.raises(InvalidLogBaseError):
        eta(10, L)


@pytest.mark.parametrize("n", [0, 0.5, -1, math.nan])
def test_eta_invalid_count(n):
    with pytest.raises(InvalidCountError):
        eta(n, 2)


@pytest.mark.parametrize("n,L,C,H", [
    (1e11, 2.49, 0.53, 14.71),
    (616000, 2.67, 0.437, 5.93),
    (350e6, 3.65, 0.79, 12.00),
])
def test_published_entropies(n, L, C, H):
    assert network_entropy(n, L, C).H == pytest.approx(H, abs=0.01)


def test_single_node_entropy():
    r = network_entropy(1, 2.5, 0.7)
    assert r.H == 0 and r.eta == 0 and r.H_ideal == 0


def test_report_fields():
    r = network_entropy(1000, 2.5, 0.4)
    assert r.eta == pytest.approx(math.log(1000) / math.log(2.5))
    assert r.H == 0.4 * r.eta
    assert r.H_ideal == math.log(1000)
    assert r.as_dict()["H"] == r.H


@pytest.mark.parametrize("C", [-0.1, 1.01])
def test_invalid_coefficient(C):
    with pytest.raises(InvalidCoefficientError):
        network_entropy(10, 2, C)


def test_complete_graph_base_rejected():
    with pytest.raises(InvalidLogBaseError, match="ln"):
        network_entropy(4, 1.0, 1.0)


@given(counts)
def test_ideal_network_is_ln_n(n):
    assert network_entropy(n, math.e, 1).H == pytest.approx(math.log(n), rel=1e-12, abs=1e-300)
    assert ideal_entropy(n) == math.log(n)


@given(counts, bases, coefficients)
def test_report_invariants(n, L, C):
    r = network_entropy(n, L, C)
    assert r.H == C * r.eta
    assert r.H <= r.eta
    assert r.H_ideal == pytest.approx(r.eta * math.log(L), rel=1e-12, abs=1e-300)
    if n > 1:
        assert r.eta > 0


@given(st.floats(2, 1e12), st.floats(1.001, 2), bases, st.floats(0.01, 1))
def test_monotone_in_n(n, factor, L, C):
    assert network_entropy(n * factor, L, C).H > network_entropy(n, L, C).H


@given(st.floats(2, 1e12), bases, st.floats(0.01, 0.99), st.floats(0.001, 0.5))
def test_monotone_in_c(n, L, C, dc):
    assert network_entropy(n, L, min(1.0, C + dc)).H > network_entropy(n, L, C).H


@given(st.floats(2, 1e12), bases, st.floats(1.001, 3), st.floats(0.01, 1))
def test_monotone_decreasing_in_l(n, L, factor, C):
    assert network_entropy(n, L * factor, C).H < network_entropy(n, L, C).H


def test_shannon_uniform_bits():
    assert shannon_entropy(Distribution.uniform(8), 2, 1) == pytest.approx(3.0, abs=1e-15)


@pytest.mark.parametrize("r,K", [(2, 1), (math.e, 3.5), (10, 0.2)])
def test_shannon_degenerate(r, K):
    assert shannon_entropy([1, 0, 0], r, K) == 0.0


@pytest.mark.parametrize("n,L,C", [(27, 3, 1.0), (1000, 2.49, 0.53), (616000, 2.67, 0.437)])
def test_shannon_uniform_reduces_to_network_entropy(n, L, C):
    assert shannon_entropy(Distribution.uniform(n), L, C) == pytest.approx(
        network_entropy(n, L, C).H, rel=1e-10)


def test_shannon_matches_direct_sum():
    p = [0.5, 0.25, 0.125, 0.125]
    assert shannon_entropy(p, 2) == pytest.approx(1.75, abs=1e-15)


@pytest.mark.parametrize("probs", [[0.5, 0.6], [1.2, -0.2], [], [math.nan, 1]])
def test_invalid_distribution(probs):
    with pytest.raises(InvalidDistributionError):
        Distribution(tuple(probs))


def test_shannon_invalid_base_and_k():
    with pytest.raises(InvalidLogBaseError):
        shannon_entropy([1.0], 1)
    with pytest.raises(InvalidCoefficientError):
        shannon_entropy([1.0], 2, 0)


@settings(max_examples=60)
@given(st.integers(2, 40), st.integers(0, 10**6), bases)
def test_uniform_maximizes_shannon(n, seed, r):
    rng = random.Random(seed)
    weights = [1 + rng.uniform(-0.9, 0.9) for _ in range(n)]
    total = math.fsum(weights)
    perturbed = [w / total for w in weights]
    perturbed[-1] = 1 - math.fsum(perturbed[:-1])
    assume(perturbed[-1] >= 0)
    assert shannon_entropy(perturbed, r) <= shannon_entropy(Distribution.uniform(n), r) + 1e-12


def test_conceptual_multiplier_literal_product():
    # the rounded factors multiply to 60.8896; 60.94 needs the unrounded means
    assert conceptual_multiplier(10.72, 5.68) == pytest.approx(60.8896, abs=1e-9)


def test_conceptual_multiplier_from_unrounded_means():
    social = (network_entropy(5_281_347, 3.65, 0.79).H + network_entropy(350e6, 3.65, 0.79).H) / 2
    lexical = (network_entropy(200_000, 2.67, 0.437).H + network_entropy(616_000, 2.67, 0.437).H) / 2
    assert social == pytest.approx(10.72, abs=0.005)
    assert lexical == pytest.approx(5.68, abs=0.005)
    assert conceptual_multiplier(social, lexical) == pytest.approx(60.94, abs=0.05)


def test_conceptual_multiplier_other_cases():
    assert conceptual_multiplier(0, 123.4) == 0
    assert conceptual_multiplier(12.004, 5.932) == pytest.approx(71.21, abs=0.005)
    with pytest.raises(NegativeEntropyError):
        conceptual_multiplier(-1, 2)


def test_value_delta_cases():
    assert value_delta(2.0, 0.5, 3, 100, 0) == 0
    assert value_delta(1, 1, math.e, 1000, (math.e - 1) * 1000) == pytest.approx(1.0, rel=1e-14)
    pop = value_delta(1, 0.79, 3.65, 5_281_347, 344_718_653)
    diff = network_entropy(350e6, 3.65, 0.79).H - network_entropy(5_281_347, 3.65, 0.79).H
    assert pop == pytest.approx(diff, rel=1e-10)
    assert pop == pytest.approx(2.559, abs=0.005)


def test_value_delta_errors():
    with pytest.raises(InvalidLogBaseError):
        value_delta(1, 0.5, 1, 10, 1)
    with pytest.raises(InvalidCountError):
        value_delta(1, 0.5, 2, 0, 1)
    with pytest.raises(InvalidCountError):
        value_delta(1, 0.5, 2, 10, -1)
    with pytest.raises(InvalidRateError):
        value_delta(-1, 0.5, 2, 10, 1)


@given(st.floats(0.001, 100), coefficients, bases, st.floats(1, 1e9), st.floats(-3, 3))
def test_value_delta_is_entropy_difference(m, C, L, n1, log_ratio):
    A = n1 * 10 ** log_ratio
    expected = m * (network_entropy(n1 + A, L, C).H - network_entropy(n1, L, C).H)
    assert value_delta(m, C, L, n1, A) == pytest.approx(expected, rel=1e-10, abs=1e-300)
