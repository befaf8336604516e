import numpy as np
import pytest

from parrondo.errors import (
    ContractionViolationError,
    DimensionMismatchError,
    NegativeEntryError,
    NonFiniteEntryError,
    NonSquareError,
    NotIrreducibleError,
    ProbabilitySumError,
    RowSumError,
    SingularSystemError,
    StochasticMatrixError,
    ZeroEntryError,
)
from parrondo.games import game_b_matrix
from parrondo.markov import (
    contraction_diagnostics,
    evolve,
    first_positive_power,
    is_fixed_vector,
    is_irreducible,
    is_regular,
    lazy_chain,
    limit_matrix,
    matrix_power,
    power_iteration,
    stationary,
    strong_components,
    validate_distribution,
    validate_stochastic,
    wielandt_bound,
)
from parrondo.markov import _stationary

BOOKSTORE_SQUARED = [[0.145, 0.4575, 0.3975], [0.165, 0.415, 0.42], [0.1947, 0.4422, 0.3631]]


def test_identity_is_valid():
    P = validate_stochastic(np.eye(3))
    assert P.n_states == 3
    np.testing.assert_array_equal(P.entries, np.eye(3))


def test_bookstore_is_valid(bookstore):
    P = validate_stochastic(bookstore)
    np.testing.assert_allclose(P.entries, bookstore, atol=1e-15)


def test_row_sum_error_names_row():
    with pytest.raises(RowSumError) as exc_info:
        validate_stochastic([[0.5, 0.6], [0.2, 0.8]])
    assert exc_info.value.i == 0
    assert exc_info.value.total == pytest.approx(1.1)


@pytest.mark.parametrize(
    "raw, error",
    [
        ([[0.5, 0.5]], NonSquareError),
        ([[1.5, -0.5], [0.0, 1.0]], NegativeEntryError),
        ([[np.nan, 1.0], [0.0, 1.0]], NonFiniteEntryError),
    ],
)
def test_invalid_matrices(raw, error):
    with pytest.raises(error):
        validate_stochastic(raw)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        validate_stochastic([[0.5, 0.6], [0.2, 0.8]])
    assert issubclass(RowSumError, StochasticMatrixError)


def test_negative_entry_position():
    with pytest.raises(NegativeEntryError) as exc_info:
        validate_stochastic([[1.0, 0.0], [1.5, -0.5]])
    assert (exc_info.value.i, exc_info.value.j) == (1, 1)


def test_row_sum_noise_is_renormalized():
    P = validate_stochastic([[0.5, 0.5 + 5e-13], [0.25, 0.75]])
    assert abs(P.entries[0].sum() - 1.0) < 1e-15
    assert P.entries[1, 1] == 0.75


def test_entries_are_read_only(bookstore):
    P = validate_stochastic(bookstore)
    with pytest.raises(ValueError):
        P.entries[0, 0] = 1.0


def test_validate_distribution():
    q = validate_distribution([0.2, 0.3, 0.5])
    assert q.to_list() == [0.2, 0.3, 0.5]
    with pytest.raises(ProbabilitySumError):
        validate_distribution([0.2, 0.2])
    with pytest.raises(NegativeEntryError):
        validate_distribution([1.2, -0.2])


def test_matrix_power_bookstore(bookstore):
    squared = matrix_power(bookstore, 2)
    np.testing.assert_allclose(squared.entries, BOOKSTORE_SQUARED, rtol=0, atol=1e-12)


def test_matrix_power_trivial_exponents(bookstore):
    np.testing.assert_array_equal(matrix_power(bookstore, 0).entries, np.eye(3))
    np.testing.assert_allclose(matrix_power(bookstore, 1).entries, bookstore, atol=1e-15)
    with pytest.raises(ValueError):
        matrix_power(bookstore, -1)


def test_matrix_power_large_exponents(bookstore, params):
    W = limit_matrix(bookstore)
    np.testing.assert_allclose(matrix_power(bookstore, 10**6).entries, W.entries, atol=1e-10)

    P_B = game_b_matrix(params)
    high = matrix_power(P_B, 10**7)
    np.testing.assert_allclose(high.entries.sum(axis=1), np.ones(3), rtol=0, atol=1e-12)
    np.testing.assert_allclose(high.entries, limit_matrix(P_B).entries, atol=1e-10)


def test_evolve_bookstore(bookstore):
    q = evolve([0.0, 0.5, 0.5], bookstore, 1)
    np.testing.assert_allclose(q.probs, [0.165, 0.415, 0.420], rtol=0, atol=1e-12)


def test_evolve_two_cycle(two_cycle):
    assert evolve([1.0, 0.0], two_cycle, 3).to_list() == [0.0, 1.0]
    assert evolve([0.3, 0.7], two_cycle, 0).to_list() == [0.3, 0.7]


def test_evolve_dimension_mismatch(bookstore):
    with pytest.raises(DimensionMismatchError):
        evolve([0.5, 0.5], bookstore, 1)


def test_irreducibility(bookstore, two_cycle):
    assert is_irreducible(bookstore)
    assert is_irreducible(two_cycle)
    assert not is_irreducible([[1.0, 0.0], [0.5, 0.5]])


def test_strong_components_of_absorbing_chain():
    n_components, labels = strong_components([[1.0, 0.0], [0.5, 0.5]])
    assert n_components == 2
    assert labels[0] != labels[1]


def test_regularity(bookstore, two_cycle):
    assert is_regular(bookstore)
    assert first_positive_power(bookstore) == 2
    assert not is_regular(two_cycle)
    assert not is_regular(np.eye(2))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_wielandt_matrix_needs_the_full_bound(n):
    # cycle 0 -> 1 -> ... -> n-1 -> 0 with an extra edge n-1 -> 1
    entries = np.zeros((n, n))
    for i in range(n - 1):
        entries[i, i + 1] = 1.0
    entries[n - 1, 0] = 0.5
    entries[n - 1, 1] += 0.5
    assert first_positive_power(entries) == wielandt_bound(n)
    assert is_regular(entries)


def test_stationary_two_cycle(two_cycle):
    w, report = stationary(two_cycle)
    np.testing.assert_allclose(w.probs, [0.5, 0.5], atol=1e-12)
    assert report.method == "direct"
    assert report.residual <= 1e-10


def test_stationary_bookstore(bookstore):
    w, report = stationary(bookstore)
    assert w.probs.sum() == pytest.approx(1.0, abs=1e-12)
    assert is_fixed_vector(w, bookstore)
    assert report.contraction_factor_bound is None


def test_stationary_rejects_reducible():
    with pytest.raises(NotIrreducibleError) as exc_info:
        stationary(np.eye(3))
    assert exc_info.value.n_components == 3


def _degenerate(P):
    raise SingularSystemError("forced")


def test_stationary_falls_back_to_power_iteration(monkeypatch, caplog, bookstore):
    direct, _ = stationary(bookstore)
    monkeypatch.setattr(_stationary, "_direct_solve", _degenerate)

    w, report = stationary(bookstore)
    assert report.method == "power"
    assert report.is_nonincreasing
    np.testing.assert_allclose(w.probs, direct.probs, atol=1e-10)
    assert "falling back" in caplog.text


def test_periodic_fallback_uses_lazy_chain(monkeypatch, two_cycle):
    monkeypatch.setattr(_stationary, "_direct_solve", _degenerate)
    w, report = stationary(two_cycle)
    assert report.method == "lazy-power"
    np.testing.assert_allclose(w.probs, [0.5, 0.5], atol=1e-10)


def test_power_iteration_needs_regular_chain(two_cycle):
    with pytest.raises(SingularSystemError):
        power_iteration(two_cycle)


def test_power_iteration_iteration_cap(bookstore):
    with pytest.raises(SingularSystemError):
        power_iteration(bookstore, max_iterations=2)


def test_lazy_chain(two_cycle):
    lazy = lazy_chain(two_cycle)
    np.testing.assert_array_equal(lazy.entries, [[0.5, 0.5], [0.5, 0.5]])
    assert is_regular(lazy)


def test_limit_matrix(bookstore):
    W = limit_matrix(bookstore)
    w, _ = stationary(bookstore)
    for row in W.entries:
        np.testing.assert_allclose(row, w.probs, atol=1e-15)
    np.testing.assert_allclose(matrix_power(bookstore, 200).entries, W.entries, atol=1e-10)


def test_contraction_on_bookstore_square(bookstore):
    squared = matrix_power(bookstore, 2)
    report = contraction_diagnostics(squared, [1.0, 0.0, 0.0], steps=5)
    assert report.contraction_factor_bound == pytest.approx(0.71)
    assert len(report.gaps) == 6
    for k, gap in enumerate(report.gaps):
        assert gap <= 0.71**k + 1e-12


def test_contraction_constant_vector(bookstore):
    report = contraction_diagnostics(matrix_power(bookstore, 2), [2.0, 2.0, 2.0], steps=4)
    assert len(report.gaps) == 5
    assert max(report.gaps) <= 1e-14


def test_contraction_rank_one():
    report = contraction_diagnostics([[0.5, 0.5], [0.5, 0.5]], [1.0, -3.0], steps=1)
    assert report.final_gap == 0.0


def test_contraction_needs_positive_entries(bookstore):
    with pytest.raises(ZeroEntryError) as exc_info:
        contraction_diagnostics(bookstore, [1.0, 0.0, 0.0], steps=3)
    assert (exc_info.value.i, exc_info.value.j) == (1, 0)


def test_contraction_violation_is_reported():
    error = ContractionViolationError(3, 0.5, 0.25)
    assert error.step == 3
    assert "exceeds bound" in str(error)
