"""Tests for src/qstate/state.py."""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.models.constants import DENSE_SIZE_CAP
from src.models.errors import LengthMismatch, PrefixTooLong, TooLarge
from src.qstate.state import (
    add,
    basis,
    densify,
    from_amplitudes,
    inner,
    max_abs_diff,
    null_state,
    project_prefix,
    random_state,
    scalar,
    scale,
    sparsify,
    tensor,
)

SQRT_HALF = 1 / math.sqrt(2)

seeds = st.integers(min_value=0, max_value=2**31 - 1)


class TestConstruction:
    """Tests for basis, scalar and from_amplitudes."""

    def test_basis_string(self):
        """Should hold a single unit entry with the string's length."""
        phi = basis("01")
        assert phi.register_length == 2
        assert dict(phi.entries) == {"01": 1 + 0j}

    def test_empty_basis_is_unit_scalar(self):
        """basis("") should be the length-0 state with value 1."""
        phi = basis("")
        assert phi.register_length == 0
        assert phi.amplitude("") == 1

    def test_basis_rejects_non_bits(self):
        """Should reject characters other than 0 and 1."""
        with pytest.raises(ValueError):
            basis("012")

    def test_prunes_small_amplitudes(self):
        """Should drop entries below the pruning epsilon."""
        phi = from_amplitudes(1, {"0": 1.0, "1": 1e-16})
        assert list(phi.entries) == ["0"]

    def test_rejects_wrong_key_length(self):
        """Should raise LengthMismatch for a key of the wrong length."""
        with pytest.raises(LengthMismatch):
            from_amplitudes(2, {"0": 1.0})

    def test_rejects_non_finite(self):
        """Should reject NaN amplitudes."""
        with pytest.raises(ValueError):
            from_amplitudes(1, {"0": float("nan")})

    def test_null_reports_length_zero(self):
        """The null vector keeps its width but reports length 0."""
        phi = null_state(3)
        assert phi.is_null
        assert phi.length == 0
        assert phi.register_length == 3


class TestTensor:
    """Tests for tensor."""

    def test_product_of_basis_terms(self):
        """Should multiply amplitudes and concatenate keys."""
        a = from_amplitudes(1, {"0": 0.6})
        b = from_amplitudes(1, {"1": 0.8j})
        assert tensor(a, b).amplitude("01") == pytest.approx(0.48j)

    def test_null_absorbs(self):
        """A null operand on either side should give null."""
        assert tensor(null_state(1), basis("1")).is_null
        assert tensor(basis("1"), null_state(2)).is_null

    def test_scalar_scales(self):
        """A length-0 operand should act as scalar multiplication."""
        result = tensor(scalar(0.5), basis("1"))
        assert result.register_length == 1
        assert result.amplitude("1") == pytest.approx(0.5)

    @settings(max_examples=25, deadline=None)
    @given(seeds, seeds, seeds)
    def test_associative(self, s1, s2, s3):
        """(a x b) x c should equal a x (b x c)."""
        a, b, c = random_state(1, s1), random_state(2, s2), random_state(1, s3)
        assert max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) < 1e-12


class TestProjectPrefix:
    """Tests for project_prefix."""

    def test_residual_not_renormalized(self):
        """Should keep matching entries with the prefix stripped."""
        phi = from_amplitudes(2, {"01": SQRT_HALF, "10": SQRT_HALF})
        result = project_prefix("0", phi)
        assert dict(result.entries) == {"1": pytest.approx(SQRT_HALF)}

    def test_no_match_is_null(self):
        """Should return null when no key starts with the prefix."""
        assert project_prefix("1", basis("01")).is_null

    def test_full_length_is_scalar(self):
        """Projecting on the whole key should leave a length-0 scalar."""
        phi = from_amplitudes(2, {"01": 0.6, "10": 0.8})
        result = project_prefix("01", phi)
        assert result.register_length == 0
        assert result.amplitude("") == pytest.approx(0.6)

    def test_prefix_too_long(self):
        """Should raise PrefixTooLong past the register length."""
        with pytest.raises(PrefixTooLong):
            project_prefix("010", basis("01"))

    def test_strips_tensor_prefix(self):
        """project_prefix(s, |s> x psi) should give psi exactly."""
        psi = random_state(3, 11)
        assert project_prefix("10", tensor(basis("10"), psi)) == psi

    @settings(max_examples=25, deadline=None)
    @given(seeds, st.integers(min_value=1, max_value=4))
    def test_norm_splits_over_prefixes(self, seed, k):
        """The squared norm should equal the sum over k-bit prefixes of residual norms."""
        phi = random_state(4, seed)
        total = sum(
            project_prefix("".join(bits), phi).norm_squared()
            for bits in itertools.product("01", repeat=k)
        )
        assert total == pytest.approx(phi.norm_squared(), abs=1e-12)


class TestInnerAndAlgebra:
    """Tests for inner, add and scale."""

    def test_orthonormal_basis(self):
        """Basis vectors should be orthonormal."""
        assert inner(basis("0"), basis("0")) == 1
        assert inner(basis("0"), basis("1")) == 0

    def test_conjugate_linear_in_first(self):
        """Should conjugate the left operand."""
        a = from_amplitudes(1, {"0": 1j})
        assert inner(a, basis("0")) == pytest.approx(-1j)

    def test_self_inner_is_norm(self):
        """<phi|phi> should be real and equal the squared norm."""
        phi = from_amplitudes(2, {"01": 0.6, "10": 0.8j})
        value = inner(phi, phi)
        assert value.imag == pytest.approx(0)
        assert value.real == pytest.approx(1.0)

    def test_null_inner_is_zero(self):
        """Should give 0 against the null vector, whatever its width."""
        assert inner(null_state(5), basis("01")) == 0

    def test_length_mismatch(self):
        """Should refuse states of different lengths."""
        with pytest.raises(LengthMismatch):
            inner(basis("0"), basis("01"))

    def test_cancellation_gives_null(self):
        """phi + (-1) phi should be null."""
        phi = random_state(2, 5)
        assert add(phi, scale(phi, -1)).is_null

    def test_null_is_additive_identity(self):
        """Adding null should return the other operand."""
        phi = basis("10")
        assert add(null_state(2), phi) == phi


class TestDense:
    """Tests for densify, sparsify and random_state."""

    def test_index_order(self):
        """|1> should be the second entry."""
        np.testing.assert_array_equal(densify(basis("1")), [0, 1])

    def test_null_is_zero_vector(self):
        """Null at width 2 should densify to four zeros."""
        np.testing.assert_array_equal(densify(null_state(2), 2), np.zeros(4))

    def test_sparsify(self):
        """Should map vector indices back to bitstrings."""
        phi = sparsify(np.array([SQRT_HALF, SQRT_HALF]), 1)
        assert phi.amplitude("0") == pytest.approx(SQRT_HALF)
        assert phi.amplitude("1") == pytest.approx(SQRT_HALF)

    def test_round_trip(self):
        """sparsify(densify(phi)) should reproduce phi."""
        phi = random_state(4, 3)
        assert max_abs_diff(sparsify(densify(phi), 4), phi) < 1e-15

    def test_cap(self):
        """Should raise TooLarge above the dense cap."""
        with pytest.raises(TooLarge):
            densify(basis("0" * 13))

    def test_random_state_deterministic(self):
        """Same seed should give the same state."""
        assert random_state(3, 7) == random_state(3, 7)

    def test_random_state_normalized(self):
        """Should have unit norm."""
        assert random_state(5, 1).norm() == pytest.approx(1.0, abs=1e-12)

    def test_random_state_seed_sensitive(self):
        """Different seeds should give different states."""
        assert max_abs_diff(random_state(1, 2), random_state(1, 3)) > 1e-6

    def test_random_state_cap(self):
        """Dense support limits random_state to the dense cap."""
        assert random_state(DENSE_SIZE_CAP, 0).register_length == DENSE_SIZE_CAP
        with pytest.raises(TooLarge):
            random_state(DENSE_SIZE_CAP + 1, 0)
