"""Tests for SL(2,Z) conjugacy classes and torus-bundle comparison."""

from itertools import product

import pytest
from hypothesis import given

from strategies import matrices, small_matrices
from torus_tqft.sl2z import (
    D_A,
    D_B,
    E,
    NEG_E,
    S,
    MatSL2,
    brute_force_conjugate,
    bundle_key,
    conjugacy_key,
    conjugacy_representative,
    is_conjugate,
    j_flip,
    named_matrix,
    torus_bundle_homeomorphic,
)


def sl2_box(bound):
    """Every SL(2,Z) matrix with entries in [-bound, bound]."""
    values = range(-bound, bound + 1)
    return [MatSL2(p, r, q, s) for p, r, q, s in product(values, repeat=4) if p * s - q * r == 1]


@pytest.mark.unit
class TestConjugacyKey:
    """Complete invariants of conjugacy classes."""

    def test_dehn_twists_are_conjugate(self):
        assert is_conjugate(D_A, D_B)
        assert S @ D_A @ S.inv() == D_B

    def test_twist_not_conjugate_to_its_inverse(self):
        assert not is_conjugate(D_A, D_A.inv())
        assert not is_conjugate(S, S.inv())

    def test_central_elements(self):
        assert conjugacy_key(E) == (1, 1, 0)
        assert conjugacy_key(NEG_E) == (1, -1, 0)
        assert not is_conjugate(E, NEG_E)

    def test_different_traces(self):
        assert not is_conjugate(MatSL2(2, 1, 1, 1), MatSL2(3, 1, 2, 1))

    def test_hyperbolic_rotations(self):
        a = MatSL2(2, 1, 1, 1)
        b = MatSL2(1, 1, 1, 2)
        assert is_conjugate(a, b)
        assert is_conjugate(-a, -b)
        assert not is_conjugate(a, -b)

    def test_stebe_pair_not_conjugate(self):
        g, h = named_matrix("StebeG"), named_matrix("StebeH")
        assert g.trace == h.trace == 365
        assert not is_conjugate(g, h)

    @pytest.mark.property
    @given(matrices, small_matrices)
    def test_key_invariant_under_conjugation(self, a, c):
        assert conjugacy_key(c @ a @ c.inv()) == conjugacy_key(a)

    @pytest.mark.property
    @given(matrices)
    def test_representative_has_the_same_key(self, a):
        key = conjugacy_key(a)
        assert conjugacy_key(conjugacy_representative(key)) == key


@pytest.mark.unit
class TestBruteForce:
    """The bounded search oracle."""

    def test_witness_conjugates(self):
        witness = brute_force_conjugate(D_A, D_B, 5)
        assert witness is not None
        assert witness @ D_A @ witness.inv() == D_B

    def test_no_witness_for_inverse_twist(self):
        assert brute_force_conjugate(D_A, D_A.inv(), 10) is None

    def test_central_target(self):
        assert brute_force_conjugate(E, E, 3) == E
        assert brute_force_conjugate(D_A, E, 3) is None

    def test_agrees_on_small_box(self):
        box = sl2_box(2)
        for a in box:
            for b in box:
                if a.trace != b.trace:
                    continue
                found = brute_force_conjugate(a, b, 12) is not None
                assert found == is_conjugate(a, b), (a, b)

    @pytest.mark.slow
    def test_witnesses_imply_conjugacy_on_wide_box(self):
        box = sl2_box(6)
        by_trace = {}
        for a in box:
            by_trace.setdefault(a.trace, []).append(a)
        for group in by_trace.values():
            for a in group:
                for b in group[:8]:
                    if brute_force_conjugate(a, b, 40) is not None:
                        assert is_conjugate(a, b), (a, b)


@pytest.mark.unit
class TestTorusBundles:
    """Homeomorphism of mapping tori up to conjugacy and J-flip."""

    def test_j_flip_gives_homeomorphic_bundle(self):
        a = named_matrix("Y21")
        assert torus_bundle_homeomorphic(a, j_flip(a))

    @pytest.mark.property
    @given(matrices)
    def test_bundle_key_ignores_j_flip(self, a):
        assert bundle_key(a) == bundle_key(j_flip(a))

    @pytest.mark.property
    @given(matrices, small_matrices)
    def test_bundle_key_ignores_conjugation(self, a, c):
        assert bundle_key(c @ a @ c.inv()) == bundle_key(a)
