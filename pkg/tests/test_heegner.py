import json
import random
from math import gcd

import pytest

from k3moduli.arith import is_prime_power
from k3moduli.binary_forms import binary_forms_equivalent
from k3moduli.discriminant import GroupElementG, group_elements, induced_multiplier
from k3moduli.heegner import (
    representative,
    WEHLER_GRAM,
    FixedLocusReport,
    HeegnerInvariant,
    ReflectiveCandidate,
    admissible_norms,
    brute_force_classify,
    candidate_invariants,
    classify_fixed_divisors,
    exists_fixed_class_with_norm,
    in_refl_set,
    is_nontrivial_in_G,
    multiplier_of,
    ns_gram_generic,
    orbit_invariant,
    realized_classes,
)
from k3moduli.lattice import determinant, divisibility, inner, l2d, reflection, saturated_basis
from k3moduli.lattice import k3_lattice, l2d_to_lambda, polarization_vector

from ._support import random_reflective

EX = ReflectiveCandidate(1, 2, 2)  # beta = k + 2(e + f), square -4 at d = 6


def _search_space(d):
    """All (alpha, m, jsq) with |alpha| <= 2d, 1 <= m <= 2d and -2d <= beta^2 < 0."""
    N = 2 * d
    for alpha in range(-N, N + 1):
        for m in range(1, N + 1):
            # -2d <= -2d alpha^2 + m^2 jsq < 0
            lo = -(-(N * alpha * alpha - N) // (m * m))
            hi = (N * alpha * alpha - 1) // (m * m)
            for jsq in range(lo + lo % 2, hi + 1, 2):
                yield ReflectiveCandidate(alpha, m, jsq)


class TestPredicates:
    def test_in_refl_set_examples(self):
        assert in_refl_set(6, EX)
        assert EX.beta_square(6) == -4
        for d in (3, 6, 10):
            assert not in_refl_set(d, ReflectiveCandidate(0, 1, -2))
        assert not in_refl_set(6, ReflectiveCandidate(1, 1, 0))

    def test_candidate_validation(self):
        with pytest.raises(ValueError):
            ReflectiveCandidate(1, 0, 2)
        with pytest.raises(ValueError):
            ReflectiveCandidate(1, 1, 3)

    def test_multiplier_examples(self):
        assert multiplier_of(6, EX).a == 7
        assert multiplier_of(6, ReflectiveCandidate(0, 1, -2)).a == 1
        assert multiplier_of(6, ReflectiveCandidate(1, 1, 0)).a == 11
        assert multiplier_of(6, ReflectiveCandidate(1, 1, 0)).element.is_identity
        with pytest.raises(ValueError):
            multiplier_of(6, ReflectiveCandidate(1, 1, 2))  # beta^2 = -10

    def test_nontrivial_examples(self):
        assert is_nontrivial_in_G(6, EX)
        assert not is_nontrivial_in_G(6, ReflectiveCandidate(0, 1, -4))
        assert not is_nontrivial_in_G(6, ReflectiveCandidate(1, 1, 0))
        with pytest.raises(ValueError):
            is_nontrivial_in_G(6, ReflectiveCandidate(1, 1, 2))

    def test_orbit_invariant_examples(self):
        inv = orbit_invariant(6, EX)
        assert (inv.n, inv.div, inv.t) == (4, 2, 6)
        for d in (2, 6, 9):
            inv = orbit_invariant(d, ReflectiveCandidate(1, 1, 0))
            assert (inv.n, inv.div, inv.t) == (2 * d, 1, 0)
        assert orbit_invariant(6, EX) == orbit_invariant(6, ReflectiveCandidate(-1, 2, 2))
        with pytest.raises(ValueError):
            orbit_invariant(6, ReflectiveCandidate(2, 2, 2))

    def test_invariant_validation(self):
        HeegnerInvariant(6, 4, 2, 6)
        with pytest.raises(ValueError):
            HeegnerInvariant(6, 4, 3, 6)
        with pytest.raises(ValueError):
            HeegnerInvariant(6, 6, 2, 6)  # 36/12 - 6/4 is not even
        with pytest.raises(ValueError):
            HeegnerInvariant(6, 4, 2, 7)

    @pytest.mark.parametrize("d", [2, 5, 6, 12, 14, 15, 18, 20, 30])
    def test_search_space_properties(self, d):
        L = l2d(d)
        seen = {}
        for cand in _search_space(d):
            b2 = cand.beta_square(d)
            if (2 * d) % b2 == 0:
                # closed-form test agrees with the multiplier class whenever both make sense
                try:
                    a = multiplier_of(d, cand)
                except ValueError:
                    a = None
                if a is not None:
                    assert is_nontrivial_in_G(d, cand) == (not a.element.is_identity)
            if not in_refl_set(d, cand):
                continue
            assert is_nontrivial_in_G(d, cand)
            # reflection integrality: beta^2 | 2 div(beta)
            div = gcd(2 * d * cand.alpha, cand.m)
            assert (2 * div) % b2 == 0
            vec = cand.vector(d)
            assert divisibility(L, vec) == div and inner(L, vec, vec) == b2
            inv = orbit_invariant(d, cand)
            g = multiplier_of(d, cand).element
            assert seen.setdefault(inv, g) == g

    @pytest.mark.parametrize("d", [6, 12, 21, 30, 50])
    def test_multiplier_matches_reflection_matrix(self, d):
        rng = random.Random(d)
        L = l2d(d)
        for _ in range(15):
            cand, beta = random_reflective(d, rng)
            F = reflection(L, beta)
            assert induced_multiplier(d, F) == multiplier_of(d, cand)
            assert reflection(L, cand.vector(d)).matrix[0][0] % (2 * d) == multiplier_of(d, cand).a


class TestNormCriterion:
    def test_d15(self):
        assert not exists_fixed_class_with_norm(15, 6)
        assert not exists_fixed_class_with_norm(15, 10)
        # the obstructions: 5 and 3 are non-residues mod 3 and mod 5 (2 is not a square)
        assert all(a * a % 3 != 2 for a in range(3))
        assert all(a * a % 5 != 2 for a in range(5))

    def test_d6(self):
        assert exists_fixed_class_with_norm(6, 4)

    def test_rejects_bad_norm(self):
        for n in (2, 12, 5, 8, -4):
            with pytest.raises(ValueError):
                exists_fixed_class_with_norm(6, n)

    def test_admissible_norms(self):
        assert admissible_norms(1) == []
        assert admissible_norms(6) == [4, 6]
        assert admissible_norms(15) == [6, 10]

    def test_matches_classification(self):
        for d in range(1, 201):
            norms = {inv.n for inv in classify_fixed_divisors(d).classes()}
            for n in admissible_norms(d):
                assert exists_fixed_class_with_norm(d, n) == (n in norms)

    def test_candidate_invariants_compatible(self):
        for d in (6, 12, 30, 60):
            for n in admissible_norms(d):
                for inv in candidate_invariants(d, n):
                    assert (2 * inv.div) % n == 0


class TestClassification:
    def test_d6(self):
        r = classify_fixed_divisors(6)
        assert r.entries[GroupElementG(6, 1)] == ()
        assert r.entries[GroupElementG(6, 5)] == (HeegnerInvariant(6, 4, 2, 6),)

    def test_d15_empty(self):
        r = classify_fixed_divisors(15)
        assert r.is_empty and set(r.entries) == set(group_elements(15))

    def test_d4_and_d1(self):
        assert classify_fixed_divisors(4).is_empty
        assert classify_fixed_divisors(1).is_empty
        assert classify_fixed_divisors(1).to_dict() == {"d": 1, "entries": []}

    def test_prime_powers_empty(self):
        for d in range(2, 201):
            if is_prime_power(d):
                assert classify_fixed_divisors(d).is_empty

    def test_each_class_under_one_element(self):
        for d in range(1, 201):
            r = classify_fixed_divisors(d)
            assert r.entries[GroupElementG(d, 1)] == ()
            owners = {}
            for g, invs in r.entries.items():
                for inv in invs:
                    assert inv not in owners
                    owners[inv] = g

    def test_sorted(self):
        r = classify_fixed_divisors(2310)
        for invs in r.entries.values():
            assert list(invs) == sorted(invs, key=lambda i: (i.n, i.t))

    def test_realized_classes_single_owner(self):
        for d in (6, 14, 30, 210):
            for n in admissible_norms(d):
                assert all(len(v) == 1 for v in realized_classes(d, n).values())

    def test_json_round_trip(self):
        for d in (6, 15, 30, 210):
            r = classify_fixed_divisors(d)
            text = r.to_json()
            back = FixedLocusReport.from_dict(json.loads(text))
            assert back.pairs() == r.pairs()
            assert back.to_json() == text

    def test_serialized_schema(self):
        doc = json.loads(classify_fixed_divisors(6).to_json())
        assert doc == {"d": 6, "entries": [{"rep": 5, "fixed": [{"n": 4, "div": 2, "t": 6}]}]}

    @pytest.mark.parametrize("p", [3, 11, 19, 43, 59, 67, 83])
    def test_four_p_family(self, p):
        classes = classify_fixed_divisors(2 * p).classes()
        assert [c.n for c in classes] == [4]


class TestOracle:
    def test_d15_empty(self):
        for B in (5, 30, 60):
            assert brute_force_classify(15, B) == frozenset()

    def test_d6(self):
        expected = {(HeegnerInvariant(6, 4, 2, 6), GroupElementG(6, 5))}
        for B in (2, 12, 24):
            assert brute_force_classify(6, B) == expected

    def test_agreement_and_stability(self):
        for d in range(1, 41):
            C = classify_fixed_divisors(d).pairs()
            assert brute_force_classify(d) == C
            assert brute_force_classify(d, 4 * d) == C

    def test_rejects_bad_bound(self):
        with pytest.raises(ValueError):
            brute_force_classify(6, 0)


class TestNeronSeveri:
    def test_example(self):
        G = ns_gram_generic(6, EX)
        assert binary_forms_equivalent(G, WEHLER_GRAM)
        assert binary_forms_equivalent(G, ((12, -6), (-6, 2)))
        assert determinant(G) == -12 == determinant(((12, -6), (-6, 2)))

    def test_closed_basis_formula(self):
        # e = h, f = (2/beta^2)(alpha h - beta) on the 4p family
        L = k3_lattice()
        for p in (3, 11, 19):
            d = 2 * p
            cand = ReflectiveCandidate(1, 2, p - 1)
            assert in_refl_set(d, cand)
            h = polarization_vector(d)
            beta = l2d_to_lambda(d, cand.vector(d))
            b2 = inner(L, beta, beta)
            f = [(2 * (cand.alpha * x - y)) for x, y in zip(h, beta)]
            assert all(x % b2 == 0 for x in f)
            f = tuple(x // b2 for x in f)
            G = ((inner(L, h, h), inner(L, h, f)), (inner(L, f, h), inner(L, f, f)))
            assert binary_forms_equivalent(G, ns_gram_generic(d, cand))
            assert binary_forms_equivalent(G, WEHLER_GRAM) == (p == 3)

    def test_determinant_formula(self):
        L = k3_lattice()
        for d in (6, 14, 20, 30):
            for g, invs in classify_fixed_divisors(d).entries.items():
                for n in {i.n for i in invs}:
                    e, c = n // 2, 2 * d // n
                    alpha = next(a for a in range(e + 1) if (c * a * a - 1) % e == 0)
                    cand = ReflectiveCandidate(alpha, e, 2 * ((c * alpha * alpha - 1) // e))
                    G = ns_gram_generic(d, cand)
                    _, index = saturated_basis(
                        L, polarization_vector(d), l2d_to_lambda(d, cand.vector(d))
                    )
                    assert abs(determinant(G)) * index**2 == n * 2 * d

    def test_rejects_non_reflective(self):
        with pytest.raises(ValueError):
            ns_gram_generic(6, ReflectiveCandidate(1, 1, 0))


class TestRepresentative:
    @pytest.mark.parametrize("d", [6, 10, 30, 42, 210])
    def test_carries_its_label(self, d):
        report = classify_fixed_divisors(d)
        for g, invs in report.entries.items():
            for inv in invs:
                cand = representative(d, inv)
                assert in_refl_set(d, cand)
                assert orbit_invariant(d, cand) == inv
                assert multiplier_of(d, cand).element == g

    def test_wrong_d(self):
        inv = classify_fixed_divisors(6).classes()[0]
        with pytest.raises(ValueError):
            representative(10, inv)
