import pytest

from src.cohomology import (
    SuppComplex,
    cohomology_of_divisor,
    count_sections,
    ext,
    h0,
    h_all,
    reduced_homology_dims,
    supp_complex,
)
from src.constructions import root_stack_divisors
from src.errors import FanValidationError, UnsupportedFanError
from src.fans import (
    bundle,
    canonical_class,
    divisor,
    fan_from_rays,
    hirzebruch,
    make_fan,
    parse_bundle,
    projective_plane,
    structure_sheaf,
    weighted_projective,
)
from src.frobenius import stable_summands
from src.geometry import is_nef

from conftest import random_orbifold


class TestSupp:

    def test_example_three_witness(self, ex3_fan):
        K = supp_complex(ex3_fan, [-1, 0, -1, 0, 1])
        assert K.vertices == {1, 3, 4}
        assert K.edges == {frozenset({3, 4})}
        assert K.components() == 2
        assert reduced_homology_dims(K) == (0, 1, 0)

    def test_full_circle(self, ex3_fan):
        K = supp_complex(ex3_fan, [0, 1, 2, 0, 5])
        assert K.components() == 1
        assert reduced_homology_dims(K) == (0, 0, 1)

    def test_empty_complex(self, ex3_fan):
        K = supp_complex(ex3_fan, [-1] * 5)
        assert reduced_homology_dims(K) == (1, 0, 0)

    def test_graph_formula(self):
        K = SuppComplex(vertices=frozenset({0, 1, 2}), edges=frozenset({frozenset({0, 1})}))
        assert reduced_homology_dims(K) == (0, 1, 0)

    def test_rank_one_has_no_edges(self, p1):
        assert supp_complex(p1, [0, 0]).edges == frozenset()

    def test_rejects_torsion(self):
        fan = weighted_projective((2, 2))
        with pytest.raises(UnsupportedFanError):
            supp_complex(fan, [0, 0])


class TestSections:

    def test_p2(self, p2):
        H = divisor(p2, 1)
        assert h0(p2, H) == 3
        assert h0(p2, structure_sheaf(p2)) == 1
        assert h0(p2, -H) == 0
        assert h0(p2, 2 * H) == 6

    def test_direct_count(self, p2):
        # m with m1 >= -1, m2 >= 0, -m1 - m2 >= 0
        assert count_sections(p2, [1, 0, 0]) == 3

    def test_incomplete_fan_is_rejected(self):
        fan = make_fan(2, (), [[1, 0, -1], [0, 1, -1]], [(0, 1), (1, 2)], check=False)
        with pytest.raises(FanValidationError):
            count_sections(fan, [0, 0, 0])


class TestCohomology:

    def test_p2(self, p2):
        H = divisor(p2, 1)
        assert h_all(p2, -3 * H) == (0, 0, 1)
        assert h_all(p2, H) == (3, 0, 0)
        assert h_all(p2, -H) == (0, 0, 0)
        assert h_all(p2, -5 * H) == (0, 0, 6)

    def test_p1(self, p1):
        assert h_all(p1, bundle(p1, [-2, 0])) == (0, 1)
        assert h_all(p1, bundle(p1, [1, 0])) == (2, 0)
        assert h_all(p1, bundle(p1, [-4, 0])) == (0, 3)

    def test_hirzebruch_middle_cohomology(self):
        # O(-2 D4) on F_1 restricts to O(-2) on each fiber
        fan = hirzebruch(1)
        assert h_all(fan, bundle(fan, [0, 0, 0, -2])) == (0, 0, 0)
        assert h_all(fan, bundle(fan, [-2, 0, 0, 0])) == (0, 1, 0)

    def test_example_three_first_cohomology(self, ex3_fan):
        assert h_all(ex3_fan, bundle(ex3_fan, [0, 0, -3, -1, 1]))[1] >= 1

    def test_ext(self, p2, ex3_fan):
        O = structure_sheaf(p2)
        assert ext(p2, O, O) == (1, 0, 0)
        assert ext(p2, O, divisor(p2, 1)) == (3, 0, 0)
        L1 = parse_bundle(ex3_fan, 'O(D3 - D5)')
        assert ext(ex3_fan, L1, parse_bundle(ex3_fan, 'O(-2 D3 - D4)'))[1] != 0

    def test_rejects_torsion(self):
        fan, _ = root_stack_divisors(weighted_projective((2, 2)), (1, 1))
        with pytest.raises(UnsupportedFanError):
            h_all(fan, structure_sheaf(fan))

    def test_rejects_rank_three(self):
        fan = make_fan(3, (), [[1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]],
                       [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
        with pytest.raises(UnsupportedFanError):
            h_all(fan, structure_sheaf(fan))


def test_serre_duality_and_sections(rng):
    mismatches = []
    for _ in range(12):
        fan = random_orbifold(rng)
        K = canonical_class(fan)
        for _ in range(5):
            L = bundle(fan, [int(x) for x in rng.integers(-3, 4, size=fan.s)])
            h = h_all(fan, L)
            dual = h_all(fan, K - L)
            if h != tuple(reversed(dual)) or h[0] != h0(fan, L):
                mismatches.append((fan.to_dict(), L, h, dual))
    assert mismatches == []


def test_coset_invariance(rng, ex3_fan, ex2_fan):
    for fan in (ex2_fan, ex3_fan):
        for _ in range(10):
            k = [int(x) for x in rng.integers(-3, 4, size=fan.s)]
            m = [int(x) for x in rng.integers(-3, 4, size=2)]
            shifted = [k[j] + m[0] * int(fan.B[0, j]) + m[1] * int(fan.B[1, j]) for j in range(fan.s)]
            assert cohomology_of_divisor(fan, k) == cohomology_of_divisor(fan, shifted)


@pytest.mark.parametrize("make", [
    projective_plane,
    lambda: fan_from_rays([(1, 0), (0, 1), (-2, 2), (0, -1)]),
    lambda: fan_from_rays([(1, 0), (0, 1), (-2, 2), (-1, 0), (0, -1)]),
    lambda: weighted_projective((1, 1, 2)),
    lambda: hirzebruch(1),
    lambda: root_stack_divisors(projective_plane(), (2, 2, 2))[0],
])
def test_nef_divisors_have_no_higher_cohomology(make):
    fan = make()
    checked = 0
    for L in stable_summands(fan):
        for D in (L, -L):
            if is_nef(fan, D):
                assert h_all(fan, D)[1:] == (0, 0)
                checked += 1
    assert checked > 0
