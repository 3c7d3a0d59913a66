import pytest

from src.constructions import root_stack_divisors
from src.errors import ToricError, UnsupportedFanError
from src.fans import (
    bundle,
    divisor,
    fan_from_rays,
    hirzebruch,
    parse_bundle,
    product_of_lines,
    projective_plane,
    structure_sheaf,
    weighted_projective,
)
from src.frobenius import stable_summands
from src.geometry import is_nef, is_nef_divisor, k_rank, nef_summands, support_function


def _classes(fan, texts):
    return {parse_bundle(fan, t) for t in texts}


class TestNef:

    def test_p2(self, p2):
        assert is_nef(p2, divisor(p2, 1))
        assert not is_nef(p2, -divisor(p2, 1))
        assert is_nef(p2, structure_sheaf(p2))

    def test_example_two_exclusion(self, ex2_fan):
        assert not is_nef(ex2_fan, -parse_bundle(ex2_fan, 'O(D3 - D4)'))

    def test_example_three(self, ex3_fan):
        assert is_nef(ex3_fan, divisor(ex3_fan, 5))

    def test_support_function_forms(self, p2):
        phi = support_function(p2, [1, 0, 0])
        assert phi.forms[(0, 1)] == (-1, 0)

    def test_class_well_defined(self, rng, ex2_fan, ex3_fan):
        for fan in (ex2_fan, ex3_fan, hirzebruch(2)):
            for _ in range(20):
                k = [int(x) for x in rng.integers(-3, 4, size=fan.s)]
                m = [int(x) for x in rng.integers(-3, 4, size=2)]
                shifted = [k[j] + m[0] * int(fan.B[0, j]) + m[1] * int(fan.B[1, j]) for j in range(fan.s)]
                assert is_nef_divisor(fan, k) == is_nef_divisor(fan, shifted)

    def test_sum_of_nef_is_nef(self, rng):
        pairs = 0
        for fan in (projective_plane(), hirzebruch(1), product_of_lines(),
                    fan_from_rays([(1, 0), (0, 1), (-2, 2), (-1, 0), (0, -1)])):
            nef = []
            for _ in range(60):
                k = [int(x) for x in rng.integers(-2, 3, size=fan.s)]
                if is_nef_divisor(fan, k):
                    nef.append(k)
            for a, b in zip(nef, nef[1:]):
                assert is_nef_divisor(fan, [x + y for x, y in zip(a, b)])
                pairs += 1
        assert pairs >= 30

    def test_requires_rank_two(self, p1):
        with pytest.raises(UnsupportedFanError):
            is_nef(p1, structure_sheaf(p1))


class TestNefSummands:

    def test_example_two(self, ex2_fan):
        D = stable_summands(ex2_fan)
        nef = nef_summands(ex2_fan)
        assert len(nef) == 6
        assert D - nef == _classes(ex2_fan, ['O(D3 - D4)'])

    def test_example_three(self, ex3_fan):
        D = stable_summands(ex3_fan)
        nef = nef_summands(ex3_fan)
        assert len(nef) == 6
        assert D - nef == _classes(ex3_fan, ['O(D3 - D5)', 'O(-D3 - D4)', 'O(D3 - D4 - D5)'])
        assert parse_bundle(ex3_fan, 'O(-D5)') in nef

    @pytest.mark.parametrize("make", [
        lambda: weighted_projective((1, 1, 2)),
        lambda: weighted_projective((1, 2, 3)),
        lambda: root_stack_divisors(product_of_lines(), (2, 3, 2, 3))[0],
    ])
    def test_all_summands_nef(self, make):
        fan = make()
        assert nef_summands(fan) == stable_summands(fan)


class TestKRank:

    @pytest.mark.parametrize("make, expected", [
        (projective_plane, 3),
        (lambda: fan_from_rays([(1, 0), (0, 1), (-2, 2), (0, -1)]), 6),
        (lambda: fan_from_rays([(1, 0), (0, 1), (-2, 2), (-1, 0), (0, -1)]), 7),
        (lambda: hirzebruch(1), 4),
    ])
    def test_values(self, make, expected):
        rank, on_boundary = k_rank(make())
        assert rank == expected
        assert on_boundary

    def test_interior_ray(self):
        fan = fan_from_rays([(3, 0), (1, 1), (0, 3), (-3, -3)])
        result = k_rank(fan)
        assert result.rank == 27
        assert not result.on_boundary

    def test_requires_rank_two(self, p1):
        with pytest.raises(ToricError):
            k_rank(p1)


def test_twisted_bundle_is_rejected():
    fan, _ = root_stack_divisors(weighted_projective((2, 2)), (1, 1))
    L = bundle(fan, [0, 0], [1])
    with pytest.raises(ToricError):
        is_nef(fan, L)
