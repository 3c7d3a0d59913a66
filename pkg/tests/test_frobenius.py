import pytest

from src.config import Config
from src.constructions import root_of_weighted_projective, root_stack_divisors
from src.errors import CertificationError, GridTooLargeError, IntegerRangeError, UnsupportedFanError
from src.fans import (
    bundle,
    divisor,
    make_fan,
    parse_bundle,
    product_of_lines,
    projective_plane,
    structure_sheaf,
    weighted_projective,
)
from src.frobenius import (
    certified_grid_size,
    degree_window_check,
    pushforward_by_characters,
    pushforward_by_lattice,
    rootstack_summand_decomposition_check,
    stable_summands,
)

from conftest import random_stacky_fan


def _classes(fan, texts):
    return {parse_bundle(fan, t) for t in texts}


class TestPushforward:

    def test_p1_frobenius_splitting(self, p1):
        O = structure_sheaf(p1)
        multiset = pushforward_by_characters(p1, O, 2)
        assert dict(multiset) == {O: 1, bundle(p1, [0, -1]): 1}
        assert multiset.total_rank() == 2
        assert pushforward_by_lattice(p1, O, 2) == {O, bundle(p1, [0, -1])}

    def test_degree_one_is_identity(self, ex3_fan):
        L = parse_bundle(ex3_fan, 'O(D3 - D5)')
        assert dict(pushforward_by_characters(ex3_fan, L, 1)) == {L: 1}
        assert pushforward_by_lattice(ex3_fan, L, 1) == {L}

    def test_p2_thomsen_decomposition(self, p2):
        H = divisor(p2, 1)
        expected = {structure_sheaf(p2), -H, -2 * H}
        assert pushforward_by_lattice(p2, structure_sheaf(p2), 3) == expected
        multiset = pushforward_by_characters(p2, structure_sheaf(p2), 3)
        assert multiset.support() == expected
        assert multiset.total_rank() == 9

    @pytest.mark.parametrize("m, count", [(2, 4), (3, 6), (4, 8), (6, 12), (12, 12)])
    def test_root_of_plane_support(self, m, count):
        # saturates at 3c^2 = 12 classes from m = 6 on
        fan, _ = root_stack_divisors(projective_plane(), (2, 2, 2))
        O = structure_sheaf(fan)
        support = pushforward_by_characters(fan, O, m).support()
        assert len(support) == count
        assert support == pushforward_by_lattice(fan, O, m)

    def test_lattice_formula_refuses_int64_overflow(self, p2):
        with pytest.raises(IntegerRangeError):
            pushforward_by_lattice(p2, bundle(p2, [2 ** 70, 0, 0]), 2)

    def test_rejects_nonpositive_degree(self, p2):
        with pytest.raises(ValueError):
            pushforward_by_characters(p2, structure_sheaf(p2), 0)

    def test_character_grid_guard(self, ex3_fan, monkeypatch):
        monkeypatch.setattr(Config, 'MAX_GRID_POINTS', 100)
        with pytest.raises(GridTooLargeError):
            pushforward_by_characters(ex3_fan, structure_sheaf(ex3_fan), 4)


def test_dual_formulas_agree(rng):
    mismatches = []
    for _ in range(50):
        fan = random_stacky_fan(rng)
        bundles = [structure_sheaf(fan)]
        for _ in range(5):
            k = [int(x) for x in rng.integers(-3, 4, size=fan.s)]
            l = [int(x) for x in rng.integers(0, 3, size=fan.r)]
            bundles.append(bundle(fan, k, l))
        for m in (2, 3, 4, 6):
            for L in bundles:
                if pushforward_by_characters(fan, L, m).support() != pushforward_by_lattice(fan, L, m):
                    mismatches.append((fan.to_dict(), L, m))
    assert mismatches == []


@pytest.mark.parametrize("make", [
    projective_plane,
    product_of_lines,
    lambda: weighted_projective((1, 1, 2)),
    lambda: make_fan(1, (2,), [[1, -1], [1, 0]], [(0,), (1,)]),
])
def test_grid_refinement_is_monotone(make):
    fan = make()
    O = structure_sheaf(fan)
    for m in (2, 3):
        coarse = pushforward_by_lattice(fan, O, m)
        for factor in (2, 3):
            assert coarse <= pushforward_by_lattice(fan, O, m * factor)


class TestStableSummands:

    def test_p2(self, p2):
        H = divisor(p2, 1)
        assert stable_summands(p2) == {structure_sheaf(p2), -H, -2 * H}

    @pytest.mark.parametrize("c", [2, 3])
    def test_root_of_plane(self, c):
        fan, _ = root_stack_divisors(projective_plane(), (c, c, c))
        expected = {bundle(fan, [i, j, k - i - j]) for i in range(c) for j in range(c) for k in (0, -1, -2)}
        summands = stable_summands(fan)
        assert summands == expected
        assert len(summands) == 3 * c * c

    def test_example_two(self, ex2_fan):
        expected = _classes(ex2_fan, ['O', 'O(-D3)', 'O(-2 D3)', 'O(D3 - D4)', 'O(-D4)',
                                      'O(-D3 - D4)', 'O(-2 D3 - D4)'])
        assert stable_summands(ex2_fan) == expected

    def test_example_three(self, ex3_fan):
        expected = _classes(ex3_fan, [
            'O', 'O(-D3 - D4)', 'O(-2 D3 - D4)', 'O(D3 - D5)', 'O(-D5)',
            'O(-2 D3 - D4 - D5)', 'O(-D3 - D4 - D5)', 'O(-D4 - D5)', 'O(D3 - D4 - D5)',
        ])
        assert stable_summands(ex3_fan) == expected

    def test_contains_structure_sheaf(self, stacky_fan_factory):
        for _ in range(5):
            fan = stacky_fan_factory()
            try:
                summands = stable_summands(fan)
            except GridTooLargeError:
                continue
            assert structure_sheaf(fan) in summands

    def test_certified_grid_size(self, p2, ex3_fan):
        assert certified_grid_size(p2) == 6
        assert certified_grid_size(ex3_fan) == 12

    def test_self_check(self, ex2_fan, monkeypatch):
        monkeypatch.setattr(Config, 'SELF_CHECK', True)
        assert len(stable_summands(ex2_fan)) == 7


class TestDegreeWindow:

    @pytest.mark.parametrize("weights", [(1, 1, 1), (1, 1, 2), (1, 2, 3)])
    def test_window_holds(self, weights):
        assert degree_window_check(weighted_projective(weights)) == []

    def test_p111_summands(self):
        fan = weighted_projective((1, 1, 1))
        H = divisor(fan, 1)
        assert stable_summands(fan) == {structure_sheaf(fan), -H, -2 * H}

    def test_needs_rank_one(self):
        with pytest.raises(UnsupportedFanError):
            degree_window_check(product_of_lines())


class TestRootStackDecomposition:

    def test_orbifold_is_trivially_true(self, p2):
        assert rootstack_summand_decomposition_check(p2)

    def test_line_times_gerbe(self):
        fan = make_fan(1, (2,), [[1, -1], [0, 0]], [(0,), (1,)])
        assert rootstack_summand_decomposition_check(fan)

    def test_root_of_weighted_line(self):
        assert rootstack_summand_decomposition_check(root_of_weighted_projective(2))

    def test_rejects_other_shapes(self):
        fan = make_fan(1, (2,), [[1, -1], [1, 0]], [(0,), (1,)])
        with pytest.raises(UnsupportedFanError):
            rootstack_summand_decomposition_check(fan)


def test_certification_error_is_a_domain_error():
    assert issubclass(CertificationError, ValueError)
