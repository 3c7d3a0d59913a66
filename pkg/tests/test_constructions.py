import numpy as np
import pytest

from src.algebra import identity
from src.constructions import (
    cone_coordinates,
    frobenius_morphism,
    hilbert_basis_ray,
    identity_morphism,
    make_morphism,
    pullback,
    resolve_2d,
    rigidification,
    rigidification_bundles,
    root_of_weighted_projective,
    root_stack_divisors,
    root_stack_line_bundles,
    singular_cones,
    substack,
    validate_morphism,
    weighted_blowup,
)
from src.errors import FanValidationError, MorphismError, ToricError, UnsupportedFanError
from src.fans import (
    bundle,
    divisor,
    pic_description,
    projective_plane,
    ray_data,
    structure_sheaf,
    validate,
    weighted_projective,
)


class TestMorphisms:

    def test_identity_is_valid(self, ex3_fan):
        phi = identity_morphism(ex3_fan)
        assert validate_morphism(phi) == []
        L = bundle(ex3_fan, [0, 0, 1, 0, -1])
        assert pullback(phi, L) == L

    def test_frobenius_pullback_multiplies(self, p2):
        phi = frobenius_morphism(p2, 3)
        assert pullback(phi, divisor(p2, 1)) == 3 * divisor(p2, 1)

    def test_frobenius_rejects_zero(self, p2):
        with pytest.raises(MorphismError):
            frobenius_morphism(p2, 0)

    def test_antipodal_map_is_not_a_fan_map(self, p2):
        with pytest.raises(MorphismError, match='does not map into a target cone'):
            make_morphism(p2, p2, C=-identity(3), D=-identity(2),
                          E=np.zeros((0, 0), dtype=object), F=np.zeros((0, 3), dtype=object))

    def test_pullback_needs_target_bundle(self, p2, ex3_fan):
        with pytest.raises(MorphismError):
            pullback(identity_morphism(p2), structure_sheaf(ex3_fan))

    def test_cone_coordinates(self):
        assert cone_coordinates([1, 1], [(1, 0), (0, 1)]) == [1, 1]
        assert cone_coordinates([2, 4], [(1, 2)]) == [2]
        assert cone_coordinates([1, 0], [(0, 1)]) is None
        assert cone_coordinates([0, 0], []) == []


class TestRootStacks:

    def test_root_of_divisors(self, p2):
        rooted, phi = root_stack_divisors(p2, (2, 2, 2))
        assert [[int(x) for x in row] for row in rooted.B] == [[2, 0, -2], [0, 2, -2]]
        assert validate_morphism(phi) == []
        assert pullback(phi, divisor(p2, 1)) == bundle(rooted, [2, 0, 0])
        assert [ray_data(rooted, i).b for i in (1, 2, 3)] == [2, 2, 2]

    def test_root_order_checks(self, p2):
        with pytest.raises(ToricError):
            root_stack_divisors(p2, (2, 0, 1))
        with pytest.raises(ToricError):
            root_stack_divisors(p2, (2, 2))

    def test_root_of_line_bundle(self, p2):
        rooted, phi = root_stack_line_bundles(p2, [divisor(p2, 1)], [2])
        assert rooted.n == 2
        assert rooted.torsion == (2,)
        assert validate(rooted) == []
        assert pic_description(rooted) == 'Z'
        assert validate_morphism(phi) == []

    def test_root_of_line_bundle_checks_fan(self, p2, ex3_fan):
        with pytest.raises(ToricError):
            root_stack_line_bundles(p2, [structure_sheaf(ex3_fan)], [2])

    def test_rigidification(self):
        fan = weighted_projective((2, 2))
        rig, psi = rigidification(fan)
        assert rig.r == 0
        assert rig.n == 1
        assert validate(rig) == []
        assert len(rigidification_bundles(fan, rig)) == 1
        assert validate_morphism(psi) == []


class TestSubstack:

    def test_divisor_of_plane_is_a_line(self, p2):
        line = substack(p2, (0,))
        assert (line.n, line.torsion, line.s) == (1, (), 2)
        assert sorted(int(x) for x in line.B[0]) == [-1, 1]

    def test_divisor_with_multiplicity_carries_a_gerbe(self, ex2_fan):
        # ray 3 is 2·(-1, 1)
        curve = substack(ex2_fan, (2,))
        assert curve.n == 1
        assert curve.torsion == (2,)
        assert validate(curve) == []

    def test_torus_fixed_point(self, p2):
        point = substack(p2, (0, 1))
        assert point.n == 0
        assert point.s == 0

    def test_rejects_missing_cone(self, p2):
        with pytest.raises(FanValidationError):
            substack(p2, (0, 1, 2))
        with pytest.raises(ToricError):
            substack(p2, ())


class TestBlowups:

    def test_blowup_of_plane_at_a_point(self, p2):
        step = weighted_blowup(p2, (0, 1), (1, 1))
        assert step.b_new == 1
        assert step.c == (1, 1)
        assert step.fan.s == 4
        assert pic_description(step.fan) == 'Z^2'

    def test_blowup_with_multiplicity(self, ex2_fan):
        step = weighted_blowup(ex2_fan, (2, 3), (-1, 0))
        assert step.b_new == 2
        assert step.c == (1, 2)
        assert [int(x) for x in step.fan.B[:, 4]] == [-2, 0]
        assert pullback(step.morphism, divisor(ex2_fan, 3)) == bundle(step.fan, [0, 0, 1, 0, 1])

    @pytest.mark.parametrize("c", [2, 3])
    def test_blowup_of_equal_multiplicity_cone(self, p2, c):
        rooted, _ = root_stack_divisors(p2, (c, c, 1))
        step = weighted_blowup(rooted, (0, 1), (1, 1))
        assert step.b_new == c
        assert step.c == (1, 1)
        assert pullback(step.morphism, divisor(rooted, 1)) == bundle(step.fan, [1, 0, 0, 1])
        assert pullback(step.morphism, divisor(rooted, 3)) == bundle(step.fan, [0, 0, 1, 0])

        exceptional = substack(step.fan, (3,))
        model = root_of_weighted_projective(c)
        assert (exceptional.n, exceptional.torsion) == (model.n, model.torsion)
        assert pic_description(exceptional) == pic_description(model)

    @pytest.mark.parametrize("v_new, message", [
        ((2, 2), 'not primitive'),
        ((1, -1), 'not in the interior'),
    ])
    def test_bad_new_ray(self, p2, v_new, message):
        with pytest.raises(ToricError, match=message):
            weighted_blowup(p2, (0, 1), v_new)

    def test_needs_orbifold(self):
        with pytest.raises(UnsupportedFanError):
            weighted_blowup(weighted_projective((2, 2)), (0,), (1,))

    def test_hilbert_basis_ray(self):
        assert hilbert_basis_ray((1, 0), (1, 2)) == (1, 1)
        assert hilbert_basis_ray((1, 0), (1, 3)) == (1, 1)
        with pytest.raises(ToricError):
            hilbert_basis_ray((1, 0), (0, 1))


class TestResolution:

    def test_smooth_fan_needs_nothing(self, p2):
        assert resolve_2d(p2) == []

    def test_p112(self):
        fan = weighted_projective((1, 1, 2))
        assert len(singular_cones(fan)) == 1
        steps = resolve_2d(fan)
        assert len(steps) == 1
        assert steps[0].v_new == tuple(-x for x in fan.ray(2))
        # -v3 = (v1 + v2)/2, so the new ray carries multiplicity 2
        assert steps[0].b_new == 2
        assert singular_cones(steps[0].fan) == []
        assert pic_description(steps[0].fan) == 'Z^2'

    @pytest.mark.parametrize("weights", [(1, 2, 3), (1, 3, 5)])
    def test_resolution_is_smooth(self, weights):
        steps = resolve_2d(weighted_projective(weights))
        assert steps
        final = steps[-1].fan
        assert singular_cones(final) == []
        assert validate(final) == []
