import numpy as np
import pytest

from helpers import random_map, random_orthogonal, random_regular_point
from titeica.centroaffine import CentroAffineMap, apply_map, verify_scaling
from titeica.cli import classify
from titeica.errors import SignatureError
from titeica.invariants import oriented_volumes, titeica_ratio
from titeica.surfaces import EUCLIDEAN, catalog, eval_surface, grid_points


def test_construction_rejects_singular():
    with pytest.raises(ValueError):
        CentroAffineMap.of([[1, 0, 0], [0, 1, 0], [1, 1, 0]])
    with pytest.raises(ValueError):
        CentroAffineMap.of(np.eye(3) * 1e-5)  # det = 1e-15


def test_identity_action_is_exact():
    s = catalog("titeica-xyz")
    image = apply_map(s, CentroAffineMap.identity())
    for x, y in grid_points(s.domain, 5, 5):
        before = titeica_ratio(eval_surface(s, x, y), EUCLIDEAN)
        after = titeica_ratio(eval_surface(image, x, y), EUCLIDEAN)
        assert abs(after - before) <= 1e-14 * max(1.0, abs(before))


def test_uniform_scaling_maps_sphere_to_sphere():
    # 2I has det 8; the image of the unit sphere is the radius-2 sphere,
    # so its ratio is 1/64 = (1/8^2) * 1
    s = catalog("sphere-origin", R=1.0)
    image = apply_map(s, CentroAffineMap.of(2.0 * np.eye(3)))
    for x, y in grid_points(s.domain, 5, 5):
        sj = eval_surface(image, x, y)
        assert abs(np.linalg.norm(sj.f) - 2.0) <= 1e-12
        assert abs(titeica_ratio(sj, EUCLIDEAN) - 1.0 / 64.0) <= 1e-9


def test_diagonal_map_on_titeica_xyz():
    s = catalog("titeica-xyz")
    a = CentroAffineMap.of(np.diag([2.0, 1.0, 1.0]))
    image = apply_map(s, a)
    for x, y in grid_points(s.domain, 5, 5):
        after = titeica_ratio(eval_surface(image, x, y), EUCLIDEAN)
        assert abs(after - 1.0 / 108.0) <= 1e-9  # (1/4) * (1/27)


def test_verify_scaling_identity_map():
    report = verify_scaling(
        catalog("paraboloid"), CentroAffineMap.identity(),
        grid_points(catalog("paraboloid").domain, 5, 4), 1e-10,
    )
    assert report.passed
    assert report.max_ratio_residual <= 1e-12


def test_verify_scaling_diag_on_titeica():
    s = catalog("titeica-xyz")
    a = CentroAffineMap.of(np.diag([2.0, 1.0, 1.0]))
    report = verify_scaling(s, a, grid_points(s.domain, 5, 4), 1e-8)
    assert report.passed
    for p in report.points:
        assert p.skipped is None
        assert abs(p.ratio_after - 1.0 / 108.0) <= 1e-10


def test_verify_scaling_reflection_preserves_ratio():
    rng = np.random.default_rng(31)
    s = catalog("paraboloid")
    a = random_orthogonal(rng, det_sign=-1.0)
    points = [random_regular_point(rng, s) for _ in range(20)]
    report = verify_scaling(s, a, points, 1e-9)
    assert report.passed
    for p in report.points:
        assert abs(p.ratio_after - p.ratio_before) <= 1e-9 * max(1.0, abs(p.ratio_before))


def test_group_property():
    rng = np.random.default_rng(37)
    s = catalog("titeica-xyz")
    for _ in range(10):
        a = random_map(rng)
        b = random_map(rng)
        ab = a @ b
        points = [random_regular_point(rng, s) for _ in range(5)]
        report = verify_scaling(s, ab, points, 1e-8)
        assert report.passed
        # sequential application agrees with the composed map
        seq = apply_map(apply_map(s, a), b)
        direct = apply_map(s, ab)
        for x, y in points:
            r1 = titeica_ratio(eval_surface(seq, x, y), EUCLIDEAN)
            r2 = titeica_ratio(eval_surface(direct, x, y), EUCLIDEAN)
            assert abs(r1 - r2) <= 1e-8 * max(1.0, abs(r2))


def test_volume_scales_by_det():
    rng = np.random.default_rng(41)
    surfaces = [catalog("titeica-xyz"), catalog("paraboloid"), catalog("sphere-origin", R=1.5)]
    for _ in range(200):
        s = surfaces[int(rng.integers(0, len(surfaces)))]
        a = random_map(rng)
        image = apply_map(s, a)
        x, y = random_regular_point(rng, s, min_distance=5e-2)
        v = oriented_volumes(eval_surface(s, x, y)).V
        v_image = oriented_volumes(eval_surface(image, x, y)).V
        assert abs(v_image - a.det * v) <= 1e-10 * abs(a.det * v)


def test_rotation_leaves_ratio_unchanged():
    rng = np.random.default_rng(43)
    for name in ("titeica-xyz", "paraboloid"):
        s = catalog(name)
        for _ in range(5):
            rot = random_orthogonal(rng, det_sign=1.0)
            image = apply_map(s, rot)
            for _ in range(5):
                x, y = random_regular_point(rng, s)
                before = titeica_ratio(eval_surface(s, x, y), EUCLIDEAN)
                after = titeica_ratio(eval_surface(image, x, y), EUCLIDEAN)
                assert abs(after - before) <= 1e-10 * max(1.0, abs(before))


def test_classification_invariant_under_unimodular_maps():
    rng = np.random.default_rng(47)
    for name, params in (("titeica-xyz", {}), ("sphere-origin", {"R": 1.0})):
        s = catalog(name, **params)
        base = classify(s, grid=(10, 10), tol=1e-8)
        assert base.is_titeica
        for sign in (1.0, -1.0):
            image = apply_map(s, random_orthogonal(rng, det_sign=sign))
            verdict = classify(image, grid=(10, 10), tol=1e-8)
            assert verdict.is_titeica == base.is_titeica
            assert abs(verdict.ratio_constant - base.ratio_constant) <= 1e-8 * max(
                1.0, abs(base.ratio_constant)
            )
    # non-constant verdicts survive too
    s = catalog("sphere-translated", R=1.0, c=2.0)
    base = classify(s, grid=(10, 10), tol=1e-8)
    assert not base.is_titeica
    image = apply_map(s, random_orthogonal(rng, det_sign=1.0))
    assert not classify(image, grid=(10, 10), tol=1e-8).is_titeica


def test_apply_map_requires_euclidean_ambient():
    with pytest.raises(SignatureError):
        apply_map(catalog("minkowski-sphere"), CentroAffineMap.identity())


def test_all_skipped_run_fails():
    s = catalog("plane")  # every tangent plane passes through the origin
    report = verify_scaling(s, CentroAffineMap.identity(), grid_points(s.domain, 3, 3), 1e-8)
    assert not report.passed
    assert report.n_evaluated == 0
    assert report.n_skipped == 9
