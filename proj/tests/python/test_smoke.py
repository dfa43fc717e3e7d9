import math

import numpy as np
import pytest

capca = pytest.importorskip("capca")
analytic = capca.analytic


def test_worked_example():
    s = capca.EigenSpectrum([0.21, 0.15])
    assert capca.capca_estimate(s) == 2
    assert capca.pca_estimate(s) == 2
    assert capca.reference_spectrum(2, 4) == pytest.approx([0.25, 0.25, 0.0, 0.0])


def test_point_cloud_and_knn():
    pts = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 2.0], [3.0, 3.0]])
    cloud = capca.PointCloud(pts, "tiny")
    assert len(cloud) == 4 and cloud.dim == 2
    np.testing.assert_array_equal(cloud.points, pts)
    nb = capca.knn(cloud, 0, 2)
    assert nb.indices == [1, 2, 3]
    assert nb.r == pytest.approx((2.0 + math.sqrt(18.0)) / 2)


def test_csv_round_trip(tmp_path):
    cloud = capca.sample("klein", 50, seed=2)
    path = tmp_path / "klein.csv"
    capca.save_csv(cloud, path)
    back = capca.load_csv(path)
    np.testing.assert_array_equal(back.points, cloud.points)


def test_plane_interior_is_two():
    g = np.stack(np.meshgrid(np.arange(15.0), np.arange(15.0), indexing="ij"), -1).reshape(-1, 2)
    q, _ = np.linalg.qr(np.random.default_rng(0).normal(size=(5, 2)))
    cloud = capca.PointCloud(g @ q.T)
    center = 7 * 15 + 7
    assert capca.estimate_at_point(cloud, center, 20, "capca") == 2.0
    assert capca.estimate_at_point(cloud, center, 20, "pca") == 2.0


def test_sweep_is_deterministic():
    cloud = capca.sample("klein", 400, seed=1)
    a = capca.run_sweep(cloud, k_min=5, k_max=15, seed=3, threads=1)
    b = capca.run_sweep(cloud, k_min=5, k_max=15, seed=3, threads=3)
    assert a.csv() == b.csv()
    assert a.csv().startswith("estimator,k,mean,std,skipped\n")
    assert len(a.rows) == 3 * 11
    assert "<svg" in a.svg(true_dim=2)


def test_errors_map_to_python():
    cloud = capca.sample("sphere", 20, seed=1, dim=2)
    with pytest.raises(ValueError):
        capca.sample("torus", 10)
    with pytest.raises(capca.Error):
        capca.run_sweep(cloud, k_min=5, k_max=50)
    dup = capca.PointCloud(np.zeros((10, 3)))
    with pytest.raises(capca.DegenerateNeighborhood):
        capca.estimate_at_point(dup, 0, 3, "lb")


def test_analytic():
    assert analytic.trace_sigma2(3, 0.2) == pytest.approx(0.016)
    assert analytic.curvature_from_tail(1, 0.15) == pytest.approx(27 / 40)
    assert analytic.sphere_moment([2, 0, 0]) == pytest.approx(4 * math.pi / 3)
    assert analytic.sphere_moment([1, 2]) == 0.0
    low, high = analytic.eigenvalue_bounds(2, 0.0, 0.0)
    assert low == high == pytest.approx(0.25)
    emb = analytic.QuadraticEmbedding([np.diag([0.1, 0.05])])
    mc = analytic.mc_covariance(emb, 20000, seed=1)
    assert mc["covariance"].shape == (3, 3)
    assert abs(mc["upper_trace"] - 0.5) < 0.02


def test_verify_suite():
    passed, text = capca.verify("signs", seed=1)
    assert passed and "signs: PASS" in text
