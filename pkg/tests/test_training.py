"""
固定角度训练测试
"""

import numpy as np
import pytest
from pydantic import ValidationError

from schnorr_qaoa.errors import InvalidInputError
from schnorr_qaoa.pipeline import build_training_set
from schnorr_qaoa.qaoa import (
    FixedAngleTrainer,
    QaoaAngles,
    SearchConfig,
    qubo_energies,
    train_fixed_angles,
    training_metric,
)

SMALL_QUBO = np.array([[1.0, -3.0], [0.0, 1.0]])


class TestMetric:
    def test_energies_use_msb_first(self):
        assert qubo_energies(SMALL_QUBO).tolist() == [0.0, 1.0, 1.0, -1.0]
        assert qubo_energies(np.array([[0.0, 0.0], [0.0, -1.0]])).tolist() == [0.0, -1.0, 0.0, -1.0]

    def test_zero_matrix_ratio_is_one(self):
        metric = training_metric(np.zeros((3, 3)), QaoaAngles(1.3, 0.7))
        assert metric.p_c == 1.0
        assert metric.ratio == pytest.approx(1.0)

    def test_zero_beta_ratio_is_one(self):
        metric = training_metric(SMALL_QUBO, QaoaAngles(2.0, 0.0))
        assert metric.p_c == pytest.approx(0.25)
        assert metric.ratio == pytest.approx(1.0)

    def test_accepts_qubo_problem(self, reference_lattice, reference_reduced):
        from schnorr_qaoa.lattice import babai_nearest_plane_ceil, build_qubo

        babai = babai_nearest_plane_ceil(reference_reduced, reference_lattice.target)
        qubo = build_qubo(babai, reference_reduced)
        metric = training_metric(qubo, QaoaAngles(8 / 3, 0.33))
        assert 0.0 <= metric.p_q <= 1.0
        assert metric.ratio == pytest.approx(metric.p_q / metric.p_c)

    def test_mixer_sign_equals_negated_beta(self):
        flipped = training_metric(SMALL_QUBO, QaoaAngles(2.0, 0.4), mixer_sign=-1)
        negated = training_metric(SMALL_QUBO, QaoaAngles(2.0, -0.4), mixer_sign=1)
        assert flipped.ratio == pytest.approx(negated.ratio)

    def test_beta_has_period_pi(self):
        base = training_metric(SMALL_QUBO, QaoaAngles(1.7, 0.6))
        shifted = training_metric(SMALL_QUBO, QaoaAngles(1.7, 0.6 + np.pi))
        assert shifted.ratio == pytest.approx(base.ratio)


class TestTrainer:
    def test_zero_matrix_training(self):
        report = FixedAngleTrainer(
            SearchConfig(seed=1, restarts=1, evaluations_per_restart=10)
        ).train([np.zeros((2, 2))])
        assert report.best_score == pytest.approx(1.0)

    def test_never_worse_than_start(self):
        config = SearchConfig(
            seed=3,
            restarts=2,
            evaluations_per_restart=40,
            grid_points=None,
            initial_point=(2.64, 0.33),
        )
        report = FixedAngleTrainer(config).train([SMALL_QUBO])
        assert report.best_score >= report.initial_score
        assert report.evaluations <= 80
        assert 0.0 <= report.angles.gamma <= 2 * np.pi
        assert 0.0 <= report.angles.beta <= np.pi

    def test_deterministic(self):
        config = SearchConfig(seed=5, restarts=1, evaluations_per_restart=30)
        assert train_fixed_angles([SMALL_QUBO], config) == train_fixed_angles([SMALL_QUBO], config)

    def test_empty_training_set(self):
        with pytest.raises(InvalidInputError):
            FixedAngleTrainer().train([])

    def test_fold_wraps_beta_and_reflects_gamma(self):
        trainer = FixedAngleTrainer()
        assert trainer.fold(np.array([1.0, np.pi + 0.2])) == pytest.approx([1.0, 0.2])
        assert trainer.fold(np.array([1.0, -0.1])) == pytest.approx([1.0, np.pi - 0.1])
        assert trainer.fold(np.array([-0.3, 0.5])) == pytest.approx([0.3, 0.5])
        assert trainer.fold(np.array([2 * np.pi + 0.3, 0.5])) == pytest.approx([2 * np.pi - 0.3, 0.5])

    def test_grid_scan_is_ranked(self):
        trainer = FixedAngleTrainer(SearchConfig(grid_points=(4, 2)))
        ranked = trainer.grid_scan([SMALL_QUBO])
        assert len(ranked) == 8
        assert trainer.evaluations == 8
        scores = [score for score, _ in ranked]
        assert scores == sorted(scores, reverse=True)
        assert {round(point[1], 6) for _, point in ranked} == {0.0, round(np.pi / 2, 6)}

    def test_invalid_grid(self):
        with pytest.raises(ValidationError):
            SearchConfig(grid_points=(0, 4))

    def test_invalid_search_config(self):
        with pytest.raises(ValidationError):
            SearchConfig(gamma_range=(1.0, 0.5))
        with pytest.raises(ValidationError):
            SearchConfig(sigma0=0)


class TestTrainingSet:
    def test_build_training_set(self):
        qubos = build_training_set(1591, 4, 3, seed=11)
        assert len(qubos) == 3
        assert all(q.n == 4 for q in qubos)
        again = build_training_set(1591, 4, 3, seed=11)
        assert [q.raw for q in qubos] == [q.raw for q in again]

    def test_size_validation(self):
        with pytest.raises(InvalidInputError):
            build_training_set(1591, 4, 0)

    @pytest.mark.slow
    def test_trained_angles_beat_random_sampling(self):
        training_set = build_training_set(1591, 6, 10, seed=7)
        report = FixedAngleTrainer(
            SearchConfig(seed=7, initial_point=(8 / 3, 0.33))
        ).train(training_set)
        assert report.best_score >= report.initial_score
        assert report.best_score > 1.0

    @pytest.mark.slow
    def test_leaves_zero_beta_plateau(self):
        training_set = build_training_set(1591, 6, 10, seed=7)
        report = FixedAngleTrainer(
            SearchConfig(seed=7, restarts=2, evaluations_per_restart=60, initial_point=(2.44, 0.0))
        ).train(training_set)
        assert report.initial_score == pytest.approx(1.0)
        assert report.best_score > 1.0
        assert report.angles.beta > 0.0
