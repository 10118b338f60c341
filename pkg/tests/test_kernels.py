import numpy as np
import pytest

from qutil.algokit import (
    angle_encoder,
    circles_dataset,
    layered_encoder,
    quantum_kernel_matrix,
    train_kernel_classifier,
)
from qutil.algokit.datasets import LabeledDataset, antipodal_dataset
from qutil.profiler import ResourceRecorder, profile
from qutil.simcore import run_statevector


def direct_kernel(encoder, data) -> np.ndarray:
    states = [run_statevector(encoder, x).amplitudes for x in data.features]
    m = len(states)
    out = np.empty((m, m))
    for i in range(m):
        for j in range(m):
            out[i, j] = abs(np.vdot(states[i], states[j])) ** 2
    return out


class TestKernelMatrix:
    def test_matches_direct_state_overlaps(self):
        data = circles_dataset(6, seed=1)
        encoder = angle_encoder(2)
        kernel = quantum_kernel_matrix(data, encoder)
        np.testing.assert_allclose(kernel, direct_kernel(encoder, data), atol=1e-12)

    def test_symmetric_unit_diagonal_psd(self):
        data = circles_dataset(8, seed=2)
        kernel = quantum_kernel_matrix(data, layered_encoder(2))
        np.testing.assert_allclose(kernel, kernel.T, atol=1e-14)
        np.testing.assert_allclose(np.diag(kernel), 1.0, atol=1e-14)
        assert np.linalg.eigvalsh(kernel).min() >= -1e-9

    def test_circuit_budget_is_pairs_only(self):
        data = circles_dataset(7, seed=0)
        recorder = ResourceRecorder()
        quantum_kernel_matrix(data, recorder=recorder)
        assert profile(recorder).circuits_executed == 7 * 6 // 2

    def test_shot_mode_close_to_exact(self):
        data = circles_dataset(5, seed=3)
        exact = quantum_kernel_matrix(data)
        sampled = quantum_kernel_matrix(data, mode="shots", shots=200_000, seed=1)
        np.testing.assert_allclose(sampled, exact, atol=0.01)

    def test_identical_points_give_unit_entry(self):
        data = LabeledDataset((((0.4, 0.9), 1), ((0.4, 0.9), -1)))
        kernel = quantum_kernel_matrix(data)
        assert kernel[0, 1] == pytest.approx(1.0, abs=1e-12)

    def test_feature_dim_mismatch_rejected(self):
        with pytest.raises(ValueError):
            quantum_kernel_matrix(circles_dataset(4), encoder=angle_encoder(3))

    def test_bad_mode_rejected(self):
        with pytest.raises(ValueError):
            quantum_kernel_matrix(circles_dataset(4), mode="noisy")


class TestKernelClassifier:
    def test_separates_antipodal_points(self):
        data = antipodal_dataset()
        kernel = quantum_kernel_matrix(data)
        clf = train_kernel_classifier(kernel, data.labels, ridge=1e-3)
        assert clf.training_accuracy == 1.0

    def test_training_accuracy_matches_predictions(self):
        data = circles_dataset(10, seed=4)
        kernel = quantum_kernel_matrix(data, layered_encoder(2))
        clf = train_kernel_classifier(kernel, data.labels, ridge=1e-3)
        preds = [clf.predict(kernel[:, j]) for j in range(len(data))]
        manual = float(np.mean(np.array(preds) == data.labels))
        assert clf.training_accuracy == pytest.approx(manual)

    def test_rejects_non_binary_labels(self):
        with pytest.raises(ValueError):
            train_kernel_classifier(np.eye(2), [0, 1], ridge=1e-3)

    def test_rejects_nonpositive_ridge(self):
        with pytest.raises(ValueError):
            train_kernel_classifier(np.eye(2), [-1, 1], ridge=0.0)

    def test_rejects_shape_mismatch(self):
        with pytest.raises(ValueError):
            train_kernel_classifier(np.eye(3), [-1, 1], ridge=1e-3)
