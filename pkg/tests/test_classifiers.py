import numpy as np
import pytest

from qutil.algokit import run_qvc, run_reuploading
from qutil.algokit.datasets import antipodal_dataset, circles_dataset
from qutil.algokit.reuploading import bind_features, build_reuploading_circuit
from qutil.algokit.datasets import LabeledDataset
from qutil.profiler import ResourceRecorder, profile
from qutil.simcore import NoiseModel


class TestQvc:
    def test_learns_antipodal_points_exactly(self):
        trace = run_qvc(antipodal_dataset(), seed=0)
        assert trace.extras["accuracy"] == 1.0

    def test_loss_decreases(self):
        trace = run_qvc(circles_dataset(8, seed=1), epochs=20, seed=0)
        losses = [v for v, _ in trace.series]
        assert losses[-1] < losses[0]

    def test_noisy_training_still_separates_antipodal(self):
        trace = run_qvc(
            antipodal_dataset(),
            noise=NoiseModel(0.002, 0.005),
            epochs=40,
            shots=512,
            seed=0,
        )
        assert trace.extras["accuracy"] == 1.0

    def test_recorder_counts_one_circuit_per_point(self):
        data = circles_dataset(6, seed=2)
        recorder = ResourceRecorder()
        run_qvc(data, epochs=4, seed=0, recorder=recorder)
        prof = profile(recorder)
        assert prof.circuits_executed % len(data) == 0
        assert len(recorder.events) >= 1
        assert all(e.circuits == len(data) for e in recorder.events)

    def test_rejects_non_binary_labels(self):
        data = LabeledDataset((((0.1, 0.2), 0), ((0.3, 0.4), 1)))
        with pytest.raises(ValueError):
            run_qvc(data)

    def test_deterministic_per_seed(self):
        data = circles_dataset(6, seed=5)
        a = run_qvc(data, epochs=5, seed=9)
        b = run_qvc(data, epochs=5, seed=9)
        assert a.series == b.series


class TestReuploading:
    def test_circuit_grows_linearly_with_layers(self):
        d1 = build_reuploading_circuit(2, 1).depth()
        d2 = build_reuploading_circuit(2, 2).depth()
        d3 = build_reuploading_circuit(2, 3).depth()
        assert d2 - d1 == d3 - d2 > 0

    def test_single_qubit_model(self):
        circ = bind_features((0.3, 0.8), layers=2)
        assert circ.num_qubits == 1
        assert circ.num_params == 6

    def test_learns_antipodal_points(self):
        trace = run_reuploading(antipodal_dataset(), layers=2, seed=0)
        assert trace.extras["accuracy"] == 1.0

    def test_more_layers_fit_circles_at_least_as_well(self):
        data = circles_dataset(16, seed=0)
        shallow = run_reuploading(data, layers=1, sweeps=30, seed=0)
        deep = run_reuploading(data, layers=3, sweeps=30, seed=0)
        assert deep.extras["accuracy"] >= shallow.extras["accuracy"]

    def test_rejects_zero_layers(self):
        with pytest.raises(ValueError):
            run_reuploading(antipodal_dataset(), layers=0)

    def test_rejects_non_binary_labels(self):
        data = LabeledDataset((((0.1,), 2), ((0.2,), 1)))
        with pytest.raises(ValueError):
            run_reuploading(data)
