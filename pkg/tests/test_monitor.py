"""
Tests for the debounced detection loop, frame streams and the trend model
"""

import itertools

import numpy as np
import pytest

from src.classify import Classifier, Prediction, knn_train
from src.errors import CsvFormatError, StreamError, TrendError
from src.features import FIXTURE_ATTRIBUTES, build_dataset, most_discriminant_attribute, \
    table3_fixture
from src.models import (DRY_LAYER_A, MICRO_COLLAPSE, NORMAL, ClassLabel, Dataset, DetectionEvent,
                        FeatureVector, FrameSample, Roi, TrendModel)
from src.monitor import (CollapseDetector, check_stream_order, class_midpoint,
                         fit_polynomial_trend, image_stream, locate_transition_from_trend,
                         open_stream, read_stream_csv, run_detection_loop, write_events_csv,
                         write_stream_csv)
from src.utils import DataGenerator


class ThresholdClassifier(Classifier):
    """'normal' above 0.5 on attribute x, 'micro-collapse' otherwise."""
    kind = 'threshold'

    @property
    def attribute_names(self):
        return ('x',)

    @property
    def classes(self):
        return (ClassLabel(NORMAL), ClassLabel(MICRO_COLLAPSE))

    def predict(self, v):
        self.check_schema(v)
        label = ClassLabel(NORMAL) if v['x'] > 0.5 else ClassLabel(MICRO_COLLAPSE)
        return Prediction(label, 0.9, {label: 0.9})

    def to_dict(self):
        return {}


def _x_stream(values, cadence=72.0):
    return [FrameSample(i, i * cadence, FeatureVector((v,), ('x',))) for i, v in enumerate(values)]


def _feed(detector, labels, confidences=None):
    confidences = confidences or [1.0] * len(labels)
    for i, (label, conf) in enumerate(zip(labels, confidences)):
        detector.update(i, i * 72.0, ClassLabel(label), conf)
    return detector.events


class TestCollapseDetector:
    """Test cases for the debouncing state machine"""

    def test_first_frame_sets_state(self):
        """Test no event for the initial state"""
        detector = CollapseDetector(3)
        assert detector.update(0, 0.0, ClassLabel(NORMAL)) is None
        assert detector.committed == NORMAL
        assert detector.events == []

    def test_committed_after_debounce(self):
        """Test the event is stamped with the first agreeing frame"""
        events = _feed(CollapseDetector(3), ['n', 'n', 'm', 'm', 'm', 'm'])
        assert len(events) == 1
        assert events[0].frame_index == 2
        assert events[0].timestamp == 144.0
        assert (events[0].from_state, events[0].to_state) == ('n', 'm')

    def test_glitch_ignored(self):
        """Test a run shorter than debounce does not commit"""
        assert _feed(CollapseDetector(3), ['n', 'm', 'm', 'n', 'n', 'm']) == []

    def test_run_restarts_after_return(self):
        """Test returning to the committed state resets the run"""
        events = _feed(CollapseDetector(3), ['n', 'm', 'n', 'm', 'm', 'm'])
        assert [e.frame_index for e in events] == [3]

    def test_candidate_switch_restarts_run(self):
        """Test a different new label starts a new run"""
        events = _feed(CollapseDetector(3), ['n', 'm', 'd', 'd', 'd'])
        assert len(events) == 1
        assert events[0].frame_index == 2
        assert events[0].to_state == 'd'

    def test_four_class_stream(self):
        """Test the dry layer commits once three frames agree on it"""
        labels = [NORMAL, MICRO_COLLAPSE, DRY_LAYER_A, DRY_LAYER_A]
        assert _feed(CollapseDetector(3), labels) == []
        events = _feed(CollapseDetector(3), labels + [DRY_LAYER_A])
        assert len(events) == 1
        assert events[0].frame_index == 2
        assert (events[0].from_state, events[0].to_state) == (NORMAL, DRY_LAYER_A)

    def test_more_debounce_never_more_events(self):
        """Test event counts do not grow with debounce over all short three-label streams"""
        for n in range(1, 9):
            for seq in itertools.product('ncd', repeat=n):
                counts = [len(_feed(CollapseDetector(m), list(seq))) for m in (1, 2, 3, 4)]
                assert counts == sorted(counts, reverse=True), seq
                changes = sum(a != b for a, b in zip(seq, seq[1:]))
                assert counts[0] == changes

    def test_mixed_labels_need_agreement(self):
        """Test streams that alternate between new labels are not committed"""
        events = _feed(CollapseDetector(3), ['n', 'c', 'd', 'd', 'c', 'c', 'c'])
        assert [(e.frame_index, e.to_state) for e in events] == [(4, 'c')]
        assert len(_feed(CollapseDetector(2), ['n', 'c', 'd', 'd', 'c', 'c', 'c'])) == 2

    def test_debounce_one(self):
        """Test immediate commit with debounce 1"""
        events = _feed(CollapseDetector(1), ['n', 'm', 'n'])
        assert [e.frame_index for e in events] == [1, 2]

    def test_confidence_is_run_mean(self):
        """Test event confidence averages the agreeing frames"""
        events = _feed(CollapseDetector(3), ['n', 'm', 'm', 'm'], [1.0, 0.6, 0.8, 1.0])
        assert events[0].confidence == pytest.approx(0.8)

    def test_reset_and_validation(self):
        """Test reset clears state and debounce must be >= 1"""
        detector = CollapseDetector(1)
        _feed(detector, ['n', 'm'])
        detector.reset()
        assert detector.committed is None
        assert detector.events == []
        with pytest.raises(ValueError):
            CollapseDetector(0)


class TestDetectionLoop:
    """Test cases for run_detection_loop"""

    def test_labels_and_single_event(self):
        """Test a step stream with a one-frame glitch"""
        stream = _x_stream([1, 1, 0, 1, 1, 0, 0, 0, 0])
        result = run_detection_loop(stream, ThresholdClassifier(), debounce=3)
        assert result.frame_count == 9
        assert result.labels[2] == MICRO_COLLAPSE
        assert len(result.events) == 1
        assert result.events[0].frame_index == 5
        assert result.events[0].timestamp == 360.0
        assert result.confidences == [0.9] * 9

    def test_no_change(self):
        """Test a flat stream yields no events"""
        result = run_detection_loop(_x_stream([1, 1, 1]), ThresholdClassifier())
        assert result.events == []

    def test_series(self):
        """Test per-attribute time series of the run"""
        result = run_detection_loop(_x_stream([1, 0]), ThresholdClassifier(), debounce=1)
        assert result.series('x') == [(0.0, 1.0), (72.0, 0.0)]

    def test_stream_order_errors(self):
        """Test empty, repeated-index and backwards-time streams"""
        with pytest.raises(StreamError):
            check_stream_order([])
        v = FeatureVector((1.0,), ('x',))
        with pytest.raises(StreamError):
            check_stream_order([FrameSample(1, 0.0, v), FrameSample(1, 1.0, v)])
        with pytest.raises(StreamError):
            check_stream_order([FrameSample(0, 5.0, v), FrameSample(1, 4.0, v)])
        check_stream_order([FrameSample(0, 5.0, v), FrameSample(2, 5.0, v)])

    def test_image_frame_needs_rois(self, tmp_path):
        """Test image frames without sampling areas"""
        stream = [FrameSample(0, 0.0, tmp_path / "frame.pgm")]
        with pytest.raises(StreamError):
            run_detection_loop(stream, ThresholdClassifier())

    def test_fixture_stream_detects_collapse(self):
        """Test the perturbed published stream commits exactly one transition"""
        ds = table3_fixture()
        model = knn_train(ds, k=1)
        stream = DataGenerator.perturbed_fixture_stream(seed=0)
        result = run_detection_loop(stream, model, debounce=3)
        assert len(result.events) == 1
        event = result.events[0]
        assert event.frame_index == 10
        assert event.timestamp == 720.0
        assert (event.from_state, event.to_state) == (NORMAL, MICRO_COLLAPSE)

        attribute = most_discriminant_attribute(ds, measure='Levine')
        trend = fit_polynomial_trend(result.series(attribute), 3, attribute)
        crossing = locate_transition_from_trend(trend, dataset=ds)
        assert crossing is not None
        assert 8 * 72.0 <= crossing <= 12 * 72.0

    def test_image_frames(self, tmp_path):
        """Test measuring image frames, sequentially and with worker threads"""
        frames = DataGenerator.speckle_frames(n_frames=8, change_at=4, size=32, n_phasors=20)
        labels = [NORMAL if i < 4 else MICRO_COLLAPSE for i in range(8)]
        rois = [Roi(0, 0, 32, 32)]
        model = knn_train(build_dataset(frames, labels, rois), k=1)
        pattern = DataGenerator.save_frames(frames, tmp_path)

        stream = image_stream(pattern, cadence=72.0)
        assert [s.timestamp for s in stream] == [i * 72.0 for i in range(8)]
        serial = run_detection_loop(stream, model, rois=rois, debounce=2)
        threaded = run_detection_loop(stream, model, rois=rois, debounce=2, workers=2)
        assert serial.labels == labels
        assert threaded.labels == serial.labels
        assert [(e.frame_index, e.timestamp) for e in serial.events] == [(4, 288.0)]


class TestStreamFiles:
    """Test cases for stream and event CSV files"""

    def test_vector_stream_round_trip(self, tmp_path):
        """Test write/read keeps indices, timestamps and values"""
        stream = DataGenerator.perturbed_fixture_stream(seed=3)
        path = tmp_path / "stream.csv"
        write_stream_csv(stream, path)
        header = path.read_text().splitlines()[0]
        assert header == 'frame,timestamp,' + ','.join(FIXTURE_ATTRIBUTES)
        again = read_stream_csv(path)
        assert [s.index for s in again] == list(range(20))
        assert again[5].timestamp == 360.0
        assert again[7].source.values == stream[7].source.values

    def test_open_stream_dispatch(self, tmp_path):
        """Test .csv paths are vector streams"""
        path = tmp_path / "s.csv"
        write_stream_csv(_x_stream([1.0, 0.0]), path)
        assert open_stream(str(path))[1].source['x'] == 0.0
        with pytest.raises(StreamError):
            open_stream(str(tmp_path / "*.pgm"))

    def test_bad_stream_files(self, tmp_path):
        """Test header and frame-number errors"""
        path = tmp_path / "bad.csv"
        path.write_text("label,x\nnormal,1\n")
        with pytest.raises(CsvFormatError):
            read_stream_csv(path)
        path.write_text("frame,timestamp,x\n1.5,0,1\n")
        with pytest.raises(CsvFormatError) as excinfo:
            read_stream_csv(path)
        assert excinfo.value.column == 'frame'
        path.write_text("frame,timestamp,x\n0,0\n")
        with pytest.raises(CsvFormatError):
            read_stream_csv(path)

    def test_events_file(self, tmp_path):
        """Test event rows"""
        event = DetectionEvent(10, 720.0, ClassLabel(NORMAL), ClassLabel(MICRO_COLLAPSE), 1.0)
        path = tmp_path / "events.csv"
        write_events_csv([event], path)
        assert path.read_text().splitlines() == [
            'frame,timestamp,from,to,confidence',
            '10,720.0,normal,micro-collapse,1.0',
        ]


class TestTrend:
    """Test cases for the polynomial trend model"""

    def test_matches_least_squares(self):
        """Test coefficients against a Vandermonde least-squares solve"""
        rng = np.random.default_rng(8)
        t = np.arange(12) * 72.0
        y = 5.0 - 0.01 * t + 2e-5 * t ** 2 + rng.normal(0, 0.1, size=t.size)
        trend = fit_polynomial_trend(list(zip(t, y)), 2, 'x')
        expected, *_ = np.linalg.lstsq(np.vander(t, 3, increasing=True), y, rcond=None)
        assert np.allclose(trend.coefficients, expected, rtol=1e-6, atol=1e-9)
        assert np.allclose(trend(t), np.vander(t, 3, increasing=True) @ expected)
        residual = np.sqrt(np.mean((trend(t) - y) ** 2))
        assert trend.residual_rms == pytest.approx(residual)

    def test_exact_interpolation(self):
        """Test d + 1 points are interpolated"""
        series = [(0.0, 1.0), (72.0, 3.0), (144.0, 2.0)]
        trend = fit_polynomial_trend(series, 2)
        assert trend.residual_rms == pytest.approx(0.0, abs=1e-9)
        assert float(trend(72.0)) == pytest.approx(3.0)
        assert trend.domain == (0.0, 144.0)

    def test_default_degree_over_hour_long_range(self):
        """Test degree 6 stays well conditioned on large timestamps"""
        t = np.arange(20) * 72.0 + 36000.0
        y = np.sin(t / 500.0)
        trend = fit_polynomial_trend(list(zip(t, y)))
        assert trend.degree == 6
        assert np.all(np.isfinite(trend(t)))
        assert trend.residual_rms < 0.1

    def test_errors(self):
        """Test degree, point count, duplicates and non-finite values"""
        with pytest.raises(TrendError):
            fit_polynomial_trend([(0.0, 1.0), (1.0, 2.0)], -1)
        with pytest.raises(TrendError):
            fit_polynomial_trend([(0.0, 1.0), (1.0, 2.0)], 2)
        with pytest.raises(TrendError):
            fit_polynomial_trend([(0.0, 1.0)], 0)
        with pytest.raises(TrendError):
            fit_polynomial_trend([(0.0, 1.0), (0.0, 2.0), (1.0, 3.0)], 1)
        with pytest.raises(TrendError):
            fit_polynomial_trend([(0.0, 1.0), (1.0, float('nan'))], 1)


class TestLocateTransition:
    """Test cases for the trend threshold crossing"""

    def setup_method(self):
        # 10 - t over [0, 20]
        self.falling = TrendModel(coefficients=(10.0, -1.0), degree=1, attribute_name='x',
                                  residual_rms=0.0, domain=(0.0, 20.0))

    def test_explicit_threshold(self):
        """Test the downward crossing time"""
        crossing = locate_transition_from_trend(self.falling, threshold=2.5)
        assert crossing == pytest.approx(7.5)

    def test_threshold_from_class_means(self):
        """Test the midpoint default"""
        ds = Dataset.from_matrix([[8.0], [8.0], [2.0], [2.0]],
                                 [NORMAL, NORMAL, MICRO_COLLAPSE, MICRO_COLLAPSE], ['x'])
        assert class_midpoint(ds, 'x') == 5.0
        assert locate_transition_from_trend(self.falling, dataset=ds) == pytest.approx(5.0)

    def test_no_crossing(self):
        """Test rising trends and out-of-range thresholds"""
        rising = TrendModel(coefficients=(-10.0, 1.0), degree=1, attribute_name='x',
                            residual_rms=0.0, domain=(0.0, 20.0))
        assert locate_transition_from_trend(rising, threshold=0.0) is None
        assert locate_transition_from_trend(self.falling, threshold=50.0) is None

    def test_first_crossing(self):
        """Test the earliest of several downward crossings"""
        # -(t - 2)(t - 4)(t - 6): falls through 0 at t=2 and t=6
        cubic = TrendModel(coefficients=(48.0, -44.0, 12.0, -1.0), degree=3,
                           attribute_name='x', residual_rms=0.0, domain=(0.0, 8.0))
        assert locate_transition_from_trend(cubic, threshold=0.0) == pytest.approx(2.0)

    def test_errors(self):
        """Test missing trend or threshold source"""
        with pytest.raises(TrendError):
            locate_transition_from_trend(None, threshold=1.0)
        with pytest.raises(TrendError):
            locate_transition_from_trend(self.falling)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
