"""
Unit tests for utility functions
"""

import logging

import numpy as np
import pytest
from src.features import FIXTURE_ATTRIBUTES
from src.features.fixture import MICRO_COLLAPSE_ROWS, NORMAL_ROWS
from src.models import DRY_LAYER_A, MICRO_COLLAPSE, NORMAL, GrayImage
from src.utils import DEFAULTS, DataGenerator, Logger, RunConfig, deep_merge, load_config


class TestDataGenerator:
    """Test cases for DataGenerator"""

    def test_perturbed_stream(self):
        """Test frame count, cadence and perturbation bounds"""
        stream = DataGenerator.perturbed_fixture_stream(seed=0, perturbation=0.02)
        assert len(stream) == 20
        assert [s.timestamp for s in stream[:3]] == [0.0, 72.0, 144.0]
        rows = NORMAL_ROWS + MICRO_COLLAPSE_ROWS
        for sample, row in zip(stream, rows):
            ratio = np.asarray(sample.source.values) / np.asarray(row, dtype=np.float64)
            assert np.all((ratio >= 0.98) & (ratio <= 1.02))
            assert sample.source.attribute_names == FIXTURE_ATTRIBUTES

    def test_perturbed_stream_reproducible(self):
        """Test that generation with same seed is reproducible"""
        a = DataGenerator.perturbed_fixture_stream(seed=5)
        b = DataGenerator.perturbed_fixture_stream(seed=5)
        c = DataGenerator.perturbed_fixture_stream(seed=6)
        assert [s.source.values for s in a] == [s.source.values for s in b]
        assert a[0].source.values != c[0].source.values

    def test_four_class_dataset(self):
        """Test class layout and centroid scaling"""
        ds = DataGenerator.four_class_dataset(rows_per_class=6, seed=1)
        assert len(ds) == 24
        counts = ds.class_counts()
        assert all(n == 6 for n in counts.values())
        normal = ds.matrix()[list(ds.indices_of(NORMAL))].mean(axis=0)
        dry = ds.matrix()[list(ds.indices_of(DRY_LAYER_A))].mean(axis=0)
        assert np.all(dry > normal)
        with pytest.raises(ValueError):
            DataGenerator.four_class_dataset(rows_per_class=1)

    def test_ring_image(self):
        """Test four levels, brightest in the centre"""
        img = DataGenerator.ring_image(size=160)
        assert isinstance(img, GrayImage)
        assert sorted(np.unique(img.pixels).tolist()) == [100, 150, 200, 250]
        assert img.pixels[80, 80] == 250
        assert img.pixels[0, 0] == 100

    def test_speckle_frames(self, tmp_path):
        """Test frame count, change point and saved file pattern"""
        frames = DataGenerator.speckle_frames(n_frames=4, change_at=2, size=16, n_phasors=5)
        assert len(frames) == 4
        assert all(f.shape == (16, 16) for f in frames)
        pattern = DataGenerator.save_frames(frames, tmp_path / "frames")
        assert pattern.endswith("frame_*.pgm")
        assert (tmp_path / "frames" / "frame_0003.pgm").exists()


class TestLogger:
    """Test cases for Logger"""

    def test_setup_logger(self, tmp_path):
        """Test level, handlers and file output"""
        log_file = tmp_path / "run.log"
        logger = Logger.setup_logger(name='ilsi-test', level='DEBUG', log_file=str(log_file))
        assert logger.level == logging.DEBUG
        assert len(logger.handlers) == 2
        logger.info("hello")
        for handler in logger.handlers:
            handler.flush()
        assert "hello" in log_file.read_text()
        assert logging.getLogger('src').level == logging.DEBUG

    def test_unknown_level(self):
        """Test that invalid level raises error"""
        with pytest.raises(ValueError):
            Logger.setup_logger(level='LOUD')


class TestConfig:
    """Test cases for configuration loading and validation"""

    def test_defaults_file(self):
        """Test the shipped config matches the built-in defaults"""
        config = load_config()
        assert config['classification']['k'] == 1
        assert config['classification']['positive'] == MICRO_COLLAPSE
        assert config['monitoring']['debounce'] == 3
        assert config['monitoring']['cadence'] == 72.0

    def test_override_file(self, tmp_path):
        """Test partial YAML overrides keep other defaults"""
        path = tmp_path / "run.yaml"
        path.write_text("classification:\n  k: 3\nlogging:\n  level: DEBUG\n")
        config = load_config(path)
        assert config['classification']['k'] == 3
        assert config['classification']['bins'] == DEFAULTS['classification']['bins']
        assert config['logging']['level'] == 'DEBUG'

    def test_invalid_yaml(self, tmp_path):
        """Test malformed and non-mapping files"""
        path = tmp_path / "bad.yaml"
        path.write_text("classification: [unclosed\n")
        with pytest.raises(ValueError):
            load_config(path)
        path.write_text("- just\n- a list\n")
        with pytest.raises(ValueError):
            load_config(path)

    def test_deep_merge(self):
        """Test nested merge leaves the base untouched"""
        base = {'a': {'x': 1, 'y': 2}, 'b': 3}
        merged = deep_merge(base, {'a': {'y': 5}})
        assert merged == {'a': {'x': 1, 'y': 5}, 'b': 3}
        assert base['a']['y'] == 2

    def test_validate(self):
        """Test range checks name the flag"""
        RunConfig('evaluate', {'bins': 5, 'k': 1, 'holdout': 0.5}).validate()
        with pytest.raises(ValueError, match='--bins'):
            RunConfig('evaluate', {'bins': 1}).validate()
        with pytest.raises(ValueError, match='--trend-degree'):
            RunConfig('monitor', {'trend_degree': -1}).validate()
        with pytest.raises(ValueError, match='--seed'):
            RunConfig('simulate', {}, seed=-1).validate()
        assert RunConfig('fixture', {'out': 'x'}).get('out') == 'x'


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
