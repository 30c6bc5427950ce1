"""
Tests for feature assembly, standardization, dataset CSV and the fixture
"""

import statistics

import numpy as np
import pytest

from src.errors import CsvFormatError, DatasetError, RoiError, SchemaMismatchError
from src.features import (FIXTURE_ATTRIBUTES, apply_standardization, area_tag, build_dataset,
                          build_feature_vector, feature_schema, fisher_scores,
                          fit_standardization, most_discriminant_attribute, read_csv,
                          standardize_dataset, table3_fixture, write_csv)
from src.features.fixture import MICRO_COLLAPSE_ROWS, NORMAL_ROWS
from src.imaging import extract_window
from src.models import MICRO_COLLAPSE, NORMAL, Dataset, FeatureVector, GrayImage, Roi
from src.texture import measure_window
from src.utils import DataGenerator


class TestFeatureBuilder:
    """Test cases for per-frame feature vectors"""

    def setup_method(self):
        rng = np.random.default_rng(2)
        self.img = GrayImage.from_array(rng.integers(0, 256, size=(40, 40), dtype=np.uint8))
        self.rois = [Roi(0, 0, 10, 10, 'A'), Roi(20, 20, 12, 12, 'B')]

    def test_schema_nine_per_roi(self):
        """Test attribute naming and order"""
        names = feature_schema(self.rois)
        assert len(names) == 18
        assert names[0] == 'Russ_3x3_A'
        assert names[8] == 'StdDev_3x3_A'
        assert names[9] == 'Russ_3x3_B'

    def test_values_match_measure_window(self):
        """Test each block equals the nine measures of its window"""
        v = build_feature_vector(self.img, self.rois)
        expected = (measure_window(extract_window(self.img, self.rois[0]))
                    + measure_window(extract_window(self.img, self.rois[1])))
        assert v.values == pytest.approx(expected)

    def test_flat_window_is_zero(self):
        """Test a constant ring window measures zero"""
        v = build_feature_vector(DataGenerator.ring_image(), [Roi(0, 0, 8, 8)])
        assert all(value == 0.0 for value in v.values)

    def test_default_area_tags(self):
        """Test unlabelled rois are tagged A, B, ... by position"""
        assert area_tag(Roi(0, 0, 5, 5), 1) == 'B'
        assert area_tag(Roi(0, 0, 5, 5, 'Z'), 1) == 'Z'

    def test_roi_errors(self):
        """Test empty, duplicate, undersized and out-of-bounds rois"""
        with pytest.raises(RoiError):
            build_feature_vector(self.img, [])
        with pytest.raises(RoiError):
            feature_schema([Roi(0, 0, 5, 5, 'A'), Roi(5, 5, 5, 5, 'A')])
        with pytest.raises(RoiError):
            build_feature_vector(self.img, [Roi(0, 0, 4, 10)])
        with pytest.raises(RoiError):
            build_feature_vector(self.img, [Roi(35, 35, 10, 10)])

    def test_build_dataset(self):
        """Test a batch shares one schema"""
        ds = build_dataset([self.img, self.img], ['normal', 'micro-collapse'], self.rois)
        assert len(ds) == 2
        assert ds.attribute_names == feature_schema(self.rois)


class TestStandardization:
    """Test cases for z-score standardization"""

    def setup_method(self):
        self.ds = Dataset.from_matrix([[1.0, 5.0], [3.0, 5.0]], ['a', 'b'], ['x', 'y'])

    def test_population_statistics(self):
        """Test means and population standard deviations"""
        params = fit_standardization(self.ds)
        assert params.means == (2.0, 5.0)
        assert params.stds == (1.0, 0.0)

    def test_zero_std_column_maps_to_zero(self):
        """Test constant columns standardize to 0"""
        params = fit_standardization(self.ds)
        out = standardize_dataset(self.ds, params)
        assert out.matrix().tolist() == [[-1.0, 0.0], [1.0, 0.0]]

    def test_apply_to_vector(self):
        """Test a new vector uses the training parameters"""
        params = fit_standardization(self.ds)
        v = apply_standardization(FeatureVector((4.0, 9.0), ('x', 'y')), params)
        assert v.values == (2.0, 0.0)

    def test_fixture_columns_standardized(self):
        """Test standardized fixture columns have mean 0 and std 1"""
        ds = table3_fixture()
        out = standardize_dataset(ds, fit_standardization(ds)).matrix()
        assert np.allclose(out.mean(axis=0), 0.0)
        assert np.allclose(out.std(axis=0), 1.0)

    def test_fixture_levine_statistics(self):
        """Test fitted parameters against a plain recomputation of one column"""
        values = [row[1] for row in NORMAL_ROWS + MICRO_COLLAPSE_ROWS]
        params = fit_standardization(table3_fixture())
        assert params.means[1] == pytest.approx(statistics.fmean(values))
        assert params.stds[1] == pytest.approx(statistics.pstdev(values))

    def test_fixture_row_against_plain_z_scores(self):
        """Test the first normal row standardizes column by column to (x - mean) / pstdev"""
        rows = NORMAL_ROWS + MICRO_COLLAPSE_ROWS
        columns = list(zip(*rows))
        expected = [(rows[0][j] - statistics.fmean(col)) / statistics.pstdev(col)
                    for j, col in enumerate(columns)]
        ds = table3_fixture()
        out = standardize_dataset(ds, fit_standardization(ds)).matrix()
        assert out.shape == (20, 9)
        assert out[0].tolist() == pytest.approx(expected, rel=1e-9, abs=1e-12)

    def test_errors(self):
        """Test row count and schema checks"""
        with pytest.raises(DatasetError):
            fit_standardization(self.ds.subset([0]))
        params = fit_standardization(self.ds)
        with pytest.raises(SchemaMismatchError):
            apply_standardization(FeatureVector((1.0,), ('x',)), params)

    def test_dict_round_trip(self):
        """Test params serialisation"""
        params = fit_standardization(self.ds)
        assert type(params).from_dict(params.to_dict()) == params


class TestDatasetCsv:
    """Test cases for dataset CSV files"""

    def test_fixture_file_layout(self, tmp_path):
        """Test header plus 20 rows, lossless re-read"""
        ds = table3_fixture()
        path = tmp_path / "fixture.csv"
        write_csv(ds, path)
        lines = path.read_text().splitlines()
        assert len(lines) == 21
        assert lines[0] == 'label,' + ','.join(FIXTURE_ATTRIBUTES)
        assert lines[1].startswith('normal,378.0,6002.0,77.47,')
        again = read_csv(path)
        assert again.labels == ds.labels
        assert np.array_equal(again.matrix(), ds.matrix())

    def test_ragged_row_names_line(self, tmp_path):
        """Test a short row reports its line number"""
        path = tmp_path / "bad.csv"
        path.write_text("label,x,y\nnormal,1,2\nnormal,3\n")
        with pytest.raises(CsvFormatError) as excinfo:
            read_csv(path)
        assert excinfo.value.line == 3
        assert "bad.csv:3" in str(excinfo.value)

    def test_non_numeric_cell(self, tmp_path):
        """Test a bad value names line and column"""
        path = tmp_path / "bad.csv"
        path.write_text("label,x,y\nnormal,1,abc\n")
        with pytest.raises(CsvFormatError) as excinfo:
            read_csv(path)
        assert excinfo.value.line == 2
        assert excinfo.value.column == 'y'

    def test_missing_header(self, tmp_path):
        """Test the label column must come first"""
        path = tmp_path / "bad.csv"
        path.write_text("x,y\n1,2\n")
        with pytest.raises(CsvFormatError):
            read_csv(path)

    def test_blank_lines_skipped(self, tmp_path):
        """Test empty lines are ignored"""
        path = tmp_path / "ok.csv"
        path.write_text("label,x\nnormal,1\n\nmicro-collapse,2\n")
        assert len(read_csv(path)) == 2


class TestFixture:
    """Test cases for the published sample dataset"""

    def test_shape_and_labels(self):
        """Test 10 normal then 10 micro-collapse rows of 9 attributes"""
        ds = table3_fixture()
        assert ds.matrix().shape == (20, 9)
        assert ds.labels[:10] == (NORMAL,) * 10
        assert ds.labels[10:] == (MICRO_COLLAPSE,) * 10
        assert ds.attribute_names == FIXTURE_ATTRIBUTES
        assert FIXTURE_ATTRIBUTES[1] == 'Levine_3x3_U'

    def test_first_and_last_rows(self):
        """Test spot values from the table"""
        m = table3_fixture().matrix()
        assert m[0].tolist() == [378, 6002, 77.47, 0.5, 883, 7621, 87.3, 0.47, 69.95]
        assert m[19, 8] == 53.95

    @pytest.mark.parametrize('kernel', [3, 5])
    def test_sigma_is_root_of_levine(self, kernel):
        """Test every published row has Sigma within 0.01 of sqrt(Levine)"""
        ds = table3_fixture()
        levine = ds.column(f'Levine_{kernel}x{kernel}_U')
        sigma = ds.column(f'Sigma_{kernel}x{kernel}_U')
        assert len(levine) == 20
        assert np.max(np.abs(sigma - np.sqrt(levine))) <= 0.01

    def test_normal_has_higher_variance(self):
        """Test Levine means separate the classes"""
        ds = table3_fixture()
        col = ds.column('Levine_3x3_U')
        assert col[:10].mean() > col[10:].mean()


class TestSelection:
    """Test cases for two-class attribute ranking"""

    def test_ranking(self):
        """Test separated attributes rank above overlapping ones"""
        ds = Dataset.from_matrix([[0.0, 1.0, 5.0], [0.2, 2.0, 5.0],
                                  [1.0, 1.0, 7.0], [1.2, 2.0, 7.0]],
                                 [NORMAL, NORMAL, MICRO_COLLAPSE, MICRO_COLLAPSE],
                                 ['sep', 'same', 'flat'])
        scores = dict(fisher_scores(ds))
        assert scores['flat'] == float('inf')
        assert scores['same'] == 0.0
        assert scores['sep'] == pytest.approx(1.0 / np.sqrt(0.02))
        assert [name for name, _ in fisher_scores(ds)] == ['flat', 'sep', 'same']

    def test_most_discriminant_by_measure(self):
        """Test restriction to one measure family"""
        ds = table3_fixture()
        best = most_discriminant_attribute(ds, measure='Levine')
        levine_scores = [(n, s) for n, s in fisher_scores(ds) if n.startswith('Levine_')]
        assert best == max(levine_scores, key=lambda item: item[1])[0]
        with pytest.raises(DatasetError):
            most_discriminant_attribute(ds, measure='Entropy')

    def test_missing_class(self):
        """Test both classes are required"""
        ds = Dataset.from_matrix([[1.0], [2.0]], [NORMAL, NORMAL], ['x'])
        with pytest.raises(DatasetError):
            fisher_scores(ds)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
