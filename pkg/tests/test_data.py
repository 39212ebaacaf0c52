import math

import numpy as np
import pytest

from noisyvqc.data import (
    Dataset,
    feature_stats,
    load_iris_binary,
    preprocess,
    split,
)


class TestLoadEmbedded:
    def test_counts(self):
        ds = load_iris_binary()
        assert len(ds) == 100
        assert int(np.sum(ds.labels == -1)) == 50
        assert int(np.sum(ds.labels == 1)) == 50

    def test_first_row_mapping(self):
        # canonical first row 5.1,3.5,1.4,0.2,Iris-setosa keeps the petal columns
        ds = load_iris_binary()
        np.testing.assert_allclose(ds.features[0], [1.4, 0.2])
        assert ds.labels[0] == -1

    def test_classes_are_separable_in_petal_length(self):
        ds = load_iris_binary()
        setosa = ds.features[ds.labels == -1, 0]
        versicolor = ds.features[ds.labels == 1, 0]
        assert setosa.max() < versicolor.min()


class TestLoadFromFile:
    def _write(self, tmp_path, text):
        path = tmp_path / "iris.csv"
        path.write_text(text)
        return str(path)

    def test_header_and_prefixless_species(self, tmp_path):
        path = self._write(
            tmp_path,
            "sepal_length,sepal_width,petal_length,petal_width,species\n"
            "5.1,3.5,1.4,0.2,SETOSA\n"
            "7.0,3.2,4.7,1.4,versicolor\n",
        )
        ds = load_iris_binary(path)
        assert len(ds) == 2
        np.testing.assert_array_equal(ds.labels, [-1, 1])

    def test_virginica_rows_dropped(self, tmp_path):
        path = self._write(
            tmp_path,
            "5.1,3.5,1.4,0.2,Iris-setosa\n"
            "7.0,3.2,4.7,1.4,Iris-versicolor\n"
            "6.3,3.3,6.0,2.5,Iris-virginica\n",
        )
        assert len(load_iris_binary(path)) == 2

    def test_only_virginica_rejected(self, tmp_path):
        path = self._write(tmp_path, "6.3,3.3,6.0,2.5,Iris-virginica\n")
        with pytest.raises(ValueError, match="fewer than 2 classes"):
            load_iris_binary(path)

    def test_single_class_rejected(self, tmp_path):
        path = self._write(tmp_path, "5.1,3.5,1.4,0.2,Iris-setosa\n")
        with pytest.raises(ValueError, match="fewer than 2 classes"):
            load_iris_binary(path)

    def test_unknown_species_rejected(self, tmp_path):
        path = self._write(tmp_path, "5.1,3.5,1.4,0.2,Iris-gigantea\n")
        with pytest.raises(ValueError, match="unknown species"):
            load_iris_binary(path)

    def test_malformed_column_count(self, tmp_path):
        path = self._write(tmp_path, "5.1,3.5,1.4,Iris-setosa\n")
        with pytest.raises(ValueError, match="5 columns"):
            load_iris_binary(path)

    def test_malformed_number(self, tmp_path):
        path = self._write(tmp_path, "5.1,3.5,abc,0.2,Iris-setosa\n")
        with pytest.raises(ValueError, match="malformed"):
            load_iris_binary(path)


class TestPreprocess:
    def test_endpoints_and_midpoint(self):
        stats = feature_stats(np.array([[1.0, 10.0], [3.0, 30.0]]))
        angles = preprocess(np.array([[1.0, 10.0], [3.0, 30.0], [2.0, 20.0]]), stats)
        np.testing.assert_allclose(angles[0], [0.0, 0.0])
        np.testing.assert_allclose(angles[1], [math.pi, math.pi])
        np.testing.assert_allclose(angles[2], [math.pi / 2, math.pi / 2])

    def test_clamps_outside_training_range(self):
        stats = feature_stats(np.array([[1.0, 10.0], [3.0, 30.0]]))
        angles = preprocess(np.array([[0.0, 50.0]]), stats)
        np.testing.assert_allclose(angles[0], [0.0, math.pi])

    def test_outputs_always_in_range(self, rng):
        train = rng.uniform(-5, 5, size=(40, 2))
        stats = feature_stats(train)
        angles = preprocess(rng.uniform(-10, 10, size=(200, 2)), stats)
        assert np.all(angles >= 0.0)
        assert np.all(angles <= math.pi)

    def test_degenerate_feature_rejected(self):
        with pytest.raises(ValueError, match="max > min"):
            feature_stats(np.array([[1.0, 2.0], [1.0, 3.0]]))


class TestSplit:
    def test_default_iris_split_counts(self):
        train_ds, val_ds = split(load_iris_binary(), ratio=0.75, seed=0)
        assert len(train_ds) == 76
        assert len(val_ds) == 24
        assert int(np.sum(train_ds.labels == -1)) == 38
        assert int(np.sum(train_ds.labels == 1)) == 38

    def test_deterministic(self):
        ds = load_iris_binary()
        a = split(ds, seed=42)
        b = split(ds, seed=42)
        np.testing.assert_array_equal(a[0].features, b[0].features)
        np.testing.assert_array_equal(a[1].features, b[1].features)

    def test_partitions_dataset(self):
        ds = load_iris_binary()
        train_ds, val_ds = split(ds, seed=7)
        combined = np.vstack([train_ds.features, val_ds.features])
        assert combined.shape == ds.features.shape
        original = sorted(map(tuple, np.column_stack([ds.features, ds.labels])))
        recombined = sorted(
            map(
                tuple,
                np.column_stack(
                    [combined, np.concatenate([train_ds.labels, val_ds.labels])]
                ),
            )
        )
        assert original == recombined

    def test_small_balanced_split(self):
        ds = Dataset(
            features=np.array([[0.0, 0], [1, 0], [2, 0], [3, 0]]),
            labels=np.array([-1, -1, 1, 1]),
        )
        train_ds, val_ds = split(ds, ratio=0.5, seed=1)
        assert len(train_ds) == 2 and len(val_ds) == 2
        assert set(train_ds.labels) == {-1, 1}
        assert set(val_ds.labels) == {-1, 1}

    def test_class_proportions_within_one(self):
        ds = load_iris_binary()
        train_ds, val_ds = split(ds, ratio=0.6, seed=3)
        for side in (train_ds, val_ds):
            counts = [int(np.sum(side.labels == label)) for label in (-1, 1)]
            assert abs(counts[0] - counts[1]) <= 1

    def test_invalid_ratio(self):
        with pytest.raises(ValueError):
            split(load_iris_binary(), ratio=1.0)

    def test_empty_side_rejected(self):
        ds = Dataset(features=np.array([[0.0, 0], [1, 0]]), labels=np.array([-1, 1]))
        with pytest.raises(ValueError, match="empty"):
            split(ds, ratio=0.9, seed=0)
