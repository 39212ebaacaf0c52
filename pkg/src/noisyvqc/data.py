"""Iris ingestion, feature scaling, and stratified splitting.

The classifier works on the two linearly separable Iris classes, setosa
(label -1) and versicolor (label +1), described by petal length and
petal width.  Features are min-max scaled to encoding angles in
[0, pi], with the scaling statistics always computed on the training
split only.  Two features fill the two qubits exactly, so the padding
half of "padding and normalizing" is a documented no-op here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._iris import IRIS_SETOSA_VERSICOLOR_CSV

#: columns of the canonical 5-column Iris CSV kept as model features
FEATURE_COLUMNS = (2, 3)  # petal_length, petal_width

#: angle range of the encoded features
ANGLE_MAX = math.pi

_SPECIES_LABELS = {"setosa": -1, "versicolor": 1, "virginica": None}


@dataclass(frozen=True)
class Dataset:
    """Feature matrix (N, 2) in cm and labels (N,) in {-1, +1}."""

    features: np.ndarray
    labels: np.ndarray

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class PreprocessStats:
    """Per-feature min and max of the training split."""

    minimum: np.ndarray
    maximum: np.ndarray


def _parse_species(token: str, line_no: int) -> int | None:
    name = token.strip().lower()
    if name.startswith("iris-"):
        name = name[len("iris-"):]
    if name not in _SPECIES_LABELS:
        raise ValueError(f"line {line_no}: unknown species {token!r}")
    return _SPECIES_LABELS[name]


def load_iris_binary(source: str | None = None) -> Dataset:
    """Load the setosa/versicolor subset from a CSV path or the embedded copy.

    The file must be the standard 5-column Iris CSV (sepal length,
    sepal width, petal length, petal width, species), optionally with a
    header row.  Species matching is case-insensitive and the "Iris-"
    prefix is optional.  Virginica rows are dropped; anything else
    unrecognized is an error, as is ending up with fewer than two
    classes.
    """
    if source is None:
        text = IRIS_SETOSA_VERSICOLOR_CSV
    else:
        with open(source, "r", encoding="utf-8") as f:
            text = f.read()

    features: list[tuple[float, float]] = []
    labels: list[int] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 5:
            raise ValueError(f"line {line_no}: expected 5 columns, got {len(fields)}")
        if line_no == 1:
            try:
                float(fields[0])
            except ValueError:
                continue  # header row
        try:
            values = [float(fields[c]) for c in FEATURE_COLUMNS]
        except ValueError as exc:
            raise ValueError(f"line {line_no}: malformed numeric field") from exc
        if not all(math.isfinite(v) for v in values):
            raise ValueError(f"line {line_no}: non-finite feature value")
        label = _parse_species(fields[4], line_no)
        if label is None:
            continue
        features.append((values[0], values[1]))
        labels.append(label)

    labels_arr = np.array(labels, dtype=int)
    if len(np.unique(labels_arr)) < 2:
        raise ValueError("fewer than 2 classes present")
    return Dataset(features=np.array(features, dtype=float), labels=labels_arr)


def feature_stats(features: np.ndarray) -> PreprocessStats:
    """Min-max statistics of a (training) feature matrix."""
    features = np.asarray(features, dtype=float)
    lo = features.min(axis=0)
    hi = features.max(axis=0)
    if np.any(hi <= lo):
        raise ValueError("each feature needs max > min on the training split")
    return PreprocessStats(minimum=lo, maximum=hi)


def preprocess(features: np.ndarray, stats: PreprocessStats) -> np.ndarray:
    """Scale features linearly from [min, max] to angles in [0, pi].

    Values outside the training range clamp to the ends of the range so
    encoding angles never wrap.
    """
    features = np.asarray(features, dtype=float)
    scaled = (features - stats.minimum) / (stats.maximum - stats.minimum)
    return np.clip(scaled, 0.0, 1.0) * ANGLE_MAX


def split(dataset: Dataset, ratio: float = 0.75, seed: int = 0) -> tuple[Dataset, Dataset]:
    """Stratified train/validation split, deterministic for a given seed.

    Each class contributes ``ceil(ratio * count)`` samples to the
    training side.
    """
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"ratio must lie in (0, 1), got {ratio}")
    rng = np.random.default_rng(seed)
    train_idx: list[int] = []
    val_idx: list[int] = []
    for label in (-1, 1):
        members = np.flatnonzero(dataset.labels == label)
        perm = rng.permutation(members)
        n_train = math.ceil(ratio * len(members))
        train_idx.extend(perm[:n_train])
        val_idx.extend(perm[n_train:])
    if not train_idx or not val_idx:
        raise ValueError("split produced an empty side")
    train_idx = np.sort(np.array(train_idx))
    val_idx = np.sort(np.array(val_idx))
    return (
        Dataset(features=dataset.features[train_idx], labels=dataset.labels[train_idx]),
        Dataset(features=dataset.features[val_idx], labels=dataset.labels[val_idx]),
    )
