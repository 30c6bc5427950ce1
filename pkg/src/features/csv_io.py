"""
Dataset CSV serialisation.

Layout: header row 'label,<attribute>,...', then one row per case. Values
are written with Python's shortest round-trip float repr, so a write/read
cycle is lossless.
"""

import csv
import math
from pathlib import Path
from typing import List, Union

from ..errors import CsvFormatError
from ..models import Dataset, FeatureVector

PathLike = Union[str, Path]

LABEL_COLUMN = 'label'


def format_value(value: float) -> str:
    return repr(float(value))


def write_csv(ds: Dataset, path: PathLike) -> None:
    """Write a labelled dataset."""
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow([LABEL_COLUMN, *ds.attribute_names])
        for label, row in zip(ds.labels, ds.rows):
            writer.writerow([str(label), *(format_value(v) for v in row.values)])


def parse_float(cell: str, path: str, line: int, column: str) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise CsvFormatError(path, line, f"non-numeric value '{cell}'", column) from None
    if not math.isfinite(value):
        raise CsvFormatError(path, line, f"non-finite value '{cell}'", column)
    return value


def read_csv(path: PathLike) -> Dataset:
    """
    Read a labelled dataset.

    Raises:
        CsvFormatError: missing header, ragged rows or non-numeric cells,
            naming the offending line
    """
    source = str(path)
    with open(path, newline='', encoding='utf-8') as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if not header or header[0].strip().lower() != LABEL_COLUMN:
            raise CsvFormatError(source, 1, f"missing header; expected '{LABEL_COLUMN}' first")
        names = tuple(h.strip() for h in header[1:])
        if not names:
            raise CsvFormatError(source, 1, "header names no attributes")
        if len(set(names)) != len(names):
            raise CsvFormatError(source, 1, "duplicate attribute names in header")

        rows: List[FeatureVector] = []
        labels: List[str] = []
        for record in reader:
            line = reader.line_num
            if not record or all(not cell.strip() for cell in record):
                continue
            if len(record) != len(names) + 1:
                raise CsvFormatError(
                    source, line, f"expected {len(names) + 1} fields, found {len(record)}"
                )
            label = record[0]
            if not label.strip():
                raise CsvFormatError(source, line, "empty label", LABEL_COLUMN)
            values = tuple(parse_float(cell, source, line, name)
                           for cell, name in zip(record[1:], names))
            labels.append(label)
            rows.append(FeatureVector(values, names))
    return Dataset(rows=tuple(rows), labels=tuple(labels), attribute_names=names)
