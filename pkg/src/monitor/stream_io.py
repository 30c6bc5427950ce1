"""
Frame stream sources and event output.

Vector streams are CSV files with header 'frame,timestamp,<attribute>,...';
image streams are PGM files matched by a glob and ordered by file name.
"""

import csv
import glob
from pathlib import Path
from typing import List, Sequence, Union

from ..errors import CsvFormatError, StreamError
from ..features.csv_io import format_value, parse_float
from ..models import DetectionEvent, FeatureVector, FrameSample

PathLike = Union[str, Path]

FRAME_COLUMNS = ('frame', 'timestamp')
EVENT_COLUMNS = ('frame', 'timestamp', 'from', 'to', 'confidence')
DEFAULT_CADENCE = 72.0


def write_stream_csv(stream: Sequence[FrameSample], path: PathLike) -> None:
    """Write an inline-vector stream."""
    if not stream:
        raise StreamError("Cannot write an empty stream")
    names = stream[0].source.attribute_names
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow([*FRAME_COLUMNS, *names])
        for sample in stream:
            if not sample.is_inline:
                raise StreamError(f"Frame {sample.index} has no inline vector")
            sample.source.require_schema(names, context=f"stream frame {sample.index}")
            writer.writerow([sample.index, format_value(sample.timestamp),
                             *(format_value(v) for v in sample.source.values)])


def read_stream_csv(path: PathLike) -> List[FrameSample]:
    """
    Read an inline-vector stream.

    Raises:
        CsvFormatError: bad header, ragged rows, non-integer frame or non-numeric values
    """
    source = str(path)
    samples: List[FrameSample] = []
    with open(path, newline='', encoding='utf-8') as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if not header or tuple(h.strip().lower() for h in header[:2]) != FRAME_COLUMNS:
            raise CsvFormatError(source, 1, "missing header; expected 'frame,timestamp' first")
        names = tuple(h.strip() for h in header[2:])
        if not names:
            raise CsvFormatError(source, 1, "header names no attributes")
        for record in reader:
            line = reader.line_num
            if not record or all(not cell.strip() for cell in record):
                continue
            if len(record) != len(names) + 2:
                raise CsvFormatError(
                    source, line, f"expected {len(names) + 2} fields, found {len(record)}"
                )
            try:
                index = int(record[0])
            except ValueError:
                raise CsvFormatError(source, line, f"non-integer frame '{record[0]}'",
                                     'frame') from None
            timestamp = parse_float(record[1], source, line, 'timestamp')
            values = tuple(parse_float(cell, source, line, name)
                           for cell, name in zip(record[2:], names))
            samples.append(FrameSample(index, timestamp, FeatureVector(values, names)))
    return samples


def image_stream(pattern: str, cadence: float = DEFAULT_CADENCE) -> List[FrameSample]:
    """
    Image frames matching a glob, in file-name order, stamped index * cadence.

    Raises:
        StreamError: nothing matches the pattern
    """
    paths = sorted(glob.glob(pattern))
    if not paths:
        raise StreamError(f"No frames match '{pattern}'")
    return [FrameSample(i, i * cadence, Path(p)) for i, p in enumerate(paths)]


def open_stream(frames: str, cadence: float = DEFAULT_CADENCE) -> List[FrameSample]:
    """A .csv path is read as a vector stream, anything else as an image glob."""
    if frames.lower().endswith('.csv'):
        return read_stream_csv(frames)
    return image_stream(frames, cadence)


def write_events_csv(events: Sequence[DetectionEvent], path: PathLike) -> None:
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(EVENT_COLUMNS)
        for event in events:
            row = event.to_dict()
            writer.writerow([row['frame'], format_value(row['timestamp']), row['from'],
                             row['to'], format_value(row['confidence'])])
