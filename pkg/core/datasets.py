import logging

import numpy as np
import pandas as pd

from core.exceptions import DatasetParseError
from core.glm import LogisticData

logger = logging.getLogger("mjpl")


def _leading_comments(path):
    count = 0
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            if not line.startswith("#"):
                break
            count += 1
    return count


def read_dataset(path, has_intercept=True):
    """
    Read a headered CSV with a response column `y` followed by x1..xp.

    Lines starting with `#` before the header are skipped. Errors carry the
    1-based line number of the offending row.
    """
    offset = _leading_comments(path)
    header_line = offset + 1
    try:
        frame = pd.read_csv(path, skiprows=offset, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError as e:
        raise DatasetParseError("file is empty", header_line) from e
    except pd.errors.ParserError as e:
        raise DatasetParseError(str(e)) from e

    columns = [c.strip() for c in frame.columns]
    expected = ["y"] + [f"x{j}" for j in range(1, len(columns))]
    if columns != expected:
        raise DatasetParseError(
            f"header must be {','.join(expected)}; got {','.join(columns)}", header_line
        )
    if frame.empty:
        raise DatasetParseError("no observations", header_line + 1)

    values = np.empty(frame.shape, dtype=np.float64)
    for i, row in enumerate(frame.itertuples(index=False)):
        line = header_line + 1 + i
        for j, cell in enumerate(row):
            try:
                values[i, j] = float(cell)
            except (TypeError, ValueError):
                raise DatasetParseError(f"column {columns[j]!r}: cannot read {cell!r} as a number", line)
            if not np.isfinite(values[i, j]):
                raise DatasetParseError(f"column {columns[j]!r}: value is not finite", line)
        if values[i, 0] not in (0.0, 1.0):
            raise DatasetParseError(f"response must be 0 or 1; got {row[0]!r}", line)

    logger.debug(f"Read {values.shape[0]} rows and {values.shape[1] - 1} covariates from {path}")
    return LogisticData(values[:, 0], values[:, 1:], has_intercept=has_intercept)


def dataset_frame(data):
    columns = {"y": data.y.astype(int)}
    for j in range(data.p):
        columns[f"x{j + 1}"] = data.X[:, j]
    return pd.DataFrame(columns)
