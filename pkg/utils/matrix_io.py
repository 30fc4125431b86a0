import csv
import io
import json
from pathlib import Path
from typing import Optional, Union

import numpy as np
from pydantic import ValidationError

from config import ENTRY_TOLERANCE
from constructor.schemas import DenseSymMatrix, MatrixPayload
from errors import MatrixFormatError

PathLike = Union[str, Path]


def to_payload(m: Union[DenseSymMatrix, np.ndarray],
               tol: float = ENTRY_TOLERANCE) -> MatrixPayload:
    """
    Матрица в схему {"n", "entries"} (построчно). Для DenseSymMatrix
    значения в [-tol, 0) обнуляются.
    """
    if isinstance(m, DenseSymMatrix):
        return MatrixPayload(n=m.n, entries=m.row_major(tol))
    m = np.asarray(m, dtype=np.float64)
    return MatrixPayload(n=m.shape[0], entries=m.ravel().tolist())


def from_payload(payload: MatrixPayload) -> np.ndarray:
    return np.asarray(payload.entries, dtype=np.float64).reshape(
        payload.n, payload.n
    )


def format_csv(entries: np.ndarray) -> str:
    buffer = io.StringIO()
    for row in np.asarray(entries):
        buffer.write(",".join(f"{value:.17g}" for value in row))
        buffer.write("\n")
    return buffer.getvalue()


def write_matrix(m: Union[DenseSymMatrix, np.ndarray], path: PathLike,
                 fmt: Optional[str] = None,
                 extra: Optional[dict] = None,
                 tol: float = ENTRY_TOLERANCE) -> Path:
    """
    Записывает матрицу в JSON или CSV (по fmt или расширению файла).
    UTF-8, переводы строк LF; tol -- как в to_payload.
    """
    path = Path(path)
    fmt = (fmt or path.suffix.lstrip(".") or "json").lower()
    payload = to_payload(m, tol)

    if fmt == "csv":
        text = format_csv(from_payload(payload))
    elif fmt == "json":
        document = payload.model_dump()
        if extra:
            document.update(extra)
        text = json.dumps(document, allow_nan=False) + "\n"
    else:
        raise MatrixFormatError(f"Unknown matrix format {fmt!r}")

    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    return path


def read_matrix(path: PathLike) -> np.ndarray:
    """
    Читает матрицу из JSON {"n", "entries"} или CSV (n строк по n чисел).
    """
    path = Path(path)
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise MatrixFormatError(f"Cannot read {path}: {exc}") from exc

    if path.suffix.lower() == ".csv":
        return _parse_csv(text, path)

    try:
        payload = MatrixPayload.model_validate_json(text)
    except ValidationError as exc:
        raise MatrixFormatError(f"{path}: invalid matrix JSON: {exc}") \
            from exc
    return from_payload(payload)


def _parse_csv(text: str, path: Path) -> np.ndarray:
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    try:
        entries = np.array([[float(cell) for cell in row] for row in rows])
    except ValueError as exc:
        raise MatrixFormatError(f"{path}: {exc}") from exc
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise MatrixFormatError(
            f"{path}: expected a square matrix, got {entries.shape}"
        )
    return entries
