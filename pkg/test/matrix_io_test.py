import json

import numpy as np
import pytest

from constructor.utils import construct
from errors import MatrixFormatError
from utils.matrix_io import read_matrix, to_payload, write_matrix


def test_json_file_round_trip(tmp_path, sigma5):
    matrix = construct(sigma5)

    path = write_matrix(matrix, tmp_path / "m.json")
    document = json.loads(path.read_text(encoding="utf-8"))

    assert document["n"] == 5
    assert len(document["entries"]) == 25
    assert np.array_equal(read_matrix(path), matrix.exported())


def test_csv_uses_17_digits(tmp_path, sigma5):
    matrix = construct(sigma5)

    path = write_matrix(matrix, tmp_path / "m.csv")
    lines = path.read_text(encoding="utf-8").splitlines()

    assert len(lines) == 5
    assert all(len(line.split(",")) == 5 for line in lines)
    assert np.array_equal(read_matrix(path), matrix.exported())


def test_files_use_lf(tmp_path, sigma5):
    path = write_matrix(construct(sigma5), tmp_path / "m.csv")

    assert b"\r\n" not in path.read_bytes()


def test_extra_fields_in_json(tmp_path):
    path = write_matrix(np.eye(2), tmp_path / "q.json",
                        extra={"eigvals": [1.0, -1.0]})

    assert json.loads(path.read_text())["eigvals"] == [1.0, -1.0]


def test_genuine_negative_entry_is_kept(witness_spectrum):
    payload = to_payload(construct(witness_spectrum))

    assert min(payload.entries) < 0


def test_unknown_format(tmp_path):
    with pytest.raises(MatrixFormatError):
        write_matrix(np.eye(2), tmp_path / "m.txt", fmt="xml")


def test_read_missing_file(tmp_path):
    with pytest.raises(MatrixFormatError):
        read_matrix(tmp_path / "missing.json")


@pytest.mark.parametrize("content", [
    '{"n": 2, "entries": [1, 0, 0]}',
    '{"entries": [1]}',
    "not json",
])
def test_read_invalid_json(tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content, encoding="utf-8")

    with pytest.raises(MatrixFormatError):
        read_matrix(path)


@pytest.mark.parametrize("content", ["1,0\n0\n", "1,x\n0,1\n", "1,0,0\n"])
def test_read_invalid_csv(tmp_path, content):
    path = tmp_path / "bad.csv"
    path.write_text(content, encoding="utf-8")

    with pytest.raises(MatrixFormatError):
        read_matrix(path)
