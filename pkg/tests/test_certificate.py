"""Tests for JSON certificates and CSV assignments."""

import json

import pytest

from spackd.engine.catalog import catalog_coloring
from spackd.parser.certificate import (
    assignment_to_csv,
    certificate_to_schema,
    dump_certificate,
    load_assignment_csv,
    load_certificate,
    parse_assignment_csv,
    schema_to_certificate,
)
from spackd.utils.errors import CertificateError

PAIR_SWAP_CERT = {
    "k": 3,
    "t": 4,
    "sequence": "1^2,2^inf",
    "patterns": {"A": [1, 2], "B": [3, 4, 2, 1]},
    "columns": ["A", "B", "B", "A"],
    "shifts": [0, 2, 0, 1],
}


class TestCertificate:
    def test_catalog_schema_to_certificate(self, pairs):
        assert schema_to_certificate(catalog_coloring(pairs, 3, 4), pairs) == PAIR_SWAP_CERT

    def test_certificate_to_schema(self, pairs):
        schema, seq = certificate_to_schema(PAIR_SWAP_CERT)
        assert seq == pairs
        assert schema == catalog_coloring(pairs, 3, 4)

    def test_load_dumped(self, tmp_path, packing):
        schema = catalog_coloring(packing, 7, 10)
        path = tmp_path / "cert.json"
        path.write_text(dump_certificate(schema, packing))
        assert load_certificate(path) == (schema, packing)

    def test_missing_key(self):
        data = {key: value for key, value in PAIR_SWAP_CERT.items() if key != "shifts"}
        with pytest.raises(CertificateError, match="shifts"):
            certificate_to_schema(data)

    @pytest.mark.parametrize(
        "key, value",
        [
            ("patterns", [1, 2]),
            ("columns", "ABBA"),
            ("shifts", [0, 2, 0]),
            ("shifts", [0, 2, 0, 9]),
            ("k", "three"),
            ("columns", ["A", "B", "B", "Z"]),
        ],
    )
    def test_invalid_fields(self, key, value):
        with pytest.raises(CertificateError):
            certificate_to_schema({**PAIR_SWAP_CERT, key: value})

    @pytest.mark.parametrize(
        "key, value",
        [
            ("k", 3.9),
            ("k", 3.0),
            ("t", True),
            ("patterns", {"A": [1.7, 2], "B": [3, 4, 2, 1]}),
            ("shifts", [0, 1.5, 0, 1]),
            ("sequence", 2),
        ],
    )
    def test_non_integer_values_rejected(self, key, value):
        with pytest.raises(CertificateError, match="must be"):
            certificate_to_schema({**PAIR_SWAP_CERT, key: value})

    def test_zero_color(self):
        with pytest.raises(CertificateError, match="colors must be >= 1"):
            certificate_to_schema({**PAIR_SWAP_CERT, "patterns": {"A": [0, 2], "B": [3, 4, 2, 1]}})

    def test_not_an_object(self):
        with pytest.raises(CertificateError):
            certificate_to_schema([1, 2])

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(CertificateError, match="malformed JSON"):
            load_certificate(path)

    def test_not_utf8(self, tmp_path):
        path = tmp_path / "latin1.json"
        path.write_bytes(b'{"k": 3, "sequence": "\xff"}')
        with pytest.raises(CertificateError, match="UTF-8"):
            load_certificate(path)

    def test_overflowing_number(self, tmp_path):
        path = tmp_path / "huge.json"
        path.write_text(json.dumps(PAIR_SWAP_CERT).replace('"k": 3', '"k": 1e400'))
        with pytest.raises(CertificateError, match="k must be an integer"):
            load_certificate(path)

    def test_dump_is_json(self, pairs):
        text = dump_certificate(catalog_coloring(pairs, 3, 4), pairs)
        assert json.loads(text)["columns"] == ["A", "B", "B", "A"]


class TestAssignmentCsv:
    def test_parse_with_header(self):
        assert parse_assignment_csv("n,color\n0,1\n1,2\n") == {0: 1, 1: 2}

    def test_parse_without_header(self):
        assert parse_assignment_csv("-1,3\n\n4,1\n") == {-1: 3, 4: 1}

    def test_duplicate_vertex(self):
        with pytest.raises(CertificateError, match="assigned twice"):
            parse_assignment_csv("0,1\n0,2\n")

    def test_bad_row(self):
        with pytest.raises(CertificateError, match="line 2"):
            parse_assignment_csv("0,1\n1,2,3\n")

    def test_not_integer(self):
        with pytest.raises(CertificateError):
            parse_assignment_csv("0,red\n")

    def test_load_not_utf8(self, tmp_path):
        path = tmp_path / "window.csv"
        path.write_bytes(b"0,1\n\xfe,2\n")
        with pytest.raises(CertificateError, match="UTF-8"):
            load_assignment_csv(path)

    def test_write_and_load(self, tmp_path):
        path = tmp_path / "window.csv"
        path.write_text(assignment_to_csv({2: 1, 0: 2}))
        assert path.read_text() == "n,color\n0,2\n2,1\n"
        assert load_assignment_csv(path) == {0: 2, 2: 1}
