import logging
import pytest
from src.ingestion import read_document, source_for
from src.ingestion.json import JSONIngestion
from src.ingestion.yaml import YAMLIngestion


@pytest.fixture
def ingestion_records(caplog):
    """Records of the ingestion logger, which does not propagate once logging is set up"""
    logger = logging.getLogger("tverberg.ingestion")
    logger.addHandler(caplog.handler)
    class _LiveRecords:
        # caplog.records is replaced per test phase; read it at iteration time
        def __iter__(self):
            return iter(caplog.records)

    with caplog.at_level(logging.DEBUG, logger="tverberg.ingestion"):
        yield _LiveRecords()
    logger.removeHandler(caplog.handler)


class TestDocumentReaders:
    """Test JSON and YAML document reading"""

    def test_reader_from_extension(self):
        assert isinstance(source_for("points.json"), JSONIngestion)
        assert isinstance(source_for("points.YAML"), YAMLIngestion)
        assert isinstance(source_for("points.yml"), YAMLIngestion)

    def test_unsupported_extension(self):
        with pytest.raises(ValueError, match="Unsupported file type '.csv'"):
            source_for("points.csv")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ValueError, match="File not found"):
            read_document(tmp_path / "absent.json")

    def test_json_error_position(self):
        with pytest.raises(ValueError, match="line 2 column 1"):
            JSONIngestion().loads('{"dim": 1,\n}', "points.json")

    def test_yaml_error_position(self):
        with pytest.raises(ValueError, match="Invalid YAML in points.yaml"):
            YAMLIngestion().loads("dim: [1\npoints: 2", "points.yaml")

    def test_root_must_be_mapping(self):
        with pytest.raises(ValueError, match="JSON object"):
            JSONIngestion().loads("[1, 2]")
        with pytest.raises(ValueError, match="mapping"):
            YAMLIngestion().loads("- 1")

    @pytest.mark.parametrize("name,text,source_type", [
        ("points.json", '{"dim": 1, "points": [[0]]}', "json"),
        ("points.yaml", "dim: 1\npoints: [[0]]\n", "yaml"),
    ])
    def test_source_type_is_logged(self, tmp_path, ingestion_records, name, text, source_type):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        assert read_document(path) == {"dim": 1, "points": [[0]]}
        record = next(r for r in ingestion_records if r.getMessage() == "Document read")
        assert record.source_type == source_type
        assert record.path == str(path)
