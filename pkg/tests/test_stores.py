"""Tests for the digraph, matrix and checkpoint text stores."""

import pytest

from src.core.error_codes import DigraphErrorCode, FormatErrorCode, LinalgErrorCode
from src.core.exceptions import DigraphException, FormatException, LinalgException
from src.models import Digraph, RatMatrix, RatVector
from src.stores import CheckpointStore, DigraphStore, MatrixStore
from src.stores.checkpoint_store import Checkpoint


@pytest.fixture
def digraph_store() -> DigraphStore:
    return DigraphStore()


@pytest.fixture
def matrix_store() -> MatrixStore:
    return MatrixStore()


class TestDigraphStore:
    def test_parse_with_comments_and_blank_lines(self, digraph_store, cycle3):
        text = "# directed triangle\n3 3\n\n1 2\n2 3\n3 1\n"
        assert digraph_store.parse(text) == cycle3

    def test_repeated_arc_is_merged(self, digraph_store, path2):
        assert digraph_store.parse("2 2\n1 2\n1 2\n") == path2

    def test_format_is_sorted(self, digraph_store):
        D = Digraph(3, frozenset({(3, 1), (1, 2)}))
        assert digraph_store.format(D, ["note"]) == "3 2\n1 2\n3 1\n# note\n"

    def test_format_then_parse(self, digraph_store, transitive3):
        text = digraph_store.format(transitive3)
        assert digraph_store.parse(text) == transitive3

    def test_digon_names_pair_and_lines(self, digraph_store):
        with pytest.raises(DigraphException) as exc_info:
            digraph_store.parse("3 3\n1 2\n2 3\n2 1\n", "bad.txt")
        exc = exc_info.value
        assert exc.error_code == DigraphErrorCode.DIGON_PAIR
        assert exc.details["pair"] == [1, 2]
        assert exc.details["lines"] == [2, 4]
        assert "bad.txt:4" in exc.message

    def test_loop(self, digraph_store):
        with pytest.raises(DigraphException) as exc_info:
            digraph_store.parse("2 1\n2 2\n")
        assert exc_info.value.error_code == DigraphErrorCode.LOOP_ARC

    def test_vertex_out_of_range_reports_column(self, digraph_store):
        with pytest.raises(DigraphException) as exc_info:
            digraph_store.parse("2 1\n1 5\n", "g.txt")
        assert exc_info.value.error_code == DigraphErrorCode.VERTEX_OUT_OF_RANGE
        assert exc_info.value.message.startswith("g.txt:2:3:")

    @pytest.mark.parametrize(
        "text, line, column",
        [
            ("3\n", 1, 1),
            ("2 x\n", 1, 3),
            ("2 2\n1 2\n", 3, 1),
            ("2 1\n1 2 3\n", 2, 5),
            ("2 1\n1 2\n2 1\n", 3, 1),
            ("-1 0\n", 1, 1),
        ],
    )
    def test_parse_errors_carry_position(self, digraph_store, text, line, column):
        with pytest.raises(FormatException) as exc_info:
            digraph_store.parse(text, "in.txt")
        exc = exc_info.value
        assert exc.error_code == FormatErrorCode.PARSE_FAILED
        assert (exc.details["line"], exc.details["column"]) == (line, column)

    def test_load_and_save(self, digraph_store, cycle3, tmp_path):
        path = tmp_path / "cycle.txt"
        digraph_store.save(path, cycle3)
        assert digraph_store.load(path) == cycle3

    def test_missing_file(self, digraph_store, tmp_path):
        with pytest.raises(FormatException) as exc_info:
            digraph_store.load(tmp_path / "absent.txt")
        assert exc_info.value.error_code == FormatErrorCode.FILE_NOT_FOUND
        assert exc_info.value.exit_code == 1


class TestMatrixStore:
    def test_parse_rationals(self, matrix_store):
        M = matrix_store.parse("2 2\n1 -1/2\n0 3/4\n")
        assert M == RatMatrix.from_rows([[1, "-1/2"], [0, "3/4"]])

    def test_format(self, matrix_store):
        M = RatMatrix.from_rows([["2/3", "1/3"], [0, -1]])
        assert matrix_store.format(M) == "2 2\n2/3 1/3\n0 -1\n"

    def test_vector(self, matrix_store):
        v = matrix_store.parse_vector("3 1\n1\n0\n-2/5\n")
        assert v == RatVector.of([1, 0, "-2/5"])
        assert matrix_store.format_vector(v) == "3 1\n1\n0\n-2/5\n"

    def test_vector_needs_one_column(self, matrix_store):
        with pytest.raises(LinalgException) as exc_info:
            matrix_store.parse_vector("1 2\n1 1\n")
        assert exc_info.value.error_code == LinalgErrorCode.DIMENSION_MISMATCH

    @pytest.mark.parametrize("entry", ["1/0", "1.5", "a", "1/-2"])
    def test_bad_entries(self, matrix_store, entry):
        with pytest.raises(FormatException) as exc_info:
            matrix_store.parse(f"1 2\n0 {entry}\n")
        assert exc_info.value.details["column"] == 3

    def test_short_row(self, matrix_store):
        with pytest.raises(FormatException) as exc_info:
            matrix_store.parse("2 2\n1 0\n1\n")
        assert exc_info.value.details["line"] == 3


class TestCheckpointStore:
    def test_write_then_read(self, tmp_path):
        store = CheckpointStore(tmp_path / "run.ckpt")
        assert store.read_optional() is None
        checkpoint = Checkpoint(
            mode="random",
            n=6,
            next_index=120,
            violations_so_far=1,
            seed=42,
            dedup=True,
        )
        store.write(checkpoint)
        assert (tmp_path / "run.ckpt").read_text() == "random 6 120 1 42 1 0\n"
        assert store.read() == checkpoint
        assert not (tmp_path / "run.ckpt.tmp").exists()

    def test_four_field_line_has_default_filters(self, write_file):
        store = CheckpointStore(write_file("run.ckpt", "all 4 300 2\n"))
        checkpoint = store.read()
        assert checkpoint.next_index == 300
        assert checkpoint.seed == 0
        assert not checkpoint.dedup and not checkpoint.prune

    @pytest.mark.parametrize(
        "line,column",
        [
            ("all 4 300 2 0 1\n", 1),
            ("all 4 300 2 0 2 0\n", 15),
            ("all 4 300 2 -1 0 0\n", 13),
        ],
    )
    def test_malformed_filter_fields(self, write_file, line, column):
        store = CheckpointStore(write_file("run.ckpt", line))
        with pytest.raises(FormatException) as exc_info:
            store.read()
        assert exc_info.value.details["column"] == column

    def test_unknown_mode(self, write_file):
        store = CheckpointStore(write_file("run.ckpt", "everything 6 0 0\n"))
        with pytest.raises(FormatException) as exc_info:
            store.read()
        assert exc_info.value.details["column"] == 1
