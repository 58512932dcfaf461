import pytest

from tribrackets import serialize_algebra, serialize_diagram
from tribrackets.cli import main
from tests.conftest import DIAG_PRODUCT, FULL_PRODUCT, Z3_TENSOR


@pytest.fixture
def z3_full_path(tmp_path):
    path = tmp_path / "z3_full.alg"
    path.write_text(serialize_algebra(Z3_TENSOR, FULL_PRODUCT))
    return str(path)


@pytest.fixture
def z3_diag_path(tmp_path):
    path = tmp_path / "z3_diag.alg"
    path.write_text(serialize_algebra(Z3_TENSOR, DIAG_PRODUCT))
    return str(path)


@pytest.fixture
def theta_path(tmp_path, diagrams):
    path = tmp_path / "theta.dia"
    path.write_text(serialize_diagram(diagrams["theta"]))
    return str(path)


class TestVerify:
    def test_pass(self, capsys, z3_full_path):
        assert main(["verify", z3_full_path]) == 0
        assert capsys.readouterr().out == "PASS\n"

    def test_axiom_failure_exits_1(self, capsys, tmp_path):
        bad = serialize_algebra(Z3_TENSOR, FULL_PRODUCT).replace(
            "1 3 2 / 3 2 1 / 2 1 3", "1 1 2 / 3 2 1 / 2 1 3"
        )
        path = tmp_path / "bad.alg"
        path.write_text(bad)
        assert main(["verify", str(path)]) == 1
        out = capsys.readouterr().out
        assert out.startswith("FAIL") and "cancellation" in out

    def test_malformed_file_exits_2(self, tmp_path):
        path = tmp_path / "junk.alg"
        path.write_text("n = 3\nnot a block\n")
        assert main(["verify", str(path)]) == 2

    def test_missing_file_exits_2(self):
        assert main(["verify", "/nonexistent/file.alg"]) == 2

    def test_tribracket_only_file(self, capsys, tmp_path):
        path = tmp_path / "bare.alg"
        path.write_text(serialize_algebra(Z3_TENSOR))
        assert main(["verify", str(path)]) == 0
        assert capsys.readouterr().out == "PASS\n"


class TestCount:
    def test_prints_one_integer(self, capsys, z3_full_path, theta_path):
        assert main(["count", z3_full_path, theta_path]) == 0
        assert capsys.readouterr().out == "9\n"

    def test_oracle_agreement(self, capsys, z3_full_path, theta_path):
        assert main(["count", z3_full_path, theta_path, "--oracle"]) == 0
        assert capsys.readouterr().out == "9\n"

    def test_enumerate_listing(self, capsys, z3_full_path, theta_path):
        assert main(["count", z3_full_path, theta_path, "--enumerate"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 10 and lines[-1] == "9"
        assert lines[0] == "o=1 p=1 q=1"

    def test_handlebody_gating_exits_2(self, tmp_path, z3_full_path, diagrams):
        path = tmp_path / "hopf.dia"
        path.write_text(serialize_diagram(diagrams["hopf_handlebody"]))
        assert main(["count", z3_full_path, str(path)]) == 2

    def test_product_required(self, tmp_path, theta_path):
        bare = tmp_path / "bare.alg"
        bare.write_text(serialize_algebra(Z3_TENSOR))
        assert main(["count", str(bare), theta_path]) == 2


class TestEnumerationVerbs:
    def test_enumerate_tribrackets_stream(self, capsys):
        assert main(["enumerate-tribrackets", "2"]) == 0
        out = capsys.readouterr().out
        assert out.count("tribracket:") == 2
        assert out.strip().endswith("# 2 tribrackets on 2 elements")

    def test_enumerate_products_stream(self, capsys, z3_full_path):
        assert main(["enumerate-products", z3_full_path]) == 0
        out = capsys.readouterr().out
        assert out.count("product:") == 8
        assert out.strip().endswith("# 8 products")

    def test_idempotent_filter(self, capsys, z3_full_path):
        assert main(["enumerate-products", z3_full_path, "--idempotent"]) == 0
        out = capsys.readouterr().out
        assert out.count("product:") == 1


class TestCheckMoves:
    def test_all_moves_pass_for_full_product(self, capsys, z3_full_path):
        assert main(["check-moves", z3_full_path]) == 0
        out = capsys.readouterr().out
        assert "R3a  PASS" in out and "IH" not in out

    def test_ih_failure_sets_exit_code(self, capsys, z3_full_path):
        assert main(["check-moves", z3_full_path, "--include-ih"]) == 1
        assert "IH  FAIL" in capsys.readouterr().out

    def test_ih_passes_for_idempotent(self, capsys, z3_diag_path):
        assert main(["check-moves", z3_diag_path, "--include-ih", "--moves", "IH"]) == 0
        assert capsys.readouterr().out == "IH  PASS\n"

    def test_move_filter(self, capsys, z3_full_path):
        assert main(["check-moves", z3_full_path, "--moves", "R4.1,R5.7"]) == 0
        assert capsys.readouterr().out == "R4.1  PASS\nR5.7  PASS\n"


class TestDemo:
    def test_demo_passes(self, capsys):
        assert main(["demo"]) == 0
        out = capsys.readouterr().out
        for needle in (
            "theta colorings (z3_full)",
            "hopf_handlebody colorings (z3_diag)",
            "k2 colorings (z3_cyc)",
            "z4_left colorings (z4_half)",
            "compatible products of the z3 tensor",
            "all 17 checks passed",
        ):
            assert needle in out
        assert "FAIL" not in out

    def test_demo_is_byte_stable(self, capsys):
        assert main(["demo"]) == 0
        first = capsys.readouterr().out
        assert main(["demo"]) == 0
        second = capsys.readouterr().out
        assert first == second


class TestUsage:
    def test_unknown_verb_exits_2(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_unknown_flag_exits_2(self, capsys, z3_full_path):
        assert main(["verify", z3_full_path, "--frob"]) == 2

    def test_no_verb_exits_2(self, capsys):
        assert main([]) == 2
