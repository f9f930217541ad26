import pytest

from skewmat import textio
from skewmat.hmatroid import check_circuit_axioms, u24_make
from skewmat.hyperfield import hyperfield_from_spec
from skewmat.kernel import worked_example
from skewmat.matroid import Matroid


def test_matroid_round_trip(data_dir):
    N = textio.parse_matroid(textio.read_text(data_dir / "fano.mat"))
    assert N.rank == 3 and len(N.bases) == 28
    for kind in ("basis", "circuit"):
        assert textio.parse_matroid(textio.format_matroid(N, kind)) == N


def test_matroid_file_errors(data_dir):
    with pytest.raises(textio.ERRORS):
        textio.parse_matroid(textio.read_text(data_dir / "not_a_matroid.mat"))
    with pytest.raises(textio.FormatError):
        textio.parse_matroid("basis: 1 2\n")
    with pytest.raises(textio.FormatError):
        textio.parse_matroid("ground: 1 2\nbasis: 1\ncircuit: 2\n")
    with pytest.raises(textio.FormatError):
        textio.parse_matroid("ground: 1 2\nwhat: 1\n")


def test_signature_round_trip(data_dir):
    C = textio.parse_signature(textio.read_text(data_dir / "d3_bad.sig"))
    assert C.field.spec == "d3" and C.side == "left"
    assert textio.parse_signature(textio.format_signature(C)) == C
    assert not check_circuit_axioms(C).ok


def test_signature_hyperfield_from_flag():
    H = hyperfield_from_spec("sign")
    M = u24_make(H, 1, H.parse("-"))
    text = textio.format_signature(M).replace("hyperfield: sign\n", "")
    assert textio.parse_signature(text, "sign") == M
    with pytest.raises(textio.FormatError):
        textio.parse_signature(text)
    with pytest.raises(textio.FormatError):
        textio.parse_signature(textio.format_signature(M), "krasner")


def test_signature_row_length_checked():
    with pytest.raises(textio.FormatError):
        textio.parse_signature("hyperfield: krasner\nground: 1 2 3\ncircuit: 1; 1\n")
    with pytest.raises(textio.FormatError):
        textio.parse_signature("hyperfield: krasner\nground: 1 2\ncircuit: 1; x\n")


def test_ore_matrix_matches_worked_example(data_dir):
    R, matrix = textio.parse_ore_matrix(textio.read_text(data_dir / "example.ore"))
    cols, _ = worked_example(2, 2)
    assert textio.columns_of(matrix) == cols


def test_ore_matrix_modulus_checked():
    body = "p: 2\nk: 2\nrow: 1; T\n"
    textio.parse_ore_matrix("modulus: g^2+g+1\n" + body)
    with pytest.raises(textio.FormatError):
        textio.parse_ore_matrix("modulus: g^2+1\n" + body)


def test_ore_matrix_errors():
    with pytest.raises(textio.FormatError):
        textio.parse_ore_matrix("k: 1\nrow: 1\n")
    with pytest.raises(textio.FormatError):
        textio.parse_ore_matrix("p: 3\nrow: 1; T\nrow: 1\n")
    with pytest.raises(textio.FormatError):
        textio.parse_ore_matrix("p: 3\n")
    with pytest.raises(textio.FormatError):
        textio.parse_ore_matrix("p: 4\nrow: 1\n")


def test_comments_and_blank_lines_ignored():
    N = textio.parse_matroid("# comment\n\nground: a b  # trailing\nbasis: a\n")
    assert N == Matroid.from_bases(["a", "b"], [["a"]])
