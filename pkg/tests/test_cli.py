"""CLI behavior: outputs, exit codes, determinism."""

import json

import pytest

from divtop.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fragment_dot(capsys):
    code, out, err = run(capsys, "fragment", "--ring", "z", "--seeds", "12", "--out", "dot")
    assert code == 0 and err == ""
    assert out.count("->") == 5
    assert out.startswith("digraph fragment {")


def test_fragment_json_valp(capsys):
    code, out, _ = run(
        capsys, "fragment", "--ring", "valp", "--p", "2", "--seeds", "p^4", "--out", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["points"] == ["p", "p^2", "p^3", "p^4"]
    assert len(doc["edges"]) == 3


def test_fragment_text(capsys):
    code, out, _ = run(capsys, "fragment", "--ring", "z", "--seeds", "4", "--out", "text")
    assert code == 0
    assert "points: 2 4" in out


def test_fragment_zero_seed_exits_2(capsys):
    code, out, err = run(capsys, "fragment", "--ring", "z", "--seeds", "0")
    assert code == 2
    assert "error:" in err


def test_fragment_bad_syntax_exits_2(capsys):
    code, _, err = run(capsys, "fragment", "--ring", "gauss", "--seeds", "3+2j")
    assert code == 2 and "error:" in err


def test_modulus_required(capsys):
    code, _, err = run(capsys, "fragment", "--ring", "fp", "--seeds", "x")
    assert code == 2 and "--p is required" in err
    code, _, err = run(capsys, "fragment", "--ring", "z", "--p", "3", "--seeds", "4")
    assert code == 2 and "does not apply" in err


def test_check_expected_holds(capsys):
    code, out, _ = run(
        capsys, "check", "--ring", "z", "--seeds", "12,18",
        "--props", "t0,isolated,gcd-intersection",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    docs = [json.loads(l) for l in lines]
    assert [d["check"] for d in docs] == ["t0", "isolated", "gcd-intersection"]
    assert all(d["verdict"] == "holds" for d in docs)


def test_check_nested_valp(capsys):
    code, out, _ = run(
        capsys, "check", "--ring", "valp", "--p", "2", "--seeds", "p^20", "--props", "nested"
    )
    assert code == 0
    assert json.loads(out)["verdict"] == "holds"


def test_check_nested_fp_fails_as_expected(capsys):
    code, out, _ = run(
        capsys, "check", "--ring", "fp", "--p", "2", "--seeds", "x^2+x", "--props", "nested"
    )
    assert code == 0  # "fails" is the expected verdict for a non-valuation ring
    doc = json.loads(out)
    assert doc["verdict"] == "fails"
    assert doc["witnesses"] == ["x", "x+1"]


def test_check_zs5_gcd_intersection_single_seed(capsys):
    code, out, _ = run(
        capsys, "check", "--ring", "zs5", "--seeds", "6", "--props", "gcd-intersection"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "witness-produced"
    assert doc["details"]["basic"] is False


def test_check_unexpected_verdict_exits_1(capsys):
    # a single chain in z is nested even though z is not a valuation ring
    code, out, _ = run(capsys, "check", "--ring", "z", "--seeds", "4", "--props", "nested")
    assert code == 1
    assert json.loads(out)["verdict"] == "holds"


def test_check_witness_props(capsys):
    code, out, _ = run(
        capsys, "check", "--ring", "z", "--seeds", "2,3,5",
        "--props", "t1,ultra,sep-nbhd,regular,compact,chain,maximal", "--n", "6",
    )
    assert code == 0
    docs = [json.loads(l) for l in out.strip().splitlines()]
    assert all(d["verdict"] == "witness-produced" for d in docs)
    chain = next(d for d in docs if d["check"] == "chain")
    assert chain["details"]["sizes"] == [1, 2, 3, 4, 5, 6]


def test_check_sep_nbhd_needs_three_irreducibles(capsys):
    code, _, err = run(
        capsys, "check", "--ring", "valp", "--p", "2", "--seeds", "p^9", "--props", "sep-nbhd"
    )
    assert code == 2 and "sep-nbhd" in err


def test_check_unknown_prop(capsys):
    code, _, err = run(capsys, "check", "--ring", "z", "--seeds", "6", "--props", "frobnicate")
    assert code == 2 and "unknown prop" in err


def test_check_text_mode(capsys):
    code, out, _ = run(
        capsys, "check", "--ring", "z", "--seeds", "6", "--props", "nested", "--out", "text"
    )
    assert code == 0
    assert out.strip() == "nested: fails [2 3]"


def test_primes_z(capsys):
    code, out, _ = run(capsys, "primes", "--ring", "z", "--start", "2,3", "--count", "3")
    assert code == 0
    assert json.loads(out)["members"] == ["2", "3", "5", "17", "257"]


def test_primes_default_start(capsys):
    code, out, _ = run(capsys, "primes", "--ring", "z", "--count", "2")
    assert code == 0
    # from {2}: first 2^1 + 1 = 3, then 2 + 3 = 5
    assert json.loads(out)["members"] == ["2", "3", "5"]


def test_primes_fp(capsys):
    code, out, _ = run(capsys, "primes", "--ring", "fp", "--p", "2", "--start", "x", "--count", "2")
    assert code == 0
    assert json.loads(out)["members"] == ["x", "x+1", "x^2+x+1"]


def test_primes_gauss_permitted(capsys):
    code, out, _ = run(capsys, "primes", "--ring", "gauss", "--count", "1")
    assert code == 0
    assert json.loads(out)["members"] == ["1+1i", "2+1i"]


def test_primes_valp_exits_2(capsys):
    code, _, err = run(capsys, "primes", "--ring", "valp", "--p", "2", "--count", "1")
    assert code == 2 and "prime stream" in err


def test_primes_zs5_exits_2(capsys):
    code, _, err = run(capsys, "primes", "--ring", "zs5", "--count", "1")
    assert code == 2


def test_primes_bad_count(capsys):
    code, _, err = run(capsys, "primes", "--ring", "z", "--count", "0")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("fragment", "--ring", "z", "--seeds", "12", "--out", "dot"),
        ("fragment", "--ring", "z", "--seeds", "12,18", "--out", "json"),
        ("check", "--ring", "z", "--seeds", "12,18", "--props", "t0,isolated,gcd-intersection"),
        ("check", "--ring", "zs5", "--seeds", "6", "--props", "isolated,gcd-intersection,density"),
        ("check", "--ring", "gauss", "--seeds", "5", "--props", "nested,t1"),
        ("primes", "--ring", "z", "--start", "2,3", "--count", "5"),
    ],
)
def test_cli_output_is_byte_identical(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
