import io
import json

import pytest

from exactmath.cli import build_parser, dispatch

GOLDEN = [
    # number theory
    (["nt", "gcd", "252", "198"], "18"),
    (["nt", "lcm", "90", "24"], "360"),
    (["nt", "factor", "360"], "2^3 * 3^2 * 5"),
    (["nt", "prime", "91"], "false"),
    (["nt", "tobase", "125", "7"], "236"),
    (["nt", "frombase", "10010011", "2"], "147"),
    (["nt", "divmod", "47", "5"], "q = 9, r = 2"),
    # combinatorics
    (["comb", "fact", "5"], "120"),
    (["comb", "binom", "7", "2"], "21"),
    (["comb", "expand", "4", "3", "0", "2", "1"],
     "81 + 216*x + 216*x^2 + 96*x^3 + 16*x^4"),
    (["comb", "term", "12", "4", "1", "1/2", "1", "2/3"], "495*x^(20/3)"),
    (["comb", "sum", "squares", "5"], "55"),
    # logic
    (["logic", "classify", "p -> (q -> p)"], "tautology"),
    (["logic", "classify", "p & !p"], "contradiction"),
    (["logic", "equiv", "p -> q", "!p | q"], "true"),
    (["logic", "table", "p & !q"],
     "p q | *\n-------\nT T | F\nT F | T\nF T | F\nF F | F"),
    # sets
    (["set", "ops", "union", "{a,b,c}", "{c,d}"], "{a, b, c, d}"),
    (["set", "ops", "symdiff", "{a,b,c,d,e,f}", "{d,e,f,g,h}"],
     "{a, b, c, g, h}"),
    (["set", "venn3", "35", "18", "22", "6", "11", "4", "1"],
     "third set: 15\ne: 6\nenj: 10\nf: 9\nfe: 5\nfenj: 1\nfnj: 3\nnj: 1"),
    # relations
    (["rel", "inverse", "{(1,2),(3,4)}"], "{(2, 1), (4, 3)}"),
    (["rel", "compose", "{(1,2),(2,3)}", "{(2,4),(3,9)}"],
     "{(1, 4), (2, 9)}"),
    # algebraic structures
    (["alg", "classify", "--addmod", "6"],
     "class: abelian_group\nclosed: true\nassociative: true\n"
     "commutative: true\nall_invertible: true\nneutral: 0"),
    # complex numbers
    (["cx", "arith", "mul", "3+4i", "2-5i"], "26-7i"),
    (["cx", "arith", "div", "2-3i", "1+i"], "-1/2-5/2i"),
    (["cx", "polar", "1+i"],
     "r = 1.414213562, theta = 0.7853981634 rad (45 deg)"),
    (["cx", "roots", "1-i", "3"],
     "r = 1.122462048, theta = 1.832595715 rad (105 deg)\n"
     "r = 1.122462048, theta = 3.926990817 rad (225 deg)\n"
     "r = 1.122462048, theta = 6.021385919 rad (345 deg)"),
    # matrices
    (["mat", "det", "3 2 -1; 1 2 4; 0 6 -2"], "-86"),
    (["mat", "det", "--method", "sarrus3", "3 2 -1; 1 2 4; 0 6 -2"], "-86"),
    (["mat", "inverse", "2 -3; 0 1"], "1/2 3/2\n  0   1"),
    # systems
    (["sys", "gauss", "1 1; 1 -1 | 2 0"], "x1 = 1, x2 = 1"),
    (["sys", "classify", "1 1; 1 1 | 2 3"],
     "rank A = 1, rank A|b = 2, unknowns = 2: inconsistent"),
    (["sys", "gauss", "1 1 1; 2 3 -1; 1 2 -2; 3 5 -3 | 3 4 1 5"],
     "x1 = -4*t1 + 5\nx2 = 3*t1 - 2\nx3 = t1\nfree columns: 3"),
    # geometry
    (["geo", "plane", "three", "(1,1,0)", "(-2,0,4)", "(2,3,-1)", "--forms"],
     "7x - y + 5z - 6 = 0\nhesse p = 0.692820323\n"
     "segment l, m, n = 6/7, -6, 6/5"),
    (["geo", "line", "planes", "2 -1 -1 -4", "2 -3 -2 7"],
     "(x-(19/4))/-1 = (y-(11/2))/2 = (z-(0))/-4"),
    (["geo", "relate", "lineplane",
      "(x-1)/3 = (y-2)/-2 = (z-3)/1", "6 -4 2 7"],
     "kind: intersecting\npoint: (-5/28, 39/14, 73/28)\nsin angle = 1"),
    (["geo", "dist", "pointplane", "(0,6,4)", "1 -2 -2 3"],
     "d = 5.666666667 (d^2 = 289/9)"),
    # mixtures
    (["mix", "prop", "x+9", "6", "x", "5"], "45"),
    (["mix", "split", "198", "1:2:3:5"], "18, 36, 54, 90"),
    (["mix", "percent", "--i", "30", "--p", "32%"], "375/4"),
    (["mix", "chain", "--final", "60", "--", "-10", "+15"], "4000/69"),
    (["mix", "simple", "48", "78", "60", "10"], "6, 4"),
    (["mix", "star", "120", "560", "160", "140", "110", "50"],
     "280, 40, 80, 160"),
]


@pytest.mark.parametrize("argv,expected", GOLDEN,
                         ids=[" ".join(argv) for argv, _ in GOLDEN])
def test_golden(argv, expected, capsys):
    assert dispatch(argv) == 0
    assert capsys.readouterr().out == expected + "\n"


JSON_CASES = [
    (["--json", "mat", "det", "3 2 -1; 1 2 4; 0 6 -2"],
     '{"det":{"den":1,"num":-86}}'),
    (["--json", "sys", "gauss", "1 1; 1 -1 | 2 0"],
     '{"solution":{"kind":"unique","values":'
     '[{"den":1,"num":1},{"den":1,"num":1}]}}'),
    (["--json", "cx", "arith", "mul", "3+4i", "2-5i"],
     '{"result":{"im":{"den":1,"num":-7},"re":{"den":1,"num":26}}}'),
    (["--json", "geo", "line", "planes", "2 -1 -1 -4", "2 -3 -2 7"],
     '{"line":{"dir":[{"den":1,"num":-1},{"den":1,"num":2},'
     '{"den":1,"num":-4}],"point":[{"den":4,"num":19},{"den":2,"num":11},'
     '{"den":1,"num":0}]}}'),
]


@pytest.mark.parametrize("argv,expected", JSON_CASES,
                         ids=[" ".join(argv) for argv, _ in JSON_CASES])
def test_json_golden(argv, expected, capsys):
    assert dispatch(argv) == 0
    assert capsys.readouterr().out == expected + "\n"


@pytest.mark.parametrize("argv", [
    ["--json", "sys", "gauss", "1 1 1; 2 3 -1; 1 2 -2; 3 5 -3 | 3 4 1 5"],
    ["--json", "mat", "rank", "3 6 6 9 1; 2 4 1 2 0; -1 -2 4 5 1"],
    ["--json", "logic", "table", "p -> q <-> !p | q"],
    ["--json", "set", "power", "{a,b,c}"],
    ["--json", "alg", "classify", "--mulmod", "6"],
    ["--json", "cx", "roots", "1-i", "3"],
    ["--json", "geo", "relate", "planes", "1 3 -4 5", "2 2 2 -7"],
    ["--json", "mix", "star", "120", "560", "160", "140", "110", "50"],
])
def test_json_round_trips_to_identical_bytes(argv, capsys):
    assert dispatch(argv) == 0
    out = capsys.readouterr().out.rstrip("\n")
    reencoded = json.dumps(json.loads(out), sort_keys=True,
                           separators=(",", ":"))
    assert reencoded == out


def test_domain_error_exit_code(capsys):
    assert dispatch(["mat", "det", "1 2 3; 4 5 6"]) == 1
    err = capsys.readouterr().err
    assert "not square" in err


def test_parse_error_exit_code(capsys):
    assert dispatch(["cx", "arith", "mul", "3+4j", "1"]) == 2
    assert "parse error" in capsys.readouterr().err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        dispatch(["mat", "det"])
    assert exc.value.code == 2


def test_stdin_placeholder(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("2 -3; 0 1"))
    assert dispatch(["mat", "det", "-"]) == 0
    assert capsys.readouterr().out == "2\n"


def test_cayley_from_table_text(capsys):
    table = "e a\ne a\na e"
    assert dispatch(["alg", "classify", table]) == 0
    out = capsys.readouterr().out
    assert "class: abelian_group" in out
    assert "neutral: e" in out


def test_help_lists_all_groups():
    help_text = build_parser().format_help()
    for group in ("nt", "comb", "logic", "set", "rel", "alg",
                  "cx", "mat", "sys", "geo", "mix"):
        assert group in help_text
