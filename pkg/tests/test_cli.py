import json
from pathlib import Path

import pytest

from symlab.cli import build_parser, emit_report, main, run

GOLDEN_DIR = Path(__file__).parent / "golden"

GOLDEN = [
    (
        "aut_split_modulus",
        ["aut", "--field", "Q", "--poly", "factored:(X)^2(X-1)",
         "--check-map", "0,a,1-a", "--symbols", "a"],
    ),
    (
        "aut_brute_force_f5",
        ["aut", "--field", "Fp(5)", "--poly", "factored:(X)(X-1)(X-2)", "--brute-force"],
    ),
    ("family_0_t_1", ["family", "--roots", "0,t,1", "--field", "Q", "--at", "0,1"]),
    ("family_0_t_t2", ["family", "--roots", "0,t,t^2", "--field", "Q", "--at", "0"]),
    ("family_scaled_132", ["family", "--roots", "t,3*t,2*t", "--field", "Q", "--at", "0"]),
    ("family_two_roots", ["family", "--roots", "t,2*t", "--field", "Q", "--at", "0"]),
    ("survival_swap", ["survival", "--perm", "(12)", "--witness", "1,3,2"]),
    (
        "survival_cycle_zeta3",
        ["survival", "--perm", "(132)", "--witness", "0,1,-zeta3", "--field", "Qzeta3"],
    ),
    (
        "conj_scaling_family",
        ["conj", "--field", "Q", "--symbols", "a,t", "--source-roots", "0,0,t",
         "--target-roots", "0,0,1", "--iso", "0,t", "--aut", "0,a,1-a", "--limit", "0"],
    ),
    ("talg_pairs_f5", ["talg", "--t", "1", "--field", "Fp(5)", "--pair", "5,2", "--brute-force"]),
    ("chi_f4", ["chi", "--field", "F(2,2)"]),
    ("chi_f3", ["chi", "--field", "Fp(3)"]),
    ("idem_family", ["idem", "--roots", "0,t,1", "--field", "Q", "--symbols", "t"]),
    ("lines_sweep", ["lines", "--family", "paper", "--from", "1/2", "--to", "1", "--steps", "4"]),
    ("lines_rectangle", ["lines", "--config", "1 0 2; 0 1 0; 1 0 0; 0 1 4"]),
]


@pytest.mark.parametrize("name,argv", GOLDEN, ids=[g[0] for g in GOLDEN])
def test_golden_output(name, argv):
    code, text = run(argv)
    assert code == 0
    expected = (GOLDEN_DIR / f"{name}.txt").read_text()
    assert text == expected


def test_output_is_deterministic():
    argv = GOLDEN[2][1]
    assert run(argv) == run(argv)


class TestJson:
    @pytest.mark.parametrize("name,argv", GOLDEN, ids=[g[0] for g in GOLDEN])
    def test_round_trip(self, name, argv):
        code, text = run(argv + ["--json"])
        assert code == 0
        report = json.loads(text)
        assert report["schema"] == "symlab/1"
        assert report["subcommand"] == argv[0]
        assert emit_report(report, "json") == text

    def test_no_warnings_key_when_empty(self):
        code, text = run(["chi", "--field", "Fp(5)", "--json"])
        assert code == 0
        assert "warnings" not in json.loads(text)

    def test_warnings_key_present_for_char3(self):
        code, text = run(["chi", "--field", "Fp(3)", "--json"])
        assert code == 0
        report = json.loads(text)
        assert any("unreachable" in w for w in report["warnings"])

    def test_two_parallel_pairs_note(self):
        code, text = run(["lines", "--config", "1 0 2; 0 1 0; 1 0 0; 0 1 4", "--json"])
        report = json.loads(text)
        assert any("order 8" in w for w in report["warnings"])


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["family", "--roots", "t,t", "--at", "0"],  # indistinct roots
            ["family", "--roots", "0,t,1", "--field", "R"],  # unknown field
            ["aut", "--field", "Q", "--poly", "X^3"],  # not factored form
            ["idem", "--roots", "0,1,oops"],  # parse error
            ["survival", "--perm", "(14)"],  # out-of-range cycle
            ["talg", "--t", "0", "--field", "Fp(5)", "--pair", "1,2"],  # t = 0
            ["talg", "--t", "1", "--field", "Fp(5)", "--pair", "1,2,3"],  # bad pair
            ["aut", "--field", "Q", "--poly", "factored:(X)", "--brute-force"],
            ["lines", "--config", "0 0 1; 0 1 0; 1 0 0; 0 1 4"],  # degenerate line
            ["nonsense"],  # unknown subcommand
        ],
    )
    def test_input_errors_exit_1(self, argv, capsys):
        assert main(argv) == 1
        assert "error" in capsys.readouterr().err

    def test_success_exit_0(self, capsys):
        assert main(["chi", "--field", "Fp(5)"]) == 0
        assert "order 2" in capsys.readouterr().out

    def test_internal_inconsistency_exit_2(self, monkeypatch, capsys):
        from symlab import cli
        from symlab.families import InternalInconsistencyError

        def boom(args):
            raise InternalInconsistencyError("verification failed")

        monkeypatch.setitem(cli._COMMANDS, "chi", boom)
        assert main(["chi", "--field", "Fp(5)"]) == 2
        assert "internal inconsistency" in capsys.readouterr().err


def test_factored_polynomial_parsing():
    from fractions import Fraction

    from symlab.cli import InputError, _parse_factored
    from symlab.fields import QQ

    cases = [
        ("factored:(X)(X-1)(X-2)", [(0, 1), (1, 1), (2, 1)]),
        ("factored:(X-1-1)", [(2, 1)]),  # root is the whole tail, negated
        ("factored:(X-1+2)", [(-1, 1)]),
        ("factored:(X+3)^2", [(-3, 2)]),
        ("factored:(X - 1/2)", [(Fraction(1, 2), 1)]),
    ]
    for text, expected in cases:
        got = [(r.as_constant().value, m) for r, m in _parse_factored(text, QQ, ())]
        assert got == [(Fraction(v), m) for v, m in expected]
    for bad in ("X^3", "factored:", "factored:(Y-1)", "factored:(X-1", "factored:(X-1)^"):
        with pytest.raises((InputError, ValueError)):
            _parse_factored(bad, QQ, ())


def test_parser_lists_all_subcommands():
    parser = build_parser()
    text = parser.format_help()
    for sub in ("aut", "idem", "family", "survival", "chi", "talg", "lines", "conj"):
        assert sub in text
