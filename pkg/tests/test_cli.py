"""End-to-end command behaviour: exit codes, streams, and file handling."""

from __future__ import annotations

import io
import json

import pytest

from tracelang import formula_to_dict, parse_ldlf, parse_ltlf
from tracelang.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def formula_file(tmp_path, text, name="formula.txt"):
    path = tmp_path / name
    path.write_bytes(text.encode("latin-1"))
    return str(path)


def trace_file(tmp_path, steps, name="trace.json"):
    path = tmp_path / name
    path.write_text(json.dumps(steps))
    return str(path)


# -------------------------------------------------------------------- check


def test_check_accepts_and_stays_silent(capsys, tmp_path):
    code, out, err = run(capsys, "check", "--logic", "ltlf",
                         formula_file(tmp_path, "a U b"))
    assert (code, out, err) == (0, "", "")


def test_check_rejects_with_a_positioned_diagnostic(capsys, tmp_path):
    code, out, err = run(capsys, "check", "--logic", "ltlf",
                         formula_file(tmp_path, "X[?]a"))
    assert code == 1
    assert out == ""
    assert err.startswith("1:2: ")


def test_check_reports_parse_errors_on_stderr(capsys, tmp_path):
    code, out, err = run(capsys, "check", "--logic", "ldlf",
                         formula_file(tmp_path, "a"))
    assert code == 1
    assert err.startswith("1:1: ")
    assert "modality" in err


def test_stray_bytes_become_positioned_errors(capsys, tmp_path):
    path = tmp_path / "formula.txt"
    path.write_bytes(b"a &\n\xe9")
    code, out, err = run(capsys, "check", "--logic", "ltlf", str(path))
    assert code == 1
    assert err.startswith("2:1: ")


def test_missing_file_is_a_usage_problem(capsys, tmp_path):
    code, out, err = run(capsys, "check", "--logic", "ltlf",
                         str(tmp_path / "absent.txt"))
    assert code == 2
    assert err.startswith("error: ")


# ---------------------------------------------------------------------- fmt


def test_fmt_canonicalises(capsys, tmp_path):
    code, out, err = run(capsys, "fmt", "--logic", "ltlf",
                         formula_file(tmp_path, "a&&b||c"))
    assert (code, out, err) == (0, "a & b | c\n", "")


def test_fmt_full_parens(capsys, tmp_path):
    code, out, _ = run(capsys, "fmt", "--logic", "ltlf", "--style", "full_parens",
                       formula_file(tmp_path, "a&&b||c"))
    assert (code, out) == (0, "((a & b) | c)\n")


def test_fmt_output_is_a_fixpoint(capsys, tmp_path):
    first = run(capsys, "fmt", "--logic", "pldlf",
                formula_file(tmp_path, "<< a >> tt ^ [[b ; c*]]ff"))
    again = run(capsys, "fmt", "--logic", "pldlf",
                formula_file(tmp_path, first[1].rstrip("\n"), "second.txt"))
    assert first[0] == again[0] == 0
    assert first[1] == again[1] == "<<a>>tt ^ [[b ; c*]]ff\n"


def test_fmt_reads_stdin(capsys, monkeypatch):
    fake = io.TextIOWrapper(io.BytesIO(b" a   ->\tb "), encoding="latin-1")
    monkeypatch.setattr("sys.stdin", fake)
    code, out, _ = run(capsys, "fmt", "--logic", "ltlf", "-")
    assert (code, out) == (0, "a -> b\n")


# ---------------------------------------------------------------------- ast


def test_ast_is_compact_single_line_json(capsys, tmp_path):
    code, out, _ = run(capsys, "ast", "--logic", "ltlf",
                       formula_file(tmp_path, "X[!]a"))
    assert code == 0
    assert out == '{"op":"next","args":[{"op":"atom","name":"a"}]}\n'


def test_ast_serialises_modalities_with_named_fields(capsys, tmp_path):
    code, out, _ = run(capsys, "ast", "--logic", "ldlf",
                       formula_file(tmp_path, "<a>tt"))
    assert code == 0
    assert out == (
        '{"op":"diamond","regex":{"op":"prop","args":'
        '[{"op":"atom","name":"a"}]},"arg":{"op":"tt"}}\n'
    )


def test_ast_matches_the_library_serialiser(capsys, tmp_path):
    text = "<(<a>tt)? ; b*>(tt & ff)"
    code, out, _ = run(capsys, "ast", "--logic", "ldlf",
                       formula_file(tmp_path, text))
    assert code == 0
    assert json.loads(out) == formula_to_dict(parse_ldlf(text))


def test_weak_and_strong_next_serialise_differently(capsys, tmp_path):
    _, weak, _ = run(capsys, "ast", "--logic", "ltlf",
                     formula_file(tmp_path, "X a"))
    _, strong, _ = run(capsys, "ast", "--logic", "ltlf",
                       formula_file(tmp_path, "X[!] a", "strong.txt"))
    assert json.loads(weak)["op"] == "weak_next"
    assert json.loads(strong)["op"] == "next"


# --------------------------------------------------------------------- eval


def test_eval_sat(capsys, tmp_path):
    code, out, _ = run(capsys, "eval", "--logic", "ltlf",
                       "--trace", trace_file(tmp_path, [["p"], []]),
                       formula_file(tmp_path, "p & F last"))
    assert (code, out) == (0, "sat\n")


def test_eval_unsat(capsys, tmp_path):
    code, out, _ = run(capsys, "eval", "--logic", "ltlf",
                       "--trace", trace_file(tmp_path, [["p"], []]),
                       formula_file(tmp_path, "G p"))
    assert (code, out) == (1, "unsat\n")


def test_eval_anchors_past_logics_at_the_end(capsys, tmp_path):
    code, out, _ = run(capsys, "eval", "--logic", "pltlf",
                       "--trace", trace_file(tmp_path, [["p"], []]),
                       formula_file(tmp_path, "Y p"))
    assert (code, out) == (0, "sat\n")


def test_eval_empty_trace_depends_on_the_logic(capsys, tmp_path):
    trace = trace_file(tmp_path, [])
    code, _, err = run(capsys, "eval", "--logic", "ltlf",
                       "--trace", trace, formula_file(tmp_path, "tt"))
    assert code == 2
    assert "empty trace" in err
    code, out, _ = run(capsys, "eval", "--logic", "ldlf",
                       "--trace", trace, formula_file(tmp_path, "tt", "t.txt"))
    assert (code, out) == (0, "sat\n")


def test_eval_rejects_malformed_traces(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    for content in ['{"not": "a trace"}', "[[1]]", "not json", '["p"]']:
        bad.write_text(content)
        code, _, err = run(capsys, "eval", "--logic", "ltlf",
                           "--trace", str(bad), formula_file(tmp_path, "p"))
        assert code == 2, content
        assert err.startswith("error: ")


# -------------------------------------------------------------- conformance


def manifest_file(tmp_path, lines, name="cases.jsonl"):
    path = tmp_path / name
    path.write_text("".join(json.dumps(line) + "\n" for line in lines))
    return str(path)


def test_conformance_all_passing(capsys, tmp_path):
    path = manifest_file(tmp_path, [
        {"logic": "ltlf", "input": "a&&b", "expect": "ok", "canonical": "a & b"},
        {"logic": "ltlf", "input": "F", "expect": "error",
         "error_contains": "keyword"},
        {"logic": "ldlf", "input": "<a>tt", "expect": "ok"},
    ])
    code, out, _ = run(capsys, "conformance", path)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert all(line.startswith("ok") for line in lines[:3])
    assert lines[-1] == "PASS 3/3"


def test_conformance_reports_failures(capsys, tmp_path):
    path = manifest_file(tmp_path, [
        {"logic": "ltlf", "input": "a", "expect": "ok", "canonical": "b"},
        {"logic": "ltlf", "input": "a", "expect": "error"},
        {"logic": "ltlf", "input": "(a", "expect": "error",
         "error_contains": "no such text"},
        {"logic": "ltlf", "input": "a|b", "expect": "ok", "canonical": "a | b"},
    ])
    code, out, _ = run(capsys, "conformance", path)
    assert code == 1
    lines = out.splitlines()
    assert lines[-1] == "PASS 1/4"
    assert sum(line.startswith("FAIL") for line in lines) == 3
    assert "canonical mismatch" in lines[0]


def test_conformance_blank_lines_are_skipped(capsys, tmp_path):
    path = tmp_path / "cases.jsonl"
    path.write_text(
        '\n{"logic": "ltlf", "input": "a", "expect": "ok"}\n\n'
    )
    code, out, _ = run(capsys, "conformance", str(path))
    assert code == 0
    assert out.splitlines()[-1] == "PASS 1/1"


@pytest.mark.parametrize("case,needle", [
    ({"logic": "ltlf", "input": "a"}, "missing fields"),
    ({"logic": "nope", "input": "a", "expect": "ok"}, "unknown logic"),
    ({"logic": "ltlf", "input": 3, "expect": "ok"}, "'input' must be a string"),
    ({"logic": "ltlf", "input": "a", "expect": "maybe"}, "'expect' must be"),
    ({"logic": "ltlf", "input": "a", "expect": "ok", "extra": 1},
     "unknown fields"),
    ({"logic": "ltlf", "input": "a", "expect": "error", "canonical": "a"},
     "unknown fields"),
    ({"logic": "ltlf", "input": "a", "expect": "ok", "canonical": 7},
     "'canonical' must be a string"),
])
def test_conformance_rejects_malformed_manifests(capsys, tmp_path, case, needle):
    path = manifest_file(tmp_path, [case])
    code, out, err = run(capsys, "conformance", path)
    assert code == 2
    assert "manifest line 1" in err
    assert needle in err


def test_conformance_rejects_invalid_json_lines(capsys, tmp_path):
    path = tmp_path / "cases.jsonl"
    path.write_text('{"logic": "ltlf"\n')
    code, _, err = run(capsys, "conformance", str(path))
    assert code == 2
    assert "invalid JSON" in err


# -------------------------------------------------------------------- usage


def test_usage_errors_exit_with_two(tmp_path):
    for argv in [
        [],
        ["frobnicate"],
        ["check", "formula.txt"],
        ["check", "--logic", "nope", "formula.txt"],
        ["eval", "--logic", "ltlf", "formula.txt"],
    ]:
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2
