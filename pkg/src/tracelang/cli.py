"""Command-line front end: check, fmt, ast, eval, and conformance.

Exit codes are part of the contract: 0 for success (including "sat"), 1 when
a formula is rejected or a trace does not satisfy it, 2 for usage and
environment problems such as unreadable files or malformed trace/manifest
JSON.  Diagnostics go to stderr as ``LINE:COL: message``; results go to
stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .formulas import (
    Always,
    And,
    Atom,
    BackBox,
    BackDiamond,
    Before,
    Box,
    Contradiction,
    Diamond,
    End,
    Equiv,
    Eventually,
    FalseConst,
    First,
    Historically,
    Implies,
    Last,
    Node,
    Not,
    Once,
    Or,
    RegexConcat,
    RegexProp,
    RegexStar,
    RegexTest,
    RegexUnion,
    Release,
    Since,
    Start,
    StrongNext,
    StrongRelease,
    Tautology,
    TrueConst,
    Until,
    WeakNext,
    WeakUntil,
    Xor,
    children,
)
from .lexer import LexError, Logic
from .parser import ParseError, parse
from .printer import Style, format_formula
from .semantics import EmptyTraceError, Trace, satisfies

_LEAF_NAMES: dict[type, str] = {
    TrueConst: "true",
    FalseConst: "false",
    Tautology: "tt",
    Contradiction: "ff",
    Last: "last",
    End: "end",
    First: "first",
    Start: "start",
}
_MODAL_NAMES: dict[type, str] = {
    Diamond: "diamond",
    Box: "box",
    BackDiamond: "back_diamond",
    BackBox: "back_box",
}
# note: the strong next serialises as "next", the weak next as "weak_next"
_OP_NAMES: dict[type, str] = {
    Not: "not",
    And: "and",
    Or: "or",
    Implies: "impl",
    Equiv: "equiv",
    Xor: "xor",
    Until: "until",
    WeakUntil: "weak_until",
    Release: "release",
    StrongRelease: "strong_release",
    Eventually: "eventually",
    Always: "always",
    StrongNext: "next",
    WeakNext: "weak_next",
    Since: "since",
    Once: "once",
    Historically: "historically",
    Before: "before",
    RegexProp: "prop",
    RegexTest: "test",
    RegexConcat: "concat",
    RegexUnion: "union",
    RegexStar: "star",
}


def formula_to_dict(node: Node) -> dict:
    """The JSON-ready form of a syntax tree, with fixed key order."""
    cls = type(node)
    if cls is Atom:
        return {"op": "atom", "name": node.name}  # type: ignore[attr-defined]
    if cls in _LEAF_NAMES:
        return {"op": _LEAF_NAMES[cls]}
    if cls in _MODAL_NAMES:
        return {
            "op": _MODAL_NAMES[cls],
            "regex": formula_to_dict(node.regex),  # type: ignore[attr-defined]
            "arg": formula_to_dict(node.arg),  # type: ignore[attr-defined]
        }
    if cls in _OP_NAMES:
        return {
            "op": _OP_NAMES[cls],
            "args": [formula_to_dict(child) for child in children(node)],
        }
    raise TypeError(f"cannot serialise {node!r}")


class _CliError(Exception):
    """An environment or input-format problem; exits with status 2."""


def _read_source(path: str) -> str:
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as handle:
                data = handle.read()
    except OSError as error:
        raise _CliError(f"cannot read {path}: {error}") from error
    # decode byte-per-character so stray bytes surface as positioned lex errors
    return data.decode("latin-1")


def _load_trace(path: str) -> Trace:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as error:
        raise _CliError(f"cannot read trace file {path}: {error}") from error
    except json.JSONDecodeError as error:
        raise _CliError(f"malformed trace file {path}: {error}") from error
    if not isinstance(data, list) or not all(
        isinstance(step, list) and all(isinstance(atom, str) for atom in step)
        for step in data
    ):
        raise _CliError(
            f"malformed trace file {path}: expected a JSON array of arrays of "
            f"atom-name strings"
        )
    return Trace(data)


_MANIFEST_LOGICS = {logic.value for logic in Logic}


def _load_manifest(path: str) -> list[tuple[int, dict]]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as error:
        raise _CliError(f"cannot read manifest {path}: {error}") from error
    cases: list[tuple[int, dict]] = []
    for number, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            case = json.loads(line)
        except json.JSONDecodeError as error:
            raise _CliError(f"manifest line {number}: invalid JSON: {error}") from error
        cases.append((number, _validate_case(number, case)))
    return cases


def _validate_case(number: int, case: object) -> dict:
    if not isinstance(case, dict):
        raise _CliError(f"manifest line {number}: expected a JSON object")
    missing = {"logic", "input", "expect"} - case.keys()
    if missing:
        raise _CliError(
            f"manifest line {number}: missing fields {sorted(missing)}"
        )
    if case["logic"] not in _MANIFEST_LOGICS:
        raise _CliError(
            f"manifest line {number}: unknown logic {case['logic']!r}"
        )
    if not isinstance(case["input"], str):
        raise _CliError(f"manifest line {number}: 'input' must be a string")
    if case["expect"] == "ok":
        allowed = {"logic", "input", "expect", "canonical"}
        if "canonical" in case and not isinstance(case["canonical"], str):
            raise _CliError(f"manifest line {number}: 'canonical' must be a string")
    elif case["expect"] == "error":
        allowed = {"logic", "input", "expect", "error_contains"}
        if "error_contains" in case and not isinstance(case["error_contains"], str):
            raise _CliError(
                f"manifest line {number}: 'error_contains' must be a string"
            )
    else:
        raise _CliError(
            f"manifest line {number}: 'expect' must be 'ok' or 'error'"
        )
    unknown = case.keys() - allowed
    if unknown:
        raise _CliError(
            f"manifest line {number}: unknown fields {sorted(unknown)}"
        )
    return case


def _run_case(case: dict) -> tuple[bool, str]:
    logic = Logic(case["logic"])
    try:
        node = parse(case["input"], logic)
    except (LexError, ParseError) as error:
        if case["expect"] == "error":
            needle = case.get("error_contains")
            if needle is not None and needle not in str(error):
                return False, f"diagnostic {str(error)!r} does not contain {needle!r}"
            return True, ""
        return False, f"rejected: {error}"
    if case["expect"] == "error":
        return False, "parsed successfully, but an error was expected"
    printed = format_formula(node)
    expected = case.get("canonical")
    if expected is not None and printed != expected:
        return False, f"canonical mismatch: expected {expected!r}, got {printed!r}"
    return True, ""


def _cmd_check(args: argparse.Namespace) -> int:
    parse(_read_source(args.source), Logic(args.logic))
    return 0


def _cmd_fmt(args: argparse.Namespace) -> int:
    node = parse(_read_source(args.source), Logic(args.logic))
    print(format_formula(node, Style(args.style)))
    return 0


def _cmd_ast(args: argparse.Namespace) -> int:
    node = parse(_read_source(args.source), Logic(args.logic))
    print(json.dumps(formula_to_dict(node), separators=(",", ":")))
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    node = parse(_read_source(args.source), Logic(args.logic))
    trace = _load_trace(args.trace)
    holds = satisfies(node, trace, Logic(args.logic))
    print("sat" if holds else "unsat")
    return 0 if holds else 1


def _cmd_conformance(args: argparse.Namespace) -> int:
    cases = _load_manifest(args.manifest)
    passed = 0
    for _, case in cases:
        success, detail = _run_case(case)
        if success:
            passed += 1
        tag = "ok  " if success else "FAIL"
        suffix = f"  ({detail})" if detail else ""
        print(f"{tag}  {case['logic']:<6}{json.dumps(case['input'])}{suffix}")
    print(f"PASS {passed}/{len(cases)}")
    return 0 if passed == len(cases) else 1


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracelang",
        description="Parse, format, serialise, and evaluate formulas of the "
        "finite-trace temporal logics LTLf, LDLf, PLTLf, and PLDLf.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def formula_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument(
            "--logic",
            required=True,
            choices=[logic.value for logic in Logic],
            help="which logic's syntax to use",
        )
        sub.add_argument(
            "source", help="path of the formula file, or - to read stdin"
        )
        return sub

    check = formula_command("check", "parse a formula; succeed silently")
    check.set_defaults(func=_cmd_check)

    fmt = formula_command("fmt", "parse a formula and print it back")
    fmt.add_argument(
        "--style",
        choices=[style.value for style in Style],
        default=Style.CANONICAL.value,
        help="canonical keeps only required parentheses; full_parens keeps all",
    )
    fmt.set_defaults(func=_cmd_fmt)

    ast_cmd = formula_command("ast", "print the syntax tree as JSON")
    ast_cmd.add_argument(
        "--format", choices=["json"], default="json", help="output format"
    )
    ast_cmd.set_defaults(func=_cmd_ast)

    eval_cmd = formula_command("eval", "evaluate a formula against a trace")
    eval_cmd.add_argument(
        "--trace",
        required=True,
        help="path of a JSON trace file: an array of steps, each an array of "
        "atom names",
    )
    eval_cmd.set_defaults(func=_cmd_eval)

    conformance = commands.add_parser(
        "conformance", help="run a line-delimited JSON manifest of parser cases"
    )
    conformance.add_argument("manifest", help="path of the manifest file")
    conformance.set_defaults(func=_cmd_conformance)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LexError, ParseError) as error:
        print(error, file=sys.stderr)
        return 1
    except EmptyTraceError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    except _CliError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
