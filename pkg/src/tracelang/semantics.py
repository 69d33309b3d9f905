"""Finite-trace evaluation for all four logics.

A trace is a finite sequence of steps, each step the set of atoms true there.
LTLf and PLTLf formulas are evaluated at a position inside the trace; LDLf
formulas also admit the position just past the end (and PLDLf the position
just before the start), which is where ``tt`` and ``ff`` part ways with
``true`` and ``false``: ``<true>tt`` demands a step to move through, ``tt``
does not.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .lexer import Logic
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
)


class EmptyTraceError(ValueError):
    """Raised where a logic gives the empty trace no evaluation position."""


class PositionOutOfRangeError(IndexError):
    """Raised when the requested position is outside the logic's legal range."""


@dataclass(frozen=True)
class Trace:
    """An immutable finite trace; construct from any iterable of atom-name iterables."""

    steps: tuple[frozenset[str], ...] = ()

    def __post_init__(self) -> None:
        steps = tuple(frozenset(step) for step in self.steps)
        for step in steps:
            for atom in step:
                if not isinstance(atom, str):
                    raise TypeError(f"atom names must be strings, got {atom!r}")
        object.__setattr__(self, "steps", steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __getitem__(self, index: int) -> frozenset[str]:
        return self.steps[index]


def eval_prop(node: Node, step: Iterable[str]) -> bool:
    """Evaluate a purely propositional formula against one step."""
    atoms = step if isinstance(step, (set, frozenset)) else frozenset(step)
    return _prop(node, atoms)


def _prop(node: Node, step) -> bool:
    if isinstance(node, Atom):
        return node.name in step
    if isinstance(node, TrueConst):
        return True
    if isinstance(node, FalseConst):
        return False
    if isinstance(node, Not):
        return not _prop(node.arg, step)
    if isinstance(node, And):
        return _prop(node.left, step) and _prop(node.right, step)
    if isinstance(node, Or):
        return _prop(node.left, step) or _prop(node.right, step)
    if isinstance(node, Implies):
        return (not _prop(node.left, step)) or _prop(node.right, step)
    if isinstance(node, Equiv):
        return _prop(node.left, step) == _prop(node.right, step)
    if isinstance(node, Xor):
        return _prop(node.left, step) != _prop(node.right, step)
    raise TypeError(f"not a propositional formula: {node!r}")


def eval_ltlf(node: Node, trace: Trace, position: int) -> bool:
    """Evaluate an LTLf formula at ``position`` (0-based, inside the trace).

    The empty trace has no positions and raises :class:`EmptyTraceError`.
    """
    n = len(trace)
    if n == 0:
        raise EmptyTraceError("LTLf formulas have no value on the empty trace")
    if not 0 <= position < n:
        raise PositionOutOfRangeError(
            f"position {position} outside [0, {n - 1}]"
        )
    return _ltlf(node, trace, position)


def _ltlf(f: Node, t: Trace, i: int) -> bool:
    n = len(t)
    if isinstance(f, (Atom, TrueConst, FalseConst)):
        return _prop(f, t[i])
    if isinstance(f, Tautology):
        return True
    if isinstance(f, Contradiction):
        return False
    if isinstance(f, Last):
        return i == n - 1
    if isinstance(f, End):
        return False
    if isinstance(f, Not):
        return not _ltlf(f.arg, t, i)
    if isinstance(f, And):
        return _ltlf(f.left, t, i) and _ltlf(f.right, t, i)
    if isinstance(f, Or):
        return _ltlf(f.left, t, i) or _ltlf(f.right, t, i)
    if isinstance(f, Implies):
        return (not _ltlf(f.left, t, i)) or _ltlf(f.right, t, i)
    if isinstance(f, Equiv):
        return _ltlf(f.left, t, i) == _ltlf(f.right, t, i)
    if isinstance(f, Xor):
        return _ltlf(f.left, t, i) != _ltlf(f.right, t, i)
    if isinstance(f, WeakNext):
        return i == n - 1 or _ltlf(f.arg, t, i + 1)
    if isinstance(f, StrongNext):
        return i < n - 1 and _ltlf(f.arg, t, i + 1)
    if isinstance(f, Until):
        return any(
            _ltlf(f.right, t, j)
            and all(_ltlf(f.left, t, k) for k in range(i, j))
            for j in range(i, n)
        )
    if isinstance(f, WeakUntil):
        # until, or the left side holds through the end of the trace
        return all(_ltlf(f.left, t, j) for j in range(i, n)) or _ltlf(
            Until(f.left, f.right), t, i
        )
    if isinstance(f, Release):
        # dual of until: the right side holds until (and including when)
        # the left side first does, or forever
        return all(
            _ltlf(f.right, t, j)
            or any(_ltlf(f.left, t, k) for k in range(i, j))
            for j in range(i, n)
        )
    if isinstance(f, StrongRelease):
        return any(
            _ltlf(f.left, t, j)
            and _ltlf(f.right, t, j)
            and all(_ltlf(f.right, t, k) for k in range(i, j))
            for j in range(i, n)
        )
    if isinstance(f, Eventually):
        return any(_ltlf(f.arg, t, j) for j in range(i, n))
    if isinstance(f, Always):
        return all(_ltlf(f.arg, t, j) for j in range(i, n))
    raise TypeError(f"not an LTLf formula: {f!r}")


def eval_pltlf(node: Node, trace: Trace, position: int) -> bool:
    """Evaluate a PLTLf formula at ``position``; past operators look toward 0."""
    n = len(trace)
    if n == 0:
        raise EmptyTraceError("PLTLf formulas have no value on the empty trace")
    if not 0 <= position < n:
        raise PositionOutOfRangeError(
            f"position {position} outside [0, {n - 1}]"
        )
    return _pltlf(node, trace, position)


def _pltlf(f: Node, t: Trace, i: int) -> bool:
    if isinstance(f, (Atom, TrueConst, FalseConst)):
        return _prop(f, t[i])
    if isinstance(f, Tautology):
        return True
    if isinstance(f, Contradiction):
        return False
    if isinstance(f, First):
        return i == 0
    if isinstance(f, Start):
        return False
    if isinstance(f, Not):
        return not _pltlf(f.arg, t, i)
    if isinstance(f, And):
        return _pltlf(f.left, t, i) and _pltlf(f.right, t, i)
    if isinstance(f, Or):
        return _pltlf(f.left, t, i) or _pltlf(f.right, t, i)
    if isinstance(f, Implies):
        return (not _pltlf(f.left, t, i)) or _pltlf(f.right, t, i)
    if isinstance(f, Equiv):
        return _pltlf(f.left, t, i) == _pltlf(f.right, t, i)
    if isinstance(f, Xor):
        return _pltlf(f.left, t, i) != _pltlf(f.right, t, i)
    if isinstance(f, Before):
        return i > 0 and _pltlf(f.arg, t, i - 1)
    if isinstance(f, Since):
        return any(
            _pltlf(f.right, t, j)
            and all(_pltlf(f.left, t, k) for k in range(j + 1, i + 1))
            for j in range(0, i + 1)
        )
    if isinstance(f, Once):
        return any(_pltlf(f.arg, t, j) for j in range(0, i + 1))
    if isinstance(f, Historically):
        return all(_pltlf(f.arg, t, j) for j in range(0, i + 1))
    raise TypeError(f"not a PLTLf formula: {f!r}")


def eval_ldlf(node: Node, trace: Trace, position: int) -> bool:
    """Evaluate an LDLf formula at ``position`` in ``[0, len(trace)]``.

    The position just past the last step is legal: ``tt`` still holds there,
    while any diamond that needs to move does not.
    """
    n = len(trace)
    if not 0 <= position <= n:
        raise PositionOutOfRangeError(f"position {position} outside [0, {n}]")
    return _ldlf(node, trace, position)


def _ldlf(f: Node, t: Trace, i: int) -> bool:
    if isinstance(f, Tautology):
        return True
    if isinstance(f, Contradiction):
        return False
    if isinstance(f, Not):
        return not _ldlf(f.arg, t, i)
    if isinstance(f, And):
        return _ldlf(f.left, t, i) and _ldlf(f.right, t, i)
    if isinstance(f, Or):
        return _ldlf(f.left, t, i) or _ldlf(f.right, t, i)
    if isinstance(f, Implies):
        return (not _ldlf(f.left, t, i)) or _ldlf(f.right, t, i)
    if isinstance(f, Equiv):
        return _ldlf(f.left, t, i) == _ldlf(f.right, t, i)
    if isinstance(f, Xor):
        return _ldlf(f.left, t, i) != _ldlf(f.right, t, i)
    if isinstance(f, Diamond):
        reach = regex_reach(f.regex, t, "forward")
        return any(j == i and _ldlf(f.arg, t, k) for j, k in reach)
    if isinstance(f, Box):
        reach = regex_reach(f.regex, t, "forward")
        return all(_ldlf(f.arg, t, k) for j, k in reach if j == i)
    raise TypeError(f"not an LDLf formula at formula level: {f!r}")


def eval_pldlf(node: Node, trace: Trace, position: int) -> bool:
    """Evaluate a PLDLf formula at ``position`` in ``[-1, len(trace) - 1]``.

    The position just before the first step is legal, mirroring LDLf's
    position past the end.
    """
    n = len(trace)
    if not -1 <= position <= n - 1:
        raise PositionOutOfRangeError(
            f"position {position} outside [-1, {n - 1}]"
        )
    return _pldlf(node, trace, position)


def _pldlf(f: Node, t: Trace, i: int) -> bool:
    if isinstance(f, Tautology):
        return True
    if isinstance(f, Contradiction):
        return False
    if isinstance(f, Not):
        return not _pldlf(f.arg, t, i)
    if isinstance(f, And):
        return _pldlf(f.left, t, i) and _pldlf(f.right, t, i)
    if isinstance(f, Or):
        return _pldlf(f.left, t, i) or _pldlf(f.right, t, i)
    if isinstance(f, Implies):
        return (not _pldlf(f.left, t, i)) or _pldlf(f.right, t, i)
    if isinstance(f, Equiv):
        return _pldlf(f.left, t, i) == _pldlf(f.right, t, i)
    if isinstance(f, Xor):
        return _pldlf(f.left, t, i) != _pldlf(f.right, t, i)
    if isinstance(f, BackDiamond):
        reach = regex_reach(f.regex, t, "backward")
        return any(j == i and _pldlf(f.arg, t, k) for j, k in reach)
    if isinstance(f, BackBox):
        reach = regex_reach(f.regex, t, "backward")
        return all(_pldlf(f.arg, t, k) for j, k in reach if j == i)
    raise TypeError(f"not a PLDLf formula at formula level: {f!r}")


def regex_reach(
    regex: Node, trace: Trace, direction: str = "forward"
) -> frozenset[tuple[int, int]]:
    """The reachability relation of ``regex`` over the trace's positions.

    Forward relations live on positions ``0..len(trace)`` and a propositional
    step moves from ``i`` to ``i + 1``; backward relations live on
    ``-1..len(trace) - 1`` and a step moves from ``i`` to ``i - 1``.  Tests
    stay in place and re-enter the owning logic's evaluation (LDLf when
    moving forward, PLDLf when moving backward).
    """
    if direction not in ("forward", "backward"):
        raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")
    n = len(trace)
    forward = direction == "forward"
    positions = range(0, n + 1) if forward else range(-1, n)
    return _reach(regex, trace, positions, forward)


def _reach(r: Node, t: Trace, positions: range, forward: bool) -> frozenset[tuple[int, int]]:
    if isinstance(r, RegexProp):
        if forward:
            return frozenset(
                (i, i + 1) for i in range(len(t)) if _prop(r.prop, t[i])
            )
        return frozenset((i, i - 1) for i in range(len(t)) if _prop(r.prop, t[i]))
    if isinstance(r, RegexTest):
        check = _ldlf if forward else _pldlf
        return frozenset((i, i) for i in positions if check(r.arg, t, i))
    if isinstance(r, RegexConcat):
        return _compose(
            _reach(r.left, t, positions, forward),
            _reach(r.right, t, positions, forward),
        )
    if isinstance(r, RegexUnion):
        return _reach(r.left, t, positions, forward) | _reach(
            r.right, t, positions, forward
        )
    if isinstance(r, RegexStar):
        return _closure(_reach(r.arg, t, positions, forward), positions)
    raise TypeError(f"not a regular-expression node: {r!r}")


def _compose(
    a: frozenset[tuple[int, int]], b: frozenset[tuple[int, int]]
) -> frozenset[tuple[int, int]]:
    by_source: dict[int, set[int]] = {}
    for j, k in b:
        by_source.setdefault(j, set()).add(k)
    return frozenset(
        (i, k) for i, j in a for k in by_source.get(j, ())
    )


def _closure(
    base: frozenset[tuple[int, int]], positions: range
) -> frozenset[tuple[int, int]]:
    """Reflexive-transitive closure over ``positions`` by fixpoint iteration."""
    relation = frozenset((i, i) for i in positions)
    while True:
        extended = relation | _compose(relation, base)
        if extended == relation:
            return relation
        relation = extended


def satisfies(node: Node, trace: Trace, logic: Logic) -> bool:
    """Whether the trace as a whole satisfies the formula.

    Future-looking logics are anchored at the first position, past-looking
    logics at the last; the dynamic logics keep their off-the-end position
    for the empty trace, while LTLf and PLTLf reject it.
    """
    if logic is Logic.LTLF:
        return eval_ltlf(node, trace, 0)
    if logic is Logic.PLTLF:
        if len(trace) == 0:
            raise EmptyTraceError("PLTLf formulas have no value on the empty trace")
        return eval_pltlf(node, trace, len(trace) - 1)
    if logic is Logic.LDLF:
        return eval_ldlf(node, trace, 0)
    if logic is Logic.PLDLF:
        return eval_pldlf(node, trace, len(trace) - 1)
    raise ValueError(f"unknown logic: {logic!r}")
