"""Syntax trees for formulas and the regular expressions inside modalities.

One shared set of node classes covers all four logics; the parser only ever
builds the subset that belongs to the requested logic.  Nodes are frozen and
hashable, and structural equality ignores how an atom was quoted.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Iterator


class Node:
    """Base class for every formula and regular-expression node."""


# ---------------------------------------------------------------- leaves


@dataclass(frozen=True)
class Atom(Node):
    """A named proposition; ``quoted`` records surface quoting only and is
    ignored by equality and hashing."""

    name: str
    quoted: bool = field(default=False, compare=False)


@dataclass(frozen=True)
class TrueConst(Node):
    """Propositional constant ``true`` (holds at a step)."""


@dataclass(frozen=True)
class FalseConst(Node):
    """Propositional constant ``false``."""


@dataclass(frozen=True)
class Tautology(Node):
    """Logical constant ``tt``, true everywhere (even beyond the last step)."""


@dataclass(frozen=True)
class Contradiction(Node):
    """Logical constant ``ff``, false everywhere."""


@dataclass(frozen=True)
class Last(Node):
    """Holds exactly at the final position of a trace."""


@dataclass(frozen=True)
class End(Node):
    """Never holds on a finite trace."""


@dataclass(frozen=True)
class First(Node):
    """Holds exactly at position zero."""


@dataclass(frozen=True)
class Start(Node):
    """Never holds on a finite trace."""


# ---------------------------------------------------------------- connectives


@dataclass(frozen=True)
class Not(Node):
    arg: Node


@dataclass(frozen=True)
class And(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Or(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Implies(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Equiv(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Xor(Node):
    left: Node
    right: Node


# ------------------------------------------------- future-time temporal


@dataclass(frozen=True)
class WeakNext(Node):
    arg: Node


@dataclass(frozen=True)
class StrongNext(Node):
    arg: Node


@dataclass(frozen=True)
class Until(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class WeakUntil(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Release(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class StrongRelease(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Eventually(Node):
    arg: Node


@dataclass(frozen=True)
class Always(Node):
    arg: Node


# --------------------------------------------------- past-time temporal


@dataclass(frozen=True)
class Before(Node):
    arg: Node


@dataclass(frozen=True)
class Since(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Once(Node):
    arg: Node


@dataclass(frozen=True)
class Historically(Node):
    arg: Node


# ------------------------------------------------- dynamic-logic modalities


@dataclass(frozen=True)
class Diamond(Node):
    """``<regex>arg``: some regex path from here reaches a position where arg holds."""

    regex: Node
    arg: Node


@dataclass(frozen=True)
class Box(Node):
    """``[regex]arg``: every regex path from here reaches only positions where arg holds."""

    regex: Node
    arg: Node


@dataclass(frozen=True)
class BackDiamond(Node):
    """``<<regex>>arg``: the backward-moving counterpart of :class:`Diamond`."""

    regex: Node
    arg: Node


@dataclass(frozen=True)
class BackBox(Node):
    """``[[regex]]arg``: the backward-moving counterpart of :class:`Box`."""

    regex: Node
    arg: Node


# ------------------------------------------------------ regular expressions


@dataclass(frozen=True)
class RegexProp(Node):
    """A purely propositional step formula used as a one-step regex."""

    prop: Node


@dataclass(frozen=True)
class RegexTest(Node):
    """``arg?`` where ``arg`` is a full formula of the owning logic, checked in
    place without moving."""

    arg: Node


@dataclass(frozen=True)
class RegexConcat(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class RegexUnion(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class RegexStar(Node):
    arg: Node


# ------------------------------------------------------------------ helpers


def children(node: Node) -> tuple[Node, ...]:
    """Immediate subtrees of ``node``, in field order."""
    return tuple(
        value
        for f in fields(node)  # type: ignore[arg-type]
        for value in (getattr(node, f.name),)
        if isinstance(value, Node)
    )


def walk(node: Node) -> Iterator[Node]:
    """Yield ``node`` and every descendant, pre-order."""
    yield node
    for child in children(node):
        yield from walk(child)


def atoms(node: Node) -> frozenset[str]:
    """Names of all atoms anywhere in the tree, including inside regexes and tests."""
    return frozenset(n.name for n in walk(node) if isinstance(n, Atom))


def node_count(node: Node) -> int:
    return sum(1 for _ in walk(node))


def desugar(node: Node) -> Node:
    """Rewrite the special position formulas into their temporal definitions.

    ``last`` becomes ``X(false)``, ``end`` becomes ``G(false)``, ``first``
    becomes ``!Y(true)`` and ``start`` becomes ``H(false)``; everything else is
    rebuilt unchanged.
    """
    if isinstance(node, Last):
        return WeakNext(FalseConst())
    if isinstance(node, End):
        return Always(FalseConst())
    if isinstance(node, First):
        return Not(Before(TrueConst()))
    if isinstance(node, Start):
        return Historically(FalseConst())
    values = [
        desugar(v) if isinstance(v, Node) else v
        for f in fields(node)  # type: ignore[arg-type]
        for v in (getattr(node, f.name),)
    ]
    return type(node)(*values)


__all__ = [
    "Node",
    "Atom",
    "TrueConst",
    "FalseConst",
    "Tautology",
    "Contradiction",
    "Last",
    "End",
    "First",
    "Start",
    "Not",
    "And",
    "Or",
    "Implies",
    "Equiv",
    "Xor",
    "WeakNext",
    "StrongNext",
    "Until",
    "WeakUntil",
    "Release",
    "StrongRelease",
    "Eventually",
    "Always",
    "Before",
    "Since",
    "Once",
    "Historically",
    "Diamond",
    "Box",
    "BackDiamond",
    "BackBox",
    "RegexProp",
    "RegexTest",
    "RegexConcat",
    "RegexUnion",
    "RegexStar",
    "children",
    "walk",
    "atoms",
    "node_count",
    "desugar",
]
