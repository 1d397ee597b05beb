"""Construction expressions for rings.

Every ring carries the expression it was built from, so reports and
counterexamples can always be rendered back to parseable text. Element
literals inside expressions are either plain indices (int) or nested
pairs (tuple of two literals) for product and idealization elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

Literal = Union[int, tuple]


@dataclass(frozen=True)
class Zn:
    n: int


@dataclass(frozen=True)
class LocalAlg:
    p: int


@dataclass(frozen=True)
class Product:
    left: "RingExpr"
    right: "RingExpr"


@dataclass(frozen=True)
class Quotient:
    ring: "RingExpr"
    ideal: tuple


@dataclass(frozen=True)
class Localize:
    ring: "RingExpr"
    elems: tuple


@dataclass(frozen=True)
class Idealize:
    ring: "RingExpr"
    ideal: tuple


RingExpr = Union[Zn, LocalAlg, Product, Quotient, Localize, Idealize]


def print_literal(lit: Literal) -> str:
    if isinstance(lit, tuple):
        a, b = lit
        return f"({print_literal(a)}, {print_literal(b)})"
    return str(lit)


def print_ideal_literal(lits: tuple) -> str:
    return "(" + ", ".join(print_literal(x) for x in lits) + ")"


def print_expr(e: RingExpr) -> str:
    """Render an expression in canonical parseable form."""
    if isinstance(e, Zn):
        return f"Z{e.n}"
    if isinstance(e, LocalAlg):
        return f"LocalAlg({e.p})"
    if isinstance(e, Product):
        left = print_expr(e.left)
        right = print_expr(e.right)
        # product chains are left associative, so only a right operand
        # that is itself a product needs parentheses
        if isinstance(e.right, Product):
            right = f"({right})"
        return f"{left} x {right}"
    if isinstance(e, Quotient):
        base = print_expr(e.ring)
        if isinstance(e.ring, (Product, Quotient)):
            base = f"({base})"
        return f"{base}/{print_ideal_literal(e.ideal)}"
    if isinstance(e, Localize):
        elems = ", ".join(print_literal(x) for x in e.elems)
        return f"Loc({print_expr(e.ring)}, {elems})"
    if isinstance(e, Idealize):
        return f"Idealize({print_expr(e.ring)}, {print_ideal_literal(e.ideal)})"
    raise TypeError(f"not a ring expression: {e!r}")
