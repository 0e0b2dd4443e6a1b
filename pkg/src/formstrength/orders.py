"""Monomial orders as sort-key providers over exponent tuples.

An order exposes ``key(mono)``; monomial ``a`` is larger than ``b`` exactly
when ``key(a) > key(b)``.  Keys are plain tuples so ``max``/``sorted`` on
term dicts stay cheap.
"""

from __future__ import annotations


class MonomialOrder:
    name = "?"

    def key(self, mono):  # pragma: no cover - interface
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def signature(self):
        return (self.name,)

    def __repr__(self):
        return self.name


class _DegRevLex(MonomialOrder):
    name = "degrevlex"

    @staticmethod
    def key(mono):
        total = 0
        rev = []
        for e in reversed(mono):
            total += e
            rev.append(-e)
        return (total, tuple(rev))


class _Lex(MonomialOrder):
    name = "lex"

    @staticmethod
    def key(mono):
        return mono


class _Elimination(MonomialOrder):
    """Block order eliminating the first ``block`` variables (degrevlex in
    each block)."""

    name = "elim"

    def __init__(self, block: int):
        if block < 1:
            raise ValueError("elimination block must be nonempty")
        self.block = block

    def signature(self):
        return (self.name, self.block)

    def key(self, mono):
        k = self.block
        return _DegRevLex.key(mono[:k]) + _DegRevLex.key(mono[k:])

    def __repr__(self):
        return f"elim({self.block})"


DEGREVLEX = _DegRevLex()
LEX = _Lex()


def elimination(block: int) -> MonomialOrder:
    return _Elimination(block)


def order_from_name(name: str) -> MonomialOrder:
    if name == "degrevlex":
        return DEGREVLEX
    if name == "lex":
        return LEX
    raise ValueError(f"unknown monomial order {name!r}")
