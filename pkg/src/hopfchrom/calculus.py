"""Typed expression trees over morphisms: compose, tensor, evaluate.

Evaluation is functorial and exact: composition multiplies matrices, tensor
takes Kronecker products, and tensor words are flat (left-nested) so both
sides of a diagrammatic equation can be built verbatim and compared entry by
entry.  A small textual syntax for the CLI names the standard primitives
(ev, coev, evt, coevt, id, lamL, lamR, cL, cR, cSph); ``;`` composes in the
written operator order (the leftmost factor is applied last) and ``*``
tensors, binding tighter than ``;``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .hmod import (
    HModule,
    Morphism,
    MorphismTypeError,
    word_dim,
    word_label,
    words_match,
)
from .linalg import Matrix

__all__ = [
    "MorphismExpr",
    "Prim",
    "Ident",
    "Compose",
    "Tensor",
    "identity",
    "compose",
    "tensor",
    "evaluate",
    "morphisms_equal",
    "ExprSyntaxError",
    "ExprEnv",
    "parse_expr",
]


class MorphismExpr:
    def source_word(self) -> tuple:
        raise NotImplementedError

    def target_word(self) -> tuple:
        raise NotImplementedError


@dataclass
class Prim(MorphismExpr):
    morphism: Morphism

    def source_word(self):
        return self.morphism.source

    def target_word(self):
        return self.morphism.target

    def __repr__(self):
        return f"prim({word_label(self.morphism.source)}->{word_label(self.morphism.target)})"


@dataclass
class Ident(MorphismExpr):
    word: tuple

    def __post_init__(self):
        if isinstance(self.word, HModule):
            self.word = (self.word,)
        self.word = tuple(self.word)

    def source_word(self):
        return self.word

    def target_word(self):
        return self.word

    def __repr__(self):
        return f"id({word_label(self.word)})"


@dataclass
class Compose(MorphismExpr):
    """f after g: evaluates to matrix(f) @ matrix(g)."""

    f: MorphismExpr
    g: MorphismExpr

    def source_word(self):
        return self.g.source_word()

    def target_word(self):
        return self.f.target_word()

    def __repr__(self):
        return f"({self.f!r} ; {self.g!r})"


@dataclass
class Tensor(MorphismExpr):
    f: MorphismExpr
    g: MorphismExpr

    def source_word(self):
        return self.f.source_word() + self.g.source_word()

    def target_word(self):
        return self.f.target_word() + self.g.target_word()

    def __repr__(self):
        return f"({self.f!r} * {self.g!r})"


def identity(word) -> Ident:
    return Ident(word)


def compose(*exprs: MorphismExpr) -> MorphismExpr:
    """compose(f, g, h) = f after g after h."""
    if not exprs:
        raise MorphismTypeError("compose needs at least one factor")
    out = exprs[-1]
    for e in reversed(exprs[:-1]):
        out = Compose(e, out)
    return out


def tensor(*exprs: MorphismExpr) -> MorphismExpr:
    if not exprs:
        raise MorphismTypeError("tensor needs at least one factor")
    out = exprs[0]
    for e in exprs[1:]:
        out = Tensor(out, e)
    return out


def _field_of(expr: MorphismExpr):
    if isinstance(expr, Prim):
        return expr.morphism.matrix.field
    if isinstance(expr, Ident):
        word = expr.word
        if word:
            return word[0].H.field
        raise MorphismTypeError("identity on the empty word needs context")
    return _field_of(expr.f)


def evaluate(expr: MorphismExpr) -> Morphism:
    """Evaluate an expression tree to a single Morphism, checking types."""
    if isinstance(expr, Prim):
        return expr.morphism
    if isinstance(expr, Ident):
        field = _field_of(expr)
        return Morphism(expr.word, expr.word,
                        Matrix.identity(field, word_dim(expr.word)))
    if isinstance(expr, Compose):
        fm = evaluate(expr.f)
        gm = evaluate(expr.g)
        if not words_match(fm.source, gm.target):
            raise MorphismTypeError(
                f"cannot compose: {expr.f!r} expects {word_label(fm.source)} "
                f"but {expr.g!r} produces {word_label(gm.target)}"
            )
        return Morphism(gm.source, fm.target, fm.matrix @ gm.matrix)
    if isinstance(expr, Tensor):
        fm = evaluate(expr.f)
        gm = evaluate(expr.g)
        return Morphism(fm.source + gm.source, fm.target + gm.target,
                        fm.matrix.kron(gm.matrix))
    raise MorphismTypeError(f"unknown expression node {expr!r}")


def morphisms_equal(f: Morphism, g: Morphism) -> bool:
    """Exact equality; requires identical source and target words."""
    if not words_match(f.source, g.source) or not words_match(f.target, g.target):
        raise MorphismTypeError(
            f"word mismatch: {word_label(f.source)}->{word_label(f.target)} vs "
            f"{word_label(g.source)}->{word_label(g.target)}"
        )
    return f.matrix == g.matrix


# -- textual expression syntax for the CLI -------------------------------------

class ExprSyntaxError(ValueError):
    pass


_TOKEN_RE = re.compile(r"\s*([A-Za-z0-9_]+|[();,*])")


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ExprSyntaxError(f"bad character at position {pos}: {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class ExprEnv:
    """Resolves module names and named primitives for one algebra.

    Chromatic primitives (cL, cR, cSph) and lamL/lamR/alpha need integral
    data; cSph additionally needs a pivot.
    """

    def __init__(self, H, data=None, pivot=None):
        from . import chromatic as _chromatic
        from . import hmod as _hmod
        from .integrals import normalized_pair

        self.H = H
        self.data = data or normalized_pair(H)
        self._pivot = pivot
        self._pivot_searched = pivot is not None
        self._hmod = _hmod
        self._chromatic = _chromatic
        self._modules: dict[str, HModule] = {}

    @property
    def pivot(self):
        if not self._pivot_searched:
            from .integrals import PivotSearchInconclusive, is_spherical_hmod

            self._pivot_searched = True
            try:
                _, self._pivot = is_spherical_hmod(self.H, self.data)
            except PivotSearchInconclusive:
                self._pivot = None
        return self._pivot

    def module(self, name: str) -> HModule:
        key = name
        if key in self._modules:
            return self._modules[key]
        hm = self._hmod
        if name in ("H", "regular"):
            mod = hm.regular_module(self.H)
        elif name in ("triv", "trivial", "1", "unit"):
            mod = hm.trivial_module(self.H)
        elif name == "alpha":
            mod = hm.alpha_module(self.H, self.data)
        else:
            raise ExprSyntaxError(f"unknown module {name!r}")
        self._modules[key] = mod
        return mod

    def dual(self, mod: HModule, side: str) -> HModule:
        key = f"{'ld' if side == 'left' else 'rd'}({mod.label})"
        if key not in self._modules:
            self._modules[key] = self._hmod.dual_module(mod, side)
        return self._modules[key]

    def primitive(self, name: str, mods: list[HModule]) -> MorphismExpr:
        hm, ch = self._hmod, self._chromatic
        if name == "id":
            return Ident(tuple(mods))
        if name in ("ev", "coev", "evt", "coevt"):
            if len(mods) != 1:
                raise ExprSyntaxError(f"{name} takes exactly one module")
            ev, coev, evt, coevt = hm.evaluation_morphisms(mods[0])
            return Prim({"ev": ev, "coev": coev, "evt": evt, "coevt": coevt}[name])
        if name in ("lamL", "lamR"):
            side = "left" if name == "lamL" else "right"
            return Prim(hm.lambda_transform(self.H, self.data, tuple(mods), side))
        if name == "cL":
            return Prim(ch.chromatic_left_hopf(self.H, self.data))
        if name == "cR":
            return Prim(ch.chromatic_right_hopf(self.H, self.data))
        if name == "cSph":
            if self.pivot is None:
                raise ExprSyntaxError("cSph needs a spherical algebra (no pivot)")
            return Prim(ch.chromatic_spherical(self.H, self.data, self.pivot))
        raise ExprSyntaxError(f"unknown primitive {name!r}")


class _Parser:
    def __init__(self, tokens: list[str], env: ExprEnv):
        self.tokens = tokens
        self.pos = 0
        self.env = env

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def eat(self, tok: str | None = None) -> str:
        if self.pos >= len(self.tokens):
            raise ExprSyntaxError(f"unexpected end of expression, wanted {tok!r}")
        cur = self.tokens[self.pos]
        if tok is not None and cur != tok:
            raise ExprSyntaxError(f"expected {tok!r}, got {cur!r}")
        self.pos += 1
        return cur

    def parse(self) -> MorphismExpr:
        expr = self.expr()
        if self.pos != len(self.tokens):
            raise ExprSyntaxError(f"trailing tokens: {self.tokens[self.pos:]}")
        return expr

    def expr(self) -> MorphismExpr:
        factors = [self.term()]
        while self.peek() == ";":
            self.eat(";")
            factors.append(self.term())
        return compose(*factors)

    def term(self) -> MorphismExpr:
        out = self.atom()
        while self.peek() == "*":
            self.eat("*")
            out = Tensor(out, self.atom())
        return out

    def atom(self) -> MorphismExpr:
        tok = self.peek()
        if tok == "(":
            self.eat("(")
            inner = self.expr()
            self.eat(")")
            return inner
        name = self.eat()
        mods: list[HModule] = []
        if self.peek() == "(":
            self.eat("(")
            if self.peek() != ")":
                mods.append(self.module_expr())
                while self.peek() == ",":
                    self.eat(",")
                    mods.append(self.module_expr())
            self.eat(")")
            return self.env.primitive(name, mods)
        return self.env.primitive(name, mods)

    def module_expr(self) -> HModule:
        name = self.eat()
        if name in ("ld", "rd"):
            self.eat("(")
            inner = self.module_expr()
            self.eat(")")
            return self.env.dual(inner, "left" if name == "ld" else "right")
        return self.env.module(name)


def parse_expr(text: str, env: ExprEnv) -> MorphismExpr:
    """Parse the CLI expression syntax into a MorphismExpr."""
    tokens = _tokenize(text)
    if not tokens:
        raise ExprSyntaxError("empty expression")
    return _Parser(tokens, env).parse()
