"""Parser for the group-spec mini-language.

Grammar (LL(1); whitespace between tokens is ignored)::

    spec     := product EOF
    product  := factor ( 'x' factor )*
    factor   := atom ( '^' NUM )?             # Z2^3 is Z2 x Z2 x Z2
    atom     := 'Z' NUM | 'D' NUM | 'Q' NUM | 'S' NUM | 'A' NUM
              | 'M' NUM ( '^' NUM )?          # M16 or M2^4
              | 'SD' '(' NUM ',' NUM ',' NUM ')'
              | 'perm' ( '[' LABEL ']' )? ':' gens
              | '(' product ')'
    gens     := gen ( ';' gen )*
    gen      := cycle+
    cycle    := '(' ( NUM ','? )* ')'

``×`` and ``*`` are accepted as synonyms of ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    Alternating,
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    GroupSpec,
    GroupSpecError,
    Modular,
    Permutation,
    SemidirectZqZp,
    Symmetric,
)


class SpecSyntaxError(GroupSpecError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


@dataclass(frozen=True)
class Token:
    kind: str  # FAMILY, NUM, LABEL, PUNCT, EOF
    value: str
    pos: int


_FAMILIES = ("perm", "SD", "Z", "D", "Q", "M", "S", "A")
_PUNCT = "()[],;:^"


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(Token("NUM", text[i:j], i))
            i = j
            continue
        if ch in "x×*":
            out.append(Token("PUNCT", "x", i))
            i += 1
            continue
        if ch == "[" and out and out[-1].value == "perm":
            end = text.find("]", i)
            if end < 0:
                raise SpecSyntaxError("unterminated label", text, i)
            label = text[i + 1 : end].strip()
            if not label or not all(c.isalnum() or c in "_-" for c in label):
                raise SpecSyntaxError("labels use letters, digits, '_' and '-'", text, i + 1)
            out.append(Token("LABEL", label, i + 1))
            i = end + 1
            continue
        if ch in _PUNCT:
            out.append(Token("PUNCT", ch, i))
            i += 1
            continue
        for fam in _FAMILIES:
            if text.startswith(fam, i):
                out.append(Token("FAMILY", fam, i))
                i += len(fam)
                break
        else:
            raise SpecSyntaxError(f"unexpected character {ch!r}", text, i)
    out.append(Token("EOF", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str) -> SpecSyntaxError:
        return SpecSyntaxError(message, self.text, self.tok.pos)

    def accept(self, value: str) -> bool:
        if self.tok.kind == "PUNCT" and self.tok.value == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            found = self.tok.value or "end of input"
            raise self.error(f"expected {value!r}, found {found!r}")

    def number(self) -> int:
        if self.tok.kind != "NUM":
            raise self.error(f"expected a number, found {self.tok.value or 'end of input'!r}")
        v = int(self.tok.value)
        self.i += 1
        return v

    def spec(self) -> GroupSpec:
        result = self.product()
        if self.tok.kind != "EOF":
            raise self.error(f"unexpected {self.tok.value!r}")
        return result

    def product(self) -> GroupSpec:
        factors = list(self.factor())
        while self.accept("x"):
            factors.extend(self.factor())
        return factors[0] if len(factors) == 1 else DirectProduct(tuple(factors))

    def factor(self) -> list[GroupSpec]:
        start = self.tok.pos
        a = self.atom()
        if self.accept("^"):
            k = self.number()
            if k < 1:
                raise SpecSyntaxError("power must be at least 1", self.text, start)
            return [a] * k
        return [a]

    def atom(self) -> GroupSpec:
        tok = self.tok
        if self.accept("("):
            inner = self.product()
            self.expect(")")
            return inner
        if tok.kind != "FAMILY":
            raise self.error(f"expected a group family, found {tok.value or 'end of input'!r}")
        self.i += 1
        fam = tok.value
        if fam == "perm":
            spec: GroupSpec = self.permutation()
        elif fam == "SD":
            self.expect("(")
            q = self.number()
            self.expect(",")
            p = self.number()
            self.expect(",")
            k = self.number()
            self.expect(")")
            spec = SemidirectZqZp(q, p, k)
        elif fam == "M":
            base = self.number()
            spec = Modular(base ** self.number() if self.accept("^") else base)
        else:
            n = self.number()
            spec = {"Z": Cyclic, "D": Dihedral, "Q": Dicyclic, "S": Symmetric, "A": Alternating}[fam](n)
        try:
            spec.validate()
        except GroupSpecError as exc:
            raise SpecSyntaxError(str(exc), self.text, tok.pos) from exc
        return spec

    def permutation(self) -> Permutation:
        label = None
        if self.tok.kind == "LABEL":
            label = self.tok.value
            self.i += 1
        self.expect(":")
        gens = [self.generator()]
        while self.accept(";"):
            gens.append(self.generator())
        return Permutation(tuple(gens), label)

    def generator(self) -> tuple[tuple[int, ...], ...]:
        cycles = [self.cycle()]
        while self.tok.kind == "PUNCT" and self.tok.value == "(":
            cycles.append(self.cycle())
        # drop empty and fixed-point cycles; "()" alone is the identity
        return tuple(c for c in cycles if len(c) > 1)

    def cycle(self) -> tuple[int, ...]:
        self.expect("(")
        pts = []
        while self.tok.kind == "NUM":
            pts.append(self.number())
            self.accept(",")
        self.expect(")")
        return tuple(pts)


def parse_group_spec(text: str) -> GroupSpec:
    """Parse one group spec, e.g. ``"Z4xZ2"``, ``"Q8"``, ``"perm:(1 2 3);(1 2)"``."""
    return _Parser(text).spec()
