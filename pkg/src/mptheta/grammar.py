"""Text grammar for representation expressions, plus machine-readable
serialization.

Grammar sketch:

    datum    := "L(" [segment ("," segment)*] ";" tempered ")" ["twist" chi]
    tempered := "T" "{" [summand ("," summand)*] "}" ["@" ("+"|"-")]
    summand  := cuspidal "*S" int ["^" int]
    segment  := "D(" cuspidal ";" half "," half ")" | "St(" int ")" ["v^" half]
    cuspidal := atom ("*" atom)*        # at most one rho atom
    atom     := "1" | "chi:" labelset | "rho:" label ":" int ":" ("o"|"s"|"n")
    half     := ["-"] int ["/2"]

``parse(render(x)) == x`` for every normalized value, and rendering is
deterministic.  Half-integers are serialized in JSON as exact "p/2" strings
so the output carries no floating point.
"""

from __future__ import annotations

import re

from .core import (TRIVIAL_CHI, ZERO, Cuspidal, HalfInt, QuadChar, Segment)
from .reps import (LParameter, LanglandsDatum, TemperedRep, normalize_datum)

_TOKEN = re.compile(r"\s*(?:(?P<sym>[(){};,*@^])|(?P<word>[A-Za-z0-9_:./~+-]+))")
_HALF = re.compile(r"^[+-]?\d+(/2)?$")
_INT = re.compile(r"^\d+$")
_LABEL = re.compile(r"^[A-Za-z0-9_](?:[A-Za-z0-9_.]*[A-Za-z0-9_])?$")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} (at position {pos})")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items = []          # (value, position)
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                raise ParseError(f"unexpected character {stripped[0]!r}",
                                 len(text) - len(stripped))
            if m.lastgroup is not None:
                self.items.append((m.group(m.lastgroup), m.start(m.lastgroup)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.items[self.i][0] if self.i < len(self.items) else None

    def pos(self):
        return self.items[self.i][1] if self.i < len(self.items) else len(self.text)

    def next(self):
        if self.i >= len(self.items):
            raise ParseError("unexpected end of input", len(self.text))
        value, _ = self.items[self.i]
        self.i += 1
        return value

    def expect(self, token: str):
        pos = self.pos()
        got = self.next()
        if got != token:
            raise ParseError(f"expected {token!r}, got {got!r}", pos)

    def done(self):
        if self.i < len(self.items):
            raise ParseError(f"trailing input {self.peek()!r}", self.pos())


def _parse_half(tokens: _Tokens) -> HalfInt:
    pos = tokens.pos()
    word = tokens.next()
    if not _HALF.match(word):
        raise ParseError(f"expected a half-integer, got {word!r}", pos)
    return HalfInt.parse(word)


def _parse_int(tokens: _Tokens) -> int:
    pos = tokens.pos()
    word = tokens.next()
    if not _INT.match(word):
        raise ParseError(f"expected an integer, got {word!r}", pos)
    return int(word)


def _parse_atom(tokens: _Tokens) -> Cuspidal:
    pos = tokens.pos()
    word = tokens.next()
    if word == "1":
        return Cuspidal.trivial()
    if word.startswith("chi:"):
        label = word[4:]
        if not _LABEL.match(label):
            raise ParseError(f"bad character label {label!r}", pos)
        return Cuspidal.character(QuadChar.named(label))
    if word.startswith("rho:"):
        parts = word.split(":")
        if len(parts) != 4:
            raise ParseError(f"bad cuspidal symbol {word!r}", pos)
        _, label, dim, sd = parts
        if not _INT.match(dim):
            raise ParseError(f"bad cuspidal dimension {dim!r}", pos)
        if sd not in ("o", "s", "n"):
            raise ParseError(f"bad self-duality tag {sd!r}", pos)
        try:
            return Cuspidal.named(label, int(dim), sd)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
    raise ParseError(f"expected a cuspidal symbol, got {word!r}", pos)


def _is_block_word(word) -> bool:
    return isinstance(word, str) and re.match(r"^S\d+$", word) is not None


def _parse_cuspidal(tokens: _Tokens, stop_at_block: bool = False) -> Cuspidal:
    pos = tokens.pos()
    atoms = [_parse_atom(tokens)]
    while tokens.peek() == "*":
        if stop_at_block:
            nxt = tokens.items[tokens.i + 1][0] if tokens.i + 1 < len(tokens.items) else None
            if _is_block_word(nxt):
                break
        tokens.next()
        atoms.append(_parse_atom(tokens))
    named = [a for a in atoms if not a.is_character]
    if len(named) > 1:
        raise ParseError("more than one rho factor in a cuspidal product", pos)
    twist = TRIVIAL_CHI
    for a in atoms:
        twist = twist * a.twist
    if named:
        return named[0].twisted(twist)
    return Cuspidal.character(twist)


def _parse_segment(tokens: _Tokens) -> Segment:
    pos = tokens.pos()
    word = tokens.next()
    if word == "D":
        tokens.expect("(")
        rho = _parse_cuspidal(tokens)
        tokens.expect(";")
        b = _parse_half(tokens)
        tokens.expect(",")
        a = _parse_half(tokens)
        tokens.expect(")")
        try:
            return Segment(rho, b, a)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
    if word == "St":
        tokens.expect("(")
        n = _parse_int(tokens)
        tokens.expect(")")
        shift = ZERO
        if tokens.peek() == "v":
            tokens.next()
            tokens.expect("^")
            shift = _parse_half(tokens)
        try:
            return Segment.steinberg(n, shift)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
    raise ParseError(f"expected a segment, got {word!r}", pos)


def _parse_param(tokens: _Tokens) -> LParameter:
    tokens.expect("{")
    items = []
    if tokens.peek() != "}":
        while True:
            rho = _parse_cuspidal(tokens, stop_at_block=True)
            tokens.expect("*")
            pos = tokens.pos()
            word = tokens.next()
            if not _is_block_word(word):
                raise ParseError(f"expected S<int>, got {word!r}", pos)
            a = int(word[1:])
            mult = 1
            if tokens.peek() == "^":
                tokens.next()
                mult = _parse_int(tokens)
            items.append((rho, a, mult))
            if tokens.peek() != ",":
                break
            tokens.next()
    tokens.expect("}")
    return LParameter.of(items)


def _parse_tempered(tokens: _Tokens, flavor: str) -> TemperedRep:
    pos = tokens.pos()
    tokens.expect("T")
    param = _parse_param(tokens)
    sign = "+"
    if tokens.peek() == "@":
        tokens.next()
        sign = tokens.next()
    try:
        return TemperedRep(flavor, param, sign)
    except ValueError as exc:
        raise ParseError(str(exc), pos) from None


def _parse_datum(tokens: _Tokens, flavor: str) -> LanglandsDatum:
    pos = tokens.pos()
    tokens.expect("L")
    tokens.expect("(")
    factors = []
    if tokens.peek() not in (";",):
        while True:
            factors.append(_parse_segment(tokens))
            if tokens.peek() != ",":
                break
            tokens.next()
    tokens.expect(";")
    tempered = _parse_tempered(tokens, flavor)
    tokens.expect(")")
    twist = TRIVIAL_CHI
    if tokens.peek() == "twist":
        tokens.next()
        cusp = _parse_atom(tokens)
        if not cusp.is_character:
            raise ParseError("twist must be a quadratic character", pos)
        twist = cusp.twist
    try:
        return normalize_datum(factors, tempered, twist)
    except ValueError as exc:
        raise ParseError(str(exc), pos) from None


def parse_rep(text: str, flavor: str = "metaplectic"):
    """Parse an expression into a Segment, TemperedRep or LanglandsDatum."""
    tokens = _Tokens(text)
    head = tokens.peek()
    if head == "L":
        out = _parse_datum(tokens, flavor)
    elif head == "T":
        out = _parse_tempered(tokens, flavor)
    elif head in ("D", "St"):
        out = _parse_segment(tokens)
    else:
        raise ParseError(f"expected L(, T{{, D( or St(, got {head!r}",
                         tokens.pos())
    tokens.done()
    return out


def parse_datum(text: str, flavor: str = "metaplectic") -> LanglandsDatum:
    """Parse, coercing a bare tempered expression to a factor-free datum."""
    out = parse_rep(text, flavor)
    if isinstance(out, TemperedRep):
        return LanglandsDatum((), out, TRIVIAL_CHI)
    if isinstance(out, LanglandsDatum):
        return out
    raise ParseError("expected a Langlands datum or tempered expression", 0)


# ---------------------------------------------------------------------------
# rendering

def render(obj) -> str:
    """Canonical text form; inverse of parse_rep on normalized values."""
    if isinstance(obj, HalfInt):
        return str(obj)
    if isinstance(obj, (Cuspidal, Segment)):
        return str(obj)
    if isinstance(obj, LParameter):
        return "{" + ",".join(_render_summand(s) for s in obj.summands) + "}"
    if isinstance(obj, TemperedRep):
        sign = "@-" if obj.sign == "-" else ""
        return "T" + render(obj.param) + sign
    if isinstance(obj, LanglandsDatum):
        inner = ", ".join(str(f) for f in obj.gl_factors)
        text = f"L({inner}; {render(obj.tempered)})"
        if not obj.psi_twist.is_trivial:
            text += f" twist {obj.psi_twist}"
        return text
    raise TypeError(f"cannot render {obj!r}")


def _render_summand(summand) -> str:
    rho, a, mult = summand
    text = f"{rho}*S{a}"
    if mult > 1:
        text += f"^{mult}"
    return text


# ---------------------------------------------------------------------------
# JSON payload pieces (exact, no floats)

def segment_json(seg: Segment) -> dict:
    return {"rho": str(seg.rho), "b": seg.b.json(), "a": seg.a.json()}


def param_json(phi: LParameter) -> list:
    return [{"rho": str(rho), "a": a, "mult": mult}
            for rho, a, mult in phi.summands]


def tempered_json(sigma: TemperedRep) -> dict:
    return {"flavor": sigma.flavor, "param": param_json(sigma.param),
            "sign": sigma.sign}


def datum_json(pi: LanglandsDatum) -> dict:
    out = {"gl_factors": [segment_json(f) for f in pi.gl_factors],
           "tempered": tempered_json(pi.tempered)}
    if not pi.psi_twist.is_trivial:
        out["psi_twist"] = str(pi.psi_twist)
    return out


def lift_json(result) -> dict:
    sym = result.tempered
    tempered = {"symbol": "theta", "level": sym.level,
                "param": param_json(sym.param) if sym.param is not None else None}
    if not sym.chi.is_trivial:
        tempered["chi"] = str(sym.chi)
    if sym.st2_copies:
        tempered["st2_copies"] = sym.st2_copies
    out = {"branch": result.branch, "m": result.target_dim, "l": result.level,
           "gl_factors": [segment_json(f) for f in result.gl_factors],
           "tempered": tempered}
    if result.extrapolated:
        out["extrapolated"] = True
    return out
