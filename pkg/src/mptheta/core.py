"""Exact symbol algebra: half-integers, quadratic characters, cuspidal symbols
and Zelevinsky segments.

Every value in this module is immutable and exact; nothing anywhere in the
package touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering


@total_ordering
class HalfInt:
    """Exact half-integer.  ``HalfInt(t)`` is the number t/2.

    Storing twice the value as a plain int keeps every endpoint, exponent and
    evaluation point exact; comparisons never round.  Plain ints mix freely
    in arithmetic and comparisons.
    """

    __slots__ = ("twice",)

    def __init__(self, twice: int):
        if not isinstance(twice, int):
            raise TypeError(f"HalfInt stores 2x as an int, got {twice!r}")
        self.twice = twice

    @classmethod
    def whole(cls, n: int) -> "HalfInt":
        return cls(2 * n)

    @classmethod
    def of(cls, value) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        raise TypeError(f"cannot coerce {value!r} to HalfInt")

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        """Parse "3/2", "-1/2", "4/2" or a plain integer string."""
        s = text.strip()
        if s.endswith("/2"):
            return cls(int(s[: -2]))
        return cls.whole(int(s))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    @property
    def is_strict_half(self) -> bool:
        return self.twice % 2 != 0

    def halved(self) -> "HalfInt":
        if self.twice % 2:
            raise ValueError(f"{self} / 2 is not a half-integer")
        return HalfInt(self.twice // 2)

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other):
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __mul__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return HalfInt(self.twice * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        if isinstance(other, int):
            return self.twice == 2 * other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, HalfInt):
            return self.twice < other.twice
        if isinstance(other, int):
            return self.twice < 2 * other
        return NotImplemented

    def __hash__(self):
        return hash(self.twice)

    def __bool__(self):
        return self.twice != 0

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({self})"

    def json(self) -> str:
        """Lossless "p/2" form used in machine-readable output."""
        return f"{self.twice}/2"


ZERO = HalfInt(0)
HALF = HalfInt(1)
ONE = HalfInt(2)


@dataclass(frozen=True, slots=True)
class QuadChar:
    """A quadratic character, as a product of named quadratic characters.

    The labels form an F_2 vector space under symmetric difference, so the
    product of any two quadratic characters is again representable and
    chi * chi is always trivial.
    """

    labels: frozenset = frozenset()

    @classmethod
    def named(cls, label: str) -> "QuadChar":
        """Character from a dotted label set, e.g. "a" or "a.b"."""
        parts = [p for p in label.split(".") if p]
        if not parts:
            raise ValueError("empty character label")
        return cls(frozenset(parts))

    @property
    def is_trivial(self) -> bool:
        return not self.labels

    @property
    def label(self) -> str:
        return ".".join(sorted(self.labels))

    def __mul__(self, other: "QuadChar") -> "QuadChar":
        return QuadChar(self.labels ^ other.labels)

    def __str__(self):
        return "1" if self.is_trivial else f"chi:{self.label}"


TRIVIAL_CHI = QuadChar()

ORTHOGONAL = "o"
SYMPLECTIC = "s"
NOT_SELF_DUAL = "n"

_TRIVIAL_BASE = "1"


def _dual_label(label: str) -> str:
    # involutive formal-contragredient tag; user labels should not end in "~"
    return label[:-1] if label.endswith("~") else label + "~"


@dataclass(frozen=True)
class Cuspidal:
    """Abstract unitary supercuspidal GL symbol.

    ``base`` is a symbol id ("1" is reserved for the characters of GL(1)),
    ``sd`` is the self-duality type and ``twist`` a quadratic-twist tag.
    Equality is structural; two distinct labels are never isomorphic.
    """

    base: str
    dim: int = 1
    sd: str = ORTHOGONAL
    twist: QuadChar = TRIVIAL_CHI

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"cuspidal dimension must be >= 1, got {self.dim}")
        if self.sd not in (ORTHOGONAL, SYMPLECTIC, NOT_SELF_DUAL):
            raise ValueError(f"bad self-duality type {self.sd!r}")
        if self.base == _TRIVIAL_BASE and (self.dim != 1 or self.sd != ORTHOGONAL):
            raise ValueError("characters of GL(1) have dim 1 and orthogonal type")
        object.__setattr__(self, "_hash",
                           hash((self.base, self.dim, self.sd, self.twist)))

    def __hash__(self):
        return self._hash

    @classmethod
    def trivial(cls) -> "Cuspidal":
        return cls(_TRIVIAL_BASE, 1, ORTHOGONAL, TRIVIAL_CHI)

    @classmethod
    def character(cls, chi: QuadChar) -> "Cuspidal":
        return cls(_TRIVIAL_BASE, 1, ORTHOGONAL, chi)

    @classmethod
    def named(cls, label: str, dim: int, sd: str,
              twist: QuadChar = TRIVIAL_CHI) -> "Cuspidal":
        if label == _TRIVIAL_BASE:
            raise ValueError('label "1" is reserved for the trivial character')
        return cls(label, dim, sd, twist)

    @property
    def is_character(self) -> bool:
        return self.base == _TRIVIAL_BASE

    @property
    def is_trivial_character(self) -> bool:
        return self.base == _TRIVIAL_BASE and self.twist.is_trivial

    @property
    def is_self_dual(self) -> bool:
        return self.sd != NOT_SELF_DUAL

    @property
    def is_orthogonal(self) -> bool:
        return self.sd == ORTHOGONAL

    @property
    def is_symplectic(self) -> bool:
        return self.sd == SYMPLECTIC

    def dual(self) -> "Cuspidal":
        """Formal contragredient; quadratic twists are self-dual."""
        if self.is_self_dual:
            return self
        return Cuspidal(_dual_label(self.base), self.dim, self.sd, self.twist)

    def twisted(self, chi: QuadChar) -> "Cuspidal":
        return Cuspidal(self.base, self.dim, self.sd, self.twist * chi)

    def sort_key(self):
        return (self.base, self.dim, self.sd, tuple(sorted(self.twist.labels)))

    def __str__(self):
        if self.is_character:
            return str(self.twist)
        tag = f"rho:{self.base}:{self.dim}:{self.sd}"
        if not self.twist.is_trivial:
            tag += f"*{self.twist}"
        return tag


@dataclass(frozen=True)
class Segment:
    """Zelevinsky segment [rho v^b, rho v^a], i.e. the essentially
    square-integrable representation it determines.

    The span a - b must be a non-negative integer.
    """

    rho: Cuspidal
    b: HalfInt
    a: HalfInt

    def __post_init__(self):
        span = self.a - self.b
        if not span.is_integer or span < 0:
            raise ValueError(
                f"[{self.b}, {self.a}] is not a segment (length {span + 1})")
        object.__setattr__(self, "_hash",
                           hash((self.rho, self.b.twice, self.a.twice)))

    def __hash__(self):
        return self._hash

    @classmethod
    def steinberg(cls, n: int, shift: HalfInt = ZERO) -> "Segment":
        """St_n v^shift over the trivial character."""
        if n < 1:
            raise ValueError(f"St({n}) undefined")
        half_span = HalfInt(n - 1)
        return cls(Cuspidal.trivial(), shift - half_span, shift + half_span)

    @property
    def length(self) -> int:
        return (self.a - self.b).twice // 2 + 1

    @property
    def gl_dim(self) -> int:
        return self.rho.dim * self.length

    @property
    def center(self) -> HalfInt:
        return (self.a + self.b).halved()

    def points(self):
        c = self.b
        out = []
        while c <= self.a:
            out.append(c)
            c = c + 1
        return out

    def shifted(self, s: HalfInt) -> "Segment":
        return Segment(self.rho, self.b + s, self.a + s)

    def unitarized(self) -> "Segment":
        return self.shifted(-self.center)

    def dual(self) -> "Segment":
        return Segment(self.rho.dual(), -self.a, -self.b)

    def twisted(self, chi: QuadChar) -> "Segment":
        return Segment(self.rho.twisted(chi), self.b, self.a)

    @property
    def is_trivial_steinberg(self) -> bool:
        """True iff the segment is St_{2s} v^s of the trivial character,
        i.e. [v^{1/2}, v^{m+1/2}]."""
        return self.rho.is_trivial_character and self.b == HALF

    def sort_key(self):
        # center descending, then length descending, then label ascending
        return (-self.center.twice, -self.length, self.rho.sort_key())

    def __str__(self):
        if self.rho.is_trivial_character:
            c = self.center
            if c == ZERO:
                return f"St({self.length})"
            return f"St({self.length}) v^{c}"
        return f"D({self.rho}; {self.b}, {self.a})"


def segment_new(rho: Cuspidal, b: HalfInt, a: HalfInt) -> Segment:
    return Segment(rho, b, a)


def character_segment(s: HalfInt, chi: QuadChar = TRIVIAL_CHI) -> Segment:
    """The one-point segment chi v^s on GL(1)."""
    return Segment(Cuspidal.character(chi), s, s)


def segments_linked(s1: Segment, s2: Segment) -> bool:
    """Linkage test: same cuspidal base (twist included), integral offset,
    neither contains the other, and the union is again a segment.

    The product of the two square-integrables on GL is irreducible iff the
    segments are not linked.
    """
    if s1.rho != s2.rho:
        return False
    if not (s1.b - s2.b).is_integer:
        return False
    if s1.b <= s2.b and s2.a <= s1.a:       # s2 contained in s1
        return False
    if s2.b <= s1.b and s1.a <= s2.a:       # s1 contained in s2
        return False
    return max(s1.b, s2.b) <= min(s1.a, s2.a) + 1
