"""Signed Gauss codes, the data model for virtual-link diagrams.

A diagram is stored as one cyclic pass sequence per component.  Each pass
records which crossing is traversed, whether the strand runs over or under
it, and the crossing sign.  Virtual crossings are never stored: every
invariant computed by this package depends only on the real crossings, and
the four virtual Reidemeister moves act as the identity on this
representation.

Text grammar (tokens separated by one or more spaces)::

    diagram   := component (";" component)*
    component := "()" | pass+
    pass      := ("O"|"U") integer ("+"|"-")     integers are decimal >= 1

Semi-arc convention: semi-arc p of a component is the arc immediately
following pass p (cyclically).  A component with no passes is a closed
curve with the single semi-arc 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import UpDownError

OVER = "O"
UNDER = "U"

_PASS_RE = re.compile(r"([OU])([0-9]+)([+-])\Z")
_TOKEN_RE = re.compile(r"\S+")


class ParseError(UpDownError):
    """Input text does not conform to the Gauss-code grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ValidationError(UpDownError):
    """Well-formed text that is not a valid diagram."""


@dataclass(frozen=True)
class Pass:
    """One strand's traversal of a real crossing."""

    crossing: int
    role: str  # OVER or UNDER
    sign: int  # +1 or -1


@dataclass(frozen=True, order=True)
class SemiArcId:
    component: int
    position: int


@dataclass(frozen=True)
class Diagram:
    """An ordered sequence of components, validated on construction.

    Every crossing id must occur exactly twice, once over and once under,
    with the same sign on both passes.  Instances are immutable and safe to
    share; all operations on them are pure functions.
    """

    components: tuple[tuple[Pass, ...], ...]

    def __post_init__(self):
        if not self.components:
            raise ValidationError("a diagram needs at least one component")
        over_at: dict[int, tuple[int, int]] = {}
        under_at: dict[int, tuple[int, int]] = {}
        signs: dict[int, int] = {}
        for k, comp in enumerate(self.components):
            for p, pas in enumerate(comp):
                if pas.crossing < 1:
                    raise ValidationError(f"crossing ids must be >= 1, got {pas.crossing}")
                if pas.sign not in (1, -1):
                    raise ValidationError(f"crossing {pas.crossing}: sign must be +1 or -1")
                if pas.role == OVER:
                    if pas.crossing in over_at:
                        raise ValidationError(f"crossing {pas.crossing} has two over passes")
                    over_at[pas.crossing] = (k, p)
                elif pas.role == UNDER:
                    if pas.crossing in under_at:
                        raise ValidationError(f"crossing {pas.crossing} has two under passes")
                    under_at[pas.crossing] = (k, p)
                else:
                    raise ValidationError(f"crossing {pas.crossing}: unknown role {pas.role!r}")
                prev = signs.setdefault(pas.crossing, pas.sign)
                if prev != pas.sign:
                    raise ValidationError(f"crossing {pas.crossing} has mismatched signs")
        for x in signs:
            if x not in over_at:
                raise ValidationError(f"crossing {x} has no over pass")
            if x not in under_at:
                raise ValidationError(f"crossing {x} has no under pass")
        object.__setattr__(self, "_over_at", over_at)
        object.__setattr__(self, "_under_at", under_at)
        object.__setattr__(self, "_signs", signs)

    # -- basic queries ----------------------------------------------------

    @property
    def num_components(self) -> int:
        return len(self.components)

    @property
    def num_crossings(self) -> int:
        return len(self._signs)

    def arc_count(self, component: int) -> int:
        return max(1, len(self.components[component]))

    def crossing_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self._signs))

    def crossing_sign(self, crossing: int) -> int:
        try:
            return self._signs[crossing]
        except KeyError:
            raise ValidationError(f"no crossing {crossing} in this diagram") from None

    def over_position(self, crossing: int) -> tuple[int, int]:
        """(component, position) of the over pass of a crossing."""
        self.crossing_sign(crossing)
        return self._over_at[crossing]

    def under_position(self, crossing: int) -> tuple[int, int]:
        self.crossing_sign(crossing)
        return self._under_at[crossing]

    def is_self_crossing(self, crossing: int) -> bool:
        """True when both passes of the crossing lie in one component."""
        return self.over_position(crossing)[0] == self.under_position(crossing)[0]

    def nonself_crossing_count(self) -> int:
        return sum(1 for x in self._signs if not self.is_self_crossing(x))

    def max_crossing_id(self) -> int:
        return max(self._signs, default=0)


def parse(text: str) -> Diagram:
    """Parse a Gauss-code string into a validated diagram.

    Raises ParseError (with the offending character offset) on grammar
    violations and ValidationError on structural ones.
    """
    tokens = [(m.group(0), m.start()) for m in _TOKEN_RE.finditer(text)]
    if not tokens:
        raise ParseError("empty input; a crossing-free component is written ()", 0)
    groups: list[list[tuple[str, int]]] = [[]]
    last_sep_pos = 0
    for tok, pos in tokens:
        if tok == ";":
            if not groups[-1]:
                raise ParseError("empty component before ';'", pos)
            groups.append([])
            last_sep_pos = pos
        else:
            groups[-1].append((tok, pos))
    if not groups[-1]:
        raise ParseError("empty component after ';'", last_sep_pos)

    components = []
    for group in groups:
        if any(tok == "()" for tok, _ in group):
            if len(group) != 1:
                bad = next(pos for tok, pos in group if tok == "()")
                raise ParseError("'()' cannot be mixed with passes", bad)
            components.append(())
            continue
        passes = []
        for tok, pos in group:
            m = _PASS_RE.match(tok)
            if m is None:
                raise ParseError(f"bad pass token {tok!r}", pos)
            crossing = int(m.group(2))
            if crossing < 1:
                raise ParseError(f"crossing ids start at 1, got {tok!r}", pos)
            passes.append(Pass(crossing, m.group(1), 1 if m.group(3) == "+" else -1))
        components.append(tuple(passes))
    return Diagram(tuple(components))


def serialize(d: Diagram) -> str:
    """Canonical text form; parse(serialize(d)) == d."""
    parts = []
    for comp in d.components:
        if not comp:
            parts.append("()")
        else:
            parts.append(" ".join(
                f"{p.role}{p.crossing}{'+' if p.sign > 0 else '-'}" for p in comp))
    return " ; ".join(parts)


def semi_arcs(d: Diagram) -> list[SemiArcId]:
    """All semi-arcs, component-major; one per pass, or one for a bare loop."""
    return [SemiArcId(k, p)
            for k in range(d.num_components)
            for p in range(d.arc_count(k))]


def component_shift(d: Diagram, index: int, weights: tuple[int, int] = (1, 1)) -> int:
    """Signed weight total of the non-self passes of one component.

    An over pass adds +w and an under pass adds -w, where w is weights[0]
    at positive crossings and weights[1] at negative ones.  Passes of
    self-crossings cancel in pairs and are excluded.  With weights (1, 1)
    this is the over-minus-under count governing colorability.
    """
    if not 0 <= index < d.num_components:
        raise IndexError(f"component index {index} out of range")
    pos_w, neg_w = weights
    total = 0
    for pas in d.components[index]:
        if d.is_self_crossing(pas.crossing):
            continue
        w = pos_w if pas.sign > 0 else neg_w
        total += w if pas.role == OVER else -w
    return total


def connected_sum(d1: Diagram, d2: Diagram, s1: SemiArcId, s2: SemiArcId) -> Diagram:
    """Splice two knot diagrams along the given semi-arcs.

    d2's crossing ids are offset past d1's, d2's sequence is cut open at s2
    and inserted into d1's sequence at s1.  Both inputs must have exactly
    one component.
    """
    if d1.num_components != 1 or d2.num_components != 1:
        raise ValidationError("connected sum is defined for single-component diagrams")
    for d, s in ((d1, s1), (d2, s2)):
        if s.component != 0 or not 0 <= s.position < d.arc_count(0):
            raise ValidationError(f"semi-arc {s} does not exist in its diagram")
    offset = d1.max_crossing_id()
    seq1 = d1.components[0]
    seq2 = tuple(Pass(p.crossing + offset, p.role, p.sign) for p in d2.components[0])
    if seq2:
        cut = (s2.position + 1) % len(seq2)
        mid = seq2[cut:] + seq2[:cut]
    else:
        mid = ()
    if seq1:
        spliced = seq1[:s1.position + 1] + mid + seq1[s1.position + 1:]
    else:
        spliced = mid
    return Diagram((spliced,))


def reverse_orientation(d: Diagram) -> Diagram:
    """Reverse every component's cyclic pass order; roles and signs stay."""
    return Diagram(tuple(tuple(reversed(comp)) for comp in d.components))
