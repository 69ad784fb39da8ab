"""Up-down colorings of diagrams over Z_n.

A coloring assigns a residue to every semi-arc.  Walking a component along
its orientation, the color gains w after an over pass and loses w after an
under pass, where w is the positive-crossing weight at positive crossings
and the negative-crossing weight at negative ones.  The classical case is
both weights equal to 1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .diagram import OVER, Diagram, SemiArcId, component_shift
from .errors import UpDownError


class ColoringError(UpDownError):
    pass


@dataclass(frozen=True)
class ColoringSpec:
    """Modulus plus the color shifts applied at positive/negative crossings."""

    modulus: int
    pos_shift: int = 1
    neg_shift: int = 1

    def __post_init__(self):
        if self.modulus < 1:
            raise ColoringError(f"modulus must be >= 1, got {self.modulus}")


@dataclass(frozen=True)
class Coloring:
    """A total color map, stored densely: colors[k][p] colors semi-arc (k, p)."""

    spec: ColoringSpec
    colors: tuple[tuple[int, ...], ...]

    def color(self, arc: SemiArcId) -> int:
        return self.colors[arc.component][arc.position]


def _delta(pas, spec: ColoringSpec) -> int:
    w = spec.pos_shift if pas.sign > 0 else spec.neg_shift
    return w if pas.role == OVER else -w


def _require_total(d: Diagram, c: Coloring):
    if len(c.colors) != d.num_components or any(
            len(c.colors[k]) != d.arc_count(k) for k in range(d.num_components)):
        raise ColoringError("color map does not cover exactly the semi-arcs of the diagram")


def verify_coloring(d: Diagram, c: Coloring) -> bool:
    """True when every crossing condition holds mod n.

    Raises ColoringError if the color map is not total on the diagram's
    semi-arcs.
    """
    _require_total(d, c)
    n = c.spec.modulus
    for k, comp in enumerate(d.components):
        cols = c.colors[k]
        for p, pas in enumerate(comp):
            # cols[p - 1] wraps to the last arc when p == 0
            if (cols[p] - cols[p - 1] - _delta(pas, c.spec)) % n != 0:
                return False
    return True


def solve_colorings(d: Diagram, spec: ColoringSpec) -> list[Coloring]:
    """All colorings, sorted lexicographically by their color tuples.

    Per component the base color of semi-arc 0 determines everything by
    propagation, and the choice is consistent exactly when the modulus
    divides that component's shift.  The output is the full solution set,
    empty when some component is inconsistent.
    """
    n = spec.modulus
    prefixes = []
    for comp in d.components:
        acc = 0
        prefix = [0]
        for pas in comp[1:]:
            acc += _delta(pas, spec)
            prefix.append(acc)
        total = acc + (_delta(comp[0], spec) if comp else 0)
        if total % n != 0:
            return []
        prefixes.append(prefix)
    out = []
    for bases in itertools.product(range(n), repeat=d.num_components):
        out.append(Coloring(spec, tuple(
            tuple((base + off) % n for off in prefix)
            for base, prefix in zip(bases, prefixes))))
    return out


def count_colorings(d: Diagram, spec: ColoringSpec) -> int:
    """n**r when every component shift is divisible by n, else 0."""
    n = spec.modulus
    weights = (spec.pos_shift, spec.neg_shift)
    for k in range(d.num_components):
        if component_shift(d, k, weights) % n != 0:
            return 0
    return n ** d.num_components


def is_colorable(d: Diagram, spec: ColoringSpec) -> bool:
    return count_colorings(d, spec) > 0


def maxord(d: Diagram) -> int:
    """Greatest common divisor of the absolute component shifts.

    This is the largest n for which the diagram is colorable with unit
    shifts, with 0 meaning every n works.  For two-component diagrams it is
    the |over - under| count of either component.
    """
    g = 0
    for k in range(d.num_components):
        g = math.gcd(g, abs(component_shift(d, k)))
    return g


def shift_coloring(c: Coloring, i: int) -> Coloring:
    """Add i to every color; up-down conditions are preserved."""
    n = c.spec.modulus
    return Coloring(c.spec, tuple(
        tuple((v + i) % n for v in comp) for comp in c.colors))
