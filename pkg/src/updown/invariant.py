"""Crossing weights, weight-sum multisets and move-count certificates.

For a colored diagram and a weight table, every real crossing contributes
one table entry; the multiset of total weights over all colorings only
changes under poke (RII) moves, so differing multisets certify that any
rewrite sequence between two diagrams needs at least one of them.  Maxord
differences and non-self crossing counts sharpen "at least one" to a
numeric lower bound for two-component diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cocycle import CocycleTable, cocycle_violation, is_shiftable
from .coloring import Coloring, ColoringSpec, count_colorings, maxord, solve_colorings
from .diagram import Diagram
from .errors import UpDownError

CERT_MAXORD = "maxord-difference"
CERT_COLCOUNT = "coloring-count-witness"
CERT_PHI = "phi-multiset-difference"
CERT_NONSELF = "nonself-crossing-count"


class InvariantError(UpDownError):
    pass


@dataclass(frozen=True)
class WeightMultiset:
    """Sorted residue multiset; equality is element-wise."""

    elements: tuple[int, ...]

    @classmethod
    def of(cls, values) -> "WeightMultiset":
        return cls(tuple(sorted(values)))

    def __str__(self):
        return "{" + ",".join(str(v) for v in self.elements) + "}"


@dataclass(frozen=True)
class RiiBound:
    """A certified lower bound on the RII moves between two diagrams."""

    bound: int
    certificate: str
    detail: str

    def __str__(self):
        return f"bound={self.bound} certificate={self.certificate} detail={self.detail}"


def _weight_positions(d: Diagram, crossing: int):
    ko, po = d.over_position(crossing)
    ku, pu = d.under_position(crossing)
    len_o = len(d.components[ko])
    len_u = len(d.components[ku])
    if d.crossing_sign(crossing) > 0:
        # incoming under arc, outgoing over arc
        return (ku, (pu - 1) % len_u), (ko, po), 1
    # outgoing under arc, incoming over arc
    return (ku, pu), (ko, (po - 1) % len_o), -1


def _weight_sites(d: Diagram) -> list[tuple[int, int, int, int, int]]:
    """(under comp, under arc, over comp, over arc, sign) per crossing,
    computed once so multiset evaluation does not redo position lookups per
    coloring."""
    sites = []
    for x in d.crossing_ids():
        (ku, au), (ko, ao), sign = _weight_positions(d, x)
        sites.append((ku, au, ko, ao, sign))
    return sites


def _all_weight_sums(d: Diagram, table: CocycleTable) -> list[int]:
    sites = _weight_sites(d)
    value = table.value
    m = table.m
    return [sum(value(c.colors[ku][au], c.colors[ko][ao], sign)
                for ku, au, ko, ao, sign in sites) % m
            for c in solve_colorings(d, ColoringSpec(table.n))]


def crossing_weight(d: Diagram, c: Coloring, crossing: int, table: CocycleTable) -> int:
    """Table entry of one crossing: positive crossings read the incoming
    under color and outgoing over color, negative ones the outgoing under
    color and incoming over color."""
    if c.spec.modulus != table.n:
        raise InvariantError(
            f"coloring modulus {c.spec.modulus} does not match table modulus {table.n}")
    (ku, au), (ko, ao), sign = _weight_positions(d, crossing)
    return table.value(c.colors[ku][au], c.colors[ko][ao], sign)


def weight_sum(d: Diagram, c: Coloring, table: CocycleTable) -> int:
    """Sum of all crossing weights mod m; 0 for crossing-free diagrams."""
    if c.spec.modulus != table.n:
        raise InvariantError(
            f"coloring modulus {c.spec.modulus} does not match table modulus {table.n}")
    total = 0
    for x in d.crossing_ids():
        (ku, au), (ko, ao), sign = _weight_positions(d, x)
        total += table.value(c.colors[ku][au], c.colors[ko][ao], sign)
    return total % table.m


def _require_cocycle(table: CocycleTable):
    violation = cocycle_violation(table)
    if violation is not None:
        raise InvariantError(f"table is not an up-down cocycle: {violation}")


def phi_multiset(d: Diagram, table: CocycleTable, allow_links: bool = False) -> WeightMultiset:
    """Multiset of weight sums over all colorings of a knot diagram.

    Multi-component diagrams are rejected unless allow_links is set; the
    multiset is only proven move-stable for single-component diagrams, so
    the permissive mode is for exploration only.
    """
    if d.num_components != 1 and not allow_links:
        raise InvariantError(
            "weight multisets are defined for single-component diagrams; "
            "pass allow_links=True to compute the unproven multi-component variant")
    _require_cocycle(table)
    return WeightMultiset.of(_all_weight_sums(d, table))


def phi_shift(d: Diagram, table: CocycleTable) -> int:
    """The common weight sum of a knot diagram under a shiftable cocycle.

    Computed from the coloring whose base semi-arc has color 0; the run
    verifies that every coloring gives the same value.
    """
    if d.num_components != 1:
        raise InvariantError("the scalar weight sum is defined for single-component diagrams")
    _require_cocycle(table)
    if not is_shiftable(table):
        raise InvariantError("the scalar weight sum needs a shiftable cocycle")
    sums = _all_weight_sums(d, table)
    if any(v != sums[0] for v in sums):
        raise InvariantError("shiftable cocycle produced unequal weight sums")
    return sums[0]


def _require_same_components(d1: Diagram, d2: Diagram):
    if d1.num_components != d2.num_components:
        raise InvariantError(
            f"diagrams have {d1.num_components} and {d2.num_components} components; "
            "they cannot represent the same link")


def rii_bound_maxord(d1: Diagram, d2: Diagram) -> RiiBound:
    """Half the maxord difference, for two-component diagrams."""
    if d1.num_components != 2 or d2.num_components != 2:
        raise InvariantError("the maxord bound applies to two-component diagrams")
    g1, g2 = maxord(d1), maxord(d2)
    return RiiBound((abs(g1 - g2) + 1) // 2, CERT_MAXORD, f"|{g1}-{g2}|/2")


def rii_necessity_colcount(d1: Diagram, d2: Diagram) -> int | None:
    """Least modulus with differing coloring counts, or None.

    Counts are n**r against 0 by divisibility of the component-shift gcds
    g1 and g2 (0 divisible by everything), so a witness exists exactly when
    g1 != g2 and the least one divides exactly one of them.
    """
    _require_same_components(d1, d2)
    g1, g2 = maxord(d1), maxord(d2)
    if g1 == g2:
        return None
    for n in range(1, max(g1, g2) + 2):
        if (g1 % n == 0) != (g2 % n == 0):
            return n
    raise AssertionError("unreachable: distinct gcds always have a witness")


def rii_necessity_phi(d1: Diagram, d2: Diagram, table: CocycleTable) -> bool:
    """True when the weight multisets differ, certifying one RII move."""
    return phi_multiset(d1, table) != phi_multiset(d2, table)


def rii_bound_nonself(d1: Diagram, d2: Diagram) -> RiiBound:
    """Half the difference of non-self crossing counts."""
    _require_same_components(d1, d2)
    c1, c2 = d1.nonself_crossing_count(), d2.nonself_crossing_count()
    return RiiBound((abs(c1 - c2) + 1) // 2, CERT_NONSELF, f"|{c1}-{c2}|/2")


def rii_report(d1: Diagram, d2: Diagram, table: CocycleTable | None = None) -> RiiBound:
    """Best applicable lower bound with its certificate.

    Candidates are tried in a fixed order (maxord, non-self count, coloring
    count, weight multiset) and ties keep the earliest, so identical inputs
    give identical reports.  Necessity-only certificates contribute 1.
    """
    _require_same_components(d1, d2)
    candidates = []
    if d1.num_components == 2:
        candidates.append(rii_bound_maxord(d1, d2))
    candidates.append(rii_bound_nonself(d1, d2))
    witness = rii_necessity_colcount(d1, d2)
    if witness is not None:
        candidates.append(RiiBound(1, CERT_COLCOUNT, f"n={witness}"))
    if table is not None and d1.num_components == 1:
        m1, m2 = phi_multiset(d1, table), phi_multiset(d2, table)
        if m1 != m2:
            candidates.append(RiiBound(1, CERT_PHI, f"{m1}!={m2}"))
    best = candidates[0]
    for cand in candidates[1:]:
        if cand.bound > best.bound:
            best = cand
    return best
