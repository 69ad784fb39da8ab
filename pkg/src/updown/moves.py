"""Classical Reidemeister rewrites on signed Gauss codes.

Kink moves (RI) insert or delete an adjacent same-crossing pass pair.
Poke moves (RII) insert or delete an opposite-sign crossing pair whose over
passes are adjacent on one strand and whose under passes are adjacent on
another.  Triple-slide moves (RIII) swap the two adjacent passes on each of
three strands meeting pairwise in three crossings.

The four virtual moves need no operation at all: a signed Gauss code only
records real crossings, so VRI, VRII, VRIII and VRIV all act as the
identity on this representation (see VIRTUAL_MOVES below).

RIII legality: name the three strands T (over at both its crossings),
M (under then over, in some order) and B (under at both), and the three
crossings TM, TB, MB by the strands they join.  A triple-slide site is
legal when, for each strand, which crossing it meets first, together with
the three crossing signs, matches a row of _RIII_ROWS.  The rows were
computed by sliding one of three pairwise-crossing oriented straight
strands over the opposite crossing in every height order and orientation;
the variant index attached to a row is the number (1..8) of the
weight-sum identity that the move at such a site realizes, so each index
covers the two rows that are the two sides of one move.
"""

from __future__ import annotations

import random
from typing import NamedTuple

from .diagram import OVER, UNDER, Diagram, Pass
from .errors import UpDownError

RI_ADD = "RI-add"
RI_REMOVE = "RI-remove"
RII_ADD = "RII-add"
RII_REMOVE = "RII-remove"
RIII = "RIII"
MOVE_KINDS = frozenset({RI_ADD, RI_REMOVE, RII_ADD, RII_REMOVE, RIII})

# Identity moves on this representation; listed for documentation only.
VIRTUAL_MOVES = ("VRI", "VRII", "VRIII", "VRIV")


class MoveError(UpDownError):
    pass


class MoveDescriptor(NamedTuple):
    """A concrete applicable rewrite.

    kind: one of MOVE_KINDS.
    variant: "OU+"-style kink spec for RI, "parallel+"-style pattern and
        first-crossing sign for RII, identity number 1..8 for RIII.
    sites: (component, position) anchors; one for RI, the over-strand then
        under-strand arcs for RII, the T, M, B pair starts for RIII.
    """

    kind: str
    variant: str | int
    sites: tuple[tuple[int, int], ...]


_RI_VARIANTS = ("OU+", "OU-", "UO+", "UO-")
_RII_VARIANTS = ("antiparallel+", "antiparallel-", "parallel+", "parallel-")

# (T first crossing, M first crossing, B first crossing, sign TM, TB, MB)
# -> weight identity number.  Two rows per number: the move and its inverse.
_RIII_ROWS = {
    ("TB", "MB", "MB", -1, -1, -1): 2,
    ("TB", "MB", "MB", 1, 1, 1): 5,
    ("TB", "MB", "TB", -1, 1, 1): 4,
    ("TB", "MB", "TB", 1, -1, -1): 7,
    ("TB", "TM", "MB", -1, 1, -1): 8,
    ("TB", "TM", "MB", 1, -1, 1): 3,
    ("TB", "TM", "TB", -1, -1, 1): 6,
    ("TB", "TM", "TB", 1, 1, -1): 1,
    ("TM", "MB", "MB", -1, -1, 1): 6,
    ("TM", "MB", "MB", 1, 1, -1): 1,
    ("TM", "MB", "TB", -1, 1, -1): 8,
    ("TM", "MB", "TB", 1, -1, 1): 3,
    ("TM", "TM", "MB", -1, 1, 1): 4,
    ("TM", "TM", "MB", 1, -1, -1): 7,
    ("TM", "TM", "TB", -1, -1, -1): 2,
    ("TM", "TM", "TB", 1, 1, 1): 5,
}


def _sign_char(sign: int) -> str:
    return "+" if sign > 0 else "-"


def _descriptor_key(mv: MoveDescriptor):
    return (mv.kind, mv.sites, str(mv.variant))


def _all_arcs(d: Diagram) -> list[tuple[int, int]]:
    return [(k, p) for k in range(d.num_components) for p in range(d.arc_count(k))]


def _enumerate_ri_remove(d: Diagram) -> list[MoveDescriptor]:
    out = []
    for k, comp in enumerate(d.components):
        size = len(comp)
        if size < 2:
            continue
        for p in range(size):
            a, b = comp[p], comp[(p + 1) % size]
            if a.crossing == b.crossing:
                out.append(MoveDescriptor(
                    RI_REMOVE, f"{a.role}{b.role}{_sign_char(a.sign)}", ((k, p),)))
    return out


def _enumerate_rii_remove(d: Diagram) -> list[MoveDescriptor]:
    out = []
    for k, comp in enumerate(d.components):
        size = len(comp)
        if size < 2:
            continue
        for p in range(size):
            a, b = comp[p], comp[(p + 1) % size]
            if (a.role != OVER or b.role != OVER
                    or a.crossing == b.crossing or a.sign != -b.sign):
                continue
            x, y = a.crossing, b.crossing
            ku, pu = d._under_at[x]  # bulk scan; ids are known valid
            under = d.components[ku]
            nxt = under[(pu + 1) % len(under)]
            if nxt.role == UNDER and nxt.crossing == y and (pu + 1) % len(under) != pu:
                out.append(MoveDescriptor(
                    RII_REMOVE, f"parallel{_sign_char(a.sign)}", ((k, p), (ku, pu))))
            prev_pos = (pu - 1) % len(under)
            prev = under[prev_pos]
            if prev.role == UNDER and prev.crossing == y and prev_pos != pu:
                out.append(MoveDescriptor(
                    RII_REMOVE, f"antiparallel{_sign_char(a.sign)}", ((k, p), (ku, prev_pos))))
    return out


def _enumerate_riii(d: Diagram) -> list[MoveDescriptor]:
    under_at = d._under_at  # bulk scan; skips the per-call id validation
    components = d.components
    out = []
    for k_top, comp in enumerate(components):
        size = len(comp)
        if size < 2:
            continue
        for p_top in range(size):
            q_top = (p_top + 1) % size
            if q_top == p_top:
                continue
            first, second = comp[p_top], comp[q_top]
            if first.role != OVER or second.role != OVER or first.crossing == second.crossing:
                continue
            for tm, tb, s_tm, s_tb in ((first.crossing, second.crossing, first.sign, second.sign),
                                       (second.crossing, first.crossing, second.sign, first.sign)):
                t_first = "TM" if tm == first.crossing else "TB"
                k_mid, p_mid_u = under_at[tm]
                mid = components[k_mid]
                for m_first in ("TM", "MB"):
                    if m_first == "TM":
                        other_pos, anchor_m = (p_mid_u + 1) % len(mid), p_mid_u
                    else:
                        other_pos = anchor_m = (p_mid_u - 1) % len(mid)
                    if other_pos == p_mid_u:
                        continue
                    mb_pass = mid[other_pos]
                    if mb_pass.role != OVER or mb_pass.crossing in (tm, tb):
                        continue
                    mb = mb_pass.crossing
                    k_low, p_low_tb = under_at[tb]
                    k_low2, p_low_mb = under_at[mb]
                    if k_low2 != k_low or p_low_tb == p_low_mb:
                        continue
                    low_size = len(components[k_low])
                    for b_first in ("TB", "MB"):
                        if b_first == "TB":
                            if (p_low_tb + 1) % low_size != p_low_mb:
                                continue
                            anchor_b = p_low_tb
                        else:
                            if (p_low_mb + 1) % low_size != p_low_tb:
                                continue
                            anchor_b = p_low_mb
                        row = (t_first, m_first, b_first, s_tm, s_tb, mb_pass.sign)
                        variant = _RIII_ROWS.get(row)
                        if variant is not None:
                            out.append(MoveDescriptor(
                                RIII, variant,
                                ((k_top, p_top), (k_mid, anchor_m), (k_low, anchor_b))))
    return out


class _MoveIndex:
    """Counts and positional access for the moves of one diagram.

    Index i enumerates, in order, the RI-add block (arcs major, variants
    minor), the sorted RI-remove list, the RII-add block (ordered arc pairs
    major, variants minor), the sorted RII-remove list and the sorted RIII
    list; this matches the order of enumerate_moves exactly.
    """

    def __init__(self, d: Diagram, kinds):
        bad = set(kinds) - MOVE_KINDS
        if bad:
            raise MoveError(f"unknown move kinds: {sorted(bad)}")
        self.arcs = _all_arcs(d)
        n_arcs = len(self.arcs)
        self.ri_add = 4 * n_arcs if RI_ADD in kinds else 0
        self.ri_removes = sorted(_enumerate_ri_remove(d), key=_descriptor_key) \
            if RI_REMOVE in kinds else []
        self.rii_add = 4 * n_arcs * (n_arcs - 1) if RII_ADD in kinds else 0
        self.rii_removes = sorted(_enumerate_rii_remove(d), key=_descriptor_key) \
            if RII_REMOVE in kinds else []
        self.riii = sorted(_enumerate_riii(d), key=_descriptor_key) \
            if RIII in kinds else []
        self.total = (self.ri_add + len(self.ri_removes) + self.rii_add
                      + len(self.rii_removes) + len(self.riii))

    def descriptor(self, idx: int) -> MoveDescriptor:
        if idx < self.ri_add:
            arc, var = divmod(idx, 4)
            return MoveDescriptor(RI_ADD, _RI_VARIANTS[var], (self.arcs[arc],))
        idx -= self.ri_add
        if idx < len(self.ri_removes):
            return self.ri_removes[idx]
        idx -= len(self.ri_removes)
        if idx < self.rii_add:
            pair, var = divmod(idx, 4)
            n_arcs = len(self.arcs)
            i, r = divmod(pair, n_arcs - 1)
            j = r if r < i else r + 1
            return MoveDescriptor(RII_ADD, _RII_VARIANTS[var],
                                  (self.arcs[i], self.arcs[j]))
        idx -= self.rii_add
        if idx < len(self.rii_removes):
            return self.rii_removes[idx]
        return self.riii[idx - len(self.rii_removes)]


def enumerate_moves(d: Diagram, kinds) -> list[MoveDescriptor]:
    """All applicable descriptors of the requested kinds, sorted by
    (kind, sites, variant)."""
    index = _MoveIndex(d, frozenset(kinds))
    return [index.descriptor(i) for i in range(index.total)]


def _require(condition: bool, message: str):
    if not condition:
        raise MoveError(f"stale or invalid move descriptor: {message}")


def _site(d: Diagram, site: tuple[int, int], arc: bool) -> tuple[int, int]:
    k, p = site
    _require(0 <= k < d.num_components, f"no component {k}")
    limit = d.arc_count(k) if arc else len(d.components[k])
    _require(0 <= p < limit, f"position {p} out of range in component {k}")
    return k, p


def _insert(comp: tuple[Pass, ...], position: int, inserted: tuple[Pass, ...]):
    # insert on arc p means between pass p and pass p+1; empty components
    # take the insertion as their whole sequence
    cut = position + 1 if comp else 0
    return comp[:cut] + inserted + comp[cut:]


def _apply_ri_add(d: Diagram, mv: MoveDescriptor) -> Diagram:
    _require(mv.variant in _RI_VARIANTS, f"bad RI variant {mv.variant!r}")
    _require(len(mv.sites) == 1, "RI-add takes one site")
    k, p = _site(d, mv.sites[0], arc=True)
    roles, sign = mv.variant[:2], 1 if mv.variant[2] == "+" else -1
    fresh = d.max_crossing_id() + 1
    pair = tuple(Pass(fresh, role, sign) for role in roles)
    comps = list(d.components)
    comps[k] = _insert(comps[k], p, pair)
    return Diagram(tuple(comps))


def _apply_ri_remove(d: Diagram, mv: MoveDescriptor) -> Diagram:
    _require(len(mv.sites) == 1, "RI-remove takes one site")
    k, p = _site(d, mv.sites[0], arc=False)
    comp = d.components[k]
    q = (p + 1) % len(comp)
    _require(q != p and comp[p].crossing == comp[q].crossing,
             "site does not hold an adjacent same-crossing pair")
    _require(mv.variant == f"{comp[p].role}{comp[q].role}{_sign_char(comp[p].sign)}",
             "variant does not match the kink at the site")
    comps = list(d.components)
    comps[k] = tuple(pas for i, pas in enumerate(comp) if i not in (p, q))
    return Diagram(tuple(comps))


def _rii_passes(variant: str, x: int, y: int, sign_x: int):
    over = (Pass(x, OVER, sign_x), Pass(y, OVER, -sign_x))
    if variant.startswith("parallel"):
        under = (Pass(x, UNDER, sign_x), Pass(y, UNDER, -sign_x))
    else:
        under = (Pass(y, UNDER, -sign_x), Pass(x, UNDER, sign_x))
    return over, under


def _apply_rii_add(d: Diagram, mv: MoveDescriptor) -> Diagram:
    _require(mv.variant in _RII_VARIANTS, f"bad RII variant {mv.variant!r}")
    _require(len(mv.sites) == 2, "RII-add takes two sites")
    (k1, p1) = _site(d, mv.sites[0], arc=True)
    (k2, p2) = _site(d, mv.sites[1], arc=True)
    _require((k1, p1) != (k2, p2), "the two RII-add sites must be distinct arcs")
    fresh = d.max_crossing_id() + 1
    sign_x = 1 if mv.variant.endswith("+") else -1
    over, under = _rii_passes(mv.variant, fresh, fresh + 1, sign_x)
    comps = list(d.components)
    if k1 == k2:
        # both positions refer to arcs of the unmodified component, so the
        # higher one must be spliced first
        inserts = sorted(((p1, over), (p2, under)), reverse=True)
        for p, pair in inserts:
            comps[k1] = _insert(comps[k1], p, pair)
    else:
        comps[k1] = _insert(comps[k1], p1, over)
        comps[k2] = _insert(comps[k2], p2, under)
    return Diagram(tuple(comps))


def _apply_rii_remove(d: Diagram, mv: MoveDescriptor) -> Diagram:
    _require(mv.variant in _RII_VARIANTS, f"bad RII variant {mv.variant!r}")
    _require(len(mv.sites) == 2, "RII-remove takes two sites")
    (k1, p1) = _site(d, mv.sites[0], arc=False)
    (k2, p2) = _site(d, mv.sites[1], arc=False)
    over_comp, under_comp = d.components[k1], d.components[k2]
    q1 = (p1 + 1) % len(over_comp)
    a, b = over_comp[p1], over_comp[q1]
    _require(q1 != p1 and a.role == OVER and b.role == OVER
             and a.crossing != b.crossing and a.sign == -b.sign,
             "over site does not hold an adjacent opposite-sign over pair")
    _require(_sign_char(a.sign) == mv.variant[-1], "variant sign mismatch")
    x, y = a.crossing, b.crossing
    q2 = (p2 + 1) % len(under_comp)
    c, e = under_comp[p2], under_comp[q2]
    _require(q2 != p2 and c.role == UNDER and e.role == UNDER,
             "under site does not hold an adjacent under pair")
    if mv.variant.startswith("parallel"):
        _require((c.crossing, e.crossing) == (x, y), "under pair order mismatch")
    else:
        _require((c.crossing, e.crossing) == (y, x), "under pair order mismatch")
    drop = {(k1, p1), (k1, q1), (k2, p2), (k2, q2)}
    comps = [tuple(pas for p, pas in enumerate(comp) if (k, p) not in drop)
             for k, comp in enumerate(d.components)]
    return Diagram(tuple(comps))


def _apply_riii(d: Diagram, mv: MoveDescriptor) -> Diagram:
    _require(len(mv.sites) == 3, "RIII takes three sites")
    matches = [m for m in _enumerate_riii(d)
               if m.sites == mv.sites and m.variant == mv.variant]
    _require(bool(matches), "sites do not hold this triple-slide configuration")
    comps = [list(comp) for comp in d.components]
    for k, p in mv.sites:
        q = (p + 1) % len(comps[k])
        comps[k][p], comps[k][q] = comps[k][q], comps[k][p]
    return Diagram(tuple(tuple(comp) for comp in comps))


_APPLIERS = {
    RI_ADD: _apply_ri_add,
    RI_REMOVE: _apply_ri_remove,
    RII_ADD: _apply_rii_add,
    RII_REMOVE: _apply_rii_remove,
    RIII: _apply_riii,
}


def apply_move(d: Diagram, mv: MoveDescriptor) -> Diagram:
    """Apply a descriptor, re-validating it against the diagram first.

    Descriptors are positional, so applying one to a diagram it was not
    enumerated from raises MoveError instead of rewriting garbage.
    """
    try:
        applier = _APPLIERS[mv.kind]
    except KeyError:
        raise MoveError(f"unknown move kind {mv.kind!r}") from None
    return applier(d, mv)


def random_walk(d: Diagram, steps: int, kinds, seed: int
                ) -> list[tuple[MoveDescriptor | None, Diagram]]:
    """Seeded trajectory of uniformly chosen applicable moves.

    Each step picks uniformly among all applicable descriptors of the
    requested kinds; a step with no applicable move is recorded as a stall
    (None descriptor, unchanged diagram).  Identical arguments always give
    identical trajectories.
    """
    kinds = frozenset(kinds)
    if not kinds:
        raise MoveError("kinds must be nonempty")
    rng = random.Random(seed)
    trajectory = []
    current = d
    for _ in range(steps):
        index = _MoveIndex(current, kinds)
        if index.total == 0:
            trajectory.append((None, current))
            continue
        mv = index.descriptor(rng.randrange(index.total))
        current = apply_move(current, mv)
        trajectory.append((mv, current))
    return trajectory
