"""Double posets: representation, parsing, classification, and enumeration.

A *double poset* is a finite set carrying two strict partial orders.  Values
here are immutable, live on the labels ``1..n``, and store each order
transitively closed as per-vertex bitmasks of strict upper bounds, so
equality and hashing are structural.  A *special* poset is a double poset
whose second order is the natural total order on the labels; the empty poset
(``n = 0``) is the unit of the composition product.

The literal grammar is whitespace-insensitive:

* ``SP(n; a<b, c<d, ...)`` — special poset; the pairs generate the first
  order, the second order is the natural order on ``1..n``;
* ``PP(n; h: a<b, ...; r: a<b, ...)`` — plane double poset with its two
  orders named ``h`` and ``r``;
* ``DP(n; o1: a<b, ...; o2: a<b, ...)`` — general double poset.

Pairs may be covering pairs or any generating set; the stored relation is
the transitive closure, and printing always uses covering pairs.
"""

from __future__ import annotations

import itertools
import os
import re
from enum import Enum
from functools import lru_cache

__all__ = [
    "DP_ENUMERATION_CAP",
    "DoublePoset",
    "Family",
    "SpecialPoset",
    "b_plus",
    "canonical_form",
    "classify",
    "codec_format",
    "codec_parse",
    "compose",
    "empty_poset",
    "enumerate_family",
    "format_poset",
    "has_forest_hasse",
    "ideals",
    "induced_order_ranks",
    "induced_special",
    "iota",
    "is_heap_forest",
    "is_heap_ordered",
    "is_ordered_forest",
    "is_plane",
    "is_plane_forest",
    "is_plane_wn",
    "is_special",
    "is_special_plane",
    "is_special_plane_by_pattern",
    "is_special_plane_forest",
    "is_special_wn",
    "kappa",
    "max_degree",
    "nwarrow",
    "parse_poset",
    "plane_version",
    "restrict",
    "reverse_rel2",
]


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _close(n, pairs):
    """Closed upper-bound masks of the relation generated by ``pairs``."""
    up = [0] * n
    for a, b in pairs:
        a = int(a)
        b = int(b)
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError("bad label")
        if a == b:
            raise ValueError("not antisymmetric")
        up[a - 1] |= 1 << (b - 1)
    for k in range(n):
        kbit = 1 << k
        for i in range(n):
            if up[i] & kbit:
                up[i] |= up[k]
    for i in range(n):
        if (up[i] >> i) & 1:
            raise ValueError("not antisymmetric")
    return tuple(up)


def _downs(n, up):
    down = [0] * n
    for v in range(n):
        for w in _bits(up[v]):
            down[w] |= 1 << v
    return tuple(down)


@lru_cache(maxsize=None)
def _natural_up(n):
    full = (1 << n) - 1
    return tuple(full ^ ((1 << (v + 1)) - 1) for v in range(n))


class DoublePoset:
    """Two strict partial orders on the labels 1..n, stored closed."""

    def __init__(self, n, pairs1=(), pairs2=()):
        n = int(n)
        if n < 0:
            raise ValueError("bad label")
        self.n = n
        self.up1 = _close(n, pairs1)
        self.up2 = _close(n, pairs2)
        self.down1 = _downs(n, self.up1)
        self.down2 = _downs(n, self.up2)

    @classmethod
    def _from_masks(cls, n, up1, up2):
        """Fast path for masks that are already closed and antisymmetric."""
        up2 = tuple(up2)
        target = SpecialPoset if up2 == _natural_up(n) else DoublePoset
        self = object.__new__(target)
        self.n = n
        self.up1 = tuple(up1)
        self.up2 = up2
        self.down1 = _downs(n, self.up1)
        self.down2 = _downs(n, self.up2)
        return self

    # -- structural accessors -------------------------------------------

    def less(self, a, b, order=1):
        """True iff ``a < b`` in the chosen order (arguments are labels)."""
        up = self.up1 if order == 1 else self.up2
        return bool((up[a - 1] >> (b - 1)) & 1)

    def pairs(self, order=1):
        """Sorted transitive-closure pairs ``(a, b)`` with ``a < b`` in the order."""
        up = self.up1 if order == 1 else self.up2
        return sorted((v + 1, w + 1) for v in range(self.n) for w in _bits(up[v]))

    def covers(self, order=1):
        """Sorted covering pairs (Hasse edges) of the chosen order."""
        up = self.up1 if order == 1 else self.up2
        down = self.down1 if order == 1 else self.down2
        out = []
        for v in range(self.n):
            for w in _bits(up[v]):
                if not (up[v] & down[w]):
                    out.append((v + 1, w + 1))
        return sorted(out)

    def sort_key(self):
        return (self.n, self.pairs(1), self.pairs(2))

    def literal(self):
        return format_poset(self)

    # -- value semantics --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, DoublePoset):
            return NotImplemented
        return self.n == other.n and self.up1 == other.up1 and self.up2 == other.up2

    def __hash__(self):
        return hash((self.n, self.up1, self.up2))

    def __repr__(self):
        return format_poset(self)


class SpecialPoset(DoublePoset):
    """Double poset whose second order is the natural total order on 1..n."""

    def __init__(self, n, pairs1=()):
        n = int(n)
        if n < 0:
            raise ValueError("bad label")
        self.n = n
        self.up1 = _close(n, pairs1)
        self.up2 = _natural_up(n)
        self.down1 = _downs(n, self.up1)
        self.down2 = _downs(n, self.up2)


def empty_poset():
    """The empty special poset, the unit of the composition product."""
    return SpecialPoset(0)


# -- literals ----------------------------------------------------------------

_POSET_HEAD = re.compile(r"^\s*(SP|PP|DP)\s*\(\s*(\d+)\s*;(.*)\)\s*$", re.S)
_PAIR = re.compile(r"^\s*(\d+)\s*<\s*(\d+)\s*$")


def _parse_pairs(body):
    body = body.strip()
    if body in ("", "∅", "-"):
        return []
    pairs = []
    for piece in body.split(","):
        m = _PAIR.match(piece)
        if not m:
            raise ValueError(f"bad pair: {piece.strip()!r}")
        pairs.append((int(m.group(1)), int(m.group(2))))
    return pairs


def parse_poset(text):
    """Parse an ``SP``/``PP``/``DP`` literal."""
    m = _POSET_HEAD.match(text)
    if not m:
        raise ValueError(f"bad poset literal: {text!r}")
    kind, n, body = m.group(1), int(m.group(2)), m.group(3)
    if kind == "SP":
        return SpecialPoset(n, _parse_pairs(body))
    parts = body.split(";")
    tags = ("h", "r") if kind == "PP" else ("o1", "o2")
    if len(parts) != 2:
        raise ValueError(f"bad poset literal: {text!r}")
    rels = []
    for part, tag in zip(parts, tags):
        part = part.strip()
        if not part.startswith(tag + ":"):
            raise ValueError(f"bad poset literal: {text!r}")
        rels.append(_parse_pairs(part[len(tag) + 1 :]))
    return DoublePoset(n, rels[0], rels[1])


def _format_pairs(pairs):
    if not pairs:
        return ""
    return " " + ", ".join(f"{a}<{b}" for a, b in pairs)


def format_poset(P):
    """Canonical literal: SP form when special, PP form when plane, else DP."""
    if is_special(P):
        return f"SP({P.n};{_format_pairs(P.covers(1))})"
    if is_plane(P):
        return f"PP({P.n}; h:{_format_pairs(P.covers(1))}; r:{_format_pairs(P.covers(2))})"
    return f"DP({P.n}; o1:{_format_pairs(P.covers(1))}; o2:{_format_pairs(P.covers(2))})"


codec_parse = parse_poset
codec_format = format_poset


# -- membership predicates ---------------------------------------------------


def is_special(P):
    """True iff the second order is the natural total order on labels."""
    return P.up2 == _natural_up(P.n)


def is_plane(P):
    """True iff every two distinct labels are comparable in exactly one order."""
    for v in range(P.n):
        for w in range(v + 1, P.n):
            c1 = ((P.up1[v] >> w) | (P.up1[w] >> v)) & 1
            c2 = ((P.up2[v] >> w) | (P.up2[w] >> v)) & 1
            if c1 == c2:
                return False
    return True


def is_heap_ordered(P):
    """Special, and the first order only increases labels."""
    if not is_special(P):
        return False
    nat = _natural_up(P.n)
    return all((P.up1[v] & ~nat[v]) == 0 for v in range(P.n))


def has_forest_hasse(P):
    """Every vertex has at most one lower cover in the first order."""
    for v in range(P.n):
        found = 0
        for u in _bits(P.down1[v]):
            if not (P.up1[u] & P.down1[v]):
                found += 1
                if found > 1:
                    return False
    return True


def is_ordered_forest(P):
    return is_special(P) and has_forest_hasse(P)


def is_heap_forest(P):
    return is_heap_ordered(P) and has_forest_hasse(P)


def is_special_plane(P):
    """Definitional route: heap-ordered, and the complementary relation is an
    order.

    The complementary relation keeps the label pairs that are incomparable in
    the first order; it must be transitive for (first order, complement) to
    form a plane poset whose induced total order is the label order.
    """
    if not is_heap_ordered(P):
        return False
    n = P.n
    r = [P.up2[v] & ~(P.up1[v] | P.down1[v]) for v in range(n)]
    for v in range(n):
        for w in _bits(r[v]):
            if r[w] & ~r[v]:
                return False
    return True


def is_special_plane_by_pattern(P):
    """Forbidden-configuration route: heap-ordered with no labels i<j<k where
    i is below k in the first order while both (i,j) and (j,k) are
    incomparable."""
    if not is_heap_ordered(P):
        return False
    n = P.n
    comp = [P.up1[v] | P.down1[v] for v in range(n)]
    for i in range(n):
        for k in _bits(P.up1[i]):
            for j in range(i + 1, k):
                if not ((comp[i] >> j) & 1) and not ((comp[j] >> k) & 1):
                    return False
    return True


def _n_patterns():
    first = DoublePoset(4, [(1, 2), (1, 4), (3, 4)], [(1, 3), (2, 3), (2, 4)])
    second = DoublePoset(4, [(1, 3), (2, 3), (2, 4)], [(1, 2), (1, 4), (3, 4)])
    return ((first.up1, first.up2), (second.up1, second.up2))


_N_PATTERNS = _n_patterns()


def is_plane_wn(P):
    """Plane, and no four labels induce either of the two N-shaped plane posets."""
    if not is_plane(P):
        return False
    if P.n < 4:
        return True
    for sub in itertools.combinations(range(1, P.n + 1), 4):
        Q = _induced_relabel(restrict(P, sub))
        if (Q.up1, Q.up2) in _N_PATTERNS:
            return False
    return True


def is_special_wn(P):
    return is_special_plane(P) and is_plane_wn(plane_version(P))


def is_special_plane_forest(P):
    return is_special_plane(P) and has_forest_hasse(P)


def is_plane_forest(P):
    return is_plane(P) and has_forest_hasse(P)


# -- constructions -----------------------------------------------------------


def compose(P, Q):
    """Composition product: disjoint union, all of P below all of Q in order 2."""
    n, m = P.n, Q.n
    cross = ((1 << m) - 1) << n
    up1 = list(P.up1) + [u << n for u in Q.up1]
    up2 = [u | cross for u in P.up2] + [u << n for u in Q.up2]
    return DoublePoset._from_masks(n + m, up1, up2)


def ideals(P):
    """All up-sets of the first order, as label sets sorted by (size, labels)."""
    n = P.n
    out = []
    for S in range(1 << n):
        ok = True
        for v in _bits(S):
            if P.up1[v] & ~S:
                ok = False
                break
        if ok:
            out.append(frozenset(v + 1 for v in _bits(S)))
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def restrict(P, labels):
    """Both orders restricted to ``labels``, relabeled 1..k by increasing label."""
    keep = sorted(set(labels))
    for a in keep:
        if not (1 <= a <= P.n):
            raise ValueError("bad label")
    index = {a: i for i, a in enumerate(keep)}

    def project(up):
        rows = []
        for a in keep:
            mask = 0
            for w in _bits(up[a - 1]):
                j = index.get(w + 1)
                if j is not None:
                    mask |= 1 << j
            rows.append(mask)
        return rows

    return DoublePoset._from_masks(len(keep), project(P.up1), project(P.up2))


def iota(P):
    """Exchange the two orders."""
    return DoublePoset._from_masks(P.n, P.up2, P.up1)


def reverse_rel2(P):
    """Reverse the second order, keeping the first."""
    return DoublePoset._from_masks(P.n, P.up1, P.down2)


def _relabel(P, new_of_old):
    n = P.n
    up1 = [0] * n
    up2 = [0] * n
    for v in range(n):
        nv = new_of_old[v]
        for w in _bits(P.up1[v]):
            up1[nv] |= 1 << new_of_old[w]
        for w in _bits(P.up2[v]):
            up2[nv] |= 1 << new_of_old[w]
    return DoublePoset._from_masks(n, up1, up2)


def induced_order_ranks(P):
    """0-based rank of each vertex in the total order generated by both orders.

    Raises ValueError("induced order not total") when the union of the two
    orders is not a total order.
    """
    n = P.n
    closed = [P.up1[v] | P.up2[v] for v in range(n)]
    for k in range(n):
        kbit = 1 << k
        for i in range(n):
            if closed[i] & kbit:
                closed[i] |= closed[k]
    for v in range(n):
        if (closed[v] >> v) & 1:
            raise ValueError("induced order not total")
    for v in range(n):
        for w in range(v + 1, n):
            if not (((closed[v] >> w) | (closed[w] >> v)) & 1):
                raise ValueError("induced order not total")
    return [n - 1 - bin(m).count("1") for m in closed]


def _induced_relabel(P):
    """Relabel so the induced total order becomes the natural label order."""
    return _relabel(P, induced_order_ranks(P))


def induced_special(P):
    """The special poset carried by a plane poset: first order plus the
    induced total order as labels."""
    if not is_plane(P):
        raise ValueError("induced order not total")
    Q = _induced_relabel(P)
    return DoublePoset._from_masks(Q.n, Q.up1, _natural_up(Q.n))


def plane_version(P):
    """The plane incarnation of a special plane poset.

    The first order is kept; the second becomes the natural order restricted
    to pairs that are incomparable in the first order.  Together the two
    orders form a plane poset whose induced total order is the label order.
    """
    if not is_special_plane(P):
        raise ValueError("not a special plane poset")
    r = [P.up2[v] & ~(P.up1[v] | P.down1[v]) for v in range(P.n)]
    return DoublePoset._from_masks(P.n, P.up1, r)


def canonical_form(P):
    """Canonical representative of the isomorphism class of a double poset.

    Special posets are already canonical; plane posets are relabeled along
    their induced total order; other double posets (supported up to 8
    vertices) take the lexicographically least relabeling.
    """
    if is_special(P):
        return DoublePoset._from_masks(P.n, P.up1, P.up2)
    if is_plane(P):
        return _induced_relabel(P)
    if P.n > 8:
        raise ValueError("canonical form of general double posets supported only up to 8 vertices")
    best = None
    best_key = None
    for perm in itertools.permutations(range(P.n)):
        Q = _relabel(P, perm)
        key = (Q.up1, Q.up2)
        if best_key is None or key < best_key:
            best, best_key = Q, key
    return best


def kappa(P):
    """Label of the largest element (induced order) of a plane poset whose
    induced lower bounds are all lower bounds in the first order."""
    if P.n == 0:
        raise ValueError("empty poset")
    if not is_plane(P):
        raise ValueError("not plane")
    ranks = induced_order_ranks(P)
    return _kappa_vertex(P, (1 << P.n) - 1, ranks) + 1


def _kappa_vertex(P, alive, ranks):
    best = -1
    best_rank = -1
    for v in _bits(alive):
        if P.down2[v] & alive & ~P.down1[v]:
            continue
        if ranks[v] > best_rank:
            best, best_rank = v, ranks[v]
    return best


def nwarrow(P, Q):
    """Northwest graft of special posets: disjoint union, Q stacked above P in
    the second order, and everything weakly below the maximum label of P put
    below every vertex of Q in the first order."""
    if P.n == 0 or Q.n == 0:
        raise ValueError("nwarrow needs nonempty operands")
    if not (is_special(P) and is_special(Q)):
        raise ValueError("nwarrow needs special posets")
    n, m = P.n, Q.n
    below_top = P.down1[n - 1] | (1 << (n - 1))
    qmask = ((1 << m) - 1) << n
    up1 = [P.up1[v] | (qmask if (below_top >> v) & 1 else 0) for v in range(n)]
    up1 += [u << n for u in Q.up1]
    return DoublePoset._from_masks(n + m, up1, _natural_up(n + m))


def b_plus(F):
    """Graft a special plane forest onto a new common root, labeled 1."""
    if not is_special_plane_forest(F):
        raise ValueError("B+ requires plane forest")
    n = F.n
    up1 = [(1 << (n + 1)) - 2]
    up1 += [u << 1 for u in F.up1]
    return DoublePoset._from_masks(n + 1, up1, _natural_up(n + 1))


# -- families and enumeration --------------------------------------------------

DP_ENUMERATION_CAP = 4


class Family(str, Enum):
    """Named families of double posets.

    The first eight tags are the special-poset lattice; the last three are
    the plane incarnations of the plane families (same posets, both orders
    partial), which carry a different pairing.
    """

    DP = "dp"      # all double posets
    SP = "sp"      # special: second order is the natural order
    HOP = "hop"    # heap-ordered: first order increases labels
    OF = "of"      # ordered forests: special with forest diagram
    HOF = "hof"    # heap-ordered forests
    SPP = "spp"    # special plane posets
    SWNP = "swnp"  # special plane posets without N configurations
    SPF = "spf"    # special plane forests
    PP = "pp"      # plane posets
    WNP = "wnp"    # plane posets without N configurations
    PF = "pf"      # plane forests


def max_degree():
    """Enumeration degree bound, configurable via DPOSET_MAX_DEGREE."""
    return int(os.environ.get("DPOSET_MAX_DEGREE", "6"))


def classify(P):
    """The set of proper families containing ``P`` (ambient DP excluded)."""
    tags = set()
    if is_special(P):
        tags.add(Family.SP)
        if is_heap_ordered(P):
            tags.add(Family.HOP)
        if is_ordered_forest(P):
            tags.add(Family.OF)
        if is_heap_forest(P):
            tags.add(Family.HOF)
        spp = is_special_plane(P)
        if spp != is_special_plane_by_pattern(P):
            raise AssertionError("plane membership routes disagree")
        if spp:
            tags.add(Family.SPP)
            if is_special_wn(P):
                tags.add(Family.SWNP)
            if is_special_plane_forest(P):
                tags.add(Family.SPF)
    if is_plane(P):
        tags.add(Family.PP)
        if is_plane_wn(P):
            tags.add(Family.WNP)
        if is_plane_forest(P):
            tags.add(Family.PF)
    return tags


def _mask_sort_key(up):
    return sorted((v + 1, w + 1) for v in range(len(up)) for w in _bits(up[v]))


@lru_cache(maxsize=None)
def _sp_masks(n):
    """All transitively closed strict orders on 1..n, as up-mask tuples.

    Incremental: a closed order on 1..n restricts to one on 1..n-1, plus a
    down-closed set D below the new top label and an up-closed set U above it
    with U contained in every up-set of D.
    """
    if n == 0:
        return ((),)
    out = []
    for up in _sp_masks(n - 1):
        m = n - 1
        down = [0] * m
        for v in range(m):
            for w in _bits(up[v]):
                down[w] |= 1 << v
        for D in range(1 << m):
            ok = True
            common = (1 << m) - 1
            for d in _bits(D):
                if down[d] & ~D:
                    ok = False
                    break
                common &= up[d]
            if not ok:
                continue
            common &= ~D
            sub = common
            while True:
                U = sub
                if all((up[u] & ~U) == 0 for u in _bits(U)):
                    rows = [up[v] | (1 << m) if (D >> v) & 1 else up[v] for v in range(m)]
                    rows.append(U)
                    out.append(tuple(rows))
                if sub == 0:
                    break
                sub = (sub - 1) & common
    out.sort(key=_mask_sort_key)
    return tuple(out)


def _mask_downs(n, up):
    down = [0] * n
    for v in range(n):
        for w in _bits(up[v]):
            down[w] |= 1 << v
    return down


def _mask_is_heap(n, up):
    nat = _natural_up(n)
    return all((up[v] & ~nat[v]) == 0 for v in range(n))


def _mask_is_forest(n, up):
    down = _mask_downs(n, up)
    for v in range(n):
        found = 0
        for u in _bits(down[v]):
            if not (up[u] & down[v]):
                found += 1
                if found > 1:
                    return False
    return True


def _mask_is_spp(n, up):
    if not _mask_is_heap(n, up):
        return False
    nat = _natural_up(n)
    down = _mask_downs(n, up)
    r = [nat[v] & ~(up[v] | down[v]) for v in range(n)]
    for v in range(n):
        for w in _bits(r[v]):
            if r[w] & ~r[v]:
                return False
    return True


def _special(n, up):
    return DoublePoset._from_masks(n, up, _natural_up(n))


def enumerate_family(family, n):
    """All degree-``n`` members of the family, sorted by canonical key.

    Special families come out in their special-poset incarnation; the PP,
    WNP, and PF tags yield the plane incarnations instead.
    """
    family = Family(family)
    n = int(n)
    cap = DP_ENUMERATION_CAP if family is Family.DP else max_degree()
    if n < 0 or n > cap:
        raise ValueError("degree too large")
    masks = _sp_masks(n)
    if family is Family.DP:
        return [
            DoublePoset._from_masks(n, up1, up2)
            for up1, up2 in itertools.product(masks, repeat=2)
        ]
    if family is Family.SP:
        return [_special(n, up) for up in masks]
    if family is Family.HOP:
        return [_special(n, up) for up in masks if _mask_is_heap(n, up)]
    if family is Family.OF:
        return [_special(n, up) for up in masks if _mask_is_forest(n, up)]
    if family is Family.HOF:
        return [
            _special(n, up)
            for up in masks
            if _mask_is_heap(n, up) and _mask_is_forest(n, up)
        ]
    if family is Family.SPP:
        return [_special(n, up) for up in masks if _mask_is_spp(n, up)]
    if family is Family.SWNP:
        return [P for P in enumerate_family(Family.SPP, n) if is_special_wn(P)]
    if family is Family.SPF:
        return [
            _special(n, up)
            for up in masks
            if _mask_is_spp(n, up) and _mask_is_forest(n, up)
        ]
    if family is Family.PP:
        return [plane_version(P) for P in enumerate_family(Family.SPP, n)]
    if family is Family.WNP:
        return [plane_version(P) for P in enumerate_family(Family.SWNP, n)]
    if family is Family.PF:
        return [plane_version(P) for P in enumerate_family(Family.SPF, n)]
    raise ValueError(f"unknown family: {family!r}")
