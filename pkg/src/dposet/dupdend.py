"""Duplicial and dendriform structures on poset spaces.

- ``sp_nwarrow``: the northwest graft, bilinear on the augmentation ideal of
  special posets; together with composition it is a duplicial algebra.
- ``sp_dendriform_coproducts``: the reduced coproduct split by whether the
  vertex with the greatest label lands in the ideal; a dendriform coalgebra
  compatible with the duplicial products.
- ``spp_dendriform_coproducts``: the analogous split on special plane posets
  by the vertex with the least label; a codendriform structure.
- ``spf_prec`` / ``spf_succ``: dendriform half-products on special plane
  forests, defined recursively from grafting onto a new root; adjoint to the
  split coproducts under the picture pairing.
- ``prim_tot_basis``: totally primitive elements (both split coproducts
  vanish) of the forest space, dimension 1 in degree 1 and 0 beyond.
- ``check_axioms``: exhaustive verification of the axiom systems on basis
  tuples up to a degree bound, reported as exact-equality violation lists.
"""

from functools import lru_cache

from .algebra import (
    LinComb,
    Tensor,
    as_lincomb,
    format_lincomb,
    key_degree,
    lc_product,
    pairing,
    reduced_coproduct,
    require_augmented,
    tensor_of,
)
from .fqsym import fq_dendriform_coproducts, fq_nwarrow
from .linalg import rank_kernel
from .morphisms import theta
from .poset_core import (
    compose,
    enumerate_family,
    ideals,
    is_special,
    is_special_plane,
    is_special_plane_forest,
    nwarrow,
    restrict,
    b_plus,
)

__all__ = [
    "AXIOM_SUITES",
    "check_axioms",
    "prim_tot_basis",
    "sp_dendriform_coproducts",
    "sp_nwarrow",
    "spf_prec",
    "spf_succ",
    "spp_dendriform_coproducts",
]


# -- duplicial product ------------------------------------------------------------


def sp_nwarrow(x, y):
    """Bilinear extension of the northwest graft to special posets."""
    x = require_augmented(x)
    y = require_augmented(y)
    out = LinComb()
    for P, a in x.terms():
        for Q, b in y.terms():
            out = out + LinComb(((nwarrow(P, Q), a * b),))
    return out


# -- split coproducts -------------------------------------------------------------


def _split_coproducts(x, anchor, check, failure):
    prec = LinComb()
    succ = LinComb()
    for P, c in require_augmented(x).terms():
        if not check(P):
            raise ValueError(failure)
        n = P.n
        labels = frozenset(range(1, n + 1))
        pivot = anchor(P)
        for ideal in ideals(P):
            if not 0 < len(ideal) < n:
                continue
            term = LinComb(
                ((Tensor(restrict(P, labels - ideal), restrict(P, ideal)), c),)
            )
            if pivot in ideal:
                succ = succ + term
            else:
                prec = prec + term
    return prec, succ


def sp_dendriform_coproducts(x):
    """Reduced coproduct of special posets split by the position of the
    vertex with the greatest label: ``(prec, succ)`` with ``prec`` the ideals
    avoiding it and ``succ`` the ideals containing it."""
    return _split_coproducts(x, lambda P: P.n, is_special, "not a special poset")


def spp_dendriform_coproducts(x):
    """Reduced coproduct of special plane posets split by the position of
    the vertex with the least label: ``(prec, succ)`` with ``prec`` the
    ideals avoiding it and ``succ`` the ideals containing it."""
    return _split_coproducts(
        x, lambda P: 1, is_special_plane, "not a special plane poset"
    )


# -- dendriform half-products on special plane forests ----------------------------


@lru_cache(maxsize=None)
def _first_tree_size(F):
    reach = 1
    while True:
        grown = reach
        for v in range(F.n):
            if (reach >> v) & 1:
                grown |= F.up1[v] | F.down1[v]
        if grown == reach:
            break
        reach = grown
    return reach.bit_length()


@lru_cache(maxsize=None)
def _prec_basis(F, G):
    k = _first_tree_size(F)
    if k == F.n:
        under_root = restrict(F, range(2, F.n + 1))
        return LinComb.basis(b_plus(compose(under_root, G)))
    first = restrict(F, range(1, k + 1))
    rest = restrict(F, range(k + 1, F.n + 1))
    out = _prec_basis(first, compose(rest, G))
    for Z, c in _prec_basis(rest, G).terms():
        out = out + (LinComb.basis(compose(first, Z)) - _prec_basis(first, Z)) * c
    return out


def _forest_ideal(x):
    x = require_augmented(x)
    for P in x.support():
        if not is_special_plane_forest(P):
            raise ValueError("not a special plane forest")
    return x


def spf_prec(x, y):
    """Left half-product on special plane forests.

    For a single tree ``B+(F)``, ``B+(F) prec G = B+(F G)``; a multi-tree
    forest splits off its first tree ``t``: ``(t F) prec G =
    t prec (F G) + t succ (F prec G)``.
    """
    x = _forest_ideal(x)
    y = _forest_ideal(y)
    out = LinComb()
    for F, a in x.terms():
        for G, b in y.terms():
            out = out + _prec_basis(F, G) * (a * b)
    return out


def spf_succ(x, y):
    """Right half-product on special plane forests: composition minus the
    left half-product, termwise."""
    x = _forest_ideal(x)
    y = _forest_ideal(y)
    return lc_product(x, y) - spf_prec(x, y)


# -- totally primitive elements ---------------------------------------------------


def prim_tot_basis(n):
    """Basis of the intersection of the kernels of the two split coproducts
    on the degree-``n`` span of special plane forests."""
    n = int(n)
    basis = enumerate_family("spf", n)
    if n == 0:
        return []
    columns = []
    keys = {}
    for F in basis:
        prec, succ = spp_dendriform_coproducts(LinComb.basis(F))
        entries = {}
        for tag, half in (("prec", prec), ("succ", succ)):
            for T, c in half.terms():
                keys.setdefault((tag, T), len(keys))
                entries[(tag, T)] = c
        columns.append(entries)
    matrix = [
        [col.get(key, 0) for col in columns]
        for key, _ in sorted(keys.items(), key=lambda item: item[1])
    ]
    if not matrix:
        matrix = [[0] * len(basis)]
    _, kernel = rank_kernel(matrix)
    return [LinComb(zip(basis, vec)) for vec in kernel]


# -- axiom suites -----------------------------------------------------------------

AXIOM_SUITES = (
    "duplicial",
    "dendriform-coalgebra",
    "dupdend-compat",
    "codendriform",
    "dendriform-hopf",
    "bidendriform",
    "lemma36-adjunction",
    "theta-dupdend",
)


def _basis_lc(P):
    return LinComb.basis(P)


def _graded(family, max_degree):
    return {n: enumerate_family(family, n) for n in range(1, max_degree + 1)}


def _pairs(family, max_degree):
    grades = _graded(family, max_degree)
    for a in range(1, max_degree):
        for b in range(1, max_degree - a + 1):
            for P in grades[a]:
                for Q in grades[b]:
                    yield P, Q


def _triples(family, max_degree):
    grades = _graded(family, max_degree)
    for a in range(1, max_degree - 1):
        for b in range(1, max_degree - a):
            for c in range(1, max_degree - a - b + 1):
                for P in grades[a]:
                    for Q in grades[b]:
                        for R in grades[c]:
                            yield P, Q, R


def _span(tens, left, right):
    """Sum of left(a) (x) right(b) over the terms a (x) b of ``tens``."""
    out = LinComb()
    for T, c in as_lincomb(tens).terms():
        a, b = T.factors
        out = out + tensor_of(left(a), right(b)) * c
    return out


def _mix(tx, ty, left, right):
    """Sum of left(a, u) (x) right(b, v) over terms a (x) b of ``tx`` and
    u (x) v of ``ty``."""
    out = LinComb()
    for Tx, c in as_lincomb(tx).terms():
        a, b = Tx.factors
        for Ty, d in as_lincomb(ty).terms():
            u, v = Ty.factors
            out = out + tensor_of(left(a, u), right(b, v)) * (c * d)
    return out


def _slotwise(tens, slot, op):
    out = LinComb()
    for T, c in as_lincomb(tens).terms():
        img = as_lincomb(op(T.factors[slot]))
        for key, d in img.terms():
            parts = key.factors if isinstance(key, Tensor) else (key,)
            factors = T.factors[:slot] + parts + T.factors[slot + 1 :]
            out = out + LinComb(((Tensor(*factors), c * d),))
    return out


def _tensor_pairing(u, v):
    total = 0
    for Tu, c in as_lincomb(u).terms():
        for Tv, d in as_lincomb(v).terms():
            if len(Tu.factors) != len(Tv.factors):
                continue
            prod = c * d
            for a, b in zip(Tu.factors, Tv.factors):
                if not prod:
                    break
                prod = prod * pairing(_basis_lc(a), _basis_lc(b))
            total = total + prod
    return total


def _record(violations, axiom, elements, expected, got):
    def show(value):
        if isinstance(value, LinComb):
            return format_lincomb(value)
        return str(value)

    violations.append(
        {
            "axiom": axiom,
            "elements": [e.literal() for e in elements],
            "expected": show(expected),
            "got": show(got),
        }
    )


def _check_duplicial(max_degree, violations):
    checked = 0
    for P, Q, R in _triples("sp", max_degree):
        x, y, z = _basis_lc(P), _basis_lc(Q), _basis_lc(R)
        cases = (
            ("associativity", (x * y) * z, x * (y * z)),
            ("nwarrow-associativity", sp_nwarrow(sp_nwarrow(x, y), z), sp_nwarrow(x, sp_nwarrow(y, z))),
            ("product-nwarrow", sp_nwarrow(x * y, z), x * sp_nwarrow(y, z)),
        )
        for name, lhs, rhs in cases:
            checked += 1
            if lhs != rhs:
                _record(violations, name, (P, Q, R), rhs, lhs)
    return checked


def _coalgebra_cases(P, delta_pair):
    prec, succ = delta_pair(_basis_lc(P))
    tilde = prec + succ
    d_prec = lambda a: delta_pair(_basis_lc(a))[0]
    d_succ = lambda a: delta_pair(_basis_lc(a))[1]
    d_tilde = lambda a: reduced_coproduct(_basis_lc(a))
    return (
        ("coassociativity-prec", _slotwise(prec, 0, d_prec), _slotwise(prec, 1, d_tilde)),
        ("coassociativity-mixed", _slotwise(prec, 0, d_succ), _slotwise(succ, 1, d_prec)),
        ("coassociativity-succ", _slotwise(succ, 0, d_tilde), _slotwise(succ, 1, d_succ)),
    )


def _check_dendriform_coalgebra(max_degree, violations):
    checked = 0
    homes = (
        ("sp", sp_dendriform_coproducts),
        ("spp", spp_dendriform_coproducts),
    )
    for family, delta_pair in homes:
        for n in range(1, max_degree + 1):
            for P in enumerate_family(family, n):
                for name, lhs, rhs in _coalgebra_cases(P, delta_pair):
                    checked += 1
                    if lhs != rhs:
                        _record(violations, f"{family}:{name}", (P,), rhs, lhs)
    return checked


def _check_dupdend_compat(max_degree, violations):
    checked = 0
    for P, Q in _pairs("sp", max_degree):
        x, y = _basis_lc(P), _basis_lc(Q)
        dx = reduced_coproduct(x)
        dy = reduced_coproduct(y)
        px, sx = sp_dendriform_coproducts(x)
        py, sy = sp_dendriform_coproducts(y)
        pt_xy = tensor_of(y, x)
        cases = (
            (
                "product-prec",
                sp_dendriform_coproducts(x * y)[0],
                tensor_of(Q, P)
                + _span(py, lambda a: a, lambda b: compose(P, b))
                + _span(py, lambda a: compose(P, a), lambda b: b)
                + _span(dx, lambda a: compose(a, Q), lambda b: b)
                + _mix(dx, py, lambda a, u: compose(a, u), lambda b, v: compose(b, v)),
            ),
            (
                "product-succ",
                sp_dendriform_coproducts(x * y)[1],
                tensor_of(P, Q)
                + _span(sy, lambda a: compose(P, a), lambda b: b)
                + _span(sy, lambda a: a, lambda b: compose(P, b))
                + _span(dx, lambda a: a, lambda b: compose(b, Q))
                + _mix(dx, sy, lambda a, u: compose(a, u), lambda b, v: compose(b, v)),
            ),
            (
                "nwarrow-prec",
                sp_dendriform_coproducts(sp_nwarrow(x, y))[0],
                _span(py, lambda a: nwarrow(P, a), lambda b: b)
                + _span(px, lambda a: nwarrow(a, Q), lambda b: b)
                + _mix(px, py, lambda a, u: nwarrow(a, u), lambda b, v: compose(b, v)),
            ),
            (
                "nwarrow-succ",
                sp_dendriform_coproducts(sp_nwarrow(x, y))[1],
                tensor_of(P, Q)
                + _span(sy, lambda a: nwarrow(P, a), lambda b: b)
                + _span(sx, lambda a: a, lambda b: nwarrow(b, Q))
                + _span(px, lambda a: a, lambda b: compose(b, Q))
                + _mix(px, sy, lambda a, u: nwarrow(a, u), lambda b, v: compose(b, v)),
            ),
        )
        for name, lhs, rhs in cases:
            checked += 1
            if lhs != rhs:
                _record(violations, name, (P, Q), rhs, lhs)
    return checked


def _check_codendriform(max_degree, violations):
    checked = 0
    for P, Q in _pairs("spp", max_degree):
        x, y = _basis_lc(P), _basis_lc(Q)
        dx = reduced_coproduct(x)
        dy = reduced_coproduct(y)
        px, sx = spp_dendriform_coproducts(x)
        cases = (
            (
                "coproduct-prec-of-product",
                spp_dendriform_coproducts(x * y)[0],
                tensor_of(P, Q)
                + _span(px, lambda a: compose(a, Q), lambda b: b)
                + _span(px, lambda a: a, lambda b: compose(b, Q))
                + _span(dy, lambda a: compose(P, a), lambda b: b)
                + _mix(px, dy, lambda a, u: compose(a, u), lambda b, v: compose(b, v)),
            ),
            (
                "coproduct-succ-of-product",
                spp_dendriform_coproducts(x * y)[1],
                tensor_of(Q, P)
                + _span(sx, lambda a: compose(a, Q), lambda b: b)
                + _span(sx, lambda a: a, lambda b: compose(b, Q))
                + _span(dy, lambda a: a, lambda b: compose(P, b))
                + _mix(sx, dy, lambda a, u: compose(a, u), lambda b, v: compose(b, v)),
            ),
        )
        for name, lhs, rhs in cases:
            checked += 1
            if lhs != rhs:
                _record(violations, name, (P, Q), rhs, lhs)
    return checked


def _check_dendriform_hopf(max_degree, violations):
    checked = 0
    for P, Q in _pairs("spf", max_degree):
        x, y = _basis_lc(P), _basis_lc(Q)
        dx = reduced_coproduct(x)
        dy = reduced_coproduct(y)
        prec = lambda a, b: spf_prec(_basis_lc(a), _basis_lc(b))
        succ = lambda a, b: spf_succ(_basis_lc(a), _basis_lc(b))
        cases = (
            (
                "reduced-coproduct-of-prec",
                reduced_coproduct(spf_prec(x, y)),
                tensor_of(P, Q)
                + _span(dy, lambda a: prec(P, a), lambda b: b)
                + _span(dx, lambda a: a, lambda b: compose(b, Q))
                + _span(dx, lambda a: prec(a, Q), lambda b: b)
                + _mix(dx, dy, lambda a, u: prec(a, u), lambda b, v: compose(b, v)),
            ),
            (
                "reduced-coproduct-of-succ",
                reduced_coproduct(spf_succ(x, y)),
                tensor_of(Q, P)
                + _span(dy, lambda a: succ(P, a), lambda b: b)
                + _span(dy, lambda a: a, lambda b: compose(P, b))
                + _span(dx, lambda a: succ(a, Q), lambda b: b)
                + _mix(dx, dy, lambda a, u: succ(a, u), lambda b, v: compose(b, v)),
            ),
        )
        for name, lhs, rhs in cases:
            checked += 1
            if lhs != rhs:
                _record(violations, name, (P, Q), rhs, lhs)
    return checked


def _check_bidendriform(max_degree, violations):
    checked = 0
    for P, Q in _pairs("spf", max_degree):
        x, y = _basis_lc(P), _basis_lc(Q)
        dy = reduced_coproduct(y)
        px, sx = spp_dendriform_coproducts(x)
        prec = lambda a, b: spf_prec(_basis_lc(a), _basis_lc(b))
        succ = lambda a, b: spf_succ(_basis_lc(a), _basis_lc(b))
        lhs_pp, lhs_sp = spp_dendriform_coproducts(spf_prec(x, y))
        lhs_ps, lhs_ss = spp_dendriform_coproducts(spf_succ(x, y))
        cases = (
            (
                "prec-of-prec",
                lhs_pp,
                tensor_of(P, Q)
                + _span(dy, lambda a: prec(P, a), lambda b: b)
                + _span(px, lambda a: a, lambda b: compose(b, Q))
                + _span(px, lambda a: prec(a, Q), lambda b: b)
                + _mix(px, dy, lambda a, u: prec(a, u), lambda b, v: compose(b, v)),
            ),
            (
                "succ-of-prec",
                lhs_sp,
                _span(sx, lambda a: a, lambda b: compose(b, Q))
                + _span(sx, lambda a: prec(a, Q), lambda b: b)
                + _mix(sx, dy, lambda a, u: prec(a, u), lambda b, v: compose(b, v)),
            ),
            (
                "prec-of-succ",
                lhs_ps,
                _span(px, lambda a: succ(a, Q), lambda b: b)
                + _span(dy, lambda a: succ(P, a), lambda b: b)
                + _mix(px, dy, lambda a, u: succ(a, u), lambda b, v: compose(b, v)),
            ),
            (
                "succ-of-succ",
                lhs_ss,
                tensor_of(Q, P)
                + _span(dy, lambda a: a, lambda b: compose(P, b))
                + _span(sx, lambda a: succ(a, Q), lambda b: b)
                + _mix(sx, dy, lambda a, u: succ(a, u), lambda b, v: compose(b, v)),
            ),
        )
        for name, lhs, rhs in cases:
            checked += 1
            if lhs != rhs:
                _record(violations, name, (P, Q), rhs, lhs)
    return checked


def _check_lemma36(max_degree, violations):
    checked = 0
    grades = _graded("spf", max_degree)
    for a in range(1, max_degree):
        for b in range(1, max_degree - a + 1):
            for P in grades[a]:
                for Q in grades[b]:
                    x, y = _basis_lc(P), _basis_lc(Q)
                    xy = tensor_of(P, Q)
                    for R in grades[a + b]:
                        z = _basis_lc(R)
                        pz, sz = spp_dendriform_coproducts(z)
                        cases = (
                            ("prec-adjunction", pairing(spf_prec(x, y), z), _tensor_pairing(xy, pz)),
                            ("succ-adjunction", pairing(spf_succ(x, y), z), _tensor_pairing(xy, sz)),
                        )
                        for name, lhs, rhs in cases:
                            checked += 1
                            if lhs != rhs:
                                _record(violations, name, (P, Q, R), rhs, lhs)
    return checked


def _fq_nwarrow_lc(x, y):
    out = LinComb()
    for p, a in as_lincomb(x).terms():
        for q, b in as_lincomb(y).terms():
            out = out + fq_nwarrow(p, q) * (a * b)
    return out


def _fq_split_lc(x):
    prec = LinComb()
    succ = LinComb()
    for p, c in as_lincomb(x).terms():
        fp, fs = fq_dendriform_coproducts(p)
        prec = prec + fp * c
        succ = succ + fs * c
    return prec, succ


def _push_theta(tens):
    return _slotwise(_slotwise(tens, 0, lambda k: theta(_basis_lc(k))), 1, lambda k: theta(_basis_lc(k)))


def _check_theta_dupdend(max_degree, violations):
    checked = 0
    for P, Q in _pairs("sp", max_degree):
        x, y = _basis_lc(P), _basis_lc(Q)
        checked += 1
        lhs = theta(sp_nwarrow(x, y))
        rhs = _fq_nwarrow_lc(theta(x), theta(y))
        if lhs != rhs:
            _record(violations, "theta-nwarrow", (P, Q), rhs, lhs)
    for n in range(1, max_degree + 1):
        for P in enumerate_family("sp", n):
            x = _basis_lc(P)
            prec, succ = sp_dendriform_coproducts(x)
            fq_prec, fq_succ = _fq_split_lc(theta(x))
            cases = (
                ("theta-coproduct-prec", _push_theta(prec), fq_prec),
                ("theta-coproduct-succ", _push_theta(succ), fq_succ),
            )
            for name, lhs, rhs in cases:
                checked += 1
                if lhs != rhs:
                    _record(violations, name, (P,), rhs, lhs)
    return checked


_SUITE_RUNNERS = {
    "duplicial": _check_duplicial,
    "dendriform-coalgebra": _check_dendriform_coalgebra,
    "dupdend-compat": _check_dupdend_compat,
    "codendriform": _check_codendriform,
    "dendriform-hopf": _check_dendriform_hopf,
    "bidendriform": _check_bidendriform,
    "lemma36-adjunction": _check_lemma36,
    "theta-dupdend": _check_theta_dupdend,
}


def check_axioms(suite, max_degree=4):
    """Evaluate both sides of every axiom of a suite on all basis tuples up
    to total degree ``max_degree``; the report lists exact-equality
    violations."""
    if suite not in _SUITE_RUNNERS:
        raise ValueError(f"unknown suite id: {suite}")
    max_degree = int(max_degree)
    violations = []
    checked = _SUITE_RUNNERS[suite](max_degree, violations)
    return {
        "suite": suite,
        "degree": max_degree,
        "tuples_checked": checked,
        "violations": violations,
    }
