"""Command-line front end: enumeration, evaluation, verification, reports.

Every verb wraps exactly one library operation.  All numeric output is exact
(fractions and Gaussian rationals rendered as literals).  ``--format`` selects
plain text (one result per line), JSON (objects tagged with a ``kind`` field
matching the schemas shipped under :mod:`dposet.schemas`), or CSV.

Exit codes: 0 on success, 1 on a domain or usage error, 2 when a verification
command finds violations.  Verification failures are printed as re-runnable
command lines with the offending elements in a trailing comment.
"""

import csv
import json
import sys

import click

from .algebra import (
    LinComb,
    coproduct,
    format_lincomb,
    format_scalar,
    gram_matrix,
    lc_product,
    pairing,
    parse_lincomb,
)
from .dupdend import (
    AXIOM_SUITES,
    check_axioms,
    sp_dendriform_coproducts,
    sp_nwarrow,
    spf_prec,
    spf_succ,
    spp_dendriform_coproducts,
)
from .fqsym import Permutation, fq_nwarrow, parse_permutation
from .linalg import (
    ISOMETRY_VARIANTS,
    build_isometry,
    congruence_diagonalize,
    plane_to_special_isometry,
    verify_graded_isometry,
)
from .morphisms import (
    bruhat_interval_check,
    pairing_kernel_basis,
    phi as phi_map,
    psi as psi_map,
    theta as theta_map,
    upsilon as upsilon_map,
)
from .poset_core import Family, classify, enumerate_family, format_poset, parse_poset
from .series import decoration_counts, poincare_series

__all__ = ["main", "run"]


class VerificationFailure(Exception):
    """Raised after a verification report with violations has been printed."""


_FAMILY_CHOICES = tuple(f.value for f in Family)

_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "csv"]),
    default="text",
    show_default=True,
    help="Output format.",
)


def _emit(fmt, payload, text_lines, csv_rows):
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        for row in csv_rows:
            writer.writerow(row)
    else:
        for line in text_lines:
            click.echo(line)


def _scalar_rows(matrix):
    return [[format_scalar(entry) for entry in row] for row in matrix]


def _emit_matrix(fmt, rows):
    rows = _scalar_rows(rows)
    _emit(fmt, {"kind": "matrix", "rows": rows}, [" ".join(r) for r in rows], rows)


def _emit_lincomb(fmt, value):
    lit = format_lincomb(value)
    terms = [
        {"coefficient": format_scalar(c), "key": k.literal()} for k, c in value.terms()
    ]
    _emit(
        fmt,
        {"kind": "lincomb", "value": lit, "terms": terms},
        [lit],
        [["coefficient", "key"], *[[t["coefficient"], t["key"]] for t in terms]],
    )


def _emit_literal(fmt, value):
    _emit(fmt, {"kind": "literal", "value": value}, [value], [["value"], [value]])


def _matrix_argument(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad matrix literal: {exc}") from None
    if not (
        isinstance(data, list)
        and data
        and all(isinstance(row, list) for row in data)
        and all(isinstance(x, int) and not isinstance(x, bool) for row in data for x in row)
    ):
        raise ValueError("matrix must be a JSON array of integer rows")
    return [list(row) for row in data]


def _violation_lines(command, violations, keys):
    def show(value):
        if isinstance(value, list):
            return "[" + " | ".join(str(x) for x in value) + "]"
        return str(value)

    lines = []
    for v in violations:
        detail = " ".join(f"{k}={show(v[k])}" for k in keys if k in v)
        lines.append(f"{command}  # {detail}")
    lines.append("fail")
    return lines


def _violation_csv(violations, keys):
    rows = [list(keys)]
    for v in violations:
        rows.append([json.dumps(v[k]) if isinstance(v.get(k), list) else str(v.get(k, "")) for k in keys])
    return rows


@click.group(name="dposet")
def cli():
    """Exact computations with double posets, permutations, and pairings."""


@cli.command(name="enumerate")
@click.option("--family", required=True, type=click.Choice(_FAMILY_CHOICES))
@click.option("--degree", required=True, type=int)
@_format_option
def enumerate_cmd(family, degree, fmt):
    """List the canonical members of a family at one degree."""
    elements = [format_poset(P) for P in enumerate_family(family, degree)]
    _emit(
        fmt,
        {
            "kind": "elements",
            "family": family,
            "degree": degree,
            "count": len(elements),
            "elements": elements,
        },
        elements,
        [["literal"], *[[e] for e in elements]],
    )


@cli.command(name="classify")
@click.argument("poset")
@_format_option
def classify_cmd(poset, fmt):
    """Name every proper family containing a double poset."""
    P = parse_poset(poset)
    tags = classify(P)
    families = [f.value for f in Family if f in tags]
    _emit(
        fmt,
        {"kind": "classification", "poset": format_poset(P), "families": families},
        families,
        [["family"], *[[f] for f in families]],
    )


_OP_NAMES = ("product", "coproduct", "nwarrow", "prec", "succ", "delta-prec", "delta-succ")
_UNARY_OPS = {"coproduct", "delta-prec", "delta-succ"}


def _is_permutation_comb(x):
    return all(isinstance(key, Permutation) for key in x.support())


def _nwarrow(x, y):
    if _is_permutation_comb(x) and _is_permutation_comb(y):
        out = []
        for p, a in x.terms():
            for q, b in y.terms():
                for key, c in fq_nwarrow(p, q).terms():
                    out.append((key, a * b * c))
        return LinComb(out)
    return sp_nwarrow(x, y)


@cli.command(name="op")
@click.argument("name", type=click.Choice(_OP_NAMES))
@click.argument("operands", nargs=-1)
@click.option(
    "--anchor",
    type=click.Choice(["greatest", "least"]),
    default="greatest",
    show_default=True,
    help="Splitting vertex for delta-prec/delta-succ: the greatest secondary "
    "label (special-poset convention) or the least (plane convention).",
)
@_format_option
def op_cmd(name, operands, anchor, fmt):
    """Apply a product, coproduct, or half operation to combinations."""
    arity = 1 if name in _UNARY_OPS else 2
    if len(operands) != arity:
        raise click.UsageError(f"op {name} takes exactly {arity} operand(s)")
    combs = [parse_lincomb(text) for text in operands]
    if name == "product":
        out = lc_product(*combs)
    elif name == "coproduct":
        out = coproduct(combs[0])
    elif name == "nwarrow":
        out = _nwarrow(*combs)
    elif name == "prec":
        out = spf_prec(*combs)
    elif name == "succ":
        out = spf_succ(*combs)
    else:
        split = (
            sp_dendriform_coproducts if anchor == "greatest" else spp_dendriform_coproducts
        )
        out = split(combs[0])[0 if name == "delta-prec" else 1]
    _emit_lincomb(fmt, out)


@cli.command(name="pair")
@click.argument("left")
@click.argument("right")
@_format_option
def pair_cmd(left, right, fmt):
    """Pair two combinations; prints the exact scalar."""
    value = format_scalar(pairing(parse_lincomb(left), parse_lincomb(right)))
    _emit(fmt, {"kind": "scalar", "value": value}, [value], [["value"], [value]])


@cli.command(name="gram")
@click.option("--family", required=True, type=click.Choice(_FAMILY_CHOICES))
@click.option("--degree", required=True, type=int)
@_format_option
def gram_cmd(family, degree, fmt):
    """Pairing matrix of a family basis at one degree."""
    _emit_matrix(fmt, gram_matrix(family, degree))


@cli.command(name="kernel")
@click.option("--family", required=True, type=click.Choice(_FAMILY_CHOICES))
@click.option("--degree", required=True, type=int)
@_format_option
def kernel_cmd(family, degree, fmt):
    """Basis of the pairing radical of a family at one degree."""
    elements = [format_lincomb(v) for v in pairing_kernel_basis(family, degree)]
    _emit(
        fmt,
        {
            "kind": "elements",
            "family": family,
            "degree": degree,
            "count": len(elements),
            "elements": elements,
        },
        elements,
        [["literal"], *[[e] for e in elements]],
    )


@cli.command(name="theta")
@click.argument("operand")
@_format_option
def theta_cmd(operand, fmt):
    """Sum of linear extensions of a special-poset combination."""
    _emit_lincomb(fmt, theta_map(parse_lincomb(operand)))


@cli.command(name="upsilon")
@click.argument("operand")
@_format_option
def upsilon_cmd(operand, fmt):
    """Heap-ordered-forest rewriting of a special-poset combination."""
    _emit_lincomb(fmt, upsilon_map(parse_lincomb(operand)))


@cli.command(name="phi")
@click.argument("permutation")
@_format_option
def phi_cmd(permutation, fmt):
    """Special plane poset attached to a permutation."""
    _emit_literal(fmt, format_poset(phi_map(parse_permutation(permutation))))


@cli.command(name="psi")
@click.argument("poset")
@_format_option
def psi_cmd(poset, fmt):
    """Permutation attached to a plane poset."""
    _emit_literal(fmt, psi_map(parse_poset(poset)).literal())


@cli.command(name="bruhat-interval")
@click.argument("poset")
@_format_option
def bruhat_interval_cmd(poset, fmt):
    """Whether the linear extensions form a weak-order down-interval."""
    value = bruhat_interval_check(parse_poset(poset))
    text = "true" if value else "false"
    _emit(fmt, {"kind": "bool", "value": value}, [text], [["value"], [text]])


@cli.command(name="diagonalize")
@click.argument("matrix")
@_format_option
def diagonalize_cmd(matrix, fmt):
    """Congruence certificate of a symmetric unimodular integer matrix."""
    cert = congruence_diagonalize(_matrix_argument(matrix))
    payload = {"kind": "certificate", **cert.as_dict()}

    def join(rows):
        return " | ".join(" ".join(str(x) for x in row) for row in rows)

    _emit(
        fmt,
        payload,
        [
            "blocks: " + " ".join(cert.blocks),
            "transform: " + join(cert.transform),
            "block-matrix: " + join(cert.block_matrix),
        ],
        [
            ["section", "row"],
            ["blocks", " ".join(cert.blocks)],
            *[["transform", " ".join(str(x) for x in row)] for row in cert.transform],
            *[["block_matrix", " ".join(str(x) for x in row)] for row in cert.block_matrix],
        ],
    )


@cli.group(name="isometry")
def isometry_group():
    """Isometries between integer pairing matrices."""


@isometry_group.command(name="build")
@click.argument("source_gram")
@click.argument("target_gram")
@_format_option
def isometry_build_cmd(source_gram, target_gram, fmt):
    """Gaussian-rational S with S^T A S = B for unimodular symmetric A, B."""
    S = build_isometry(_matrix_argument(source_gram), _matrix_argument(target_gram))
    _emit_matrix(fmt, S)


_ISO_KEYS = ("check", "degree", "elements", "expected", "got")


@isometry_group.command(name="verify")
@click.option(
    "--variant",
    type=click.Choice(ISOMETRY_VARIANTS),
    default="derived",
    show_default=True,
)
@click.option("--max-degree", type=int, default=2, show_default=True)
@_format_option
def isometry_verify_cmd(variant, max_degree, fmt):
    """Check the plane-to-special isometry tables degree by degree."""
    spec = plane_to_special_isometry(max_degree=max_degree, variant=variant)
    report = verify_graded_isometry(spec, max_degree)
    payload = {"kind": "isometry_report", **report}
    if report["ok"]:
        _emit(fmt, payload, ["pass"], _violation_csv([], _ISO_KEYS))
        return
    command = f"dposet isometry verify --variant {variant} --max-degree {max_degree}"
    _emit(
        fmt,
        payload,
        _violation_lines(command, report["violations"], _ISO_KEYS),
        _violation_csv(report["violations"], _ISO_KEYS),
    )
    raise VerificationFailure(command)


@cli.command(name="decorations")
@click.option("--family", required=True, type=click.Choice(_FAMILY_CHOICES))
@click.option("--order", type=int, default=5, show_default=True)
@_format_option
def decorations_cmd(family, order, fmt):
    """Generator counts of a family modeled as decorated plane forests."""
    counts = decoration_counts(family, order)
    poincare = poincare_series(family, order)
    decorations = [format_scalar(c) for c in counts.coefficients]
    _emit(
        fmt,
        {
            "kind": "series",
            "family": family,
            "order": order,
            "poincare": [format_scalar(c) for c in poincare.coefficients],
            "decorations": decorations,
        },
        [" ".join(decorations)],
        [["degree", "count"], *[[str(i), c] for i, c in enumerate(decorations)]],
    )


_SUITE_KEYS = ("axiom", "elements", "expected", "got")


@cli.command(name="verify")
@click.option("--suite", required=True, type=click.Choice(AXIOM_SUITES))
@click.option("--max-degree", type=int, default=4, show_default=True)
@_format_option
def verify_cmd(suite, max_degree, fmt):
    """Run one axiom suite exhaustively through a total degree."""
    report = check_axioms(suite, max_degree=max_degree)
    ok = not report["violations"]
    payload = {"kind": "suite_report", "ok": ok, **report}
    if ok:
        _emit(fmt, payload, ["pass"], _violation_csv([], _SUITE_KEYS))
        return
    command = f"dposet verify --suite {suite} --max-degree {max_degree}"
    _emit(
        fmt,
        payload,
        _violation_lines(command, report["violations"], _SUITE_KEYS),
        _violation_csv(report["violations"], _SUITE_KEYS),
    )
    raise VerificationFailure(command)


def run(argv=None):
    """Execute one CLI invocation and return its exit code."""
    try:
        cli.main(args=argv, prog_name="dposet", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except VerificationFailure:
        return 2
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
