"""Command-line front end.

    centralizers jordan --input A.json
    centralizers centralizer --input A.json [--view striped] [--format text]
    centralizers dim --input A.json
    centralizers contains --a A.json --b B.json
    centralizers decompose --input A.json
    centralizers pi-check --input A.json [--trials 100] [--seed 0]
    centralizers verify-all [--seed 0] [--count 10]

Matrix documents look like {"field": {"kind": "prime", "p": 5}, "rows": [[0, 1], [0, 0]]}.
One JSON report goes to stdout. Exit codes: 0 success, 1 input/parse error,
2 domain error (report carries the error), 3 verify-all found a failure.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .centralizer import (
    bound_check, centralizer_basis, containment, dim_formula, striped_view,
)
from .errors import DomainError
from .exactalg import FieldSpec, Matrix, commutant_oracle
from .jordan import block_profile, is_indecomposable, is_nilpotent, jordan_base, nilpotency_index
from .picheck import DegreeCapExceeded, fuzz_identity
from .spectral import centralizer_dim_total, decompose, pi_degree_bound
from .verify import verify_all

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class InputError(Exception):
    pass


def load_matrix(path, field_override=None) -> tuple[Matrix, dict]:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    return parse_document(doc, field_override, source=path)


def parse_document(doc, field_override=None, source="<input>"):
    try:
        if not isinstance(doc, dict) or "rows" not in doc:
            raise ValueError("expected an object with 'field' and 'rows'")
        if field_override is not None:
            field = field_override
        else:
            if "field" not in doc:
                raise ValueError("missing 'field'")
            field = FieldSpec.from_json(doc["field"])
        rows = doc["rows"]
        if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
            raise ValueError("'rows' must be a nonempty list of lists")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("'rows' is not rectangular")
        for r in rows:
            for x in r:
                if isinstance(x, bool) or not isinstance(x, (int, str)):
                    raise ValueError(f"bad entry {x!r}")
                if field.is_prime and isinstance(x, str):
                    raise ValueError(f"prime field entries must be integers, got {x!r}")
        A = Matrix(field, rows)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"{source}: {exc}") from exc
    if not A.is_square:
        raise InputError(f"{source}: matrix must be square, got {A.shape}")
    canon = {"field": field.describe(), "rows": A.to_rows()}
    return A, canon


def _poly_json(p):
    return None if p is None else p.to_json()


# -- commands ------------------------------------------------------------


def cmd_jordan(A, args):
    base = jordan_base(A)
    return {
        "field": A.field.describe(),
        "dimension": A.rows,
        "nilpotency_index": nilpotency_index(A),
        "profile": list(block_profile(base)),
        "indecomposable": is_indecomposable(A),
        "chains": [[v.to_list() for v in chain] for chain in base.chains],
    }


def cmd_centralizer(A, args):
    base = jordan_base(A)
    cb = centralizer_basis(base)
    elements = []
    for d, g, i, M in cb:
        shown = striped_view(base, M) if args.view == "striped" else M
        elements.append({"delta": d, "gamma": g, "power": i, "matrix": shown.to_rows()})
    return {
        "profile": list(block_profile(base)),
        "dimension": len(cb),
        "view": args.view,
        "elements": elements,
    }


def cmd_dim(A, args):
    if is_nilpotent(A):
        base = jordan_base(A)
        dim, bound = bound_check(base)
        return {
            "nilpotent": True,
            "profile": list(block_profile(base)),
            "dimension": dim,
            "bound": bound,
            "dim_formula": dim_formula(block_profile(base)),
        }
    dec = decompose(A)
    return {
        "nilpotent": False,
        "profiles": [list(p) for p in dec.profiles()],
        "dimension": centralizer_dim_total(dec),
        "bound": None,
    }


def cmd_contains(A, B, args):
    res = containment(A, B)
    return {
        "contained": res.contained,
        "certificate": None if res.certificate is None else res.certificate.display(),
        "certificate_coeffs": None if res.certificate is None
        else _poly_json(res.certificate)["coeffs"],
    }


def cmd_decompose(A, args):
    dec = decompose(A)
    F = A.field
    comps = []
    for lam, V, N, m, r, prof in zip(dec.eigenvalues, dec.spaces, dec.restricted_nilpotents,
                                     dec.geometric_mults, dec.fitting_exponents,
                                     dec.profiles()):
        comps.append({
            "eigenvalue": F.to_json(lam.value),
            "algebraic_multiplicity": V.cols,
            "geometric_multiplicity": m,
            "fitting_exponent": r,
            "profile": list(prof),
            "space_basis": [v.to_list() for v in V.columns()],
            "restricted_nilpotent": N.to_rows(),
        })
    return {
        "eigenvalues": [F.to_json(lam.value) for lam in dec.eigenvalues],
        "components": comps,
        "centralizer_dimension": centralizer_dim_total(dec),
        "pi_degree_bound": pi_degree_bound(dec),
    }


def cmd_pi_check(A, args):
    dec = decompose(A)
    degree = pi_degree_bound(dec)
    if is_nilpotent(A):
        basis, source = centralizer_basis(jordan_base(A)).matrices, "centralizer_basis"
    else:
        basis, source = commutant_oracle(A), "commutant_oracle"
    report = fuzz_identity(basis, degree, args.trials, args.seed, args.max_degree)
    return {"basis_source": source, "basis_size": len(basis), "report": report.to_json()}


def cmd_verify_all(args):
    summary = verify_all(args.seed, args.count)
    failed = sum(v["failed"] for v in summary.values())
    return {"seed": args.seed, "count": args.count, "checks": summary,
            "total_failed": failed, "ok": failed == 0}


# -- plumbing ------------------------------------------------------------


def make_report(command, inputs, options, results):
    digest_src = json.dumps({"inputs": inputs, "options": options}, sort_keys=True)
    return {
        "command": command,
        "inputs_digest": hashlib.sha256(digest_src.encode()).hexdigest(),
        "results": results,
        "version": __version__,
    }


def render_text(report) -> str:
    lines = [f"{report['command']} (v{report['version']}) digest {report['inputs_digest'][:12]}"]

    def is_grid(v):
        return isinstance(v, list) and v and all(isinstance(r, list) for r in v) \
            and all(not isinstance(x, (list, dict)) for r in v for x in r)

    def emit(key, value, indent):
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k in sorted(value):
                emit(k, value[k], indent + 1)
        elif is_grid(value):
            lines.append(f"{pad}{key}:")
            width = max(len(str(x)) for r in value for x in r)
            for r in value:
                lines.append(pad + "  [" + " ".join(str(x).rjust(width) for x in r) + "]")
        elif isinstance(value, list) and value and all(isinstance(x, dict) for x in value):
            lines.append(f"{pad}{key}:")
            for i, item in enumerate(value):
                emit(f"[{i}]", item, indent + 1)
        else:
            lines.append(f"{pad}{key}: {json.dumps(value)}")

    for k in sorted(report["results"]):
        emit(k, report["results"][k], 1)
    return "\n".join(lines)


def build_parser():
    p = argparse.ArgumentParser(prog="centralizers", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="override the document field: 'rational' or 'prime:P'")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--max-degree", type=int, default=8)
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("jordan", "centralizer", "dim", "decompose", "pi-check"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--input", required=True)
        if name == "centralizer":
            sp.add_argument("--view", choices=("standard", "striped"), default="standard")
    sp = sub.add_parser("contains", parents=[common])
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp = sub.add_parser("verify-all", parents=[common])
    sp.add_argument("--count", type=int, default=10)
    return p


SINGLE = {
    "jordan": cmd_jordan,
    "centralizer": cmd_centralizer,
    "dim": cmd_dim,
    "decompose": cmd_decompose,
    "pi-check": cmd_pi_check,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    options = {k: v for k, v in sorted(vars(args).items())
               if k not in ("input", "a", "b", "format", "command")}
    try:
        override = FieldSpec.parse(args.field) if args.field else None
        if args.command == "verify-all":
            inputs = []
        elif args.command == "contains":
            A, da = load_matrix(args.a, override)
            B, db = load_matrix(args.b, override)
            if A.field != B.field or A.shape != B.shape:
                raise InputError("--a and --b must share field and size")
            inputs = [da, db]
        else:
            A, da = load_matrix(args.input, override)
            inputs = [da]
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT

    code = EXIT_OK
    try:
        if args.command == "verify-all":
            results = cmd_verify_all(args)
            if not results["ok"]:
                print(f"verify-all: {results['total_failed']} failing instance(s)", file=stderr)
                code = EXIT_VERIFY
        elif args.command == "contains":
            results = cmd_contains(A, B, args)
        else:
            results = SINGLE[args.command](A, args)
    except (DomainError, DegreeCapExceeded) as exc:
        payload = exc.payload() if isinstance(exc, DomainError) else \
            {"type": "DegreeCapExceeded", "message": str(exc)}
        results = {"error": payload}
        print(f"{payload['type']}: {payload['message']}", file=stderr)
        code = EXIT_DOMAIN

    report = make_report(args.command, inputs, options, results)
    if args.format == "text":
        print(render_text(report), file=stdout)
    else:
        print(json.dumps(report, sort_keys=True, indent=2), file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
