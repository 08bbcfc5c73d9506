"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .battery import random_gamma
from .embed import load_reductive, pentad_from_reductive, sl2_pentad
from .graded import (LocalPartError, contragredient, extend, load_cartan,
                     local_from_cartan, local_from_pentad, reduced_contragredient,
                     verify_antisymmetry, verify_jacobi, verify_transitivity,
                     cartan_from_dict)
from .linalg import LinalgError, format_scalar, parse_scalar
from .oracle import DEFAULT_GUARD, OracleGuardError, oracle_dims
from .pentad import CartanPentad, PentadError, lemma1, load_pentad
from .structure import (decompose, gamma_invariance, verify_corollary,
                        verify_invertible_shortcut, verify_lemma2, verify_lemma3,
                        verify_theorem2)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CHECKS = ("jacobi", "transitivity", "theorem2", "lemma2", "lemma3", "gamma_invariance")


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _vec(v) -> str:
    return "(" + ", ".join(format_scalar(x) for x in v) + ")"


def _dims_text(dims: dict, N: int) -> list:
    lines = ["|deg|  dim(+)  dim(-)"]
    lines.append(f"{0:>5}  {dims[0]:>6}")
    for m in range(1, N + 1):
        lines.append(f"{m:>5}  {dims[m]:>6}  {dims[-m]:>6}")
    return lines


def cmd_analyze(args) -> int:
    p = load_pentad(args.file)
    l1 = lemma1(p)
    rep = decompose(p)
    if args.json:
        print(_dump({"pentad": p.to_dict(), "lemma1": l1.to_dict(),
                     "structure": rep.to_dict()}))
        return EXIT_OK
    out = [f"pentad P(r={p.r}, n={p.n})",
           f"C = {rep.cartan}",
           f"rank D = {l1.rank_D}, rank C = {l1.rank_C}",
           f"dim [V-1,V1] = {l1.dim_bracket}, dim Ann = {l1.dim_ann}, "
           f"dim intersection = {l1.dim_intersection}",
           "dims (U0', z, Delta) = (%d, %d, %d)" % rep.dims]
    for name, basis in (("U0'", rep.basis_U0prime), ("z", rep.basis_z),
                        ("Delta", rep.basis_Delta)):
        out.append(f"  {name}: " + (", ".join(_vec(v) for v in basis) or "-"))
    out.append(f"C invertible: {rep.shortcut_invertible}")
    out.append(f"r = rank D = rank C: {rep.shortcut_corollary}")
    print("\n".join(out))
    return EXIT_OK


def cmd_construct(args) -> int:
    p = load_pentad(args.file)
    G = extend(local_from_pentad(p), args.max_degree)
    rep = decompose(p)
    if args.json:
        out = {**G.graded_dims(), "degree0": dict(zip(("U0prime", "z", "Delta"), rep.dims))}
        if not args.dims_only:
            out["structure_constants"] = G.structure_constants()
        print(_dump(out))
        return EXIT_OK
    lines = _dims_text(G.dims, args.max_degree)
    lines.append("degree 0 = U0' + z + Delta: %d + %d + %d" % rep.dims)
    lines.append(f"total dimension {G.total_dim}")
    if not args.dims_only:
        for rec in G.structure_constants():
            lines.append(f"[G{rec['k']}[{rec['i']}], G{rec['l']}[{rec['j']}]] = "
                         + " ".join(rec["coeffs"]))
    print("\n".join(lines))
    return EXIT_OK


def _parse_gamma(text: str) -> tuple:
    try:
        return tuple(parse_scalar(x) for x in text.split(","))
    except LinalgError as exc:
        raise UsageError(f"--gamma2: {exc}") from None


def cmd_verify(args) -> int:
    p = load_pentad(args.file)
    N = args.max_degree
    chosen = [c for c in CHECKS if getattr(args, c)] or list(CHECKS)
    G = extend(local_from_pentad(p), N)
    reports = []
    for c in chosen:
        if c == "jacobi":
            reports += [verify_jacobi(G), verify_antisymmetry(G)]
        elif c == "transitivity":
            reports.append(verify_transitivity(G))
        elif c == "theorem2":
            reports += [verify_theorem2(p, N, G), verify_corollary(p, N, G),
                        verify_invertible_shortcut(p, N, G)]
        elif c == "lemma2":
            reports.append(verify_lemma2(p, N, G))
        elif c == "lemma3":
            reports.append(verify_lemma3(p, N, G))
        elif c == "gamma_invariance":
            g2 = _parse_gamma(args.gamma2) if args.gamma2 else random_gamma(p.n)
            if len(g2) != p.n or any(g == 0 for g in g2):
                raise UsageError("--gamma2 needs n nonzero scalars")
            reports.append(gamma_invariance(p, g2, N, G))
    ok = all(r.passed for r in reports)
    if args.json:
        print(_dump({"passed": ok, "reports": [r.to_dict(timing=False) for r in reports]}))
    else:
        print("\n".join(r.line() for r in reports))
        print("ALL PASS" if ok else "VERIFICATION FAILED")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_contragredient(args) -> int:
    C = load_cartan(args.file)
    N = args.max_degree
    G = reduced_contragredient(C, N) if args.reduced else contragredient(C, N)
    if args.json:
        print(_dump({**G.graded_dims(), "reduced": args.reduced}))
    else:
        name = "G'(C)" if args.reduced else "G(C)"
        print(f"{name} for C = {C}")
        print("\n".join(_dims_text(G.dims, N)))
        print(f"total dimension {G.total_dim}")
    return EXIT_OK


def cmd_embed(args) -> int:
    if args.kind == "sl2":
        if args.m is None or args.m < 0:
            raise UsageError("embed sl2 needs --m M with M >= 0")
        p = sl2_pentad(args.m)
    else:
        if not args.file:
            raise UsageError("embed custom needs a reductive-data file")
        p = pentad_from_reductive(load_reductive(args.file))
    print(p.to_json())
    return EXIT_OK


def _load_local(path):
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict) and "C" in data:
        return local_from_cartan(cartan_from_dict(data))
    return local_from_pentad(CartanPentad.from_dict(data))


def cmd_oracle(args) -> int:
    local = _load_local(args.file)
    dims = oracle_dims(local, args.max_degree, force=args.force)
    if args.json:
        print(_dump({"degrees": list(dims), "dims": list(dims.values())}))
    else:
        print("\n".join(_dims_text(dims, args.max_degree)))
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("max degree must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pclie", description=(
        "PC Lie algebras, contragredient Lie algebras and their structure."))
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="Cartan matrix, ranks and U0'/z/Delta")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="truncated graded algebra of a pentad")
    c.add_argument("file")
    c.add_argument("--max-degree", type=_positive, default=3)
    c.add_argument("--dims-only", action="store_true")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run the verification suite (default: all checks)")
    v.add_argument("file")
    v.add_argument("--max-degree", type=_positive, default=3)
    for check in CHECKS:
        v.add_argument("--" + check.replace("_", "-"), dest=check, action="store_true")
    v.add_argument("--gamma2", help="comma separated diagonal for --gamma-invariance")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("contragredient", help="G(C) or G'(C) from a matrix file")
    g.add_argument("file")
    g.add_argument("--max-degree", type=_positive, default=3)
    g.add_argument("--reduced", action="store_true")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_contragredient)

    e = sub.add_parser("embed", help="emit a pentad JSON")
    e.add_argument("kind", choices=["sl2", "custom"])
    e.add_argument("file", nargs="?")
    e.add_argument("--m", type=int)
    e.set_defaults(func=cmd_embed)

    o = sub.add_parser("oracle", help="brute-force dimensions from word contractions")
    o.add_argument("file")
    o.add_argument("--max-degree", type=_positive, default=3)
    o.add_argument("--force", action="store_true",
                   help=f"allow max degree above {DEFAULT_GUARD}")
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PentadError, LocalPartError, LinalgError, OracleGuardError, UsageError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
              file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
