"""Command-line interface.

Exit codes: 0 success, 1 parse error, 2 semantic error (homogeneity,
weight, bad arguments), 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from typing import Sequence

from .algebra import Alphabet, Polynomial
from .errors import GdnError, SemanticError, WeightError
from .groebner import (
    Certificate,
    RelationSet,
    buchberger_capped,
    complete_homogeneous,
    decide_capped,
    decide_diff,
    irr_enumerate,
    normal_form,
)
from .novikov import (
    check_identities,
    gdn_reduce,
    nonfree_witness,
    tableau_enumerate,
    tableau_leading,
    tableau_to_poly,
)
from .parse import load_session, parse_poly
from .sampling import random_poly
from .serialize import basis_document, dumps, loads_basis

log = logging.getLogger("gdnbasis")


def load_input(path: str) -> tuple[RelationSet, dict | None]:
    """A session file, or a basis document together with its metadata."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return loads_basis(text)
    return load_session(path).relation_set(), None


def load_relations(path: str) -> RelationSet:
    return load_input(path)[0]


def _reduce_against_document(f: Polynomial, S: RelationSet, doc: dict):
    """Reduce against a saved completion instead of recompleting it."""
    n = max((m.dx_length for m in f.terms), default=0)
    if doc["mode"] == "stage" and doc["stage"] >= n:
        mode = "exact"
    else:
        mode = f"bounded({doc.get('cap', doc.get('stage', 0))})"
    nf, cert = normal_form(f, S, witness=True)
    return nf, mode, cert


def format_certificate(cert: Certificate, S: RelationSet) -> list[str]:
    A = S.alphabet
    lines = []
    for sw, c in sorted(cert.items(), key=lambda kv: (kv[0].relation, kv[0].shift, kv[0].cofactor.key)):
        coef = A.format(Polynomial.constant(c))
        u = A.format_monomial(sw.cofactor)
        lines.append(f"  {coef} * {u} * D^{sw.shift}(s{sw.relation})")
    return lines


def _emit(lines: Sequence[str]) -> None:
    for line in lines:
        print(line)


# -- commands ---------------------------------------------------------------


def cmd_complete(args) -> int:
    S = load_relations(args.file)
    if args.stage is not None:
        for k in range(args.stage + 1):
            state = complete_homogeneous(S, k, max_dx=args.stage, max_size=args.max_size)
            log.info("stage %d: %d elements", k, len(state.entries))
        doc = basis_document(
            state.stable(),
            mode="stage",
            status=f"exact-to-dx-{args.stage}",
            stage=args.stage,
            provenance=[e.origin for e in state.entries if e.poly.lm.dx_length <= args.stage],
        )
    else:
        done = buchberger_capped(S, args.cap, max_size=args.max_size)
        log.info("cap %d: %d elements after %d rounds", args.cap, len(done.basis), done.rounds)
        doc = basis_document(
            done.basis, mode="cap", status=done.status, cap=args.cap, provenance=done.provenance
        )
    text = dumps(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {len(doc['relations'])} relations to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _decide(S: RelationSet, f: Polynomial, cap: int | None, certify: bool):
    if S.is_dx_homogeneous:
        return decide_diff(f, S, certify=certify)
    if cap is None:
        raise SemanticError("relations are not D∪X-homogeneous: pass --cap for a bounded answer")
    return decide_capped(f, S, cap, certify=certify)


def cmd_nf(args) -> int:
    S = load_relations(args.file)
    f = parse_poly(args.expr, S.alphabet)
    res = _decide(S, f, args.cap, False)
    _emit([f"normal form: {S.alphabet.format(res.normal_form)}", f"mode: {res.mode}"])
    return 0


def cmd_member(args) -> int:
    S = load_relations(args.file)
    f = parse_poly(args.expr, S.alphabet)
    res = _decide(S, f, args.cap, True)
    out = [f"member: {'true' if res.member else 'false'}", f"mode: {res.mode}"]
    if res.member:
        out.append("certificate:")
        out.extend(format_certificate(res.certificate, S))
    else:
        out.append(f"normal form: {S.alphabet.format(res.normal_form)}")
    _emit(out)
    return 0


def cmd_gdn(args, want_member: bool) -> int:
    S, doc = load_input(args.file)
    A = S.alphabet
    f = parse_poly(args.expr, A)
    if doc is not None and doc["mode"] != "input":
        if f and f.weights() != {-1}:
            raise WeightError(f"expression is not in GDN(X): weights {sorted(f.weights())}")
        nf, mode, cert = _reduce_against_document(f, S, doc)
        out = [f"normal form: {A.format(nf)}", f"mode: {mode}"]
        if want_member:
            out = [f"member: {'true' if nf.is_zero() else 'false'}", f"mode: {mode}"]
            out += ["certificate:", *format_certificate(cert, S)] if nf.is_zero() else [out[0]]
        _emit(out)
        return 0
    res = gdn_reduce(f, S, args.cap)
    if not want_member:
        _emit([f"normal form: {A.format(res.normal_form)}", f"mode: {res.mode}"])
        return 0
    out = [f"member: {'true' if res.member else 'false'}", f"mode: {res.mode}"]
    if res.member:
        if S.is_dx_homogeneous:
            cert = decide_diff(f, S, certify=True).certificate
        else:
            cert = decide_capped(f, S, args.cap or 0, certify=True).certificate
        out.append("certificate:")
        out.extend(format_certificate(cert, S))
    else:
        out.append(f"normal form: {A.format(res.normal_form)}")
    _emit(out)
    return 0


def cmd_tableaux(args) -> int:
    A = Alphabet([g.strip() for g in args.gens.split(",")])
    ts = tableau_enumerate(len(A), args.degree)
    print(f"{len(ts)} tableaux of degree {args.degree} over {', '.join(A.names)}")
    for t in ts:
        rows = " | ".join(" ".join(A.names[x] for x in row) for row in t.rows)
        line = f"[{rows}]"
        if args.leading:
            line += f"  leading: {A.format_monomial(tableau_leading(t))}"
        if args.expand:
            line += f"  = {A.format(tableau_to_poly(t))}"
        print(line)
    return 0


def cmd_irr(args) -> int:
    S = load_relations(args.file)
    A = S.alphabet
    dx_bound = None if args.weight is None else args.weight + 2 * args.max_len
    if args.stage is not None or (args.cap is None and S.is_dx_homogeneous):
        n = args.stage if args.stage is not None else max(dx_bound or 0, 0)
        if dx_bound is None:
            dx_bound = n
        basis = complete_homogeneous(S, n).current
        mode = "exact" if n >= dx_bound else f"bounded({n})"
    else:
        cap = args.cap if args.cap is not None else max(dx_bound or 0, 0)
        if dx_bound is None:
            dx_bound = cap
        basis = buchberger_capped(S, cap).basis
        mode = f"bounded({cap})"
    words = irr_enumerate(basis, args.max_len, args.weight, max_dx=dx_bound)
    print(f"mode: {mode}")
    gdn = args.weight == -1 and S.is_gdn()
    by_lead = {}
    if gdn:
        for d in range(1, args.max_len + 1):
            for t in tableau_enumerate(len(A), d):
                by_lead[tableau_leading(t)] = t
    for w in words:
        line = A.format_monomial(w)
        if w in by_lead:
            rows = " | ".join(" ".join(A.names[x] for x in row) for row in by_lead[w].rows)
            line += f"  tableau: [{rows}]"
        print(line)
    print(f"{len(words)} irreducible words")
    return 0


def cmd_demo(args) -> int:
    if args.which == "nonfree":
        A = Alphabet(["a"])
        lhs, rhs = nonfree_witness()
        _emit(
            [
                "(a o a) o (((a o a) o a) o a)",
                f"  = {A.format(lhs)}",
                "((a o a) o a) o ((a o a) o a)",
                f"  = {A.format(rhs)}",
                f"difference = {A.format(lhs - rhs)}",
            ]
        )
        return 0
    rng = random.Random(args.seed)
    bad = 0
    for _ in range(args.trials):
        ngens = rng.randint(1, 3)
        x, y, z = (random_poly(rng, ngens) for _ in range(3))
        d1, d2 = check_identities(x, y, z)
        bad += bool(d1) + bool(d2)
    print(f"{args.trials} random triples (seed {args.seed}): {bad} nonzero defects")
    return 0 if bad == 0 else 2


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gdnbasis",
        description="Gröbner-Shirshov bases for differential and Novikov algebras",
    )
    p.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("complete", help="complete a relation set")
    c.add_argument("file")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--stage", type=int, help="staged construction (homogeneous input)")
    g.add_argument("--cap", type=int, help="saturate compositions up to this dx-length")
    c.add_argument("--out", help="write JSON here instead of stdout")
    c.add_argument("--max-size", type=int, help="fail with exit code 3 beyond this many elements")
    c.set_defaults(func=cmd_complete)

    for name, func, helptext in [
        ("nf", cmd_nf, "normal form modulo Id[S]"),
        ("member", cmd_member, "membership in Id[S]"),
        ("gdn-nf", lambda a: cmd_gdn(a, False), "normal form in the Novikov quotient"),
        ("gdn-member", lambda a: cmd_gdn(a, True), "membership in the Novikov ideal Id(S)"),
    ]:
        q = sub.add_parser(name, help=helptext)
        q.add_argument("file")
        q.add_argument("--expr", required=True)
        q.add_argument("--cap", type=int, help="bound for non-homogeneous relations")
        q.set_defaults(func=func)

    t = sub.add_parser("tableaux", help="list Novikov tableaux")
    t.add_argument("--gens", required=True, help="comma-separated, in increasing order")
    t.add_argument("--degree", type=int, required=True)
    t.add_argument("--leading", action="store_true")
    t.add_argument("--expand", action="store_true")
    t.set_defaults(func=cmd_tableaux)

    i = sub.add_parser("irr", help="irreducible words")
    i.add_argument("file")
    i.add_argument("--max-len", type=int, required=True)
    i.add_argument("--weight", type=int)
    g = i.add_mutually_exclusive_group()
    g.add_argument("--stage", type=int)
    g.add_argument("--cap", type=int)
    i.set_defaults(func=cmd_irr)

    d = sub.add_parser("demo", help="built-in demonstrations")
    d.add_argument("which", choices=["nonfree", "identities"])
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--trials", type=int, default=200)
    d.set_defaults(func=cmd_demo)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except GdnError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.exit_code
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
