"""shellab command line.

Documents travel as JSON on stdin/stdout, so commands compose::

    shellab family boolean 3 | shellab mcd --format dot
    shellab fixture fig2 | shellab polygon-complete

Exit codes: 0 success or true verdict, 1 false verdict, 2 input error.
"""

import argparse
import sys

from . import io
from .descent_order import (build_mcd, find_characterization_witness, find_easy_noncover_witness,
                            inversion_set, is_inversion_ranked, is_polygon_complete, mcd_rank_report,
                            verify_characterization_witness)
from .errors import ShellabError
from .families import fixtures as fx
from .families import lattices, permutations, trees, young
from .labeling import is_polygon_strong, validate_labeling
from .shelling import equivalence_audit, homology_facets, shelling_equivalence_check, shelling_report

OK, FALSE, INPUT_ERROR = 0, 1, 2
DEFAULT_SEED = 20240101


class InputError(ShellabError):
    pass


# input helpers

def _read(path, stdin):
    if path in (None, "-"):
        return io.read_json(stdin.read(), "<stdin>")
    try:
        with open(path) as f:
            text = f.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return io.read_json(text, path)


def _load(args, stdin, need_labeling=True):
    doc = _read(args.input, stdin)
    P = io.load_poset(doc)
    lam = io.load_labeling(doc)
    if need_labeling and lam is None:
        raise InputError("document has no labeling")
    if need_labeling and not P.is_bounded():
        raise InputError("poset is not bounded")
    kind = args.kind or doc.get("kind") or ("cl" if lam is not None and lam.rooted else "el")
    return doc, P, lam, kind


def _validated(args, stdin):
    doc, P, lam, kind = _load(args, stdin)
    report = validate_labeling(P, lam, kind)
    if report.error:
        raise InputError(report.error)
    if not report.valid:
        bad = report.failures()[0]
        raise InputError(f"labeling is not a valid {kind.upper()}: interval [{P.name(bad.x)}, "
                         f"{P.name(bad.y)}] has {bad.ascending_count} ascending chains"
                         + (f" ({bad.note})" if bad.note else ""))
    return doc, P, lam, kind


def _chain(P, c):
    return [P.name(x) for x in c]


def _move_str(mcd, mv):
    return f"{mcd.label_string(mv.source)} -> {mcd.label_string(mv.target)}"


class Out:
    def __init__(self, stdout, fmt):
        self.stdout = stdout
        self.fmt = fmt

    def emit(self, payload, text):
        if self.fmt == "json":
            self.stdout.write(io.dumps(payload))
        else:
            self.stdout.write(text if text.endswith("\n") else text + "\n")


def _no_dot(args, name):
    if args.format == "dot":
        raise InputError(f"--format dot is not available for {name}")


# commands

def cmd_validate(args, stdin, out):
    _no_dot(args, "validate")
    doc, P, lam, kind = _load(args, stdin)
    report = validate_labeling(P, lam, kind)
    if report.error:
        raise InputError(report.error)
    fails = report.failures()
    payload = {"kind": kind, "valid": report.valid, "intervals": len(report.entries),
               "failures": [{"x": P.name(e.x), "y": P.name(e.y), "root": _chain(P, e.root),
                             "ascending_chains": e.ascending_count,
                             "ascending_first": e.precedes_all, "note": e.note} for e in fails]}
    lines = [f"{kind.upper()} labeling: {'valid' if report.valid else 'INVALID'} "
             f"({len(report.entries)} intervals checked)"]
    for e in fails:
        lines.append(f"  [{P.name(e.x)}, {P.name(e.y)}] root {'<'.join(_chain(P, e.root))}: "
                     f"{e.ascending_count} ascending, first={e.precedes_all} {e.note}".rstrip())
    out.emit(payload, "\n".join(lines))
    return OK if report.valid else FALSE


def cmd_mcd(args, stdin, out):
    doc, P, lam, kind = _validated(args, stdin)
    mcd = build_mcd(P, lam)
    if args.format == "dot":
        out.stdout.write(io.mcd_dot(mcd))
    elif args.format == "table":
        out.stdout.write(io.mcd_table(mcd))
    else:
        payload = io.mcd_json(mcd)
        payload["names"] = mcd.chain_names()
        if "expected_cord" in doc:
            exp = fx.ExpectedCord.from_doc(doc["expected_cord"])
            payload["matches_expected"] = exp.isomorphic(mcd)
        out.stdout.write(io.dumps(payload))
    return OK


def cmd_polygon_complete(args, stdin, out):
    doc, P, lam, kind = _validated(args, stdin)
    mcd = build_mcd(P, lam)
    ok, bad = is_polygon_complete(mcd)
    if args.format == "dot":
        names = mcd.chain_names()
        text = io.mcd_dot(mcd).rstrip().rstrip("}")
        for mv in bad:
            text += f'  "{names[mcd.index[mv.source]]}" -> "{names[mcd.index[mv.target]]}" [style=dashed];\n'
        out.stdout.write(text + "}\n")
    else:
        payload = {"polygon_complete": ok, "moves": len(mcd.moves),
                   "non_cover_moves": [[mcd.label_string(mv.source), mcd.label_string(mv.target)]
                                       for mv in bad]}
        lines = [f"polygon complete: {ok} ({len(mcd.moves)} moves)"]
        lines += [f"  move {_move_str(mcd, mv)} is not a cover" for mv in bad]
        out.emit(payload, "\n".join(lines))
    return OK if ok else FALSE


def cmd_inversion_ranked(args, stdin, out):
    _no_dot(args, "inversion-ranked")
    doc, P, lam, kind = _validated(args, stdin)
    mcd = build_mcd(P, lam)
    ok, bad = is_inversion_ranked(P, lam, mcd)
    payload = {"inversion_ranked": ok}
    lines = [f"inversion ranked: {ok}"]
    if bad is not None:
        a = len(inversion_set(lam, bad.source))
        b = len(inversion_set(lam, bad.target))
        payload["counterexample"] = {"move": [mcd.label_string(bad.source), mcd.label_string(bad.target)],
                                     "inversions": [a, b]}
        lines.append(f"  move {_move_str(mcd, bad)} changes |inv| from {a} to {b}")
    else:
        rep = mcd_rank_report(mcd)
        payload["ranked_by_inversions"] = rep.ok
        payload["homology_facets"] = sorted(mcd.label_string(c) for c in homology_facets(P, lam))
        lines.append(f"  Cord ranked by |inv|, homology facets at the top rank: {rep.ok}")
    out.emit(payload, "\n".join(lines))
    return OK if ok else FALSE


def cmd_polygon_strong(args, stdin, out):
    _no_dot(args, "polygon-strong")
    doc, P, lam, kind = _validated(args, stdin)
    if lam.rooted:
        raise InputError("polygon strong is defined for edge labelings, not CLs")
    ok, bad = is_polygon_strong(P, lam)
    payload = {"polygon_strong": ok}
    lines = [f"polygon strong: {ok}"]
    if bad is not None:
        payload["counterexample"] = [P.name(v) for v in bad]
        lines.append("  descent " + " < ".join(P.name(v) for v in bad))
    out.emit(payload, "\n".join(lines))
    return OK if ok else FALSE


def _parse_order(raw, mcd):
    if isinstance(raw, dict):
        raw = raw.get("order")
    if not isinstance(raw, list):
        raise InputError("order file must hold a JSON list (or {\"order\": [...]})")
    P = mcd.poset
    names = mcd.chain_names()
    by_name = {n: i for i, n in enumerate(names)}
    by_chain = {tuple(_chain(P, c)): i for i, c in enumerate(mcd.chains)}
    order = []
    for item in raw:
        if isinstance(item, int) and not isinstance(item, bool) and 0 <= item < len(mcd):
            order.append(item)
        elif isinstance(item, str) and item in by_name:
            order.append(by_name[item])
        elif isinstance(item, list) and tuple(map(str, item)) in by_chain:
            order.append(by_chain[tuple(map(str, item))])
        else:
            raise InputError(f"order entry {item!r} is not a maximal chain")
    if sorted(order) != list(range(len(mcd))):
        raise InputError("order must list every maximal chain exactly once")
    return [mcd.chains[i] for i in order]


def cmd_shelling_check(args, stdin, out):
    _no_dot(args, "shelling-check")
    doc, P, lam, kind = _validated(args, stdin)
    mcd = build_mcd(P, lam)
    order = _parse_order(_read(args.order_file, stdin), mcd)
    verdict = shelling_equivalence_check(P, lam, order, mcd)
    rep = shelling_report(P, lam, order, drop_bounds=args.drop_bounds)
    rows = [("facet", "labels", "restriction", "homology")]
    names = mcd.chain_names()
    for c, R, h in zip(order, rep.restriction, rep.homology):
        face = ",".join(P.name(x) for x in sorted(R, key=P.index))
        rows.append((names[mcd.index[c]], mcd.label_string(c), "{" + face + "}", "yes" if h else ""))
    payload = {"status": verdict.status, "linear_extension": verdict.linear_extension,
               "shelling_with_descents": verdict.shelling,
               "codim1": rep.codim1_ok, "partition": rep.partition_ok,
               "facets": [{"facet": r[0], "restriction": r[2], "homology": bool(r[3])} for r in rows[1:]]}
    text = (f"linear extension of Cord: {verdict.linear_extension}\n"
            f"shelling with descent restriction: {verdict.shelling}\n"
            f"status: {verdict.status}\n" + io.format_table(rows))
    out.emit(payload, text)
    if verdict.status == "Mismatch":
        sys.stderr.write("shellab: the two verdicts disagree\n")
        return FALSE
    return OK if verdict.linear_extension else FALSE


def cmd_equivalence_audit(args, stdin, out):
    _no_dot(args, "equivalence-audit")
    doc, P, lam, kind = _validated(args, stdin)
    threshold = args.exhaustive if args.exhaustive is not None else 6
    rep = equivalence_audit(P, lam, seed=args.seed, samples=args.samples,
                            exhaustive_threshold=threshold)
    payload = {"chains": rep.chains, "exhaustive": rep.exhaustive, "orders_checked": rep.orders_checked,
               "linear_extensions_checked": rep.linear_extensions_checked,
               "linear_extension_count": rep.linear_extension_count,
               "agree_true": rep.agree_true, "agree_false": rep.agree_false,
               "mismatches": len(rep.mismatches), "seed": args.seed}
    text = (f"chains: {rep.chains}  exhaustive: {rep.exhaustive}\n"
            f"orders checked: {rep.orders_checked} (linear extensions: {rep.linear_extensions_checked})\n"
            f"agree true: {rep.agree_true}  agree false: {rep.agree_false}  "
            f"mismatches: {len(rep.mismatches)}")
    out.emit(payload, text)
    return OK if rep.ok else FALSE


def cmd_witness(args, stdin, out):
    _no_dot(args, "witness")
    doc, P, lam, kind = _validated(args, stdin)
    mcd = build_mcd(P, lam)
    easy = find_easy_noncover_witness(P, lam)
    ok, bad = is_polygon_complete(mcd)
    payload = {"polygon_complete": ok, "easy": None, "characterization": []}
    lines = [f"polygon complete: {ok}"]
    if easy is not None:
        payload["easy"] = {"root": _chain(P, easy.root), "c": _chain(P, easy.c),
                           "c_prime": _chain(P, easy.c_prime)}
        lines.append(f"easy witness: c = {'<'.join(_chain(P, easy.c))}, "
                     f"c' = {'<'.join(_chain(P, easy.c_prime))}, root {'<'.join(_chain(P, easy.root))}")
    else:
        lines.append("easy witness: none")
    all_verified = True
    for mv in bad:
        w = find_characterization_witness(P, lam, mv, mcd)
        verified, reason = verify_characterization_witness(P, lam, w)
        all_verified &= verified
        payload["characterization"].append({
            "move": [mcd.label_string(mv.source), mcd.label_string(mv.target)],
            "y": P.name(w.y), "x": [P.name(x) for x in w.xs], "z": [P.name(z) for z in w.zs],
            "verified": verified, "reason": reason})
        lines.append(f"move {_move_str(mcd, mv)}: y = {P.name(w.y)}, "
                     f"x = {[P.name(x) for x in w.xs]}, z = {[P.name(z) for z in w.zs]}, "
                     f"verified: {verified} {reason}".rstrip())
    out.emit(payload, "\n".join(lines))
    return OK if all_verified else FALSE


def _emit_family(args, out, P, lam=None, extra=None):
    if args.format == "dot":
        out.stdout.write(io.hasse_dot(P))
    elif args.format == "table":
        rows = [("element", "covered by")]
        for x in P.elements:
            rows.append((P.name(x), " ".join(P.name(y) for y in P.upper_covers(x))))
        out.stdout.write(io.format_table(rows))
    else:
        out.stdout.write(io.dumps(io.dump_document(P, lam, **(extra or {}))))
    return OK


def cmd_family(args, stdin, out):
    fam = args.family
    if fam == "boolean":
        P, lam = lattices.boolean_lattice(args.n)
        return _emit_family(args, out, P, lam)
    if fam == "partition":
        P = lattices.partition_lattice(args.n)
        spec = args.labeling
        if spec == "maxmin":
            lam = lattices.max_min_labeling(P)
        elif spec.startswith("minimal:"):
            names = [a for a in spec[len("minimal:"):].split(",") if a]
            try:
                atoms = [fx.atom_from_name(a, args.n) for a in names]
                lam = lattices.minimal_labeling(P, atoms)
            except ValueError as exc:
                raise InputError(f"bad atom order: {exc}") from None
        else:
            raise InputError("--labeling must be 'maxmin' or 'minimal:<atom,atom,...>'")
        return _emit_family(args, out, P, lam)
    if fam == "young":
        alpha = young.parse_partition(args.shape)
        mu = young.parse_partition(args.inner) if args.inner else ()
        T = young.StandardTableau.parse(args.tableau, mu) if args.tableau else None
        P, lam = young.young_interval(alpha, mu, T)
        return _emit_family(args, out, P, lam)
    if fam == "jp":
        Q = io.load_poset(_read(args.poset, stdin), require_bounded=False)
        e = [x for x in args.ext.split(",") if x] if args.ext else None
        if e is None:
            e = [Q.elements[i] for i in Q._topo]
        P, lam = lattices.distributive_lattice(Q, e)
        return _emit_family(args, out, P, lam)
    if fam == "weak":
        return _emit_family(args, out, permutations.weak_order(args.n))
    if fam == "left-order":
        return _emit_family(args, out, young.left_order(young.parse_partition(args.shape)))
    if fam == "trees":
        return _emit_family(args, out, trees.tree_poset(args.n))
    raise InputError(f"unknown family {fam!r}")


def cmd_fixture(args, stdin, out):
    if args.list or not args.name:
        for name in fx.fixture_names():
            out.stdout.write(f"{name}\t{fx.fixture_document(name).get('figure', '')}\n")
        return OK
    doc = fx.fixture_document(args.name)
    if "family" not in doc:
        if args.format == "json":
            out.stdout.write(io.dumps(doc))
            return OK
        P, lam = io.load_document(doc)
        return _emit_family(args, out, P, lam)
    f = fx.fixture(args.name)
    extra = {"figure": doc.get("figure", ""), "expected_cord": _portable_expected(f)}
    return _emit_family(args, out, f.poset, f.labeling, extra)


def _portable_expected(f):
    """Expected Cord for a family fixture; key modes other than labels keep their names."""
    exp = f.expected
    return {"key": exp.key, "elements": exp.elements, "covers": [list(c) for c in exp.covers],
            "non_cover_moves": [list(c) for c in exp.non_cover_moves]}


# parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "dot", "table"), default=None)
    common.add_argument("--kind", choices=("el", "cl"), default=None,
                        help="labeling type (default: from the document)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = argparse.ArgumentParser(prog="shellab", description=__doc__.split("\n")[0],
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, default_format="table", has_input=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func, default_format=default_format)
        if has_input:
            p.add_argument("input", nargs="?", default="-", help="JSON document (default: stdin)")
        return p

    add("validate", cmd_validate, "check the EL/CL axioms on every (rooted) interval")
    add("mcd", cmd_mcd, "build the maximal chain descent order", default_format="json")
    add("polygon-complete", cmd_polygon_complete, "is every polygon move a cover?")
    add("inversion-ranked", cmd_inversion_ranked, "does every move add exactly one inversion?")
    add("polygon-strong", cmd_polygon_strong, "check the polygon strong condition")
    p = sub.add_parser("shelling-check", parents=[common], help="check a facet order both ways")
    p.set_defaults(func=cmd_shelling_check, default_format="table")
    p.add_argument("order_file", help="JSON list of chains (label strings, indices or element lists)")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--drop-bounds", action="store_true", help="use the proper part for the report")
    p = add("equivalence-audit", cmd_equivalence_audit,
            "compare linear extensions of Cord with shellings over many orders")
    p.add_argument("--exhaustive", type=int, nargs="?", const=7, default=None, metavar="N",
                   help="enumerate every order when there are at most N chains (default N: 7)")
    p.add_argument("--samples", type=int, default=500)
    add("witness", cmd_witness, "easy and characterization witnesses of non-completeness")

    p = sub.add_parser("family", parents=[common], help="generate a labeled family member")
    p.set_defaults(func=cmd_family, default_format="json")
    fam = p.add_subparsers(dest="family", required=True)
    f = fam.add_parser("boolean", parents=[common])
    f.add_argument("n", type=int)
    f = fam.add_parser("partition", parents=[common])
    f.add_argument("n", type=int)
    f.add_argument("--labeling", default="maxmin", help="maxmin or minimal:<12,34,...>")
    f = fam.add_parser("young", parents=[common])
    f.add_argument("shape", help='outer shape, e.g. "3,2,1"')
    f.add_argument("--tableau", help='e.g. "1,4,6/2,5/3" (default: row tableau)')
    f.add_argument("--inner", help="inner shape for skew intervals")
    f = fam.add_parser("jp", parents=[common])
    f.add_argument("poset", help="poset JSON for Q")
    f.add_argument("--ext", help="linear extension, comma separated (default: canonical)")
    f = fam.add_parser("weak", parents=[common])
    f.add_argument("n", type=int)
    f = fam.add_parser("left-order", parents=[common])
    f.add_argument("shape")
    f = fam.add_parser("trees", parents=[common])
    f.add_argument("n", type=int)

    p = sub.add_parser("fixture", parents=[common], help="emit a figure fixture")
    p.set_defaults(func=cmd_fixture, default_format="json")
    p.add_argument("name", nargs="?")
    p.add_argument("--list", action="store_true")
    return parser


def run(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args, stdin, Out(stdout, args.format))
    except (ShellabError, KeyError, TypeError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write(f"shellab: error: {msg}\n")
        return INPUT_ERROR


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
