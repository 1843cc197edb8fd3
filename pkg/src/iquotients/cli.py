"""Command-line front end: audit tables, build hulls, lift maps, glue diagrams."""

import argparse
import json
import sys
import time

from .assembly import (
    ample_semilattice_report,
    assemble_hull_semilattice,
    build_strong_semilattice,
    load_diagram,
)
from .enumeration import FILTER_NAMES, enumerate_semigroups
from .equiv import (
    BisObject,
    LacObject,
    order_of_pair,
    pair_of_order,
    roundtrip_order,
    roundtrip_pair,
)
from .errors import ConsistencyError, InputError, ResourceError
from .hull import has_lc, inverse_hull
from .inverse import recognize_inverse
from .iorder import (
    BicyclicEmbedding,
    E_UNITARY_CLAUSES,
    SubsetEmbedding,
    ample_iorder_suite,
    e_unitary_equivalence,
    is_classical_left_order,
    is_left_i_order,
    is_straight,
)
from .lifting import lift_morphism
from .morphisms import Morphism
from .relations import is_left_ample
from .symbolic import SymbolicSemigroup, additive_naturals
from .tables import FiniteSemigroup


class Report:
    """Command echo, one verdict line per claim, payload sections, timings.

    Timings are shown only in the human-readable rendering so that the JSON
    rendering is byte-identical across runs.
    """

    def __init__(self, argv):
        self.argv = list(argv)
        self.verdicts = []
        self.sections = []
        self.data = {}
        self.timings = []

    def verdict(self, claim, ok, witness=None):
        self.verdicts.append((claim, bool(ok), witness))

    def section(self, title, text):
        self.sections.append((title, text.rstrip("\n")))

    def timing(self, label, seconds):
        self.timings.append((label, seconds))

    def all_true(self):
        return all(ok for _, ok, _ in self.verdicts)

    def to_text(self):
        lines = ["command: " + " ".join(self.argv)]
        for claim, ok, witness in self.verdicts:
            line = "[%s] %s" % ("ok" if ok else "fail", claim)
            if not ok and witness is not None:
                line += "  (witness: %r)" % (witness,)
            lines.append(line)
        for title, text in self.sections:
            lines.append("-- %s --" % title)
            lines.append(text)
        for label, seconds in self.timings:
            lines.append("timing: %s %.3fs" % (label, seconds))
        return "\n".join(lines)

    def to_json(self):
        payload = {
            "command": self.argv,
            "data": _plain(self.data),
            "sections": {title: text for title, text in self.sections},
            "verdicts": [
                {"claim": claim, "ok": ok, "witness": _plain(witness)}
                for claim, ok, witness in self.verdicts
            ],
        }
        return json.dumps(payload, sort_keys=True)


def _plain(value):
    """Strip values down to JSON types, deterministically."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((_plain(v) for v in value), key=repr)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return repr(value)


def _read_text(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))


def _load_table(path):
    return FiniteSemigroup.from_text(_read_text(path))


def _parse_members(text):
    try:
        members = sorted({int(tok) for tok in text.replace(",", " ").split()})
    except ValueError:
        raise InputError("member list must be comma-separated element indices")
    if not members:
        raise InputError("member list is empty")
    return members


def _load_inverse(path, role):
    table = _load_table(path)
    recognition = recognize_inverse(table)
    if not recognition.ok:
        raise InputError(
            "%s table is not an inverse semigroup (%s at %r)"
            % (role, recognition.reason, recognition.witness)
        )
    return recognition.view


def run_check(args, report):
    s = _load_table(args.table)
    wanted = [
        name
        for name, on in (("ample", args.ample), ("lc", args.lc), ("inverse", args.inverse))
        if on
    ] or ["ample", "lc", "inverse"]
    report.data["order"] = s.order
    if "ample" in wanted:
        ample = is_left_ample(s)
        report.verdict(
            "left ample", ample, None if ample else (ample.clause, ample.witness)
        )
    if "lc" in wanted:
        lc = has_lc(s)
        report.verdict("Condition (LC)", lc, None if lc else lc.failure)
    if "inverse" in wanted:
        recognition = recognize_inverse(s)
        report.verdict(
            "inverse semigroup",
            recognition.ok,
            None if recognition.ok else (recognition.reason, recognition.witness),
        )


def run_hull(args, report):
    s = _load_table(args.table)
    result = inverse_hull(s, budget=args.budget)
    lc = result.lc
    report.verdict("Condition (LC)", lc, None if lc else lc.failure)
    report.verdict(
        "members form a left I-order in the hull",
        result.is_i_order,
        None if result.is_i_order else lc.failure,
    )
    report.verdict("members are a union of hull R-classes", result.image_union_of_r_classes)
    hull_semigroup = result.hull.semigroup
    report.data["order"] = s.order
    report.data["hull_order"] = hull_semigroup.order
    report.data["embedding"] = list(result.embedding)
    report.section("hull table", hull_semigroup.to_text())
    lines = [
        "%s -> %s" % (s.element_name(a), hull_semigroup.element_name(result.embed(a)))
        for a in range(s.order)
    ]
    report.section("embedding", "\n".join(lines))


def _build_embedding(args):
    if args.builtin == "bicyclic":
        return BicyclicEmbedding(args.window)
    if args.ambient and args.members:
        view = _load_inverse(args.ambient, "ambient")
        return SubsetEmbedding(view, _parse_members(args.members))
    raise InputError("need an ambient table and a member list, or --builtin bicyclic")


def run_iorder(args, report):
    embedding = _build_embedding(args)
    order_report = is_left_i_order(embedding)
    report.verdict(
        "members form a left I-order",
        order_report,
        None if order_report else order_report.failure,
    )
    if order_report:
        straight = is_straight(embedding)
        report.verdict(
            "every ambient element has an R-related witness pair",
            straight,
            None if straight else straight.failure,
        )
    for suite in dict.fromkeys(args.suite):
        if suite == "transfer":
            for clause, ok in ample_iorder_suite(embedding):
                report.verdict(clause, ok)
        else:
            verdicts = e_unitary_equivalence(embedding)
            for clause in E_UNITARY_CLAUSES:
                report.verdict(clause, verdicts[clause])
    if args.classical:
        classical = is_classical_left_order(embedding)
        report.verdict(
            "members form a classical left order",
            classical,
            None if classical else classical.failure,
        )


def run_lift(args, report):
    source_view = _load_inverse(args.source_ambient, "source ambient")
    target_view = _load_inverse(args.target_ambient, "target ambient")
    source = SubsetEmbedding(source_view, _parse_members(args.source_members))
    target = SubsetEmbedding(target_view, _parse_members(args.target_members))
    phi = Morphism.from_text(source.sub, target.sub, _read_text(args.phi))
    outcome = lift_morphism(source, target, phi)
    if outcome:
        report.verdict("ambient R-compatibility on members", True)
        report.verdict("ternary ideal-inclusion compatibility", True)
        report.verdict("extension to the ambient semigroup exists", True)
        lines = [
            "%d -> %d" % (q, outcome.lifted(q)) for q in range(source.view.order)
        ]
        report.section("lifted map", "\n".join(lines))
        report.data["lifted"] = list(outcome.lifted.mapping)
    else:
        if outcome.condition == "r_pairs":
            report.verdict("ambient R-compatibility on members", False, outcome.witness)
        else:
            report.verdict("ternary ideal-inclusion compatibility", False, outcome.witness)
        report.verdict(
            "extension to the ambient semigroup exists",
            False,
            (outcome.condition, outcome.witness),
        )


def run_assemble(args, report):
    diagram = load_diagram(args.diagram)
    built = build_strong_semilattice(diagram)
    report.verdict("glued product is associative", True)
    report.data["order"] = built.semigroup.order
    report.section("glued table", built.semigroup.to_text())
    components_ample = all(
        bool(is_left_ample(comp)) for comp in diagram.components.values()
    )
    connectors_two_one = components_ample and all(
        phi.is_two_one()
        for (upper, lower), phi in diagram.connectors.items()
        if upper != lower
    )
    if components_ample and connectors_two_one:
        verdicts = ample_semilattice_report(diagram)
        report.verdict("glued semigroup is left ample", verdicts["left_ample"])
        report.verdict("R* glues from the components", verdicts["rstar_matches_components"])
        if verdicts["lc_iff_connectors_preserve"] is not None:
            report.verdict(
                "Condition (LC) passes to the glued semigroup",
                verdicts["lc_iff_connectors_preserve"],
            )
    if args.hull:
        result = assemble_hull_semilattice(diagram, budget=args.budget)
        report.verdict("glued hulls form an inverse semigroup", True)
        report.verdict("components embed as a straight left I-order", True)
        report.verdict("glued hulls match the inverse hull of the glued semigroup", True)
        report.data["glued_hull_order"] = result.quotient_built.semigroup.order
        report.data["inverse_hull_order"] = result.big_hull.hull.order
        report.section("glued hull table", result.quotient_built.semigroup.to_text())


def run_equiv(args, report):
    if args.builtin == "nat":
        lac = LacObject(additive_naturals(args.window))
        first = roundtrip_order(lac, budget=args.budget)
        report.verdict("carrier matches the members of its hull pair", first.ok)
        pair = pair_of_order(lac, budget=args.budget)
        second = roundtrip_pair(pair, budget=args.budget)
        report.verdict("pair matches the hull pair of its members", second.ok)
    elif args.table and args.members:
        view = _load_inverse(args.table, "ambient")
        pair = BisObject(SubsetEmbedding(view, _parse_members(args.members)))
        first = roundtrip_pair(pair, budget=args.budget)
        report.verdict("pair matches the hull pair of its members", first.ok)
        lac = order_of_pair(pair)
        second = roundtrip_order(lac, budget=args.budget)
        report.verdict("carrier matches the members of its hull pair", second.ok)
    elif args.table:
        lac = LacObject(_load_table(args.table))
        first = roundtrip_order(lac, budget=args.budget)
        report.verdict("carrier matches the members of its hull pair", first.ok)
        pair = pair_of_order(lac, budget=args.budget)
        second = roundtrip_pair(pair, budget=args.budget)
        report.verdict("pair matches the hull pair of its members", second.ok)
    else:
        raise InputError("need a table file (optionally with --members), or --builtin nat")


def run_enumerate(args, report):
    filters = tuple(dict.fromkeys(args.filter))
    tables = list(enumerate_semigroups(args.n, filters=filters, up_to_iso=args.iso))
    report.data["count"] = len(tables)
    report.section("count", str(len(tables)))
    if args.show:
        report.section(
            "tables",
            "\n".join("".join(str(v) for v in t.flat()) for t in tables),
        )


def run_builtin(args, report):
    s = SymbolicSemigroup(args.kind, args.window)
    elements = s.elements()
    report.data["kind"] = args.kind
    report.data["window"] = args.window
    report.data["count"] = len(elements)
    identity = s.identity_element()
    if identity is not None:
        report.data["identity"] = s.format_element(identity)
    report.section("elements", " ".join(s.format_element(x) for x in elements))
    report.section("idempotents", " ".join(s.format_element(x) for x in s.idempotents()))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="iquotients",
        description="Audit semigroup tables, build inverse hulls, and lift maps.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="audit a table for key properties")
    p.add_argument("table", help="semigroup table file")
    p.add_argument("--ample", action="store_true", help="check left ampleness")
    p.add_argument("--lc", action="store_true", help="check Condition (LC)")
    p.add_argument("--inverse", action="store_true", help="check inverseness")
    p.set_defaults(run=run_check)

    p = sub.add_parser("hull", parents=[common], help="build the inverse hull of a table")
    p.add_argument("table", help="left ample semigroup table file")
    p.add_argument("--budget", type=int, default=200000, help="closure size cap")
    p.set_defaults(run=run_hull)

    p = sub.add_parser("iorder", parents=[common], help="test a member set inside an inverse table")
    p.add_argument("ambient", nargs="?", help="inverse semigroup table file")
    p.add_argument("members", nargs="?", help="comma-separated member indices")
    p.add_argument("--builtin", choices=["bicyclic"], help="use a built-in pair instead")
    p.add_argument("--window", type=int, default=20, help="window for built-in pairs")
    p.add_argument(
        "--suite",
        action="append",
        choices=["transfer", "unitary"],
        default=[],
        help="also run a consistency suite",
    )
    p.add_argument("--classical", action="store_true", help="also test for a classical left order")
    p.set_defaults(run=run_iorder)

    p = sub.add_parser("lift", parents=[common], help="lift a member morphism to the ambients")
    p.add_argument("source_ambient", help="source inverse semigroup table file")
    p.add_argument("source_members", help="comma-separated source member indices")
    p.add_argument("target_ambient", help="target inverse semigroup table file")
    p.add_argument("target_members", help="comma-separated target member indices")
    p.add_argument("phi", help="morphism file with 'i -> j' lines between member tables")
    p.set_defaults(run=run_lift)

    p = sub.add_parser("assemble", parents=[common], help="glue a semilattice diagram of monoids")
    p.add_argument("diagram", help="diagram description file")
    p.add_argument("--hull", action="store_true", help="also glue the hulls and compare")
    p.add_argument("--budget", type=int, default=200000, help="closure size cap")
    p.set_defaults(run=run_assemble)

    p = sub.add_parser("equiv", parents=[common], help="round-trip a carrier or a pair")
    p.add_argument("mode", choices=["roundtrip"])
    p.add_argument("table", nargs="?", help="table file (carrier, or ambient with --members)")
    p.add_argument("--members", help="comma-separated member indices of an ambient table")
    p.add_argument("--builtin", choices=["nat"], help="use the additive naturals instead")
    p.add_argument("--window", type=int, default=20, help="window for --builtin nat")
    p.add_argument("--budget", type=int, default=200000, help="closure size cap")
    p.set_defaults(run=run_equiv)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate semigroup tables")
    p.add_argument("-n", type=int, required=True, help="order to enumerate")
    p.add_argument(
        "--filter",
        action="append",
        choices=list(FILTER_NAMES),
        default=[],
        help="keep only tables with this property",
    )
    p.add_argument("--iso", action="store_true", help="one table per isomorphism type")
    p.add_argument("--show", action="store_true", help="print the tables as flat digit rows")
    p.set_defaults(run=run_enumerate)

    p = sub.add_parser("builtin", parents=[common], help="describe a built-in semigroup window")
    p.add_argument("kind", choices=["bicyclic", "nat", "free2"])
    p.add_argument("--window", type=int, default=20, help="how far to list elements")
    p.set_defaults(run=run_builtin)

    return parser


def main(argv=None):
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    report = Report(argv)
    start = time.perf_counter()
    try:
        args.run(args, report)
    except InputError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except ResourceError as exc:
        print("resource error: %s" % exc, file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print("internal consistency failure: %s" % exc, file=sys.stderr)
        return 3
    report.timing("total", time.perf_counter() - start)
    print(report.to_json() if args.json else report.to_text())
    return 0 if report.all_true() else 1


if __name__ == "__main__":
    sys.exit(main())
