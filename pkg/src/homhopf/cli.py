"""Command-line surface.

Inputs name either files or built-in catalog entries; all inputs are parsed
into one namespace, so module entries in one file may reference structures
from another.  Exit codes: 0 all checks pass, 1 an axiom fails (the first
failing axiom and its witness are printed), 2 usage or parse errors.
Reports are deterministic at any --jobs level.
"""

import argparse
import os
import sys

from . import io as hio
from .catalog import catalog
from .double import drinfeld_double, dual_algebra
from .errors import HomHopfError, ParseError, ValidationError
from .modules import (LeftModule, ModuleAlgebra, RightComodule, RightModule,
                      YDModule, check_comodule, check_module,
                      check_module_hom_algebra, check_yetter_drinfeld)
from .report import set_default_jobs
from .smash import BimoduleHomAlgebra, diagonal_crossed_product, lr_smash, smash_product, two_sided_smash
from .structures import (HomAlgebra, HomBialgebra, HomCoalgebra,
                         HomHopfAlgebra, check_hom_algebra,
                         check_hom_bialgebra, check_hom_coalgebra,
                         check_hom_hopf, check_quasitriangular, yau_twist)
from .twisting import LRData, TwistingMap, check_lr_data, check_twisting_map, \
    flip_twisting, lr_twisted_tensor_product, tensor_product_algebra, \
    twisted_tensor_product


def _load_inputs(names):
    """Parse files / fetch catalog entries into one ordered namespace."""
    cat = catalog()
    namespace = {}
    order = []
    entries = []
    for name in names:
        if os.path.exists(name):
            entries.extend(hio.parse_path(name))
        elif name in cat:
            ce = cat[name]
            ns = hio.NamedStructure(ce.name, ce.kind, ce.obj, {})
            namespace[ce.name] = ns
            order.append(ns)
        else:
            raise ParseError("no such file or catalog entry: %r" % name)
    cat_ns = {c.name: hio.NamedStructure(c.name, c.kind, c.obj, {})
              for c in cat.values()}
    resolved = hio.resolve(entries, namespace={**cat_ns, **namespace})
    order.extend(resolved.values())
    namespace.update(resolved)
    return order, namespace


class Reporter:
    def __init__(self, stream, machine):
        self.stream = stream
        self.machine = machine
        self.failed = False

    def emit(self, structure, suite, report):
        if not report.passed:
            self.failed = True
        for r in report.results:
            if self.machine:
                line = "structure=%s suite=%s axiom=%s status=%s" % (
                    structure, suite, r.axiom, "pass" if r.passed else "fail")
                if not r.passed:
                    line += " witness=%s lhs=%s rhs=%s" % (
                        _fmt_tuple(r.witness), _fmt_side(r.lhs), _fmt_side(r.rhs))
                print(line, file=self.stream)
            else:
                prefix = "PASS" if r.passed else "FAIL"
                tag = " (derived)" if r.derived else ""
                line = "%s  %s/%s: %s%s" % (prefix, structure, suite, r.axiom, tag)
                if not r.passed:
                    line += "\n      witness %s\n      lhs %s\n      rhs %s" % (
                        _fmt_tuple(r.witness), _fmt_side(r.lhs), _fmt_side(r.rhs))
                print(line, file=self.stream)

    def note(self, text):
        if not self.machine:
            print(text, file=self.stream)


def _fmt_tuple(t):
    if t is None:
        return "()"
    return "(" + ",".join(str(i) for i in t) + ")"


def _fmt_side(side):
    if side is None:
        return "?"
    if hasattr(side, "entries"):
        return "[" + ",".join(str(v) for v in side.entries) + "]"
    return str(side)


_SUITES = ("algebra", "coalgebra", "bialgebra", "hopf", "qt", "module",
           "yd", "all")


def _run_checks(ns, suite, rep):
    obj = ns.obj
    ran = False
    if suite in ("algebra", "all") and isinstance(
            obj, (HomAlgebra, HomBialgebra, HomHopfAlgebra)):
        rep.emit(ns.name, "algebra", check_hom_algebra(obj))
        ran = True
    if suite in ("coalgebra", "all") and isinstance(
            obj, (HomCoalgebra, HomBialgebra, HomHopfAlgebra)):
        rep.emit(ns.name, "coalgebra", check_hom_coalgebra(obj))
        ran = True
    if suite in ("bialgebra", "all") and isinstance(
            obj, (HomBialgebra, HomHopfAlgebra)):
        rep.emit(ns.name, "bialgebra", check_hom_bialgebra(obj))
        ran = True
    if suite in ("hopf", "all") and isinstance(obj, HomHopfAlgebra):
        rep.emit(ns.name, "hopf", check_hom_hopf(obj))
        ran = True
    if suite in ("qt", "all") and "r_matrix" in ns.refs:
        rep.emit(ns.name, "qt", check_quasitriangular(obj, ns.refs["r_matrix"]))
        ran = True
    if suite in ("module", "all"):
        if isinstance(obj, (LeftModule, RightModule)):
            rep.emit(ns.name, "module", check_module(obj))
            ran = True
        elif isinstance(obj, ModuleAlgebra):
            rep.emit(ns.name, "module", check_module_hom_algebra(obj))
            ran = True
        elif isinstance(obj, RightComodule):
            rep.emit(ns.name, "module", check_comodule(obj))
            ran = True
    if suite in ("yd", "all") and isinstance(obj, YDModule):
        rep.emit(ns.name, "yd", check_yetter_drinfeld(obj))
        ran = True
    if suite == "all" and isinstance(obj, TwistingMap):
        rep.emit(ns.name, "twisting", check_twisting_map(obj))
        ran = True
    if suite == "all" and isinstance(obj, LRData):
        rep.emit(ns.name, "twisting", check_lr_data(obj))
        ran = True
    return ran


def cmd_check(args, out):
    rep = Reporter(out, args.machine)
    order, _ = _load_inputs(args.inputs)
    any_ran = False
    for ns in order:
        if _run_checks(ns, args.suite, rep):
            any_ran = True
    if not any_ran:
        raise ValidationError("no structure accepts suite %r" % args.suite)
    return 1 if rep.failed else 0


def cmd_twist(args, out):
    order, namespace = _load_inputs(args.inputs)
    endo_order, _ = _load_inputs([args.endo])
    endos = [ns for ns in endo_order if ns.kind == "map"]
    if len(endos) != 1:
        raise ValidationError("--endo must supply exactly one map entry")
    targets = [ns for ns in order
               if isinstance(ns.obj, (HomAlgebra, HomCoalgebra, HomBialgebra,
                                      HomHopfAlgebra))]
    if len(targets) != 1:
        raise ValidationError("twist expects exactly one structure input")
    twisted = yau_twist(targets[0].obj, endos[0].obj)
    name = args.name or targets[0].name + "-twisted"
    entries = [hio.entry_for(name, twisted)]
    _write(args.output, entries, out, args.machine)
    return 0


def _collect_product_inputs(order):
    algebras = [ns for ns in order
                if isinstance(ns.obj, (HomAlgebra, HomBialgebra, HomHopfAlgebra))]
    mod_algs = [ns for ns in order if isinstance(ns.obj, ModuleAlgebra)]
    twistings = [ns for ns in order if isinstance(ns.obj, TwistingMap)]
    lrdatas = [ns for ns in order if isinstance(ns.obj, LRData)]
    return algebras, mod_algs, twistings, lrdatas


def cmd_product(args, out):
    order, _ = _load_inputs(args.inputs)
    algebras, mod_algs, twistings, lrdatas = _collect_product_inputs(order)
    kind = args.kind
    if kind == "tensor":
        if len(algebras) < 2:
            raise ValidationError("tensor product needs two algebras")
        a, b = algebras[0].obj, algebras[1].obj
        result = tensor_product_algebra(a, b)
        name = "%s-tensor-%s" % (algebras[0].name, algebras[1].name)
    elif kind == "twisted":
        if len(twistings) != 1:
            raise ValidationError("twisted product needs one twisting entry")
        result = twisted_tensor_product(twistings[0].obj)
        name = twistings[0].name + "-product"
    elif kind == "lr-twisted":
        if len(lrdatas) != 1:
            raise ValidationError("lr-twisted product needs one (r, q) entry")
        result = lr_twisted_tensor_product(lrdatas[0].obj)
        name = lrdatas[0].name + "-product"
    elif kind in ("smash-left", "smash-right"):
        side = kind.split("-")[1]
        cands = [ns for ns in mod_algs if ns.obj.side == side]
        if len(cands) != 1:
            raise ValidationError("%s needs one %s module-algebra entry"
                                  % (kind, side))
        _, result = smash_product(cands[0].obj)
        name = cands[0].name + "-smash"
    elif kind == "two-sided":
        lefts = [ns for ns in mod_algs if ns.obj.side == "left"]
        rights = [ns for ns in mod_algs if ns.obj.side == "right"]
        if len(lefts) != 1 or len(rights) != 1:
            raise ValidationError(
                "two-sided smash needs one left and one right module algebra")
        result = two_sided_smash(lefts[0].obj, rights[0].obj)
        name = "%s-%s-two-sided" % (lefts[0].name, rights[0].name)
    elif kind in ("lr-smash", "diagonal"):
        bha = _bimodule_from(mod_algs)
        if kind == "lr-smash":
            _, result = lr_smash(bha)
        else:
            _, result = diagonal_crossed_product(bha)
        name = "%s-%s" % (mod_algs[0].name.rsplit("-", 1)[0], kind)
    else:
        raise ValidationError("unknown product kind %r" % kind)
    _write(args.output, [hio.entry_for(name, result)], out, args.machine)
    return 0


def _bimodule_from(mod_algs):
    lefts = [ns for ns in mod_algs if ns.obj.side == "left"]
    rights = [ns for ns in mod_algs if ns.obj.side == "right"]
    if len(lefts) != 1 or len(rights) != 1:
        raise ValidationError(
            "this product needs one left and one right module algebra on one carrier")
    left, right = lefts[0].obj, rights[0].obj
    if left.algebra != right.algebra or left.base != right.base:
        raise ValidationError("the two actions live on different carriers or bases")
    return BimoduleHomAlgebra(left.algebra, left.base, left.action,
                              right.action,
                              unital_action=left.unital and right.unital)


def cmd_dual(args, out):
    order, _ = _load_inputs(args.inputs)
    hopfs = [ns for ns in order if isinstance(ns.obj, HomHopfAlgebra)]
    if len(hopfs) != 1:
        raise ValidationError("dual expects exactly one Hopf structure")
    base_name = hopfs[0].name
    dual = dual_algebra(hopfs[0].obj, args.p, args.q)
    suffix = "" if (args.p, args.q) == (0, 0) else "-p%dq%d" % (args.p, args.q)
    dual_name = base_name + "-dual" + suffix
    entries = [
        hio.entry_for(base_name, hopfs[0].obj),
        hio.entry_for(dual_name, dual.algebra),
        hio.entry_for(
            dual_name + "-left",
            ModuleAlgebra(dual.base, dual.algebra, dual.bimodule.left_action,
                          side="left", unital=True),
            refs={"module_of": base_name, "carrier": dual_name}),
        hio.entry_for(
            dual_name + "-right",
            ModuleAlgebra(dual.base, dual.algebra, dual.bimodule.right_action,
                          side="right", unital=True),
            refs={"module_of": base_name, "carrier": dual_name}),
    ]
    _write(args.output, entries, out, args.machine)
    return 0


def cmd_double(args, out):
    rep = Reporter(out, args.machine)
    order, _ = _load_inputs(args.inputs)
    hopfs = [ns for ns in order if isinstance(ns.obj, HomHopfAlgebra)]
    if len(hopfs) != 1:
        raise ValidationError("double expects exactly one Hopf structure")
    dbl = drinfeld_double(hopfs[0].obj, max_dim=args.max_dim)
    status = 0
    if args.verify:
        hopf_rep = check_hom_hopf(dbl.hopf)
        qt_rep = check_quasitriangular(dbl.hopf, dbl.r)
        name = hopfs[0].name + "-double"
        rep.emit(name, "hopf", hopf_rep)
        rep.emit(name, "qt", qt_rep)
        status = 0 if (hopf_rep.passed and qt_rep.passed) else 1
    if args.output:
        entry = hio.entry_for(hopfs[0].name + "-double", dbl.hopf,
                              refs={"r_matrix": dbl.r})
        _write(args.output, [entry], out, args.machine)
    return status


def cmd_catalog(args, out):
    cat = catalog()
    for name, ce in cat.items():
        print("%-24s %-8s %s" % (name, ce.kind, ce.note), file=out)
    if args.export:
        os.makedirs(args.export, exist_ok=True)
        for name, ce in cat.items():
            hio.write_path(os.path.join(args.export, name + ".json"),
                           [hio.entry_for(name, ce.obj, note=ce.note)])
        print("exported %d entries to %s" % (len(cat), args.export), file=out)
    return 0


def _write(path, entries, out, machine):
    if path:
        hio.write_path(path, entries)
        if not machine:
            print("wrote %s (%d entries)" % (path, len(entries)), file=out)
    else:
        out.write(hio.render(entries))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int,
                        default=int(os.environ.get("HOMHOPF_JOBS", "1")),
                        help="check parallelism (output is identical at any level)")
    common.add_argument("--machine", action="store_true",
                        help="machine-readable report lines")
    ap = argparse.ArgumentParser(
        prog="homhopf",
        description="Exact checks and constructions for Hom-Hopf structure "
                    "constants, up to the Drinfeld double.")
    sub = ap.add_subparsers(dest="command", required=True)

    def sub_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = sub_parser("check", help="verify axioms of structures in files")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--suite", choices=_SUITES, default="all")
    p.set_defaults(fn=cmd_check)

    p = sub_parser("twist", help="twist a structure along an endomorphism")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--endo", required=True)
    p.add_argument("--name")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_twist)

    p = sub_parser("product", help="build a (twisted) product algebra")
    p.add_argument("--kind", required=True,
                   choices=["tensor", "twisted", "lr-twisted", "smash-left",
                            "smash-right", "two-sided", "lr-smash", "diagonal"])
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_product)

    p = sub_parser("dual", help="the dual bimodule Hom-algebra")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_dual)

    p = sub_parser("double", help="the Drinfeld double")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--max-dim", type=int, default=8)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_double)

    p = sub_parser("catalog", help="list or export built-in structures")
    p.add_argument("--export")
    p.set_defaults(fn=cmd_catalog)
    return ap


def cli_run(argv, out=None):
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    set_default_jobs(args.jobs)
    try:
        return args.fn(args, out)
    except (ParseError, ValidationError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except HomHopfError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def main():
    sys.exit(cli_run(sys.argv[1:]))


if __name__ == "__main__":
    main()
