"""The `epk` command-line workbench.

    epk MODEL validate [--mode global|local] [--require-kd45]
    epk MODEL check (--state S | --agent A | --global) FORMULA [--expect true|false]
    epk MODEL update offline J [-o OUT] [--in-place]
    epk MODEL update online J --locals S... [-o OUT] [--in-place]
    epk MODEL update lie-offline --liar I --target J [-o OUT] [--in-place]
    epk MODEL update lie-online --liar I --new J --locals S... [-o OUT] [--in-place]
    epk MODEL export-dot -o OUT
    epk MODEL show

Exit status: 0 on success, 1 when a --expect check disagrees (or a required
validation fails), 2 on any error.
"""

from __future__ import annotations

import argparse
import sys

from . import frames, serialize
from .formulas import ParseError, parse
from .model import KripkeModel, ModelError, StateId
from .semantics import holds_at, holds_for_agent, holds_globally
from .updates import UpdateSpec, apply_update


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="epk",
                                 description="Epistemic Kripke model workbench")
    ap.add_argument("model", help="path to a model document (JSON)")
    sub = ap.add_subparsers(dest="command", required=True)

    p_val = sub.add_parser("validate", help="report frame properties per agent")
    p_val.add_argument("--mode", choices=["global", "local"], default="global")
    p_val.add_argument("--require-kd45", action="store_true",
                       help="exit 1 unless every agent's report is KD45")

    p_chk = sub.add_parser("check", help="evaluate a formula")
    scope = p_chk.add_mutually_exclusive_group(required=True)
    scope.add_argument("--state", metavar="S")
    scope.add_argument("--agent", metavar="A")
    scope.add_argument("--global", dest="global_", action="store_true")
    p_chk.add_argument("formula")
    p_chk.add_argument("--expect", choices=["true", "false"])

    p_upd = sub.add_parser("update", help="apply an ontological update")
    upd = p_upd.add_subparsers(dest="kind", required=True)

    k_off = upd.add_parser("offline", help="agent goes offline")
    k_off.add_argument("target", metavar="J")

    k_on = upd.add_parser("online", help="agent comes online")
    k_on.add_argument("target", metavar="J")
    k_on.add_argument("--locals", nargs="+", required=True, metavar="S")

    k_loff = upd.add_parser("lie-offline", help="untruthful offline announcement")
    k_loff.add_argument("--liar", required=True, metavar="I")
    k_loff.add_argument("--target", required=True, metavar="J")

    k_lon = upd.add_parser("lie-online", help="untruthful online announcement")
    k_lon.add_argument("--liar", required=True, metavar="I")
    k_lon.add_argument("--new", dest="target", required=True, metavar="J")
    k_lon.add_argument("--locals", nargs="+", required=True, metavar="S")

    for k in (k_off, k_on, k_loff, k_lon):
        k.add_argument("-o", "--output", metavar="OUT",
                       help="write the updated model here")
        k.add_argument("--in-place", action="store_true",
                       help="overwrite the input file")

    p_dot = sub.add_parser("export-dot", help="write a Graphviz rendering")
    p_dot.add_argument("-o", "--output", required=True, metavar="OUT")

    sub.add_parser("show", help="summarize the model")
    return ap


def _report_lines(rep: frames.FramePropertyReport, mode: str):
    flags = " ".join(f"{p}={'yes' if getattr(rep, p) else 'no'}"
                     for p in frames.PROPERTIES)
    verdict = f"KD45={'yes' if frames.is_kd45(rep) else 'no'} S5={'yes' if frames.is_s5(rep) else 'no'}"
    yield f"agent {rep.agent} [{mode} over {len(rep.domain)} states]: {flags}  {verdict}"
    for prop in frames.PROPERTIES:
        if prop in rep.witnesses:
            states = ", ".join(s.name for s in rep.witnesses[prop])
            yield f"  {prop} fails at: {states}"


def _cmd_validate(model: KripkeModel, args, out) -> int:
    reports = frames.classify_model(model, args.mode)
    all_kd45 = True
    for a in sorted(reports):
        for line in _report_lines(reports[a], args.mode):
            print(line, file=out)
        all_kd45 = all_kd45 and frames.is_kd45(reports[a])
    if args.require_kd45 and not all_kd45:
        return 1
    return 0


def _cmd_check(model: KripkeModel, args, out) -> int:
    f = parse(args.formula)
    if args.state is not None:
        value = holds_at(model, StateId.parse(args.state), f)
    elif args.agent is not None:
        value = holds_for_agent(model, args.agent, f)
    else:
        value = holds_globally(model, f)
    print("true" if value else "false", file=out)
    if args.expect is not None and (args.expect == "true") != value:
        return 1
    return 0


def _cmd_update(model: KripkeModel, args, out) -> int:
    spec = UpdateSpec(
        kind=args.kind.replace("-", "_"),
        target=args.target,
        liar=getattr(args, "liar", None),
        new_locals=(frozenset(StateId.parse(s) for s in args.locals)
                    if getattr(args, "locals", None) else None),
    )
    result = apply_update(model, spec)
    print(f"update {args.kind} ({args.target}): "
          f"{len(model.states)} -> {len(result.model.states)} states, "
          f"{len(result.discarded_states)} discarded", file=out)
    if result.discarded_states:
        print("  discarded: " + ", ".join(sorted(s.name for s in result.discarded_states)),
              file=out)
    for a in sorted(set(result.added_edges) | set(result.removed_edges)):
        add, rem = result.added_edges.get(a, 0), result.removed_edges.get(a, 0)
        if add or rem:
            print(f"  edges[{a}]: +{add} -{rem}", file=out)
    if args.in_place:
        serialize.save_model(result.model, args.model)
    if args.output:
        serialize.save_model(result.model, args.output)
    return 0


def _cmd_show(model: KripkeModel, out) -> int:
    print(f"states ({len(model.states)}): "
          + ", ".join(sorted(s.name for s in model.states)), file=out)
    print(f"agents ({len(model.agents)}): " + ", ".join(sorted(model.agents)), file=out)
    print(f"props ({len(model.props)}): " + ", ".join(sorted(model.props)), file=out)
    for a in sorted(model.agents):
        loc = ", ".join(sorted(s.name for s in model.locals[a]))
        print(f"  I({a}) = {{{loc}}}  |R({a})| = {len(model.relations[a])}", file=out)
    if model.meta:
        for k in sorted(model.meta):
            print(f"meta.{k}: {model.meta[k]}", file=out)
    return 0


def main(argv=None, out=sys.stdout, err=sys.stderr) -> int:
    args = build_parser().parse_args(argv)
    try:
        model = serialize.load_model(args.model)
        if args.command == "validate":
            return _cmd_validate(model, args, out)
        if args.command == "check":
            return _cmd_check(model, args, out)
        if args.command == "update":
            return _cmd_update(model, args, out)
        if args.command == "export-dot":
            serialize.export_dot(model, args.output)
            print(f"wrote {args.output}", file=out)
            return 0
        return _cmd_show(model, out)
    except (ModelError, ParseError, serialize.DocumentError) as e:
        print(f"epk: error: {e}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
