"""Command-line front end.

Exit codes: 0 = YES / Accept / success, 1 = NO / Reject, 2 = malformed or
unsupported input, 3 = budget exceeded.  The first stdout line of `solve`,
`verify` and `oracle` is machine-parsable (YES / NO / Accept / Reject).
The oracle budget honors the MATCHFLIP_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import oracle
from .cograph import is_cograph, solve_cograph
from .errors import (
    BudgetExceededError,
    MalformedInputError,
    MatchFlipError,
)
from .graph import MODE_FLIP, MODE_FLIP_SLIDE, MODE_KFLIP, verify_sequence
from .hardness import reduce_ncl_to_pmr, subdivide_for_kflip
from .io import (
    Instance,
    dump_json,
    dumps_canonical,
    instance_to_dict,
    load_instance,
    load_ncl,
    load_sequence,
    sequence_to_dict,
)
from .outerplanar import is_outerplanar, solve_outerplanar, verify_boundary_order
from .strongly_orderable import solve_strongly_orderable, verify_strong_ordering

EXIT_YES = 0
EXIT_NO = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3


def _budget(args) -> int:
    if getattr(args, "budget", None):
        return args.budget
    env = os.environ.get("MATCHFLIP_BUDGET")
    return int(env) if env else oracle.DEFAULT_BUDGET


def _mode(args) -> oracle.Mode:
    name = getattr(args, "mode", "flip") or "flip"
    if name == MODE_KFLIP:
        if not getattr(args, "k", None):
            raise MalformedInputError("kflip mode needs --k")
        return oracle.kflip(args.k)
    if name == MODE_FLIP_SLIDE:
        return oracle.FLIP_SLIDE
    if name == MODE_FLIP:
        return oracle.FLIP_ONLY
    raise MalformedInputError(f"unknown mode {name!r}")


def _emit_sequence(path: Optional[str], seq) -> None:
    if path:
        dump_json(path, sequence_to_dict(seq))


def _detect_class(inst: Instance) -> Optional[str]:
    if is_cograph(inst.graph):
        return "cograph"
    if is_outerplanar(inst.graph):
        return "outerplanar"
    if "strong_order" in inst.hints:
        return "strongly_orderable"
    return None


def _cmd_solve(args) -> int:
    inst = load_instance(args.instance)
    cls = args.cls
    if cls == "auto":
        cls = _detect_class(inst)
        if cls is None:
            raise MalformedInputError(
                "no solver applies: not a cograph, not outerplanar, no strong_order hint"
            )
    if cls == "strongly_orderable":
        order = inst.hints.get("strong_order")
        if order is None:
            raise MalformedInputError("strongly_orderable solver needs a strong_order hint")
        chk = verify_strong_ordering(inst.graph, order)
        if not chk.valid:
            raise MalformedInputError(
                f"strong_order hint is not a strong ordering (witness {chk.witness})"
            )
        seq = solve_strongly_orderable(inst.graph, order, inst.m_ini, inst.m_tar)
        yes = True
    elif cls == "outerplanar":
        hint = inst.hints.get("boundary_order")
        if hint is not None and not verify_boundary_order(inst.graph, hint):
            raise MalformedInputError("boundary_order hint is not a valid boundary cycle")
        res = solve_outerplanar(inst.graph, inst.m_ini, inst.m_tar)
        yes, seq = res.yes, res.sequence
    elif cls == "cograph":
        res = solve_cograph(inst.graph, inst.m_ini, inst.m_tar)
        yes, seq = res.yes, res.sequence
    else:
        raise MalformedInputError(f"unknown class {cls!r}")
    if not yes:
        print("NO")
        return EXIT_NO
    verdict = verify_sequence(inst.graph, inst.m_ini, seq, inst.m_tar)
    if not verdict.ok:
        raise RuntimeError(f"internal: produced sequence fails verification: {verdict}")
    print("YES")
    print(f"length {len(seq)}")
    _emit_sequence(args.emit_sequence, seq)
    return EXIT_YES


def _cmd_verify(args) -> int:
    inst = load_instance(args.instance)
    seq = load_sequence(args.sequence)
    if args.mode and args.mode != seq.mode:
        raise MalformedInputError(
            f"--mode {args.mode} does not match sequence mode {seq.mode}"
        )
    verdict = verify_sequence(inst.graph, inst.m_ini, seq, inst.m_tar)
    if verdict.ok:
        print("Accept")
        return EXIT_YES
    print(f"Reject step={verdict.step} reason={verdict.reason}")
    return EXIT_NO


def _cmd_oracle(args) -> int:
    inst = load_instance(args.instance)
    mode = _mode(args)
    res = oracle.reachable(
        inst.graph, inst.m_ini, inst.m_tar, mode,
        want_path=args.want_path, budget=_budget(args),
    )
    if not res.reachable:
        print("NO")
        return EXIT_NO
    print("YES")
    body = {"distance": res.distance}
    if res.sequence is not None:
        body["sequence"] = sequence_to_dict(res.sequence)
        _emit_sequence(args.emit_sequence, res.sequence)
    print(json.dumps(body, sort_keys=True))
    return EXIT_YES


def _cmd_stats(args) -> int:
    inst = load_instance(args.instance)
    mode = _mode(args)
    target = "perfect" if args.target == "perfect" else int(args.target)
    source = inst.m_ini if inst.m_ini else None
    st = oracle.reconfiguration_stats(
        inst.graph, target, mode, source=source, budget=_budget(args)
    )
    print(
        json.dumps(
            {
                "nodes": st.nodes,
                "components": st.components,
                "component_sizes": list(st.component_sizes),
                "diameter": st.diameter,
            },
            sort_keys=True,
        )
    )
    return EXIT_YES


def _cmd_gen_ncl(args) -> int:
    machine, c_ini, c_tar = load_ncl(args.machine)
    if c_ini is None or c_tar is None:
        raise MalformedInputError("machine file must carry c_ini and c_tar")
    inst = reduce_ncl_to_pmr(machine, c_ini, c_tar)
    if args.k and args.k != 4:
        inst = subdivide_for_kflip(inst, args.k)
    payload = instance_to_dict(inst.graph, inst.m_ini, inst.m_tar)
    _write_payload(args.out, payload)
    return EXIT_YES


def _cmd_gen_random(args) -> int:
    from . import generators

    fns = {
        "interval": generators.random_interval_instance,
        "outerplanar": generators.random_outerplanar_instance,
        "cograph": generators.random_cograph_instance,
    }
    if args.cls not in fns:
        raise MalformedInputError(f"unknown class {args.cls!r}")
    payload = fns[args.cls](args.n, args.seed)
    _write_payload(args.out, payload)
    return EXIT_YES


def _write_payload(out: Optional[str], payload: dict) -> None:
    if out and out != "-":
        dump_json(out, payload)
    else:
        sys.stdout.write(dumps_canonical(payload))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="matchflip",
        description="Flip-based reconfiguration of (perfect) matchings.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="run a polynomial solver on an instance")
    s.add_argument("instance")
    s.add_argument(
        "--class", dest="cls", default="auto",
        choices=["auto", "strongly_orderable", "outerplanar", "cograph"],
    )
    s.add_argument("--emit-sequence", default=None)
    s.set_defaults(func=_cmd_solve)

    s = sub.add_parser("verify", help="check a sequence file against an instance")
    s.add_argument("instance")
    s.add_argument("sequence")
    s.add_argument("--mode", default=None, choices=[MODE_FLIP, MODE_FLIP_SLIDE, MODE_KFLIP])
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("oracle", help="brute-force reachability (BFS)")
    s.add_argument("instance")
    s.add_argument("--mode", default=MODE_FLIP, choices=[MODE_FLIP, MODE_FLIP_SLIDE, MODE_KFLIP])
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--want-path", action="store_true")
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--emit-sequence", default=None)
    s.set_defaults(func=_cmd_oracle)

    s = sub.add_parser("stats", help="reconfiguration-graph statistics")
    s.add_argument("instance")
    s.add_argument("--mode", default=MODE_FLIP, choices=[MODE_FLIP, MODE_FLIP_SLIDE, MODE_KFLIP])
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--target", default="perfect", help='"perfect" or a size')
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=_cmd_stats)

    s = sub.add_parser("gen-ncl", help="reduce an NCL machine to an instance")
    s.add_argument("machine")
    s.add_argument("-o", "--out", default="-")
    s.add_argument("--k", type=int, default=None, help="subdivide for k-flip mode")
    s.set_defaults(func=_cmd_gen_ncl)

    s = sub.add_parser("gen-random", help="emit a random instance")
    s.add_argument("--class", dest="cls", required=True,
                   choices=["interval", "outerplanar", "cograph"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("-o", "--out", default="-")
    s.set_defaults(func=_cmd_gen_random)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (MalformedInputError, MatchFlipError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
