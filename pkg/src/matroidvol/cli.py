"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 precondition violation,
3 oracle budget exceeded, 4 a self-test check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial

from matroidvol import engine, oracle, selftest
from matroidvol.descent import (
    InvalidSequence, delta, delta_leq, down_set, dual_sequence, seq_new, to_partition,
)
from matroidvol.families import random_circuit_hyperplanes
from matroidvol.matroid import (
    Matroid, MatroidError, PreconditionError, from_document, schubert, sparse_paving,
)

EXIT_INVALID = 1
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3
EXIT_SELFTEST = 4


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _load_document(source: str) -> dict:
    text = source
    if source == "-":
        text = sys.stdin.read()
    elif not source.lstrip().startswith("{"):
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def _load_matroid(source: str) -> Matroid:
    return from_document(_load_document(source))


def _parse_subset(text: str) -> list[int]:
    text = text.strip()
    try:
        if text.startswith("["):
            values = json.loads(text)
        else:
            values = [int(v) for v in text.split(",") if v.strip()]
    except (ValueError, json.JSONDecodeError):
        raise InputError(f"cannot parse element list {text!r}") from None
    if not all(isinstance(v, int) for v in values):
        raise InputError(f"element list must contain integers: {text!r}")
    return values


def _rational(value: Fraction, approx: bool) -> dict:
    out = {"numerator": value.numerator, "denominator": value.denominator}
    if approx:
        out["approx"] = float(value)
    return out


def _volume_payload(m: Matroid, value: Fraction, approx: bool) -> dict:
    out = _rational(value, approx)
    out["dimension"] = engine.dimension(m)
    out["normalized_numerator"] = engine.normalized_numerator(m, value)
    out["connected"] = m.is_connected()
    return out


def _trace(m: Matroid) -> list[dict]:
    comps = []
    for comp, labels in engine.nonloop_components(m):
        rows = []
        if comp.ground_size > 1:
            for term in engine.chain_terms(comp):
                rows.append({
                    "chain": [[labels[e] for e in f] for f in term.chain.as_lists()],
                    "b_F": str(term.sequence),
                    "mobius": term.mobius,
                    "delta_leq": term.delta_leq,
                })
        comps.append({"component": list(labels), "rows": rows})
    return comps


# --- verbs -------------------------------------------------------------------

def cmd_volume(args) -> dict:
    m = _load_matroid(args.matroid)
    out = _volume_payload(m, engine.volume(m), args.approx)
    if args.trace:
        out["trace"] = _trace(m)
    return out


def cmd_oracle_volume(args) -> dict:
    m = _load_matroid(args.matroid)
    budget = args.budget if args.budget is not None else oracle.default_budget()
    res = oracle.oracle_volume(m, budget=budget, threads=args.threads)
    out = _rational(res.volume, args.approx)
    out["dimension"] = res.dimension
    out["normalized_numerator"] = res.scaled
    out["connected"] = m.is_connected()
    out["ehrhart_counts"] = list(res.counts)
    return out


def cmd_cyclic_flats(args) -> dict:
    m = _load_matroid(args.matroid)
    return {"cyclic_flats": [{"elements": sorted(f.elements), "rank": f.rank} for f in m.cyclic_flats()]}


def cmd_chains(args) -> dict:
    m = _load_matroid(args.matroid)
    poset = engine.build_chain_poset(m)
    rows = [
        {"chain": c.as_lists(), "b_F": str(engine.chain_to_sequence(m, c)), "mobius": poset.mobius[c]}
        for c in poset.chains
    ]
    return {"chains": rows, "mobius_sum": sum(poset.mobius.values())}


def cmd_schubert(args) -> dict:
    b = seq_new(args.bits)
    m = schubert(b)
    out = {"bits": str(b), "n": b.n, "d": b.d, "bases": m.sorted_bases(),
           "connected": m.is_connected(), "delta_leq": delta_leq(b)}
    if m.is_connected():
        vol = engine.schubert_volume(b)
        out.update(_rational(vol, args.approx))
        out["normalized_numerator"] = vol.numerator * factorial(b.n) // vol.denominator
    return out


def cmd_sparse_paving(args) -> dict:
    hyperplanes = None
    if args.hyperplanes is not None:
        try:
            hyperplanes = json.loads(args.hyperplanes)
        except json.JSONDecodeError as exc:
            raise InputError(f"--hyperplanes is not JSON: {exc}") from None
        if not isinstance(hyperplanes, list):
            raise InputError("--hyperplanes must be a JSON list of element lists")
        if args.alpha is not None and args.alpha != len(hyperplanes):
            raise InputError("--alpha disagrees with the number of --hyperplanes")
    elif args.random:
        if args.seed is None:
            raise InputError("--random requires --seed")
        if args.alpha is None:
            raise InputError("--random requires --alpha")
        try:
            hyperplanes = [list(h) for h in random_circuit_hyperplanes(args.n, args.d, args.alpha, args.seed)]
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
    elif args.alpha is None:
        raise InputError("give --alpha, --hyperplanes or --random")
    alpha = len(hyperplanes) if hyperplanes is not None else args.alpha
    value = engine.sparse_paving_volume(args.n, args.d, alpha)
    out = {"n": args.n, "d": args.d, "alpha": alpha, **_rational(value, args.approx),
           "normalized_numerator": value.numerator * factorial(args.n) // value.denominator}
    if hyperplanes is not None:
        m = sparse_paving(args.n, args.d, hyperplanes)
        if not m.is_connected():
            raise PreconditionError("the sparse paving matroid is disconnected; the closed form does not apply")
        vol = engine.volume(m)
        out["hyperplanes"] = [sorted(h) for h in hyperplanes]
        out["engine"] = _rational(vol, args.approx)
        out["agrees"] = vol == value
    return out


def cmd_relax(args) -> dict:
    m = _load_matroid(args.matroid)
    h = _parse_subset(args.hyperplane)
    formula = engine.relaxation_volume(m, h)
    relaxed = m.relax(h)
    recomputed = engine.volume(relaxed)
    return {
        "hyperplane": sorted(h),
        "before": _rational(engine.volume(m), args.approx),
        "formula": _rational(formula, args.approx),
        "engine": _rational(recomputed, args.approx),
        "agrees": formula == recomputed,
    }


def cmd_delta(args) -> dict:
    b = seq_new(args.bits)
    return {
        "bits": str(b), "n": b.n, "d": b.d,
        "delta": delta(b), "delta_leq": delta_leq(b),
        "down_set_size": len(down_set(b)),
        "dual": str(dual_sequence(b)),
        "partition": list(to_partition(b).parts),
    }


def cmd_info(args) -> dict:
    m = _load_matroid(args.matroid)
    return {
        "ground_size": m.ground_size,
        "rank": m.rank,
        "bases": len(m.basis_masks),
        "loops": sorted(m.loops()),
        "coloops": sorted(m.coloops()),
        "components": [sorted(c) for c in m.connected_components()],
        "connected": m.is_connected(),
        "dimension": engine.dimension(m),
        "cyclic_flats": len(m.cyclic_flat_masks),
        "circuit_hyperplanes": [sorted(h) for h in m.circuit_hyperplanes()],
        "sparse_paving": m.is_sparse_paving(),
    }


def cmd_selftest(args) -> dict:
    results = selftest.run()
    return {"checks": [{"name": name, "passed": ok} for name, ok in results],
            "passed": all(ok for _, ok in results)}


# --- output ------------------------------------------------------------------

def _human(payload: dict) -> str:
    lines = []
    width = max((len(k) for k in payload), default=0)
    for key, value in payload.items():
        if key == "trace":
            for comp in value:
                lines.append(f"component {comp['component']}")
                lines.append(f"  {'mobius':>7}  {'delta_leq':>10}  {'b_F':<14} chain")
                for row in comp["rows"]:
                    lines.append(
                        f"  {row['mobius']:>7}  {row['delta_leq']:>10}  {row['b_F']:<14} {row['chain']}"
                    )
        elif key == "checks":
            for check in value:
                lines.append(f"{'PASS' if check['passed'] else 'FAIL'}  {check['name']}")
        elif key in ("chains", "cyclic_flats") and isinstance(value, list):
            for row in value:
                lines.append("  ".join(f"{k}={v}" for k, v in row.items()))
        else:
            lines.append(f"{key:<{width}}  {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--human", action="store_true", help="aligned text instead of JSON")
    common.add_argument("--approx", action="store_true", help="add floating-point approximations")
    common.add_argument("--threads", type=int, default=1, help="parallelism hint; output is identical")

    parser = _Parser(prog="matroidvol", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def with_matroid(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("matroid", help="JSON file, '-' for stdin, or an inline JSON document")
        return p

    p = with_matroid("volume", "volume by the cyclic-flat chain formula")
    p.add_argument("--trace", action="store_true", help="include the per-chain ledger")
    p.set_defaults(func=cmd_volume)

    p = with_matroid("oracle-volume", "volume by lattice-point counting")
    p.add_argument("--budget", type=int, default=None, help="maximum ground-set size")
    p.set_defaults(func=cmd_oracle_volume)

    with_matroid("cyclic-flats", "list cyclic flats with ranks").set_defaults(func=cmd_cyclic_flats)
    with_matroid("chains", "anchored chains with Mobius weights").set_defaults(func=cmd_chains)
    with_matroid("info", "basic matroid data").set_defaults(func=cmd_info)

    p = with_matroid("relax", "relax a circuit-hyperplane and compare volumes")
    p.add_argument("--hyperplane", required=True, help="elements, e.g. 0,1,3 or [0,1,3]")
    p.set_defaults(func=cmd_relax)

    p = sub.add_parser("schubert", parents=[common], help="Schubert matroid of a 0/1 sequence")
    p.add_argument("--bits", required=True)
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("sparse-paving", parents=[common], help="closed-form sparse paving volume")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", type=int)
    p.add_argument("--hyperplanes", help="JSON list of circuit-hyperplanes; builds and cross-checks")
    p.add_argument("--random", action="store_true", help="generate --alpha circuit-hyperplanes greedily")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_sparse_paving)

    p = sub.add_parser("delta", parents=[common], help="descent statistics of a 0/1 sequence")
    p.add_argument("--bits", required=True)
    p.set_defaults(func=cmd_delta)

    sub.add_parser("selftest", parents=[common], help="run invariant checks at small size").set_defaults(
        func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    try:
        payload = args.func(args)
    except (InputError, MatroidError, InvalidSequence) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except oracle.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.human:
        print(_human(payload))
    else:
        print(json.dumps(payload, indent=2))
    if args.verb == "selftest" and not payload["passed"]:
        return EXIT_SELFTEST
    return 0


if __name__ == "__main__":
    sys.exit(main())
