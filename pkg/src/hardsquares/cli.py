"""Command-line front end for the hard-squares index toolkit.

Subcommands:

* ``witten``   print one Witten index for a grid family member.
* ``table1``   emit the cylinder index table (rows m, columns n) as text,
               CSV (diffable against the shipped golden file) or JSON.
* ``genfun``   print the column generating function of a circumference with
               the denominator factored into cyclotomic polynomials.
* ``necklace`` enumerate stone arrangements, report the cycle structure of
               the rotation step, export the transition graph as DOT, or
               sweep the cycle-length divisibility check.
* ``verify``   run a named verification sweep (identities, conjectures,
               correspondence, or all of them).

Exit status is 0 when every requested computation and check succeeded, 1
when a verification check failed (failures are listed in the output, one
line per failing instance), and 2 for usage errors, including requests
that exceed the resource bounds.

All output is deterministic: given the same arguments (and seed, for the
randomized spot checks) the bytes printed are identical between runs.
JSON documents carry a ``"schema": 1`` version field.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from random import Random
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import ConsistencyError, FitInconclusiveError, ResourceLimitError
from .genfun import (
    check_block_count_denominator,
    check_denominator_form,
    check_roots_of_unity,
    cylinder_gf,
    fitted_cylinder_gf,
    periodicity_report,
)
from .graphs import (
    Graph,
    GridSpec,
    disjoint_union,
    transfer_width,
    verify_index_identities,
    witten_brute,
    witten_transfer,
)
from .necklaces import (
    DEFAULT_BOUND,
    cycle_structure,
    dot_transition_graph,
    enumerate_necklaces,
    format_cycle_structure,
    format_necklace,
    necklace_to_json_obj,
    check_correspondence,
    verify_cycle_divisibility,
)
from .patterns import enumerate_proper, format_pattern
from .polynomials import factor_cyclotomic, format_cyclotomic, format_poly

SCHEMA = 1

# Largest row width the index commands accept: the transfer walk enumerates
# one bitmask per ring cell, so the state count is exponential in the width.
TRANSFER_WIDTH_BOUND = 18


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification instance."""

    check: str
    params: Dict[str, object]
    ok: bool
    detail: str = ""

    def describe(self) -> str:
        bits = " ".join(f"{k}={v}" for k, v in self.params.items())
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.check} {bits}{tail}"


def _emit_json(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _report(suite: str, results: List[CheckResult], infos: List[str],
            fmt: str) -> int:
    failures = [r for r in results if not r.ok]
    if fmt == "json":
        _emit_json({
            "schema": SCHEMA,
            "suite": suite,
            "checks": len(results),
            "failures": [
                {"check": r.check, "params": r.params, "detail": r.detail}
                for r in failures
            ],
            "info": infos,
            "ok": not failures,
        })
    else:
        for r in failures:
            print(f"FAIL {r.describe()}")
        for line in infos:
            print(f"info {line}")
        print(f"{suite}: {len(results) - len(failures)} of "
              f"{len(results)} checks passed")
        print("fail" if failures else "pass")
    return 1 if failures else 0


def _even_range(lo: int, hi: int) -> Iterable[int]:
    start = lo if lo % 2 == 0 else lo + 1
    return range(start, hi + 1, 2)


# -- witten ----------------------------------------------------------------

def _check_transfer_width(spec: GridSpec, bound: Optional[int]) -> None:
    limit = bound if bound is not None else TRANSFER_WIDTH_BOUND
    width = transfer_width(spec)
    if width > limit:
        raise ResourceLimitError(
            f"{spec.family} {spec.m}x{spec.n} needs row masks of width "
            f"{width}, above the bound {limit}; raise --bound-n if you "
            f"really want to wait")


def cmd_witten(args: argparse.Namespace,
               parser: argparse.ArgumentParser) -> int:
    spec = GridSpec(args.family, args.m, args.n)
    _check_transfer_width(spec, args.bound_n)
    value = witten_transfer(spec)
    if args.format == "json":
        _emit_json({
            "schema": SCHEMA,
            "family": args.family,
            "m": args.m,
            "n": args.n,
            "witten_index": value,
        })
    else:
        print(value)
    return 0


# -- table1 ------------------------------------------------------------------

def cmd_table1(args: argparse.Namespace,
               parser: argparse.ArgumentParser) -> int:
    cols = list(range(2, args.nmax + 1))
    rows = list(range(0, args.m + 1))
    if rows and cols and rows[-1] >= 1:
        _check_transfer_width(GridSpec("cylinder", rows[-1], cols[-1]),
                              args.bound_n)
    table = {
        m: [witten_transfer(GridSpec("cylinder", m, n)) for n in cols]
        for m in rows
    }
    if args.format == "json":
        _emit_json({
            "schema": SCHEMA,
            "family": "cylinder",
            "columns": cols,
            "rows": [{"m": m, "values": table[m]} for m in rows],
        })
        return 0
    header = ["m\\n"] + [str(n) for n in cols]
    lines = [header] + [[str(m)] + [str(z) for z in table[m]] for m in rows]
    if args.format == "csv":
        for cells in lines:
            print(",".join(cells))
        return 0
    widths = [max(len(cells[i]) for cells in lines) for i in range(len(header))]
    for cells in lines:
        print("  ".join(c.rjust(w) for c, w in zip(cells, widths)))
    return 0


# -- genfun ------------------------------------------------------------------

def cmd_genfun(args: argparse.Namespace,
               parser: argparse.ArgumentParser) -> int:
    bound = args.bound_n if args.bound_n is not None else 12
    if args.n % 2 == 0:
        gf = cylinder_gf(args.n, bound=bound)
        route = "pattern"
    else:
        gf = fitted_cylinder_gf(args.n)
        route = "fitted"
    factors, remainder = factor_cyclotomic(gf.den)
    if args.format == "json":
        _emit_json({
            "schema": SCHEMA,
            "n": args.n,
            "route": route,
            "numerator": list(gf.num.coeffs),
            "denominator": list(gf.den.coeffs),
            "denominator_cyclotomic": sorted(factors.items()),
            "denominator_remainder": list(remainder.coeffs),
        })
    else:
        print(f"f_{args.n}(t) = ({format_poly(gf.num)}) / "
              f"({format_cyclotomic(factors, remainder)})")
    return 0


# -- necklace ----------------------------------------------------------------

def cmd_necklace(args: argparse.Namespace,
                 parser: argparse.ArgumentParser) -> int:
    if args.action == "verify":
        nmax = args.nmax if args.nmax is not None else 24
        bound = args.bound_n if args.bound_n is not None else max(DEFAULT_BOUND, nmax)
        results = []
        for n in _even_range(4, nmax):
            for k in range(1, n // 4 + 1):
                ok = verify_cycle_divisibility(k, n, bound=bound)
                results.append(CheckResult("cycle_divisibility",
                                           {"k": k, "n": n}, ok))
        return _report("necklace-verify", results, [], args.format)

    if args.k is None or args.n is None:
        parser.error(f"necklace {args.action} requires both -k and -n")
    bound = args.bound_n if args.bound_n is not None else DEFAULT_BOUND
    if args.action == "dot" or args.format == "dot":
        sys.stdout.write(dot_transition_graph(args.k, args.n, bound) + "\n")
        return 0
    if args.action == "cycles":
        structure = cycle_structure(args.k, args.n, bound)
        if args.format == "json":
            _emit_json({
                "schema": SCHEMA,
                "k": args.k,
                "n": args.n,
                "cycles": sorted(structure.items()),
            })
        else:
            print(format_cycle_structure(structure))
        return 0
    classes = enumerate_necklaces(args.k, args.n, bound)
    if args.format == "json":
        _emit_json({
            "schema": SCHEMA,
            "k": args.k,
            "n": args.n,
            "count": len(classes),
            "classes": [necklace_to_json_obj(c.canonical) for c in classes],
        })
    else:
        for cls in classes:
            print(format_necklace(cls.canonical))
    return 0


# -- verify ------------------------------------------------------------------

def _random_graph(rng: Random, max_vertices: int) -> Graph:
    count = rng.randint(1, max_vertices)
    edges = []
    for u in range(count):
        if rng.random() < 0.05:
            edges.append((u, u))
        for v in range(u + 1, count):
            if rng.random() < 0.3:
                edges.append((u, v))
    return Graph(range(count), edges)


def _suite_identities(m_max: int, n_max: int, seed: int) -> List[CheckResult]:
    results = []
    for c in verify_index_identities(m_max, n_max):
        results.append(CheckResult(
            "index_identity",
            {"identity": c.identity, "family": c.family, "m": c.m, "n": c.n},
            c.ok, f"lhs={c.lhs} rhs={c.rhs}"))
    rng = Random(seed)
    for case in range(40):
        g = _random_graph(rng, 10)
        v = rng.choice(sorted(g.vertices))
        lhs = witten_brute(g)
        if g.has_loop(v):
            rhs = witten_brute(g.without_vertices([v]))
        else:
            rhs = (witten_brute(g.without_vertices([v]))
                   - witten_brute(g.without_vertices(g.closed_neighborhood(v))))
        results.append(CheckResult("random_vertex_rule", {"case": case},
                                   lhs == rhs, f"lhs={lhs} rhs={rhs}"))
        h = _random_graph(rng, 6)
        lhs = witten_brute(disjoint_union(g, h))
        rhs = witten_brute(g) * witten_brute(h)
        results.append(CheckResult("random_union_rule", {"case": case},
                                   lhs == rhs, f"lhs={lhs} rhs={rhs}"))
    return results


def _suite_conjectures(n_max: int) -> Tuple[List[CheckResult], List[str]]:
    results = []
    infos = []
    for n in _even_range(2, n_max):
        gf = cylinder_gf(n, bound=max(12, n_max))
        results.append(CheckResult(
            "roots_of_unity", {"n": n}, check_roots_of_unity(gf)))
        results.append(CheckResult(
            "denominator_form", {"n": n}, check_denominator_form(n, gf=gf),
            "reduced denominator must divide the conjectured product"))
        rep = periodicity_report(n, gf=gf)
        if n % 4 == 2:
            results.append(CheckResult(
                "periodicity", {"n": n}, rep.period is not None,
                f"period={rep.period}"))
            infos.append(f"periodicity n={n}: period={rep.period}")
        else:
            results.append(CheckResult(
                "periodicity", {"n": n}, rep.max_multiplicity <= 2,
                f"max_multiplicity={rep.max_multiplicity}"))
            infos.append(f"periodicity n={n}: linear growth, "
                         f"max_multiplicity={rep.max_multiplicity}")
        if n >= 4:
            for k in range(1, n // 4 + 1):
                results.append(CheckResult(
                    "cycle_divisibility", {"k": k, "n": n},
                    verify_cycle_divisibility(k, n, bound=max(DEFAULT_BOUND, n_max))))
        for cls in enumerate_proper(n):
            results.append(CheckResult(
                "block_count_denominator",
                {"n": n, "pattern": format_pattern(cls.canonical)},
                check_block_count_denominator(cls)))
    return results, infos


def _suite_correspondence(n_max: int) -> List[CheckResult]:
    results = []
    for n in _even_range(4, n_max):
        ok = check_correspondence(n, bound=max(DEFAULT_BOUND, n_max))
        results.append(CheckResult("pattern_correspondence", {"n": n}, ok))
    return results


def cmd_verify(args: argparse.Namespace,
               parser: argparse.ArgumentParser) -> int:
    results: List[CheckResult] = []
    infos: List[str] = []
    if args.suite in ("identities", "all"):
        results.extend(_suite_identities(
            args.m if args.m is not None else 20,
            args.nmax if args.nmax is not None else 14,
            args.seed))
    if args.suite in ("conjectures", "all"):
        sub, extra = _suite_conjectures(
            args.nmax if args.nmax is not None else 12)
        results.extend(sub)
        infos.extend(extra)
    if args.suite in ("correspondence", "all"):
        results.extend(_suite_correspondence(
            args.nmax if args.nmax is not None else 14))
    return _report(args.suite, results, infos, args.format)


# -- wiring --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardsquares",
        description="Witten indices of hard squares on grids, cylinders "
                    "and tori.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "witten", help="print the Witten index of one grid family member")
    p.add_argument("--family", choices=("free", "cylinder", "torus"),
                   default="cylinder", help="grid family (default cylinder)")
    p.add_argument("-m", type=int, required=True, help="number of rows")
    p.add_argument("-n", type=int, required=True,
                   help="number of columns (cyclic for cylinder and torus)")
    p.add_argument("--bound-n", type=int, default=None,
                   help="largest row-mask width accepted (default "
                        f"{TRANSFER_WIDTH_BOUND})")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_witten)

    p = sub.add_parser(
        "table1", help="emit the cylinder index table (rows m, columns n)")
    p.add_argument("-m", type=int, default=12,
                   help="largest row count (default 12)")
    p.add_argument("--nmax", type=int, default=14,
                   help="largest circumference, columns start at 2 "
                        "(default 14)")
    p.add_argument("--bound-n", type=int, default=None,
                   help="largest row-mask width accepted (default "
                        f"{TRANSFER_WIDTH_BOUND})")
    p.add_argument("--format", choices=("text", "csv", "json"),
                   default="text")
    p.set_defaults(handler=cmd_table1)

    p = sub.add_parser(
        "genfun", help="print the column generating function for one "
                       "circumference")
    p.add_argument("-n", type=int, required=True, help="circumference")
    p.add_argument("--bound-n", type=int, default=None,
                   help="largest even circumference accepted (default 12)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_genfun)

    p = sub.add_parser(
        "necklace", help="stone arrangements and their rotation dynamics")
    p.add_argument("action",
                   choices=("enumerate", "cycles", "dot", "verify"),
                   help="what to report")
    p.add_argument("-k", type=int, default=None, help="number of stone pairs")
    p.add_argument("-n", type=int, default=None, help="circle length")
    p.add_argument("--nmax", type=int, default=None,
                   help="largest circle length for the verify sweep "
                        "(default 24)")
    p.add_argument("--bound-n", type=int, default=None,
                   help="resource bound on the circle length (default "
                        f"{DEFAULT_BOUND})")
    p.add_argument("--format", choices=("text", "json", "dot"),
                   default="text")
    p.set_defaults(handler=cmd_necklace)

    p = sub.add_parser(
        "verify", help="run a verification sweep and exit nonzero on failure")
    p.add_argument("suite",
                   choices=("identities", "conjectures", "correspondence",
                            "all"),
                   help="which sweep to run")
    p.add_argument("-m", type=int, default=None,
                   help="largest row count for the identity sweep "
                        "(default 20)")
    p.add_argument("--nmax", type=int, default=None,
                   help="largest circumference (defaults: identities 14, "
                        "conjectures 12, correspondence 14)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomized spot checks (default 0)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConsistencyError, FitInconclusiveError) as exc:
        print(f"FAIL internal consistency: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
