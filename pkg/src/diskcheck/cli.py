"""Command-line interface.

Verbs:

``verify``
    Run the selected check suites over the seeded corpora, print a per-suite
    summary (including wall time, which is kept out of the JSON report), and
    exit 0 exactly when every suite passed.
``search``
    Run the multi-start sharpness search for one of the built-in families
    and optionally write its JSON report.
``corpus``
    Dump the reproducible corpora: serialized disk maps as text files and
    surface data files in the documented ``.wd`` format.
``plot-data``
    Emit plotting CSVs (extremal-family margin curve, distance-margin grids,
    and — when a JSON report with a search suite is supplied — search traces).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .corpus import holo_corpus, julia_corpus, weierstrass_corpus
from .harness import (
    KNOWN_SUITES,
    TOOL_NAME,
    TOOL_VERSION,
    SuiteConfig,
    emit_plot_data,
    load_config_file,
    run_suite,
)
from .reports import DomainError
from .search import (
    family_1d_spec,
    family_md_spec,
    restricted_family_1d_spec,
    sharpness_report,
)
from .weierstrass import save_weierstrass

_FAMILY_CHOICES = ("family_1d", "family_1d_restricted", "family_md")


def _parse_tolerances(items) -> dict:
    overrides = {}
    for item in items or ():
        if "=" not in item:
            raise DomainError(f"--tolerance expects NAME=VALUE, got {item!r}")
        name, _, value = item.partition("=")
        overrides[name.strip()] = float(value)
    return overrides


def _parse_int_list(text: str) -> tuple:
    return tuple(int(s) for s in text.split(",") if s.strip())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="Numerical checks for rigidity inequalities of holomorphic "
        "and minimal disks in the unit ball.",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run check suites and report margins")
    verify.add_argument("--seed", type=int, default=None, help="root seed (default 0)")
    verify.add_argument(
        "--suites", default=None,
        help=f"comma-separated subset of {','.join(KNOWN_SUITES)} (default all)",
    )
    verify.add_argument("--samples", type=int, default=None, help="sample points per check (default 200)")
    verify.add_argument("--dimensions", default=None, help="comma-separated target dimensions (default 1,2,3)")
    verify.add_argument("--search-restarts", type=int, default=None, help="restarts for the search suite (default 8)")
    verify.add_argument("--out", default=None, help="path for the JSON report (margins CSV written alongside)")
    verify.add_argument(
        "--tolerance", action="append", metavar="NAME=VALUE", default=None,
        help="override a named check tolerance (repeatable)",
    )
    verify.add_argument("--config", default=None, help="flat key=value config file (CLI flags win)")
    verify.set_defaults(func=_cmd_verify)

    search = sub.add_parser("search", help="multi-start sharpness search over a map family")
    search.add_argument("--family", choices=_FAMILY_CHOICES, default="family_1d")
    search.add_argument("--dimension", type=int, default=2, help="target dimension for family_md")
    search.add_argument("--restarts", type=int, default=20)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--out", default=None, help="path for the JSON search report")
    search.set_defaults(func=_cmd_search)

    corpus = sub.add_parser("corpus", help="dump the reproducible corpora to text files")
    corpus.add_argument("--seed", type=int, default=0)
    corpus.add_argument("--dimensions", default="1,2,3")
    corpus.add_argument("--count", type=int, default=20)
    corpus.add_argument("--out", default="corpus", help="output directory")
    corpus.set_defaults(func=_cmd_corpus)

    plot = sub.add_parser("plot-data", help="emit CSV files for external plotting")
    plot.add_argument("--report", default=None, help="JSON report from `verify --out` (adds search traces)")
    plot.add_argument("--out", default="plots", help="output directory")
    plot.set_defaults(func=_cmd_plot_data)

    return parser


def _cmd_verify(args) -> int:
    values = {"tolerances": {}}
    if args.config:
        values.update(load_config_file(args.config))
    if args.seed is not None:
        values["seed"] = args.seed
    if args.samples is not None:
        values["samples"] = args.samples
    if args.suites is not None:
        values["suites"] = tuple(s.strip() for s in args.suites.split(",") if s.strip())
    if args.dimensions is not None:
        values["dimensions"] = _parse_int_list(args.dimensions)
    if args.search_restarts is not None:
        values["search_restarts"] = args.search_restarts
    if args.out is not None:
        values["out"] = args.out
    values["tolerances"] = {**values.get("tolerances", {}), **_parse_tolerances(args.tolerance)}

    config = SuiteConfig(**values)
    start = time.perf_counter()
    report = run_suite(config)
    total = time.perf_counter() - start

    for name in config.suites:
        suite = report.suites[name]
        min_margin = suite["min_margin"]
        margin_text = "n/a" if min_margin is None else f"{min_margin:.3e}"
        print(
            f"suite {name:<8} cases={suite['cases']:<6} failures={len(suite['failures']):<3} "
            f"min_margin={margin_text:<11} wall={report.wall_times[name]:.2f}s"
        )
    print(f"overall: {'PASS' if report.passed else 'FAIL'} ({TOOL_NAME} {TOOL_VERSION}, wall {total:.2f}s)")
    if config.out is not None:
        root, _ = os.path.splitext(config.out)
        print(f"report written to {config.out} (margins: {root + '.margins.csv'})")
    return 0 if report.passed else 1


def _cmd_search(args) -> int:
    if args.family == "family_1d":
        spec = family_1d_spec()
    elif args.family == "family_1d_restricted":
        spec = restricted_family_1d_spec()
    else:
        spec = family_md_spec(args.dimension)
    report = sharpness_report(spec, restarts=args.restarts, seed=args.seed)
    print(f"family={report['family']} dimension={report['dimension']} restarts={report['restarts']}")
    print(f"best_margin={report['best_margin']:.6e} at argmin={report['argmin']}")
    print(f"evaluations={report['evaluations']} min_evaluated={report['min_evaluated']:.6e}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, sort_keys=True, indent=2)
            fh.write("\n")
        print(f"search report written to {args.out}")
    return 0


def _cmd_corpus(args) -> int:
    outdir = args.out
    os.makedirs(outdir, exist_ok=True)
    written = []

    for m in _parse_int_list(args.dimensions):
        path = os.path.join(outdir, f"holo_m{m}.txt")
        with open(path, "w", encoding="utf-8") as fh:
            for member in holo_corpus(args.seed, m, args.count):
                fh.write(f"{member.name}\t{member.disk.to_text()}\n")
        written.append(path)

    path = os.path.join(outdir, "julia.txt")
    with open(path, "w", encoding="utf-8") as fh:
        for member in julia_corpus(args.seed, args.count):
            fh.write(f"{member.name}\t{member.disk.to_text()}\n")
    written.append(path)

    surface_dir = os.path.join(outdir, "surfaces")
    os.makedirs(surface_dir, exist_ok=True)
    index_path = os.path.join(outdir, "surfaces.txt")
    with open(index_path, "w", encoding="utf-8") as fh:
        for member in weierstrass_corpus(args.seed, args.count):
            wd_path = os.path.join(surface_dir, f"{member.name}.wd")
            save_weierstrass(member.surface, wd_path)
            fh.write(f"{member.name}\t{member.name}.wd\t{member.surface!r}\n")
            written.append(wd_path)
    written.append(index_path)

    print(f"wrote {len(written)} corpus files under {outdir}")
    return 0


def _cmd_plot_data(args) -> int:
    report = {}
    if args.report:
        with open(args.report, "r", encoding="utf-8") as fh:
            report = json.load(fh)
    files = emit_plot_data(report, args.out)
    for path in files:
        print(f"wrote {path}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
