"""Command-line front end.

Subcommands: ``table`` (print a character table), ``verify`` (classification
verdict for one group), ``scan`` (whole corpus or a manifest), ``info``
(structure summary without the table).  Exit status 0 means every outcome was
consistent with the classification; a Violation or an expected-property
mismatch exits 1; bad input exits 2.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import catalog
from .chartab import (
    ModPTable,
    compute_table,
    dump_table,
    exact_table,
    parse_dump,
    real_degree_set,
)
from .classify import VIOLATION, Report, build_report
from .errors import ToolkitError
from .perm import (
    DEFAULT_ORDER_CAP,
    GroupElements,
    conjugacy_classes,
    derived_series_limit,
    enumerate_group,
)
from .structure import (
    DEFAULT_LATTICE_CAP,
    normal_subgroups,
    recognize,
    solvable_radical,
    subgroup_elements,
)

ENV_PREFIX = "REALCHAR_"


@dataclass(frozen=True)
class Config:
    order_cap: int = DEFAULT_ORDER_CAP
    lattice_cap: int = DEFAULT_LATTICE_CAP
    rng_seed: int = 0
    prime_override: int | None = None
    machine: bool = False
    cache_dir: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.order_cap < 1 or self.lattice_cap < 1 or self.jobs < 1:
            raise ToolkitError("caps and jobs must be positive")


def _env(name: str, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    return raw if raw is not None else fallback


def _add_global_flags(parser: argparse.ArgumentParser, defaults: bool) -> None:
    # with defaults=False every flag defaults to SUPPRESS, so a subcommand
    # parser only touches the namespace when the flag actually appears and
    # the pre-subcommand values survive
    s = argparse.SUPPRESS

    def d(value):
        return value if defaults else s

    parser.add_argument("--seed", type=int, default=d(int(_env("SEED", 0))))
    parser.add_argument("--prime", type=int, default=d(_env("PRIME", None)))
    parser.add_argument(
        "--cap-order", type=int, default=d(int(_env("CAP_ORDER", DEFAULT_ORDER_CAP)))
    )
    parser.add_argument(
        "--cap-lattice",
        type=int,
        default=d(int(_env("CAP_LATTICE", DEFAULT_LATTICE_CAP))),
    )
    parser.add_argument(
        "--machine", action="store_true", default=d(bool(int(_env("MACHINE", 0) or 0)))
    )
    parser.add_argument("--cache-dir", default=d(_env("CACHE_DIR", None)))
    parser.add_argument("--jobs", type=int, default=d(int(_env("JOBS", 1))))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realchar",
        description="Character tables and real-degree classification checks "
        "for finite permutation groups.",
    )
    _add_global_flags(parser, defaults=True)
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, defaults=False)
    sub = parser.add_subparsers(dest="command", required=True)
    p_table = sub.add_parser(
        "table", parents=[common], help="print the character table of a group"
    )
    p_table.add_argument("source", help="catalog name or .grp file path")
    p_table.add_argument("--exact", action="store_true", help="include exact lifts")
    p_verify = sub.add_parser(
        "verify", parents=[common], help="classification verdict for one group"
    )
    p_verify.add_argument("source")
    p_scan = sub.add_parser(
        "scan", parents=[common], help="verify the corpus or a manifest of names"
    )
    p_scan.add_argument("manifest", nargs="?", default=None)
    p_info = sub.add_parser(
        "info", parents=[common], help="order/classes/structure summary"
    )
    p_info.add_argument("source")
    return parser


def _config_from(args: argparse.Namespace) -> Config:
    prime = args.prime
    return Config(
        order_cap=args.cap_order,
        lattice_cap=args.cap_lattice,
        rng_seed=args.seed,
        prime_override=int(prime) if prime is not None else None,
        machine=args.machine,
        cache_dir=args.cache_dir,
        jobs=args.jobs,
    )


def load_source(source: str, config: Config) -> tuple[str, GroupElements]:
    """A catalog name, or a path to a .grp file."""
    path = Path(source)
    if source.endswith(".grp") or path.is_file():
        text = path.read_text(encoding="utf-8")
        spec = catalog.parse_grp(text, name=path.stem)
    else:
        spec = catalog.resolve(source)
    return spec.name, enumerate_group(spec, config.order_cap)


# ---------------------------------------------------------------------------
# table cache


def _cache_key(g: GroupElements, config: Config) -> str:
    hasher = hashlib.sha256()
    hasher.update(f"degree={g.degree}".encode())
    for gen in g.spec.generators:
        hasher.update(bytes(str(gen.images), "ascii"))
    hasher.update(f"prime={config.prime_override}".encode())
    hasher.update(f"seed={config.rng_seed}".encode())
    return hasher.hexdigest()


def table_for(g: GroupElements, config: Config) -> ModPTable:
    cd = conjugacy_classes(g)
    if config.cache_dir is None:
        return compute_table(g, cd, config.rng_seed, config.prime_override)
    cache = Path(config.cache_dir)
    cache.mkdir(parents=True, exist_ok=True)
    path = cache / (_cache_key(g, config) + ".tbl")
    if path.is_file():
        return parse_dump(path.read_text(encoding="utf-8"))
    t = compute_table(g, cd, config.rng_seed, config.prime_override)
    path.write_text(dump_table(t, cd), encoding="utf-8")
    return t


# ---------------------------------------------------------------------------
# commands


def cmd_table(source: str, config: Config, exact: bool = False, out=None) -> int:
    out = out if out is not None else sys.stdout
    name, g = load_source(source, config)
    cd = conjugacy_classes(g)
    t = table_for(g, config)
    lifted = exact_table(t, cd) if exact else None
    out.write(dump_table(t, cd, lifted))
    rdd = real_degree_set(t)
    out.write(f"degrees: {','.join(str(d) for d in t.degrees)}\n")
    out.write(f"real rows: {sum(t.real_flags)} of {t.k}\n")
    out.write(f"cd_rv: {{{','.join(str(d) for d in rdd.degrees)}}}\n")
    return 0


def _report_for(name: str, g: GroupElements, config: Config) -> Report:
    t = table_for(g, config)
    return build_report(
        name,
        g,
        seed=config.rng_seed,
        prime_override=config.prime_override,
        lattice_cap=config.lattice_cap,
        table=t,
    )


def _format_text(r: Report) -> str:
    lemmas = " ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in sorted(r.lemmas.items()))
    fields = [
        f"name={r.name}",
        f"order={r.order}",
        f"classes={r.classes}",
        f"prime={r.prime}",
        f"cd_rv={{{','.join(map(str, r.cd_rv))}}}",
        f"verdict={r.verdict}",
    ]
    if r.case:
        fields.append(f"case={r.case}")
    if r.witness_degree is not None:
        fields.append(f"witness_degree={r.witness_degree}")
    if r.k_label:
        fields.append(f"K={r.k_label}")
    if r.h_order is not None:
        fields.append(f"H_order={r.h_order} O_order={r.o_order}")
    fields.append(lemmas)
    fields.append(f"ms={r.ms}")
    return "  ".join(fields)


def cmd_verify(source: str, config: Config, out=None) -> int:
    out = out if out is not None else sys.stdout
    name, g = load_source(source, config)
    report = _report_for(name, g, config)
    out.write(
        (report.to_json() if config.machine else _format_text(report)) + "\n"
    )
    return 1 if report.verdict == VIOLATION else 0


def _scan_entry(name: str, config: Config) -> Report:
    try:
        _, g = load_source(name, config)
        return _report_for(name, g, config)
    except ToolkitError as exc:
        return Report(
            name=name,
            order=0,
            classes=0,
            prime=0,
            cd_rv=(),
            cd_rv_odd=(),
            verdict="Error",
            case="",
            witness_degree=None,
            k_label="",
            h_order=None,
            o_order=None,
            lemmas={},
            ms=0,
            error=str(exc),
        )


def _scan_worker(payload: tuple[str, dict]) -> Report:
    name, fields = payload
    return _scan_entry(name, Config(**fields))


def cmd_scan(manifest: str | None, config: Config, out=None) -> int:
    out = out if out is not None else sys.stdout
    if manifest is None:
        entries = {e.name: e for e in catalog.default_corpus()}
        names = list(entries)
    else:
        names = catalog.parse_manifest(Path(manifest).read_text(encoding="utf-8"))
        entries = {}
    if config.jobs > 1 and len(names) > 1:
        fields = {
            "order_cap": config.order_cap,
            "lattice_cap": config.lattice_cap,
            "rng_seed": config.rng_seed,
            "prime_override": config.prime_override,
            "machine": config.machine,
            "cache_dir": config.cache_dir,
            "jobs": 1,
        }
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(_scan_worker, [(n, fields) for n in names]))
    else:
        reports = [_scan_entry(n, config) for n in names]
    counts: dict[str, int] = {}
    failures = 0
    for report in reports:
        counts[report.verdict] = counts.get(report.verdict, 0) + 1
        if report.verdict in (VIOLATION, "Error"):
            failures += 1
        expected = entries.get(report.name)
        if expected is not None:
            if expected.expected_verdict and report.verdict != expected.expected_verdict:
                failures += 1
            if report.order and report.order != expected.expected_order:
                failures += 1
            if (
                expected.expected_cd_rv is not None
                and report.cd_rv != expected.expected_cd_rv
            ):
                failures += 1
        out.write(
            (report.to_json() if config.machine else _format_text(report)) + "\n"
        )
    summary = " ".join(f"{k}={counts[k]}" for k in sorted(counts))
    out.write(f"summary: groups={len(reports)} {summary}\n".replace("  ", " "))
    return 1 if failures else 0


def cmd_info(source: str, config: Config, out=None) -> int:
    out = out if out is not None else sys.stdout
    name, g = load_source(source, config)
    cd = conjugacy_classes(g)
    lat = normal_subgroups(g, cd, config.lattice_cap)
    rad = solvable_radical(g, cd, lat)
    k = derived_series_limit(g)
    k_label = recognize(subgroup_elements(g, k, "derived_limit")) if len(k) > 1 else ""
    out.write(f"name: {name}\n")
    out.write(f"degree: {g.degree}\n")
    out.write(f"order: {g.order}\n")
    out.write(f"classes: {cd.k}\n")
    out.write(f"exponent: {cd.exponent}\n")
    out.write(f"normal subgroups: {len(lat.members)}\n")
    out.write(f"radical order: {len(rad)}\n")
    out.write(f"derived limit order: {len(k)}\n")
    if k_label:
        out.write(f"derived limit recognized: {k_label}\n")
    out.write(f"solvable: {len(rad) == g.order}\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from(args)
        if args.command == "table":
            return cmd_table(args.source, config, exact=args.exact)
        if args.command == "verify":
            return cmd_verify(args.source, config)
        if args.command == "scan":
            return cmd_scan(args.manifest, config)
        return cmd_info(args.source, config)
    except ToolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
