"""Command-line front end: exact terms, single checks, grid sweeps, and
generating-function coefficients, with machine-readable JSON reports.

Check identifiers form a fixed catalog; `verify <id>` runs one instance
and exits 0 for equal / Holds / Inapplicable and 1 for a failing check,
so negative controls are scriptable. `sweep` runs enabled checkers over
a Cartesian grid described by a TOML config, in a deterministic order
(checker, a, b, c, init, index tuple, option), and emits a report that
is byte-identical between runs except for the elapsed-time field.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import __version__
from .congruences import (
    check_companion_modulus,
    check_companion_modulus_pair,
    check_fundamental_modulus,
)
from .fasteval import check_double_step, term_fast
from .identities import (
    DegenerateModulus,
    check_companion_split,
    check_cross_shift,
    check_cross_shift_special,
    check_even_index_split,
    check_index_split,
    check_index_split_weighted,
    check_root_identity,
    check_trinomial_split,
    exponent_forms,
)
from .reports import (
    CongruenceReport,
    QuadIdentityReport,
    Status,
    fmt_rational,
    identity_report,
)
from .ring import ZeroDivisorError
from .sequences import (
    Family,
    InvalidIndex,
    InvalidParams,
    Params,
    SeqSpec,
    check_companion_relation,
    gf_coeffs,
    make_spec,
    t_spec,
    term_binet,
    term_naive,
    u_spec,
    v_spec,
)

WITNESS_CAP = 32  # control witnesses kept per report; counts are never capped


class ConfigError(ValueError):
    """Sweep config file failed validation."""


# ---------------------------------------------------------------------------
# checker catalog


@dataclass(frozen=True)
class CheckerEntry:
    name: str
    kind: str  # "identity" | "quad" | "congruence" | "exponent"
    needs: str  # "spec" | "params" | "none"
    c_must_be_one: bool
    positive_grid: bool  # requires positive params and integer inits
    index_names: tuple[str, ...]
    floors: dict[str, int]
    defaults: dict[str, tuple[int, int]]
    option_name: str | None
    option_values: tuple[object, ...]
    run: Callable[[Params | None, SeqSpec | None, dict, object], object]


def _run_remark2(params, spec, idx, option):
    left, right = exponent_forms(idx["m"], idx["i"], idx["r"])
    return identity_report(
        "remark2", {"m": idx["m"], "i": idx["i"], "r": idx["r"]}, Fraction(left), Fraction(right)
    )


def _entry(name, kind, needs, index_names, floors, defaults, run,
           c_must_be_one=False, positive_grid=False, option=None):
    option_name, option_values = option if option else (None, ())
    return CheckerEntry(
        name=name,
        kind=kind,
        needs=needs,
        c_must_be_one=c_must_be_one,
        positive_grid=positive_grid,
        index_names=tuple(index_names),
        floors=dict(floors),
        defaults=dict(defaults),
        option_name=option_name,
        option_values=tuple(option_values),
        run=run,
    )


CATALOG: dict[str, CheckerEntry] = {
    e.name: e
    for e in [
        _entry(
            "cor1", "congruence", "spec", ("m", "n", "r"),
            {"m": 1, "n": 1, "r": 1}, {"m": (2, 6), "n": (1, 6), "r": (1, 6)},
            lambda p, s, i, o: check_fundamental_modulus(s, i["m"], i["n"], i["r"]),
            positive_grid=True,
        ),
        _entry(
            "cor2", "congruence", "spec", ("m", "n", "r"),
            {"m": 1, "n": 1, "r": 1}, {"m": (1, 6), "n": (1, 6), "r": (1, 6)},
            lambda p, s, i, o: check_companion_modulus(s, i["m"], i["n"], i["r"]),
            positive_grid=True,
        ),
        _entry(
            "cor3", "congruence", "spec", ("n", "m", "r", "d"),
            {"n": 1, "m": 1, "r": 1, "d": 1},
            {"n": (1, 6), "m": (1, 6), "r": (1, 6), "d": (1, 6)},
            lambda p, s, i, o: check_companion_modulus_pair(s, i["n"], i["m"], i["r"], i["d"]),
            positive_grid=True,
        ),
        _entry(
            "eq5", "identity", "params", ("n",), {"n": 1}, {"n": (1, 6)},
            lambda p, s, i, o: check_companion_relation(p, i["n"]),
        ),
        _entry(
            "eq7", "identity", "params", ("m", "n", "r"),
            {"m": 2, "n": 0, "r": 0}, {"m": (2, 6), "n": (0, 6), "r": (0, 6)},
            lambda p, s, i, o: check_index_split_weighted(p, i["m"], i["n"], i["r"]),
        ),
        _entry(
            "lemma2", "identity", "spec", ("n", "k"),
            {"n": 0, "k": 1}, {"n": (0, 6), "k": (1, 6)},
            lambda p, s, i, o: check_double_step(s, i["n"], i["k"]),
        ),
        _entry(
            "lemma3", "quad", "params", ("m", "r"),
            {"m": 1, "r": 1}, {"m": (1, 8), "r": (1, 8)},
            lambda p, s, i, o: check_root_identity(p, i["m"], i["r"], root=o),
            option=("root", ("alpha", "beta")),
        ),
        _entry(
            "remark2", "exponent", "none", ("m", "i", "r"),
            {"m": 0, "i": 0, "r": 0}, {"m": (0, 6), "i": (0, 6), "r": (0, 6)},
            _run_remark2,
        ),
        _entry(
            "thm2", "identity", "spec", ("m", "n", "r"),
            {"m": 2, "n": 0, "r": 0}, {"m": (2, 6), "n": (0, 6), "r": (0, 6)},
            lambda p, s, i, o: check_index_split(s, i["m"], i["n"], i["r"]),
        ),
        _entry(
            "thm3", "identity", "spec", ("m", "n", "r"),
            {"m": 2, "n": 0, "r": 0}, {"m": (2, 6), "n": (0, 6), "r": (0, 6)},
            lambda p, s, i, o: check_companion_split(s, i["m"], i["n"], i["r"]),
        ),
        _entry(
            "thm4", "identity", "spec", ("n", "m", "r"),
            {"n": 1, "m": 1, "r": 1}, {"n": (1, 6), "m": (1, 6), "r": (1, 6)},
            lambda p, s, i, o: check_cross_shift(s, i["n"], i["m"], i["r"]),
        ),
        _entry(
            "thm4-special", "identity", "spec", ("n",), {"n": 0}, {"n": (0, 6)},
            lambda p, s, i, o: check_cross_shift_special(s, i["n"], variant=o),
            c_must_be_one=True,
            option=("variant", ("direct", "zhang_form")),
        ),
        _entry(
            "thm5-s2", "identity", "spec", ("n", "m", "r", "d"),
            {"n": 1, "m": 1, "r": 1, "d": 0},
            {"n": (1, 6), "m": (1, 6), "r": (1, 6), "d": (1, 6)},
            lambda p, s, i, o: check_trinomial_split(s, i["n"], i["m"], i["r"], i["d"], form="s2"),
        ),
        _entry(
            "thm5-s3", "identity", "spec", ("n", "m", "r", "d"),
            {"n": 1, "m": 1, "r": 1, "d": 0},
            {"n": (1, 6), "m": (1, 6), "r": (1, 6), "d": (1, 6)},
            lambda p, s, i, o: check_trinomial_split(s, i["n"], i["m"], i["r"], i["d"], form="s3"),
        ),
        _entry(
            "zhang47", "identity", "spec", ("m", "n", "r"),
            {"m": 2, "n": 0, "r": 0}, {"m": (2, 6), "n": (0, 6), "r": (0, 6)},
            lambda p, s, i, o: check_even_index_split(s, i["m"], i["n"], i["r"], corrected=o),
            c_must_be_one=True,
            option=("corrected", (True, False)),
        ),
    ]
}


def _report_ok(report) -> bool:
    if isinstance(report, CongruenceReport):
        return report.status is not Status.FAILS
    return report.equal


def report_row(entry: CheckerEntry, params, spec, report, control=False) -> dict:
    """One replayable result row: context plus the report fields."""
    row: dict = {"checker": entry.name}
    if params is not None:
        row["a"], row["b"], row["c"] = params.a, params.b, params.c
    if spec is not None:
        row["family"] = spec.family.value
        row["w0"] = fmt_rational(spec.w0)
        row["w1"] = fmt_rational(spec.w1)
    row["indices"] = dict(report.indices)
    body = report.as_dict()
    for key in ("lhs", "rhs", "equal", "residual", "modulus", "status"):
        if key in body:
            row[key] = body[key]
    row["ok"] = _report_ok(report)
    if control:
        row["control"] = True
    return row


# ---------------------------------------------------------------------------
# argument handling


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _bool_flag(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _add_spec_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-a", type=int, help="even-step multiplier")
    parser.add_argument("-b", type=int, help="odd-step multiplier")
    parser.add_argument("-c", type=int, help="two-back coefficient")
    parser.add_argument(
        "--family",
        choices=[f.value for f in Family],
        default=Family.GENERAL.value,
        help="initial-value preset; 'general' takes --w0/--w1",
    )
    parser.add_argument("--w0", type=_rational, help="initial value w(0)")
    parser.add_argument("--w1", type=_rational, help="initial value w(1)")


def _build_params(args, parser) -> Params:
    missing = [flag for flag, val in (("-a", args.a), ("-b", args.b), ("-c", args.c)) if val is None]
    if missing:
        parser.error(f"missing required parameter arguments: {' '.join(missing)}")
    try:
        return Params(args.a, args.b, args.c)
    except InvalidParams as exc:
        parser.error(str(exc))


def _build_spec(args, parser) -> SeqSpec:
    params = _build_params(args, parser)
    family = Family(args.family)
    try:
        if family is Family.GENERAL:
            if args.w0 is None or args.w1 is None:
                parser.error("family general requires --w0 and --w1")
            return SeqSpec(params, args.w0, args.w1, Family.GENERAL)
        return make_spec(params.a, params.b, params.c, family, args.w0, args.w1)
    except InvalidParams as exc:
        parser.error(str(exc))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_term(args, parser) -> int:
    spec = _build_spec(args, parser)
    if args.n < 0:
        parser.error("-n must be nonnegative")
    if args.method == "binet":
        if args.n == 0:
            parser.error("method binet is defined for n >= 1; use --method naive")
        value = term_binet(spec, args.n)
    elif args.method == "fast":
        value = term_fast(spec, args.n)
    else:
        value = term_naive(spec, args.n)
    print(fmt_rational(value))
    return 0


def _cmd_gf(args, parser) -> int:
    spec = _build_spec(args, parser)
    if args.count < 1:
        parser.error("--count must be at least 1")
    for coeff in gf_coeffs(spec, args.count):
        print(fmt_rational(coeff))
    return 0


def _collect_indices(entry: CheckerEntry, args, parser) -> dict:
    indices = {}
    for name in entry.index_names:
        value = getattr(args, name)
        if value is None:
            parser.error(f"checker {entry.name} requires -{name}")
        if value < entry.floors[name]:
            parser.error(f"-{name} must be at least {entry.floors[name]} for {entry.name}")
        indices[name] = value
    return indices


def _cmd_verify(args, parser) -> int:
    entry = CATALOG[args.checker]
    indices = _collect_indices(entry, args, parser)
    params = spec = None
    if entry.needs == "spec":
        spec = _build_spec(args, parser)
        params = spec.params
    elif entry.needs == "params":
        params = _build_params(args, parser)
    option = None
    control = False
    if entry.option_name is not None:
        option = getattr(args, entry.option_name)
        control = entry.name == "zhang47" and option is False
    report = entry.run(params, spec, indices, option)
    row = report_row(entry, params, spec, report, control=control)
    print(json.dumps(row, indent=2))
    return 0 if row["ok"] else 1


# ---------------------------------------------------------------------------
# sweep configuration


@dataclass(frozen=True)
class InitSpec:
    label: str
    family: Family | None
    w0: Fraction | None = None
    w1: Fraction | None = None

    def build(self, params: Params) -> SeqSpec | None:
        """Resolve against concrete params; None when the preset does not apply."""
        if self.family is Family.U:
            return u_spec(params)
        if self.family is Family.V:
            return v_spec(params)
        if self.family is Family.T:
            if params.c != 1:
                return None
            return t_spec(params)
        return SeqSpec(params, self.w0, self.w1, Family.GENERAL)


@dataclass(frozen=True)
class SweepConfig:
    checkers: tuple[str, ...]
    a: tuple[int, int]
    b: tuple[int, int]
    c: tuple[int, int]
    inits: tuple[InitSpec, ...]
    ranges: dict[str, dict[str, tuple[int, int]]]

    def as_dict(self) -> dict:
        return {
            "checkers": list(self.checkers),
            "grid": {
                "a": list(self.a),
                "b": list(self.b),
                "c": list(self.c),
                "inits": [init.label for init in self.inits],
            },
            "indices": {
                name: {idx: list(bounds) for idx, bounds in self.ranges[name].items()}
                for name in self.checkers
            },
        }


_DEFAULT_GRID = {"a": (1, 4), "b": (1, 4), "c": (1, 3)}
_DEFAULT_INITS = ("u", "v", "1,1", "3,7")


def _parse_init(label: str) -> InitSpec:
    tag = label.strip().lower()
    if tag in ("u", "v", "t"):
        return InitSpec(tag, Family(tag))
    parts = label.split(",")
    if len(parts) == 2:
        try:
            return InitSpec(label.strip(), None, Fraction(parts[0]), Fraction(parts[1]))
        except (ValueError, ZeroDivisionError):
            pass
    raise ConfigError(
        f"grid.inits: cannot parse {label!r}; use 'u', 'v', 't' or 'w0,w1'"
    )


def _parse_range(value, field: str, floor: int | None = None) -> tuple[int, int]:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in value)
    ):
        raise ConfigError(f"{field}: expected a two-integer array [lo, hi]")
    lo, hi = value
    if lo > hi:
        raise ConfigError(f"{field}: empty range [{lo}, {hi}]")
    if floor is not None and lo < floor:
        raise ConfigError(f"{field}: lower bound must be at least {floor}")
    return lo, hi


def load_config(path: str) -> SweepConfig:
    try:
        with open(path, "rb") as handle:
            data = tomllib.load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from exc

    checkers = data.get("checkers")
    if not isinstance(checkers, list) or not checkers:
        raise ConfigError("checkers: must be a nonempty array of checker names")
    for name in checkers:
        if name not in CATALOG:
            known = ", ".join(sorted(CATALOG))
            raise ConfigError(f"checkers: unknown checker {name!r} (known: {known})")
    if len(set(checkers)) != len(checkers):
        raise ConfigError("checkers: duplicate entries")

    grid = data.get("grid", {})
    if not isinstance(grid, dict):
        raise ConfigError("grid: must be a table")
    bounds = {}
    for key in ("a", "b", "c"):
        raw = grid.get(key)
        bounds[key] = _parse_range(raw, f"grid.{key}") if raw is not None else _DEFAULT_GRID[key]
    raw_inits = grid.get("inits", list(_DEFAULT_INITS))
    if not isinstance(raw_inits, list) or not raw_inits:
        raise ConfigError("grid.inits: must be a nonempty array of init labels")
    inits = tuple(_parse_init(str(label)) for label in raw_inits)

    index_tables = data.get("indices", {})
    if not isinstance(index_tables, dict):
        raise ConfigError("indices: must be a table of per-checker tables")
    for name in index_tables:
        if name not in CATALOG:
            raise ConfigError(f"indices.{name}: unknown checker")
        if name not in checkers:
            raise ConfigError(f"indices.{name}: checker is not enabled")
    ranges: dict[str, dict[str, tuple[int, int]]] = {}
    for name in checkers:
        entry = CATALOG[name]
        table = index_tables.get(name, {})
        if not isinstance(table, dict):
            raise ConfigError(f"indices.{name}: must be a table")
        for idx in table:
            if idx not in entry.index_names:
                raise ConfigError(
                    f"indices.{name}.{idx}: {name} takes indices {', '.join(entry.index_names)}"
                )
        resolved = {}
        for idx in entry.index_names:
            raw = table.get(idx)
            if raw is None:
                resolved[idx] = entry.defaults[idx]
            else:
                resolved[idx] = _parse_range(raw, f"indices.{name}.{idx}", entry.floors[idx])
        ranges[name] = resolved

    for key in data:
        if key not in ("checkers", "grid", "indices"):
            raise ConfigError(f"unknown top-level key {key!r}")

    return SweepConfig(
        checkers=tuple(sorted(checkers)),
        a=bounds["a"],
        b=bounds["b"],
        c=bounds["c"],
        inits=inits,
        ranges=ranges,
    )


# ---------------------------------------------------------------------------
# sweep execution


def _index_tuples(entry: CheckerEntry, ranges: dict[str, tuple[int, int]]) -> Iterator[dict]:
    names = entry.index_names
    spans = [range(ranges[n][0], ranges[n][1] + 1) for n in names]

    def rec(position: int, acc: dict) -> Iterator[dict]:
        if position == len(names):
            yield dict(acc)
            return
        for value in spans[position]:
            acc[names[position]] = value
            yield from rec(position + 1, acc)

    yield from rec(0, {})


def _grid_params(cfg: SweepConfig) -> Iterator[Params]:
    for a in range(cfg.a[0], cfg.a[1] + 1):
        for b in range(cfg.b[0], cfg.b[1] + 1):
            for c in range(cfg.c[0], cfg.c[1] + 1):
                try:
                    yield Params(a, b, c)
                except InvalidParams:
                    continue  # zero or degenerate cells are skipped, not errors


def _iter_cells(entry: CheckerEntry, cfg: SweepConfig) -> Iterator[tuple]:
    """Cells in deterministic order: (a, b, c), init, index tuple, option."""
    options: tuple = entry.option_values if entry.option_name else (None,)
    ranges = cfg.ranges[entry.name]
    if entry.needs == "none":
        for indices in _index_tuples(entry, ranges):
            for option in options:
                yield entry, None, None, indices, option
        return
    for params in _grid_params(cfg):
        if entry.c_must_be_one and params.c != 1:
            continue
        if entry.positive_grid and (params.a < 1 or params.b < 1 or params.c < 1):
            continue
        if entry.needs == "params":
            for indices in _index_tuples(entry, ranges):
                for option in options:
                    yield entry, params, None, indices, option
            continue
        for init in cfg.inits:
            spec = init.build(params)
            if spec is None:
                continue
            if entry.positive_grid and (spec.w0.denominator != 1 or spec.w1.denominator != 1):
                continue
            for indices in _index_tuples(entry, ranges):
                for option in options:
                    yield entry, params, spec, indices, option


def _eval_cell(cell: tuple) -> dict:
    entry, params, spec, indices, option = cell
    control = entry.name == "zhang47" and option is False
    report = entry.run(params, spec, indices, option)
    return report_row(entry, params, spec, report, control=control)


def _chunks(iterable: Iterable, size: int) -> Iterator[list]:
    chunk: list = []
    for item in iterable:
        chunk.append(item)
        if len(chunk) >= size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


_CSV_COLUMNS = [
    "checker", "a", "b", "c", "family", "w0", "w1",
    "m", "n", "r", "d", "k", "i", "root", "variant", "corrected",
    "control", "lhs", "rhs", "residual", "modulus", "result",
]


def _csv_record(row: dict) -> dict:
    record = {col: "" for col in _CSV_COLUMNS}
    for key in ("checker", "a", "b", "c", "family", "w0", "w1", "modulus"):
        if key in row:
            record[key] = row[key]
    for key, value in row["indices"].items():
        record[key] = value
    for key in ("lhs", "rhs", "residual"):
        if key in row:
            value = row[key]
            record[key] = json.dumps(value) if isinstance(value, dict) else value
    record["control"] = "yes" if row.get("control") else ""
    if "status" in row:
        record["result"] = row["status"]
    else:
        record["result"] = "equal" if row["equal"] else "unequal"
    return record


def run_sweep(cfg: SweepConfig, threads: int, csv_path: str | None = None) -> dict:
    started = time.perf_counter()
    counters: dict[str, dict] = {}
    witnesses: list[dict] = []
    control_witnesses: list[dict] = []
    control_truncated = False

    csv_handle = csv_writer = None
    if csv_path is not None:
        csv_handle = open(csv_path, "w", newline="")
        csv_writer = csv.DictWriter(csv_handle, fieldnames=_CSV_COLUMNS)
        csv_writer.writeheader()

    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for name in cfg.checkers:
            entry = CATALOG[name]
            stats = {"checked": 0, "ok": 0, "fails": 0, "inapplicable": 0}
            if entry.name == "zhang47":
                stats.update({"control_checked": 0, "control_equal": 0, "expected_fails": 0})
            for chunk in _chunks(_iter_cells(entry, cfg), 2048):
                if pool is not None:
                    rows = list(pool.map(_eval_cell, chunk))
                else:
                    rows = [_eval_cell(cell) for cell in chunk]
                for row in rows:
                    if csv_writer is not None:
                        csv_writer.writerow(_csv_record(row))
                    if row.get("control"):
                        stats["control_checked"] += 1
                        if row["ok"]:
                            stats["control_equal"] += 1
                        else:
                            stats["expected_fails"] += 1
                            if len(control_witnesses) < WITNESS_CAP:
                                control_witnesses.append(row)
                            else:
                                control_truncated = True
                        continue
                    stats["checked"] += 1
                    if row.get("status") == Status.INAPPLICABLE.value:
                        stats["inapplicable"] += 1
                    elif row["ok"]:
                        stats["ok"] += 1
                    else:
                        stats["fails"] += 1
                        witnesses.append(row)
            counters[name] = stats
    finally:
        if pool is not None:
            pool.shutdown()
        if csv_handle is not None:
            csv_handle.close()

    totals = {
        "checked": sum(s["checked"] for s in counters.values()),
        "ok": sum(s["ok"] for s in counters.values()),
        "fails": sum(s["fails"] for s in counters.values()),
        "inapplicable": sum(s["inapplicable"] for s in counters.values()),
        "expected_fails": sum(s.get("expected_fails", 0) for s in counters.values()),
    }
    return {
        "tool": f"bihoradam {__version__}",
        "config": cfg.as_dict(),
        "checkers": counters,
        "totals": totals,
        "witnesses": witnesses,
        "control_witnesses": control_witnesses,
        "control_witnesses_truncated": control_truncated,
        "elapsed_seconds": round(time.perf_counter() - started, 6),
    }


def _thread_count(parser) -> int:
    raw = os.environ.get("HORADAM_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        parser.error(f"HORADAM_THREADS must be a positive integer, got {raw!r}")
    if value < 1:
        parser.error(f"HORADAM_THREADS must be a positive integer, got {raw!r}")
    return value


def _cmd_sweep(args, parser) -> int:
    try:
        cfg = load_config(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    report = run_sweep(cfg, _thread_count(parser), csv_path=args.csv)
    text = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return 0 if report["totals"]["fails"] == 0 else 1


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bihoradam",
        description="Exact bi-periodic Horadam sequence terms and identity checks.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    term = sub.add_parser("term", help="print one exact term")
    _add_spec_args(term)
    term.add_argument("-n", type=int, required=True, help="term index")
    term.add_argument(
        "--method", choices=["naive", "binet", "fast"], default="naive",
        help="evaluation route (all agree exactly)",
    )

    gf = sub.add_parser("gf", help="print generating-function coefficients")
    _add_spec_args(gf)
    gf.add_argument("--count", type=int, required=True, help="number of coefficients")

    verify = sub.add_parser("verify", help="run one checker instance")
    verify.add_argument("checker", choices=sorted(CATALOG), help="catalog identifier")
    _add_spec_args(verify)
    for flag in ("m", "n", "r", "d", "k", "i"):
        verify.add_argument(f"-{flag}", type=int, help=f"index {flag}")
    verify.add_argument("--corrected", type=_bool_flag, default=True,
                        help="zhang47 only: false runs the known-wrong variant")
    verify.add_argument("--root", choices=["alpha", "beta"], default="alpha",
                        help="lemma3 only: which root to substitute")
    verify.add_argument("--variant", choices=["direct", "zhang_form"], default="direct",
                        help="thm4-special only: which window relation")

    sweep = sub.add_parser("sweep", help="run enabled checkers over a config grid")
    sweep.add_argument("config", help="TOML config path")
    sweep.add_argument("--out", help="write the JSON report here instead of stdout")
    sweep.add_argument("--csv", help="also write one CSV row per checked cell")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "term":
            return _cmd_term(args, parser)
        if args.command == "gf":
            return _cmd_gf(args, parser)
        if args.command == "verify":
            return _cmd_verify(args, parser)
        return _cmd_sweep(args, parser)
    except (InvalidParams, InvalidIndex, DegenerateModulus, ZeroDivisorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
