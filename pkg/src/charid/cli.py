"""Batch front door: ingest sampled functions, classify, emit reports.

One request per invocation.  Input is a JSON document (any mode, any
dimension) or a CSV table (1-D only); the report goes to standard output as
JSON or a fixed text template, diagnostics to standard error.  Exit codes
are part of the contract: 0 success (any verdict), 1 usage, 2 missing file,
3 malformed syntax or shape, 4 invariant violation (non-unit samples).

Every floating value is serialized with 17 significant digits, so a report
parsed back from disk reproduces the in-memory numbers exactly and repeated
runs of the same request are byte-identical.

The ``generate`` subcommand writes character fixtures in the same input
formats, optionally with seeded uniform phase jitter, so round trips
(generate, parse, analyze) exercise the full pipeline from files.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .circle import UNIT_TOL, unit_deviation
from .finite import (
    CharacterTable,
    FiniteGroupSpec,
    character_table,
    identify_finite,
    is_homomorphism_exhaustive,
)
from .identify import CharacterReport, IdentifyConfig, Verdict, classify
from .samples import (
    LineSamples,
    TorusSamples,
    sample_character_line,
    sample_character_torus,
)

MODES = ("torus", "line", "finite")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISSING_FILE = 2
EXIT_MALFORMED = 3
EXIT_INVARIANT = 4

_DEFAULTS = IdentifyConfig()


class InputError(Exception):
    """A diagnosable input problem carrying its contractual exit code."""

    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class AnalysisRequest:
    """One classification job: where the samples live and how to judge them."""

    mode: str
    input_path: str
    tau_exact: float = _DEFAULTS.tau_exact
    floor: float = _DEFAULTS.floor
    hom_trials: int = _DEFAULTS.hom_trials
    seed: int = _DEFAULTS.seed
    fmt: str = "json"
    endpoint: complex | None = None


# ---------------------------------------------------------------------------
# deterministic JSON: 17 significant digits, fixed key order, no whitespace

def _fmt_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("non-finite value in serialized output")
    return format(x, ".17g")


def _to_json(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_to_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(k)}:{_to_json(v)}" for k, v in obj.items()) + "}"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "peaks":
            lines.append("peaks:")
            for entry in value:
                lines.append(f"  {_to_json(entry[0])}: {_to_json(entry[1])}")
        else:
            lines.append(f"{key}: {_to_json(value)}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# parsing

def _load_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except FileNotFoundError:
        raise InputError(EXIT_MISSING_FILE, f"no such file: {path}") from None
    except OSError as err:
        raise InputError(EXIT_MISSING_FILE, f"cannot read {path}: {err}") from None
    except UnicodeDecodeError:
        raise InputError(EXIT_MALFORMED, f"{path} is not valid utf-8 text") from None


def _pairs_to_complex(field, count: int, what: str) -> np.ndarray:
    """Decode a JSON array of [re, im] pairs of the expected length."""
    if not isinstance(field, list):
        raise InputError(EXIT_MALFORMED, f"{what} must be an array of [re, im] pairs")
    if len(field) != count:
        raise InputError(
            EXIT_MALFORMED, f"{what} has {len(field)} entries, expected {count}"
        )
    try:
        arr = np.array(field, dtype=np.float64)
    except (ValueError, TypeError):
        raise InputError(
            EXIT_MALFORMED, f"{what} must be an array of [re, im] number pairs"
        ) from None
    if arr.shape != (count, 2):
        raise InputError(EXIT_MALFORMED, f"{what} entries must be [re, im] pairs")
    return arr[:, 0] + 1j * arr[:, 1]


def _check_unit(values: np.ndarray, what: str) -> None:
    dev = unit_deviation(values)
    bad = np.argwhere(~(dev <= UNIT_TOL))
    if bad.size:
        idx = tuple(int(i) for i in bad[0])
        raise InputError(
            EXIT_INVARIANT,
            f"{what} violate unit modulus at {len(bad)} point(s); first at index "
            f"{idx} with deviation {float(dev[tuple(bad[0])]):.3g}",
        )


def _parse_json_input(text: str, mode: str | None):
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, ValueError, RecursionError):
        raise InputError(EXIT_MALFORMED, "input is not valid JSON") from None
    if not isinstance(data, dict):
        raise InputError(EXIT_MALFORMED, "top level must be a JSON object")

    declared = data.get("mode")
    if declared not in MODES:
        raise InputError(EXIT_MALFORMED, f"mode must be one of {MODES}, got {declared!r}")
    if mode is not None and declared != mode:
        raise InputError(
            EXIT_MALFORMED, f"file declares mode {declared!r} but {mode!r} was requested"
        )

    grid = data.get("grid")
    if not isinstance(grid, list) or not grid or any(
        isinstance(n, bool) or not isinstance(n, int) for n in grid
    ):
        raise InputError(EXIT_MALFORMED, "grid must be a non-empty array of integers")
    dim = data.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim != len(grid):
        raise InputError(EXIT_MALFORMED, f"dim must equal len(grid) = {len(grid)}")

    values = _pairs_to_complex(data.get("values"), math.prod(grid), "values")

    if declared == "finite":
        try:
            table = CharacterTable(FiniteGroupSpec(tuple(grid)), values)
        except ValueError as err:
            raise InputError(EXIT_MALFORMED, str(err)) from None
        _check_unit(table.values, "values")
        return table

    try:
        base = TorusSamples(tuple(grid), values)
    except ValueError as err:
        raise InputError(EXIT_MALFORMED, str(err)) from None

    if declared == "torus":
        _check_unit(base.values, "values")
        return base

    endpoints = _pairs_to_complex(data.get("endpoint_values"), dim, "endpoint_values")
    try:
        ls = LineSamples(base, endpoints)
    except ValueError as err:
        raise InputError(EXIT_MALFORMED, str(err)) from None
    _check_unit(ls.base.values, "values")
    _check_unit(ls.endpoint_values, "endpoint_values")
    return ls


def _parse_csv_input(text: str, mode: str | None, endpoint: complex | None):
    rows = [line.strip() for line in text.splitlines()]
    rows = [r for r in rows if r]
    if rows and rows[0].lower().replace(" ", "").startswith("index,"):
        rows = rows[1:]
    indexed: list[tuple[int, complex]] = []
    for r in rows:
        parts = r.split(",")
        if len(parts) != 3:
            raise InputError(EXIT_MALFORMED, f"csv row needs index,re,im: {r!r}")
        try:
            indexed.append((int(parts[0]), complex(float(parts[1]), float(parts[2]))))
        except ValueError:
            raise InputError(EXIT_MALFORMED, f"csv row is not numeric: {r!r}") from None
    indexed.sort()
    if [i for i, _ in indexed] != list(range(len(indexed))):
        raise InputError(EXIT_MALFORMED, "csv indices must cover 0..N-1 exactly once")
    values = np.array([v for _, v in indexed], dtype=np.complex128)

    effective = mode if mode is not None else ("line" if endpoint is not None else "torus")
    if effective == "finite":
        try:
            table = CharacterTable(FiniteGroupSpec((len(values),)), values)
        except ValueError as err:
            raise InputError(EXIT_MALFORMED, str(err)) from None
        _check_unit(table.values, "values")
        return table
    try:
        base = TorusSamples((len(values),), values)
    except ValueError as err:
        raise InputError(EXIT_MALFORMED, str(err)) from None
    if effective == "torus":
        _check_unit(base.values, "values")
        return base
    if endpoint is None:
        raise InputError(
            EXIT_MALFORMED, "line mode csv input needs --endpoint re,im"
        )
    ep = np.array([endpoint], dtype=np.complex128)
    _check_unit(base.values, "values")
    _check_unit(ep, "endpoint")
    return LineSamples(base, ep)


def parse_input(
    path: str, mode: str | None = None, endpoint: complex | None = None
) -> TorusSamples | LineSamples | CharacterTable:
    """Read and validate a samples file; never aborts on hostile bytes.

    JSON files declare their own mode, which must match ``mode`` when one is
    requested.  Files ending in ``.csv`` use the 1-D table format and take
    the mode from the caller (torus when unspecified), with the line-mode
    endpoint supplied out of band.  All failures raise :class:`InputError`
    with the contractual exit code.
    """
    text = _load_text(path)
    if path.endswith(".csv"):
        return _parse_csv_input(text, mode, endpoint)
    return _parse_json_input(text, mode)


# ---------------------------------------------------------------------------
# reports

def _config_echo(mode: str, cfg: IdentifyConfig) -> dict:
    return {
        "mode": mode,
        "tau_exact": cfg.tau_exact,
        "floor": cfg.floor,
        "hom_trials": cfg.hom_trials,
        "seed": cfg.seed,
    }


def _report_dict(rep: CharacterReport, cfg: IdentifyConfig, mode: str) -> dict:
    out: dict = {"verdict": str(rep.verdict)}
    out["frequency"] = None if rep.frequency is None else list(rep.frequency)
    if mode == "line":
        out["beta"] = list(rep.beta)
    out["hom_residual"] = rep.hom_residual
    out["spectral_peak"] = rep.spectral_peak
    out["peaks"] = [[list(k), m] for k, m in rep.peaks]
    out["config"] = _config_echo(mode, cfg)
    return out


def _finite_report(table: CharacterTable, cfg: IdentifyConfig) -> dict:
    """Verdict synthesis for finite tables.

    The multiplicative law is checked exhaustively (or on a large seeded
    sample for very big groups), so hom_residual here is a worst case over
    checked pairs, not a spot probe.  Frequencies are character indices in
    the non-negative box prod [0, N_j).
    """
    passed, worst = is_homomorphism_exhaustive(table)
    mags = np.abs(np.fft.fftn(table.values)).ravel() / table.group.size
    order = np.argsort(-mags, kind="stable")[:5]
    peaks = [
        [
            [int(i) for i in np.unravel_index(int(flat), table.group.orders)],
            float(mags[flat]),
        ]
        for flat in order
    ]
    peak = peaks[0][1]
    dom = identify_finite(table, cfg.floor)
    if dom is not None and passed and peak >= 1.0 - cfg.tau_exact:
        verdict = Verdict.EXACT
    elif dom is not None:
        verdict = Verdict.APPROX
    else:
        verdict = Verdict.NOT
    out: dict = {"verdict": str(verdict)}
    out["frequency"] = None if dom is None else [int(i) for i in dom]
    out["hom_residual"] = worst
    out["spectral_peak"] = peak
    out["peaks"] = peaks
    out["config"] = _config_echo("finite", cfg)
    return out


def run(req: AnalysisRequest) -> int:
    """Execute one analysis request, print the report, return the exit code.

    Any verdict is success; nonzero codes signal input or usage problems
    only.
    """
    if req.mode not in MODES:
        raise InputError(EXIT_USAGE, f"mode must be one of {MODES}, got {req.mode!r}")
    if req.fmt not in ("json", "text"):
        raise InputError(EXIT_USAGE, f"format must be json or text, got {req.fmt!r}")
    try:
        cfg = IdentifyConfig(req.tau_exact, req.floor, req.hom_trials, req.seed)
    except ValueError as err:
        raise InputError(EXIT_USAGE, str(err)) from None
    if req.endpoint is not None:
        if req.mode != "line":
            raise InputError(EXIT_USAGE, "--endpoint only applies to line mode")
        if not req.input_path.endswith(".csv"):
            raise InputError(EXIT_USAGE, "--endpoint only applies to csv input")

    obj = parse_input(req.input_path, mode=req.mode, endpoint=req.endpoint)
    if isinstance(obj, CharacterTable):
        report = _finite_report(obj, cfg)
    else:
        report = _report_dict(classify(obj, cfg), cfg, req.mode)
    print(_to_json(report) if req.fmt == "json" else _render_text(report))
    return EXIT_OK


# ---------------------------------------------------------------------------
# fixture generation

def _complex_pairs(values: np.ndarray) -> list:
    flat = np.asarray(values).ravel()
    return np.column_stack([flat.real, flat.imag]).tolist()


def generate(
    mode: str,
    freqs: list[float],
    grid: list[int],
    output: str,
    noise: float = 0.0,
    seed: int = 0,
) -> None:
    """Write a character fixture, optionally phase-jittered.

    Noise is uniform in [-noise, noise] radians, applied multiplicatively as
    exp(i jitter) per sample; modulus stays exactly 1, so noisy fixtures
    still parse.  In line mode the jitter draw covers base samples first and
    then the endpoints, in one deterministic seeded stream.
    """
    if len(freqs) != len(grid):
        raise InputError(
            EXIT_USAGE, f"freq has {len(freqs)} entries but grid has {len(grid)}"
        )
    if not noise >= 0.0:
        raise InputError(EXIT_USAGE, f"noise must be >= 0, got {noise}")
    csv = output.endswith(".csv")
    if csv and (mode == "line" or len(grid) != 1):
        raise InputError(
            EXIT_USAGE, "csv output supports 1-D torus or finite fixtures only"
        )

    endpoints = None
    try:
        if mode == "torus":
            values = sample_character_torus(_as_ints(freqs), grid).values
        elif mode == "line":
            ls = sample_character_line(freqs, grid)
            values, endpoints = ls.base.values, ls.endpoint_values
        elif mode == "finite":
            values = character_table(
                FiniteGroupSpec(tuple(grid)), _as_ints(freqs)
            ).values
        else:
            raise InputError(EXIT_USAGE, f"mode must be one of {MODES}, got {mode!r}")
    except ValueError as err:
        raise InputError(EXIT_USAGE, str(err)) from None

    if noise > 0.0:
        rng = np.random.default_rng(seed)
        extra = 0 if endpoints is None else endpoints.size
        jitter = rng.uniform(-noise, noise, size=values.size + extra)
        values = values * np.exp(1j * jitter[: values.size]).reshape(values.shape)
        if endpoints is not None:
            endpoints = endpoints * np.exp(1j * jitter[values.size :])

    if csv:
        flat = values.ravel()
        rows = ["index,re,im"]
        rows += [
            f"{i},{_fmt_float(v.real)},{_fmt_float(v.imag)}" for i, v in enumerate(flat)
        ]
        payload = "\n".join(rows) + "\n"
    else:
        doc: dict = {
            "mode": mode,
            "dim": len(grid),
            "grid": [int(n) for n in grid],
            "values": _complex_pairs(values),
        }
        if endpoints is not None:
            doc["endpoint_values"] = _complex_pairs(endpoints)
        payload = _to_json(doc) + "\n"

    try:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    except OSError as err:
        raise InputError(EXIT_MISSING_FILE, f"cannot write {output}: {err}") from None


def _as_ints(freqs: list[float]) -> list[int]:
    out = []
    for x in freqs:
        if not float(x).is_integer():
            raise InputError(EXIT_USAGE, f"frequency must be integral, got {x}")
        out.append(int(x))
    return out


# ---------------------------------------------------------------------------
# argument handling

class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; the contract reserves 2 for
    # missing files and uses 1 for usage errors.
    def error(self, message: str) -> None:  # noqa: D102 - argparse override
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _num_list(text: str, kind, name: str) -> list:
    try:
        return [kind(part) for part in text.split(",")]
    except ValueError:
        raise InputError(EXIT_USAGE, f"{name} must be a comma-separated list") from None


def _parse_endpoint(text: str | None) -> complex | None:
    if text is None:
        return None
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(EXIT_USAGE, "--endpoint needs re,im")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise InputError(EXIT_USAGE, "--endpoint needs two numbers") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="charid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    an = sub.add_parser("analyze", help="classify a samples file")
    an.add_argument("--input", required=True, help="JSON or .csv samples file")
    an.add_argument("--mode", required=True, choices=MODES)
    an.add_argument("--tau-exact", dest="tau_exact", type=float,
                    default=_DEFAULTS.tau_exact)
    an.add_argument("--floor", type=float, default=_DEFAULTS.floor)
    an.add_argument("--trials", type=int, default=_DEFAULTS.hom_trials)
    an.add_argument("--seed", type=int, default=_DEFAULTS.seed)
    an.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    an.add_argument("--endpoint", default=None,
                    help="re,im endpoint value for 1-D csv line input")

    gen = sub.add_parser("generate", help="write a character fixture")
    gen.add_argument("--mode", required=True, choices=MODES)
    gen.add_argument("--freq", required=True, help="comma-separated frequency vector")
    gen.add_argument("--grid", required=True, help="comma-separated axis sample counts")
    gen.add_argument("--noise", type=float, default=0.0,
                     help="phase jitter amplitude in radians")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--output", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "analyze":
            req = AnalysisRequest(
                mode=args.mode,
                input_path=args.input,
                tau_exact=args.tau_exact,
                floor=args.floor,
                hom_trials=args.trials,
                seed=args.seed,
                fmt=args.fmt,
                endpoint=_parse_endpoint(args.endpoint),
            )
            return run(req)
        generate(
            args.mode,
            _num_list(args.freq, float, "--freq"),
            _num_list(args.grid, int, "--grid"),
            args.output,
            noise=args.noise,
            seed=args.seed,
        )
        return EXIT_OK
    except InputError as err:
        print(f"charid: error: {err}", file=sys.stderr)
        return err.code


if __name__ == "__main__":
    sys.exit(main())
