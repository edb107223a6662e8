"""Parameter sweeps over the kicked-chain model, with CSV output.

Five sweep modes cover the standard numerical experiments:

``evolve``
    Stroboscopic time series (return probability and per-site magnetization)
    for each grid point, plus a summary row per point.
``lifetime-scan``
    First crossing of the even-period return probability below a threshold,
    scanned over chain length and drive parameters.  Points that never cross
    within the horizon are reported as censored.
``phase-diagram``
    Early-time average of the even-period return probability on a 2-d grid of
    drive parameters at a single chain length.
``spectrum``
    Quasi-energy pairing statistics, exact pair counts at the two anchor
    phases, and the time-reflection residual, per grid point.
``fourier``
    Discrete Fourier transform of the full return-probability series, with
    the dominant bin and the subharmonic (half drive frequency) weight.

Every run writes a single summary CSV whose first line is a ``#``-prefixed
JSON object echoing the sweep configuration and recording provenance
(tool, version, timestamp, elapsed time, worker count).  The data that
follows is a function of the configuration alone: repeated runs produce
byte-identical files once the provenance object is ignored, regardless of
``jobs``.  Floats are written with ``repr`` so values round-trip exactly.

Modes that produce per-point curves (``evolve``, ``fourier``, and
``spectrum`` with ``dump_spectra``) write one auxiliary CSV per grid point
next to the summary, named ``<stem>_series_<idx>.csv`` or
``<stem>_spectrum_<idx>.csv``; the summary row records the file name.

Grid points are processed independently (optionally in a process pool) and
rows are emitted in grid order.  A failure at one point is captured in that
row's ``error`` column instead of aborting the sweep.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .engine import evolve_stroboscopic, iter_return_probability
from .observables import average_return, fourier_spectrum, lifetime
from .spectral import (
    check_time_reflection,
    count_exact_pi_pairs,
    gap_statistics,
    propagator_spectrum,
)
from .states import (
    DENSE_MAX_SITES,
    EVOLVE_MAX_SITES,
    CapacityError,
    FloquetParams,
    polarized_state,
)

MODES = ("evolve", "lifetime-scan", "phase-diagram", "spectrum", "fourier")

_DEFAULT_THRESHOLD = 0.05
_DEFAULT_WINDOW = 1000
_DEFAULT_PERIODS = {"lifetime-scan": 100_000}
_DEFAULT_PERIODS_FALLBACK = 2000


class ConfigError(ValueError):
    """Invalid sweep configuration (bad values, bad grids, unknown keys)."""


@dataclass(frozen=True)
class SweepConfig:
    """Fully resolved description of one sweep run."""

    mode: str
    lengths: tuple[int, ...]
    jt_over_pi: tuple[float, ...]
    epsilon_over_pi: tuple[float, ...]
    n_periods: int
    threshold: float = _DEFAULT_THRESHOLD
    window: int = _DEFAULT_WINDOW
    out: str = ""
    jobs: int = 1
    period: float = 1.0
    dump_spectra: bool = False

    def validate(self) -> None:
        """Raise ConfigError (all problems at once) or CapacityError."""
        problems = []
        if self.mode not in MODES:
            problems.append(f"unknown mode {self.mode!r}; choose from {', '.join(MODES)}")
        if not self.lengths:
            problems.append("no chain length given (--length)")
        for L in self.lengths:
            if not isinstance(L, int) or isinstance(L, bool):
                problems.append(f"chain length must be an integer, got {L!r}")
            elif L < 2:
                problems.append(f"chain length must be at least 2, got {L}")
        if not self.jt_over_pi:
            problems.append("no interaction phase given (--jt-over-pi)")
        if not self.epsilon_over_pi:
            problems.append("no kick imperfection given (--epsilon-over-pi)")
        if self.n_periods < 1:
            problems.append(f"periods must be positive, got {self.n_periods}")
        if not 0.0 < self.threshold < 1.0:
            problems.append(f"threshold must lie strictly between 0 and 1, got {self.threshold}")
        if self.window < 1:
            problems.append(f"window must be positive, got {self.window}")
        if self.jobs < 1:
            problems.append(f"jobs must be positive, got {self.jobs}")
        if not self.period > 0.0:
            problems.append(f"period must be positive, got {self.period}")
        if not self.out:
            problems.append("no output path given (--out)")
        if self.mode == "phase-diagram":
            if len(set(self.lengths)) > 1:
                problems.append("phase-diagram runs at a single chain length")
            if self.n_periods < 2 * self.window:
                problems.append(
                    "phase-diagram needs at least 2*window periods "
                    f"(window={self.window} even-period samples), got {self.n_periods}"
                )
        if problems:
            raise ConfigError("invalid configuration:\n  - " + "\n  - ".join(problems))
        cap = DENSE_MAX_SITES if self.mode == "spectrum" else EVOLVE_MAX_SITES
        for L in self.lengths:
            if L > cap:
                raise CapacityError(
                    f"chain length {L} exceeds the {cap}-site cap for mode {self.mode!r}"
                )

    def grid(self) -> list[tuple[int, float, float]]:
        """All (L, JT/pi, epsilon/pi) points, in deterministic grid order."""
        if self.mode == "phase-diagram":
            L = self.lengths[0]
            return [(L, jt, eps) for jt, eps in itertools.product(self.jt_over_pi, self.epsilon_over_pi)]
        return list(itertools.product(self.lengths, self.jt_over_pi, self.epsilon_over_pi))


@dataclass
class SweepResult:
    """Rows produced by a sweep, plus where they were written."""

    config: SweepConfig
    columns: tuple[str, ...]
    rows: list[dict]
    path: Path
    aux_files: list[Path] = field(default_factory=list)


# --------------------------------------------------------------------------
# per-point workers (module level so a process pool can pickle them)

def _point_params(task):
    L, jt_pi, eps_pi, period = task[0], task[1], task[2], task[-1]
    return FloquetParams.from_dimensionless(L, jt_pi, eps_pi, T=period)


def _evolve_point(task):
    L, jt_pi, eps_pi, n_periods, threshold, window, period = task
    row = {
        "L": L, "jt_over_pi": jt_pi, "epsilon_over_pi": eps_pi,
        "n_periods": n_periods, "n_star": None, "censored": None,
        "average_return": None, "window_used": None, "norm_drift": None,
        "series_file": None, "error": None,
    }
    try:
        params = _point_params(task)
        series = evolve_stroboscopic(
            polarized_state(L), params, n_periods,
            observables=("return_probability", "sz"),
        )
        even = series.return_probability[1::2]
        crossing = lifetime(even, threshold) if even.size else None
        window_used = min(window, even.size) if even.size else None
        row.update(
            n_star=None if crossing is None else crossing.n_star,
            censored=None if crossing is None else crossing.censored,
            average_return=None if window_used is None else average_return(even, window_used),
            window_used=window_used,
            norm_drift=series.norm_drift,
            _series=(series.n, series.return_probability, series.sz),
        )
    except Exception as exc:  # noqa: BLE001 - recorded per row, sweep continues
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def _lifetime_point(task):
    L, jt_pi, eps_pi, n_periods, threshold, period = task
    n_max_pairs = n_periods // 2
    row = {
        "L": L, "jt_over_pi": jt_pi, "epsilon_over_pi": eps_pi,
        "threshold": threshold, "n_max_pairs": n_max_pairs,
        "n_star": None, "censored": None, "error": None,
    }
    try:
        params = _point_params(task)
        stream = iter_return_probability(polarized_state(L), params)
        censored = True
        n_star = None
        for n in range(1, n_max_pairs + 1):
            next(stream)            # odd period, not compared to the threshold
            p_even = next(stream)   # period 2n
            if p_even < threshold:
                n_star, censored = n, False
                break
        row.update(n_star=n_star, censored=censored)
    except Exception as exc:  # noqa: BLE001
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def _phase_point(task):
    L, jt_pi, eps_pi, n_periods, window, period = task
    row = {
        "L": L, "jt_over_pi": jt_pi, "epsilon_over_pi": eps_pi,
        "window": window, "average_return": None, "error": None,
    }
    try:
        params = _point_params(task)
        stream = iter_return_probability(polarized_state(L), params)
        total = 0.0
        for _ in range(window):
            next(stream)
            total += next(stream)
        row.update(average_return=total / window)
    except Exception as exc:  # noqa: BLE001
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def _spectrum_point(task):
    L, jt_pi, eps_pi, dump, period = task
    row = {
        "L": L, "jt_over_pi": jt_pi, "epsilon_over_pi": eps_pi,
        "delta0_mean": None, "delta_pi_mean": None, "ratio": None,
        "n_zero": None, "n_pi": None, "reflection_residual": None,
        "spectrum_file": None, "error": None,
    }
    try:
        params = _point_params(task)
        spec = propagator_spectrum(params)
        stats = gap_statistics(spec)
        counts = count_exact_pi_pairs(spec)
        row.update(
            delta0_mean=stats.delta0_mean,
            delta_pi_mean=stats.delta_pi_mean,
            ratio=stats.ratio,
            n_zero=counts.n_zero,
            n_pi=counts.n_pi,
            reflection_residual=check_time_reflection(params),
        )
        if dump:
            row["_spectrum"] = spec.energies
    except Exception as exc:  # noqa: BLE001
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def _fourier_point(task):
    L, jt_pi, eps_pi, n_periods, period = task
    row = {
        "L": L, "jt_over_pi": jt_pi, "epsilon_over_pi": eps_pi,
        "n_periods": n_periods, "peak_bin": None, "peak_frequency": None,
        "peak_magnitude": None, "subharmonic_magnitude": None,
        "spectrum_file": None, "error": None,
    }
    try:
        params = _point_params(task)
        series = evolve_stroboscopic(polarized_state(L), params, n_periods)
        spectrum = fourier_spectrum(series.return_probability, period=period)
        peak = spectrum.peak_bin()
        half = n_periods // 2 if n_periods % 2 == 0 else None
        row.update(
            peak_bin=peak,
            peak_frequency=float(spectrum.frequencies[peak]),
            peak_magnitude=float(spectrum.magnitudes[peak]),
            subharmonic_magnitude=None if half is None else float(spectrum.magnitudes[half]),
            _spectrum=(spectrum.frequencies, spectrum.magnitudes),
        )
    except Exception as exc:  # noqa: BLE001
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def _run_points(worker, tasks: list[tuple], jobs: int) -> list[dict]:
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


# --------------------------------------------------------------------------
# CSV output

def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _config_echo(config: SweepConfig) -> dict:
    """The part of the configuration that determines the output data.

    Execution details (worker count, output path, wall-clock) go in the
    provenance object instead, so identical physics configurations yield
    identical data sections byte for byte.
    """
    return {
        "mode": config.mode,
        "lengths": list(config.lengths),
        "jt_over_pi": list(config.jt_over_pi),
        "epsilon_over_pi": list(config.epsilon_over_pi),
        "n_periods": config.n_periods,
        "threshold": config.threshold,
        "window": config.window,
        "period": config.period,
        "dump_spectra": config.dump_spectra,
    }


def _write_csv(path: Path, columns: Sequence[str], rows: list[dict],
               header: Optional[dict] = None) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        if header is not None:
            handle.write("# " + json.dumps(header, sort_keys=True) + "\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_format_cell(row.get(col)) for col in columns])


def _write_summary(config: SweepConfig, columns: Sequence[str], rows: list[dict],
                   elapsed: float) -> Path:
    path = Path(config.out)
    header = {
        "config": _config_echo(config),
        "provenance": {
            "tool": "kicked-ising",
            "version": __version__,
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "elapsed_seconds": elapsed,
            "jobs": config.jobs,
            "out": config.out,
        },
    }
    _write_csv(path, columns, rows, header)
    return path


def _aux_path(out: str, kind: str, index: int) -> Path:
    path = Path(out)
    return path.with_name(f"{path.stem}_{kind}_{index:03d}.csv")


# --------------------------------------------------------------------------
# runners

_EVOLVE_COLUMNS = ("L", "jt_over_pi", "epsilon_over_pi", "n_periods", "n_star",
                   "censored", "average_return", "window_used", "norm_drift",
                   "series_file", "error")
_LIFETIME_COLUMNS = ("L", "jt_over_pi", "epsilon_over_pi", "threshold",
                     "n_max_pairs", "n_star", "censored", "error")
_PHASE_COLUMNS = ("L", "jt_over_pi", "epsilon_over_pi", "window",
                  "average_return", "error")
_SPECTRUM_COLUMNS = ("L", "jt_over_pi", "epsilon_over_pi", "delta0_mean",
                     "delta_pi_mean", "ratio", "n_zero", "n_pi",
                     "reflection_residual", "spectrum_file", "error")
_FOURIER_COLUMNS = ("L", "jt_over_pi", "epsilon_over_pi", "n_periods",
                    "peak_bin", "peak_frequency", "peak_magnitude",
                    "subharmonic_magnitude", "spectrum_file", "error")


def run_evolve(config: SweepConfig) -> SweepResult:
    """Time series per grid point: summary CSV plus one series file each."""
    config.validate()
    started = time.perf_counter()
    tasks = [(L, jt, eps, config.n_periods, config.threshold, config.window, config.period)
             for L, jt, eps in config.grid()]
    rows = _run_points(_evolve_point, tasks, config.jobs)
    aux = []
    for index, row in enumerate(rows):
        series = row.pop("_series", None)
        if series is None:
            continue
        n, probs, sz = series
        path = _aux_path(config.out, "series", index)
        columns = ["n", "t", "return_probability"]
        L = row["L"]
        if sz is not None:
            columns += [f"sz_{site}" for site in range(L)]
        series_rows = []
        for k in range(n.size):
            entry = {"n": int(n[k]), "t": float(n[k]) * config.period,
                     "return_probability": float(probs[k])}
            if sz is not None:
                for site in range(L):
                    entry[f"sz_{site}"] = float(sz[k, site])
            series_rows.append(entry)
        _write_csv(path, columns, series_rows)
        aux.append(path)
        row["series_file"] = path.name
    summary = _write_summary(config, _EVOLVE_COLUMNS, rows, time.perf_counter() - started)
    return SweepResult(config, _EVOLVE_COLUMNS, rows, summary, aux)


def run_lifetime_scan(config: SweepConfig) -> SweepResult:
    """Threshold-crossing scan; ``n_star`` indexes even periods (pairs)."""
    config.validate()
    started = time.perf_counter()
    tasks = [(L, jt, eps, config.n_periods, config.threshold, config.period)
             for L, jt, eps in config.grid()]
    rows = _run_points(_lifetime_point, tasks, config.jobs)
    summary = _write_summary(config, _LIFETIME_COLUMNS, rows, time.perf_counter() - started)
    return SweepResult(config, _LIFETIME_COLUMNS, rows, summary)


def run_phase_diagram(config: SweepConfig) -> SweepResult:
    """Early-time averaged return probability over a 2-d drive-parameter grid."""
    config.validate()
    started = time.perf_counter()
    tasks = [(L, jt, eps, config.n_periods, config.window, config.period)
             for L, jt, eps in config.grid()]
    rows = _run_points(_phase_point, tasks, config.jobs)
    summary = _write_summary(config, _PHASE_COLUMNS, rows, time.perf_counter() - started)
    return SweepResult(config, _PHASE_COLUMNS, rows, summary)


def run_spectrum_report(config: SweepConfig) -> SweepResult:
    """Quasi-energy pairing report per grid point (dense diagonalization)."""
    config.validate()
    started = time.perf_counter()
    tasks = [(L, jt, eps, config.dump_spectra, config.period)
             for L, jt, eps in config.grid()]
    rows = _run_points(_spectrum_point, tasks, config.jobs)
    aux = []
    for index, row in enumerate(rows):
        energies = row.pop("_spectrum", None)
        if energies is None:
            continue
        path = _aux_path(config.out, "spectrum", index)
        _write_csv(path, ("index", "quasi_energy"),
                   [{"index": k, "quasi_energy": float(e)} for k, e in enumerate(energies)])
        aux.append(path)
        row["spectrum_file"] = path.name
    summary = _write_summary(config, _SPECTRUM_COLUMNS, rows, time.perf_counter() - started)
    return SweepResult(config, _SPECTRUM_COLUMNS, rows, summary, aux)


def run_fourier(config: SweepConfig) -> SweepResult:
    """DFT of the return-probability series per grid point."""
    config.validate()
    started = time.perf_counter()
    tasks = [(L, jt, eps, config.n_periods, config.period) for L, jt, eps in config.grid()]
    rows = _run_points(_fourier_point, tasks, config.jobs)
    aux = []
    for index, row in enumerate(rows):
        spectrum = row.pop("_spectrum", None)
        if spectrum is None:
            continue
        frequencies, magnitudes = spectrum
        path = _aux_path(config.out, "spectrum", index)
        _write_csv(path, ("bin", "frequency", "magnitude"),
                   [{"bin": k, "frequency": float(frequencies[k]),
                     "magnitude": float(magnitudes[k])} for k in range(frequencies.size)])
        aux.append(path)
        row["spectrum_file"] = path.name
    summary = _write_summary(config, _FOURIER_COLUMNS, rows, time.perf_counter() - started)
    return SweepResult(config, _FOURIER_COLUMNS, rows, summary, aux)


_RUNNERS = {
    "evolve": run_evolve,
    "lifetime-scan": run_lifetime_scan,
    "phase-diagram": run_phase_diagram,
    "spectrum": run_spectrum_report,
    "fourier": run_fourier,
}


def run_sweep(config: SweepConfig) -> SweepResult:
    """Dispatch to the runner for ``config.mode``."""
    if config.mode not in _RUNNERS:
        raise ConfigError(f"unknown mode {config.mode!r}; choose from {', '.join(MODES)}")
    return _RUNNERS[config.mode](config)


# --------------------------------------------------------------------------
# configuration parsing

def _parse_int_grid(value, flag: str) -> tuple[int, ...]:
    """Accept 8 | [6, 8] | "6,8,10" | "6:12" (inclusive) | "6:12:2" (step)."""
    if isinstance(value, bool):
        raise ConfigError(f"{flag}: expected an integer, got {value!r}")
    if isinstance(value, int):
        return (value,)
    if isinstance(value, (list, tuple)):
        return tuple(itertools.chain.from_iterable(_parse_int_grid(v, flag) for v in value))
    if isinstance(value, str):
        text = value.strip()
        try:
            if ":" in text:
                parts = [int(p) for p in text.split(":")]
                if len(parts) == 2:
                    start, stop, step = parts[0], parts[1], 1
                elif len(parts) == 3:
                    start, stop, step = parts
                else:
                    raise ValueError
                if step < 1 or stop < start:
                    raise ValueError
                return tuple(range(start, stop + 1, step))
            return tuple(int(p) for p in text.split(",") if p.strip())
        except ValueError:
            raise ConfigError(
                f"{flag}: expected an integer, a comma list, or start:stop[:step], got {value!r}"
            ) from None
    raise ConfigError(f"{flag}: expected an integer, list, or range string, got {value!r}")


def _parse_float_grid(value, flag: str) -> tuple[float, ...]:
    """Accept 0.9 | [0.75, 1.25] | "0.9,1.0" | "0.5:1.5:11" (linspace, inclusive)."""
    if isinstance(value, bool):
        raise ConfigError(f"{flag}: expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        return (float(value),)
    if isinstance(value, (list, tuple)):
        return tuple(itertools.chain.from_iterable(_parse_float_grid(v, flag) for v in value))
    if isinstance(value, str):
        text = value.strip()
        try:
            if ":" in text:
                parts = text.split(":")
                if len(parts) != 3:
                    raise ValueError
                start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
                if count < 2:
                    raise ValueError
                return tuple(float(x) for x in np.linspace(start, stop, count))
            return tuple(float(p) for p in text.split(",") if p.strip())
        except ValueError:
            raise ConfigError(
                f"{flag}: expected a number, a comma list, or start:stop:count, got {value!r}"
            ) from None
    raise ConfigError(f"{flag}: expected a number, list, or range string, got {value!r}")


_CONFIG_KEYS = {
    "mode", "length", "jt_over_pi", "epsilon_over_pi", "periods",
    "threshold", "window", "out", "jobs", "dump_spectra", "period",
}


def _load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            raw = json.load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    values = {key.replace("-", "_"): value for key, value in raw.items()}
    unknown = sorted(set(values) - _CONFIG_KEYS)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kicked-ising",
        description="Stroboscopic dynamics and quasi-energy spectra of the "
                    "transverse-kicked Ising chain.",
    )
    sub = parser.add_subparsers(dest="mode", required=True)
    descriptions = {
        "evolve": "record return probability and magnetization time series",
        "lifetime-scan": "scan the threshold-crossing time of the even-period return probability",
        "phase-diagram": "map the early-time averaged return probability over drive parameters",
        "spectrum": "report quasi-energy pairing statistics and symmetry residuals",
        "fourier": "Fourier-analyze the return-probability series",
    }
    for mode in MODES:
        sp = sub.add_parser(mode, help=descriptions[mode])
        sp.add_argument("-L", "--length", default=None,
                        help="chain length(s): 8 | 6,8,10 | 6:12 | 6:12:2")
        sp.add_argument("--jt-over-pi", default=None,
                        help="interaction phase JT in units of pi: 0.9 | 0.5,1.0 | 0.5:1.5:11")
        sp.add_argument("--epsilon-over-pi", default=None,
                        help="kick imperfection in units of pi (same grid syntax)")
        sp.add_argument("--periods", type=int, default=None,
                        help="number of drive periods per point")
        sp.add_argument("--threshold", type=float, default=None,
                        help="return-probability threshold for lifetime detection")
        sp.add_argument("--window", type=int, default=None,
                        help="even-period samples averaged for phase-diagram cells")
        sp.add_argument("--out", default=None, help="summary CSV path")
        sp.add_argument("--jobs", type=int, default=None,
                        help="worker processes (results identical for any value)")
        sp.add_argument("--config", default=None,
                        help="JSON file with the same keys as the flags; flags override")
        if mode == "spectrum":
            sp.add_argument("--dump-spectra", action="store_const", const=True,
                            default=None, help="write one quasi-energy CSV per grid point")
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> SweepConfig:
    """Build and validate a SweepConfig from CLI arguments.

    Precedence: built-in defaults, then the ``--config`` JSON file, then
    explicit flags.  Raises ConfigError for bad values and CapacityError
    when a requested chain length exceeds the mode's cap.
    """
    namespace = _build_parser().parse_args(argv)
    mode = namespace.mode

    values: dict = {}
    if namespace.config is not None:
        values.update(_load_config_file(namespace.config))
    for key in ("length", "jt_over_pi", "epsilon_over_pi", "periods", "threshold",
                "window", "out", "jobs"):
        flag_value = getattr(namespace, key, None)
        if flag_value is not None:
            values[key] = flag_value
    if getattr(namespace, "dump_spectra", None) is not None:
        values["dump_spectra"] = namespace.dump_spectra
    values["mode"] = mode  # the subcommand wins over any "mode" key in the file

    problems = []
    lengths: tuple[int, ...] = ()
    jt: tuple[float, ...] = ()
    eps: tuple[float, ...] = ()
    try:
        if "length" in values:
            lengths = _parse_int_grid(values["length"], "--length")
    except ConfigError as exc:
        problems.append(str(exc))
    try:
        if "jt_over_pi" in values:
            jt = _parse_float_grid(values["jt_over_pi"], "--jt-over-pi")
    except ConfigError as exc:
        problems.append(str(exc))
    try:
        if "epsilon_over_pi" in values:
            eps = _parse_float_grid(values["epsilon_over_pi"], "--epsilon-over-pi")
    except ConfigError as exc:
        problems.append(str(exc))

    def _scalar(key, kind, default):
        value = values.get(key, default)
        try:
            return kind(value)
        except (TypeError, ValueError):
            problems.append(f"{key}: expected {kind.__name__}, got {value!r}")
            return default

    n_periods = _scalar("periods", int, _DEFAULT_PERIODS.get(mode, _DEFAULT_PERIODS_FALLBACK))
    threshold = _scalar("threshold", float, _DEFAULT_THRESHOLD)
    window = _scalar("window", int, _DEFAULT_WINDOW)
    jobs = _scalar("jobs", int, 1)
    period = _scalar("period", float, 1.0)
    out = str(values.get("out", f"kicked-ising-{mode}.csv"))
    dump_spectra = bool(values.get("dump_spectra", False))

    if problems:
        raise ConfigError("invalid configuration:\n  - " + "\n  - ".join(problems))

    config = SweepConfig(
        mode=mode, lengths=lengths, jt_over_pi=jt, epsilon_over_pi=eps,
        n_periods=n_periods, threshold=threshold, window=window, out=out,
        jobs=jobs, period=period, dump_spectra=dump_spectra,
    )
    config.validate()
    return config
