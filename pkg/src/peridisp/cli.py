"""Command-line entry point.

Commands: dispersion, evolve, conserve, asymptotics, gamma-check, figures, all.
Flag values override config-file values, which override the documented
defaults (alpha=0.1, kappa=1/2, rho=1, delta=1, v=0, L=40, n=8192).  The
output directory falls back to the PERIDISP_OUT environment variable.

Exit codes: 0 success, 1 validator failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

COMMANDS = ("dispersion", "evolve", "conserve", "asymptotics", "gamma-check", "figures", "all")

_DEFAULTS = {
    "alpha": 0.1,
    "kappa": 0.5,
    "rho": 1.0,
    "delta": 1.0,
    "v": 0.0,
    "L": 40.0,
    "n": 8192,
    "out": None,  # resolved against PERIDISP_OUT, then ./artifacts
    "tol_energy": 1e-8,
    "tol_gamma": 1e-8,
    "scenario": None,
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    alpha: float
    kappa: float
    rho: float
    delta: float
    v: float
    L: float
    n: int
    out: Path
    tol_energy: float
    tol_gamma: float
    scenario: str | None = None

    def params(self):
        from .params import PeridynamicParams

        return PeridynamicParams(
            kappa=self.kappa, rho=self.rho, delta=self.delta, alpha=self.alpha
        )


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="peridisp",
        description="Nonlocal wave-dispersion laboratory: dispersion sweeps, "
        "exact spectral evolutions, conservation and decay reports.",
    )
    ap.add_argument("command", choices=COMMANDS, help="what to run")
    ap.add_argument("--config", type=Path, default=None, help="JSON config file with RunConfig keys")
    ap.add_argument("--alpha", type=float, default=None, help="nonlocality order in (0,1) [0.1]")
    ap.add_argument("--kappa", type=float, default=None, help="elastic modulus [0.5]")
    ap.add_argument("--rho", type=float, default=None, help="density [1.0]")
    ap.add_argument("--delta", type=float, default=None, help="horizon length [1.0]")
    ap.add_argument("--v", type=float, default=None, help="traveling-wave speed factor [0.0]")
    ap.add_argument("--L", type=float, default=None, help="domain half-width [40.0]")
    ap.add_argument("--n", type=int, default=None, help="number of modes, power of two [8192]")
    ap.add_argument("--out", type=Path, default=None,
                    help="output directory [PERIDISP_OUT or ./artifacts]")
    ap.add_argument("--tol-energy", dest="tol_energy", type=float, default=None,
                    help="relative energy-drift tolerance [1e-8]")
    ap.add_argument("--tol-gamma", dest="tol_gamma", type=float, default=None,
                    help="Gamma-identity mismatch tolerance [1e-8]")
    ap.add_argument("--scenario", choices=("fig7", "fig8", "fig9", "fig10"), default=None,
                    help="restrict `conserve` to one scenario [all]")
    return ap


def parse_config(argv) -> RunConfig:
    """Merge CLI flags over config-file values over defaults; validate."""
    ap = _build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed a message; normalize --help to success.
        raise SystemExit(0 if exc.code == 0 else 2)

    merged = dict(_DEFAULTS)
    if ns.config is not None:
        try:
            raw = json.loads(Path(ns.config).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file is not valid JSON: {exc}")
        if not isinstance(raw, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = set(raw) - set(_DEFAULTS) - {"command"}
        if unknown:
            raise UsageError(f"unknown config key(s): {sorted(unknown)}")
        merged.update(raw)
    for key in _DEFAULTS:
        flag = getattr(ns, key, None)
        if flag is not None:
            merged[key] = flag

    if not (0.0 < float(merged["alpha"]) < 1.0):
        raise UsageError(f"alpha must lie strictly inside (0, 1), got {merged['alpha']}")
    for key in ("kappa", "rho", "delta"):
        if not float(merged[key]) > 0.0:
            raise UsageError(f"{key} must be positive, got {merged[key]}")
    n = int(merged["n"])
    if n < 16 or n & (n - 1) != 0:
        raise UsageError(f"n must be a power of two >= 16, got {merged['n']}")
    if not float(merged["L"]) > 0.0:
        raise UsageError(f"L must be positive, got {merged['L']}")
    out = merged["out"] or os.environ.get("PERIDISP_OUT") or "artifacts"
    if merged["scenario"] is not None and merged["scenario"] not in ("fig7", "fig8", "fig9", "fig10"):
        raise UsageError(f"unknown scenario {merged['scenario']!r}")

    return RunConfig(
        command=ns.command,
        alpha=float(merged["alpha"]),
        kappa=float(merged["kappa"]),
        rho=float(merged["rho"]),
        delta=float(merged["delta"]),
        v=float(merged["v"]),
        L=float(merged["L"]),
        n=n,
        out=Path(out),
        tol_energy=float(merged["tol_energy"]),
        tol_gamma=float(merged["tol_gamma"]),
        scenario=merged["scenario"],
    )


def _report(results) -> int:
    code = 0
    for res in results:
        for c in res.checks:
            status = "pass" if c.passed else "FAIL"
            print(f"[{status}] {res.name}:{c.name}  {c.detail}")
            if not c.passed:
                code = 1
        for a in res.artifacts:
            print(f"  wrote {a}")
    return code


def _cmd_gamma_check(cfg: RunConfig) -> int:
    from .specfun import gamma_reflection_value, trig_integral_I

    alphas = np.round(np.arange(0.05, 0.955, 0.05), 2)
    worst = 0.0
    rows = []
    for a in alphas:
        i_val = trig_integral_I(float(a))
        g_val = gamma_reflection_value(float(a))
        rel = abs(i_val - g_val) / g_val
        worst = max(worst, rel)
        rows.append((a, i_val, g_val, rel))
    from .experiments import write_csv

    write_csv(
        cfg.out / "gamma_check.csv",
        "gamma_check",
        json.dumps({"tolerance": cfg.tol_gamma}),
        ("alpha", "trig_integral", "gamma_reflection", "rel_diff"),
        rows,
    )
    ok = worst <= cfg.tol_gamma
    print(f"[{'pass' if ok else 'FAIL'}] gamma-check: max relative mismatch {worst:.3e} "
          f"(tolerance {cfg.tol_gamma:.1e})")
    print(f"  wrote {cfg.out / 'gamma_check.csv'}")
    return 0 if ok else 1


def _cmd_asymptotics(cfg: RunConfig) -> int:
    from .dispersion import dispersion_asymptotics, omega_sq
    from .experiments import write_csv

    p = cfg.params()
    rec = dispersion_asymptotics(p)
    tail = rec.omega_second_infty
    rows = [
        ("low_freq_slope_sq", rec.low_freq_slope_sq),
        ("high_freq_coeff_sq", rec.high_freq_coeff_sq),
        ("omega_prime_at_zero", rec.omega_prime_at_zero),
        ("omega_prime_infty_coeff", rec.omega_prime_infty_coeff),
        ("omega_second_over_xi_at_zero", rec.omega_second_over_xi_at_zero),
        ("omega_second_tail_exponent", tail.exponent),
        ("omega_second_tail_lower", tail.lower),
        ("omega_second_tail_upper", tail.upper),
    ]
    write_csv(
        cfg.out / "asymptotics.csv",
        "asymptotics",
        json.dumps({"alpha": p.alpha, "kappa": p.kappa, "rho": p.rho, "delta": p.delta}),
        ("quantity", "value"),
        rows,
    )
    for name, val in rows:
        print(f"{name} = {val:.12g}")
    # Internal consistency probes against the dispersion relation itself.
    low_probe = omega_sq(1e-3, p) / 1e-6
    ok_low = abs(low_probe - rec.low_freq_slope_sq) <= 1e-4 * rec.low_freq_slope_sq
    # The high-frequency limit is approached like T^(-2a): for small alpha
    # that tail is slow, so accept either closeness at the last probe or a
    # strictly monotone approach across the probe ladder.
    xis = np.array([1e2, 1e3, 1e4, 1e5, 1e6])
    gaps = rec.high_freq_coeff_sq - omega_sq(xis, p) / xis ** (2 * p.alpha)
    monotone = bool(np.all(gaps > 0) and np.all(np.diff(gaps) < 0))
    ok_hi = abs(gaps[-1]) <= 0.05 * rec.high_freq_coeff_sq or monotone
    print(f"[{'pass' if ok_low else 'FAIL'}] low-frequency probe {low_probe:.8g}")
    print(
        f"[{'pass' if ok_hi else 'FAIL'}] high-frequency probe "
        f"{rec.high_freq_coeff_sq - gaps[-1]:.8g} (monotone approach: {monotone})"
    )
    print(f"  wrote {cfg.out / 'asymptotics.csv'}")
    return 0 if (ok_low and ok_hi) else 1


def _cmd_evolve(cfg: RunConfig) -> int:
    from .experiments import RunResult, _field_rows, _params_json, write_csv
    from .observables import track_series
    from .solver import boundary_amplitude_ratio, build_grid, evolve, gaussian_initial_data, prepare_state
    from . import plotting

    p = cfg.params()
    grid = build_grid(cfg.L, cfg.n)
    data = gaussian_initial_data(cfg.v, grid)
    state = prepare_state(data.v0_hat, data.v1_hat, grid, p)
    times = [float(t) for t in range(9)]
    snaps = [evolve(state, t) for t in times]
    res = RunResult("evolve")
    res.artifacts.append(
        write_csv(
            cfg.out / "evolution.csv",
            "evolve",
            _params_json(p, {"v": cfg.v, "L": cfg.L, "n": cfg.n}),
            ("t", "x", "u", "u_t"),
            _field_rows(times, grid.x, snaps),
        )
    )
    res.check(
        "initial_profile_identity",
        float(np.max(np.abs(snaps[0].u - data.v0))) <= 1e-10,
    )
    worst_edge = max(boundary_amplitude_ratio(s) for s in snaps)
    res.check("periodization", worst_edge <= 1e-8, f"edge ratio {worst_edge:.2e}")
    series = track_series(state, times)
    res.check(
        "energy_drift",
        series.metadata["max_energy_drift"] <= cfg.tol_energy,
        f"relative drift {series.metadata['max_energy_drift']:.2e}",
    )
    res.artifacts.append(
        plotting.snapshot_gallery(
            cfg.out / "evolution.png",
            grid.x,
            [(f"t={t:g}", s.u) for t, s in zip(times, snaps)],
            title=f"alpha={p.alpha:g}, delta={p.delta:g}, v={cfg.v:g}",
        )
    )
    return _report([res])


def dispatch(cfg: RunConfig) -> int:
    """Run the configured command; artifacts are written even on failures."""
    from . import experiments as ex

    try:
        cfg.out.mkdir(parents=True, exist_ok=True)
        probe = cfg.out / ".write_probe"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        print(f"output directory not usable: {exc}", file=sys.stderr)
        return 3

    try:
        if cfg.command == "gamma-check":
            return _cmd_gamma_check(cfg)
        if cfg.command == "asymptotics":
            return _cmd_asymptotics(cfg)
        if cfg.command == "evolve":
            return _cmd_evolve(cfg)
        if cfg.command == "dispersion":
            return _report([ex.run_dispersion_scan(cfg.out)])
        if cfg.command == "conserve":
            scenarios = (cfg.scenario,) if cfg.scenario else None
            return _report([ex.run_conservation_report(cfg.out, scenarios=scenarios)])
        if cfg.command == "figures":
            return _report(ex.run_all_figures(cfg.out))
        if cfg.command == "all":
            results = ex.run_all_figures(cfg.out)
            results.append(ex.run_dispersion_scan(cfg.out))
            results.append(ex.run_conservation_report(cfg.out))
            code = _report(results)
            sub = max(_cmd_gamma_check(cfg), _cmd_asymptotics(cfg))
            return max(code, sub)
        raise UsageError(f"unknown command {cfg.command!r}")  # pragma: no cover
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)
    return dispatch(cfg)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
