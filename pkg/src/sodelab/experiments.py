"""Scenario runner producing seeded, deterministic datasets.

Each scenario produces one study dataset (a scatter, grid sweep, series
or validation run) as a CSV/JSON file.  Determinism contract: every record is a pure function of
(scenario, seed, parameters); the per-sample RNG stream is
``numpy.random.default_rng([seed, index])``, so worker count or execution
order can never change the values, and rows are emitted sorted by index.
Floats are printed with 12 significant digits in both formats.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import channels, measures, sode, states

DATASET_VERSION = "v1"
DEFAULT_SEED = 12345
NEG_FLOOR = 1e-5  # closed forms are singular at zero negativity


@dataclass
class ScenarioConfig:
    """Knobs shared by all scenarios; unused ones are ignored."""

    scenario: str
    samples: int | None = None
    seed: int = DEFAULT_SEED
    channel: str = channels.DEPOLARIZING
    qubit: int = 0
    k: int | None = None
    q_step: float = 0.05
    phi_points: int = 64
    dt: float = 1e-9
    grid_points: int = 101
    out: str | None = None
    fmt: str = "csv"


@dataclass
class ScenarioResult:
    scenario: str
    columns: list[str]
    records: list[dict]
    summary: dict
    path: Path | None = None


def _rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), int(index)])


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _json_value(value):
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, float):
        return float(f"{value:.12g}")
    return value


def emit_dataset(records: list[dict], columns: list[str], fmt: str, path, meta: dict) -> Path:
    """Write records to CSV or JSON with 12-significant-digit floats."""
    if not records:
        raise ValueError("refusing to emit an empty dataset")
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")
    out = Path(path)
    meta_str = " ".join(f"{k}={meta[k]}" for k in sorted(meta))
    if fmt == "csv":
        lines = [f"# sodelab-dataset {DATASET_VERSION} {meta_str}", ",".join(columns)]
        for rec in records:
            lines.append(",".join(_fmt(rec[c]) for c in columns))
        out.write_text("\n".join(lines) + "\n")
    else:
        doc = {
            "dataset": f"sodelab-dataset {DATASET_VERSION}",
            "meta": {k: meta[k] for k in sorted(meta)},
            "columns": columns,
            "records": [{c: _json_value(rec[c]) for c in columns} for rec in records],
        }
        out.write_text(json.dumps(doc, indent=1) + "\n")
    return out


# ---------------------------------------------------------------------------
# scenario implementations (columns, records, summary)
# ---------------------------------------------------------------------------


def _two_qubit_row(index: int, state, cfg: ScenarioConfig) -> dict:
    rep = sode.sode_perturbative(state, cfg.qubit, cfg.channel)
    n, c = rep.negativity, measures.concurrence2(state)
    lower, upper = sode.eta_bounds2(min(n, 1.0))
    return {
        "index": index,
        "negativity": n,
        "concurrence": c,
        "eta": rep.eta,
        "eta_minus": rep.eta_minus,
        "eta_zero": rep.eta_zero,
        "linear_entropy": measures.linear_entropy(state),
        "mutual_information": measures.mutual_information(state, [0]),
        "xi1": c - n,
        "chi1": upper - rep.eta,
        "xi2": n - sode.min_negativity_for_concurrence(c),
        "chi2": rep.eta - lower,
    }


_TWO_QUBIT_COLUMNS = [
    "index", "negativity", "concurrence", "eta", "eta_minus", "eta_zero",
    "linear_entropy", "mutual_information", "xi1", "chi1", "xi2", "chi2",
]


def _two_qubit_summary(records: list[dict]) -> dict:
    chi1 = np.array([r["chi1"] for r in records])
    chi2 = np.array([r["chi2"] for r in records])
    return {
        "rows": len(records),
        "upper_violations": int(np.sum(chi1 < -1e-9)),
        "lower_violations": int(np.sum(chi2 < -1e-9)),
        "min_gap_upper": float(chi1.min()),
        "min_gap_lower": float(chi2.min()),
        "max_negativity": float(max(r["negativity"] for r in records)),
        "max_eta": float(max(r["eta"] for r in records)),
    }


def _run_scatter2(cfg: ScenarioConfig):
    records = [
        _two_qubit_row(i, states.random_mixed2(_rng(cfg.seed, i)), cfg)
        for i in range(cfg.samples)
    ]
    return _TWO_QUBIT_COLUMNS, records, _two_qubit_summary(records)


def _run_weighted_scatter(cfg: ScenarioConfig):
    columns = _TWO_QUBIT_COLUMNS + ["weight", "gamma"]
    records = []
    for i in range(cfg.samples):
        rng = _rng(cfg.seed, i)
        weight = float(rng.uniform())
        gamma = float(rng.uniform())
        state = states.mix(
            [(weight, states.random_mixed2(rng)), (1.0 - weight, states.rho_m(gamma))]
        )
        row = _two_qubit_row(i, state, cfg)
        row["weight"], row["gamma"] = weight, gamma
        records.append(row)
    return columns, records, _two_qubit_summary(records)


def _run_xi_chi(cfg: ScenarioConfig):
    columns = ["index", "family", "gamma"] + _TWO_QUBIT_COLUMNS[1:]
    records = []
    for i in range(cfg.samples):
        row = _two_qubit_row(i, states.random_mixed2(_rng(cfg.seed, i)), cfg)
        row["family"], row["gamma"] = "random", math.nan
        records.append(row)
    index = cfg.samples
    for family, ctor in (("rho_m", states.rho_m), ("rho_k", states.rho_k)):
        for gamma in np.linspace(0.0, 1.0, cfg.grid_points):
            row = _two_qubit_row(index, ctor(float(gamma)), cfg)
            row["family"], row["gamma"] = family, float(gamma)
            records.append(row)
            index += 1
    xi1 = min(r["xi1"] for r in records)
    xi2 = min(r["xi2"] for r in records)
    summary = _two_qubit_summary(records)
    summary.update({"min_xi1": float(xi1), "min_xi2": float(xi2)})
    return columns, records, summary


def _run_twoparam_c(cfg: ScenarioConfig):
    columns = [
        "index", "gamma", "a", "b", "negativity", "concurrence", "eta",
        "eta_formula", "delta", "linear_entropy", "mutual_information",
    ]
    records, index, max_delta = [], 0, 0.0
    grid = np.linspace(0.0, 1.0, cfg.grid_points)
    for gamma in grid:
        for frac in grid:
            a = float(frac * (1.0 - gamma))
            b = 1.0 - float(gamma) - a
            state = states.rho_c(float(gamma), a, b)
            rep = sode.sode_perturbative(state, cfg.qubit, cfg.channel)
            n, c = rep.negativity, measures.concurrence2(state)
            if n >= NEG_FLOOR:
                eta_formula = sode.eta_rho_c(n, max(n, c))
                delta = abs(rep.eta - eta_formula)
                max_delta = max(max_delta, delta)
            else:
                eta_formula, delta = math.nan, math.nan
            records.append({
                "index": index,
                "gamma": float(gamma),
                "a": a,
                "b": b,
                "negativity": n,
                "concurrence": c,
                "eta": rep.eta,
                "eta_formula": eta_formula,
                "delta": delta,
                "linear_entropy": measures.linear_entropy(state),
                "mutual_information": measures.mutual_information(state, [0]),
            })
            index += 1
    return columns, records, {"rows": len(records), "max_delta": max_delta}


def _run_twoparam_sl(cfg: ScenarioConfig):
    columns = [
        "index", "gamma", "theta", "negativity", "concurrence",
        "linear_entropy", "mutual_information", "eta",
    ]
    records, index = [], 0
    for gamma in np.linspace(0.0, 1.0, cfg.grid_points):
        for theta in np.linspace(0.0, math.pi / 4, cfg.grid_points):
            state = states.rho_sl(float(gamma), float(theta))
            rep = sode.sode_perturbative(state, cfg.qubit, cfg.channel)
            records.append({
                "index": index,
                "gamma": float(gamma),
                "theta": float(theta),
                "negativity": rep.negativity,
                "concurrence": measures.concurrence2(state),
                "linear_entropy": measures.linear_entropy(state),
                "mutual_information": measures.mutual_information(state, [0]),
                "eta": rep.eta,
            })
            index += 1
    etas = [r["eta"] for r in records]
    return columns, records, {"rows": len(records), "max_eta": max(etas), "min_eta": min(etas)}


def _run_twoparam_itot(cfg: ScenarioConfig):
    columns = [
        "index", "n_target", "a", "b", "gamma", "x", "negativity",
        "concurrence", "c_target", "linear_entropy", "mutual_information", "eta",
    ]
    records, index = [], 0
    max_c_dev, max_n_dev = 0.0, 0.0
    n_grid = np.linspace(0.05, 0.95, cfg.grid_points)
    frac_grid = np.linspace(0.0, 1.0, cfg.grid_points)
    for n_target in n_grid:
        c_target = states.itot_concurrence_constraint(float(n_target))
        a_min = max(0.0, (c_target**2 - n_target**2) / (2.0 * n_target)) + 1e-9
        a_max = max(a_min, 1.0 - c_target - 1e-9)
        for frac in frac_grid:
            a = float(a_min + frac * (a_max - a_min))
            try:
                state = states.rho_itot(float(n_target), a)
            except ValueError:
                continue
            rep = sode.sode_perturbative(state, cfg.qubit, cfg.channel)
            n, c = rep.negativity, measures.concurrence2(state)
            max_c_dev = max(max_c_dev, abs(c - c_target))
            max_n_dev = max(max_n_dev, abs(n - float(n_target)))
            records.append({
                "index": index,
                "n_target": float(n_target),
                "a": float(state.rho[1, 1].real),
                "b": float(state.rho[2, 2].real),
                "gamma": float(2.0 * state.rho[0, 3].real),
                "x": float(state.rho[0, 0].real - state.rho[0, 3].real),
                "negativity": n,
                "concurrence": c,
                "c_target": c_target,
                "linear_entropy": measures.linear_entropy(state),
                "mutual_information": measures.mutual_information(state, [0]),
                "eta": rep.eta,
            })
            index += 1
    summary = {"rows": len(records), "max_c_deviation": max_c_dev, "max_n_deviation": max_n_dev}
    return columns, records, summary


def _random_symmetric(rng: np.random.Generator):
    t = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    t /= np.linalg.norm(t)
    return states.symmetric3(*t)


def _run_scatter3_sym(cfg: ScenarioConfig):
    columns = [
        "index", "negativity", "eta", "eta_minus", "eta_zero", "tau", "i4",
        "eta_formula", "delta",
    ]
    records, max_delta = [], 0.0
    lower_violations = upper_violations = 0
    for i in range(cfg.samples):
        state = _random_symmetric(_rng(cfg.seed, i))
        inv = measures.invariants3(state)
        rep = sode.sode_perturbative(state, cfg.qubit, cfg.channel)
        n = rep.negativity
        if n >= NEG_FLOOR:
            eta_formula = sode.eta_sym3(n, inv.tau, inv.I4)
            delta = abs(rep.eta - eta_formula)
            max_delta = max(max_delta, delta)
        else:
            eta_formula, delta = math.nan, math.nan
        lower_violations += rep.eta < sode.eta_g3(min(n, 1.0)) - 1e-9
        upper_violations += rep.eta > sode.eta_j3(min(n, 1.0)) + 1e-9
        records.append({
            "index": i,
            "negativity": n,
            "eta": rep.eta,
            "eta_minus": rep.eta_minus,
            "eta_zero": rep.eta_zero,
            "tau": inv.tau,
            "i4": inv.I4,
            "eta_formula": eta_formula,
            "delta": delta,
        })
    summary = {
        "rows": len(records),
        "max_delta": max_delta,
        "lower_violations": int(lower_violations),
        "upper_violations": int(upper_violations),
    }
    return columns, records, summary


_GEN3_COLUMNS = [
    "index", "n1", "n2", "n3", "c12", "c13", "c23", "i1", "i2", "i3", "i4",
    "i5", "tau", "theta", "m", "eta", "eta_minus", "eta_zero", "eta_formula",
    "delta",
]


def _gen3_lower_bound(n: float) -> float:
    return sode.eta_g3(n) if n <= 0.5 else sode.eta_pure2(n)


def _run_scatter3_gen(cfg: ScenarioConfig):
    records, max_delta = [], 0.0
    lower_violations = upper_violations = 0
    for i in range(cfg.samples):
        state = states.random_pure(3, _rng(cfg.seed, i))
        inv = measures.invariants3(state)
        rep = sode.sode_perturbative(state, cfg.qubit, cfg.channel)
        n = rep.negativity
        if n >= NEG_FLOOR:
            eta_formula = sode.eta_gen3(inv)
            delta = abs(rep.eta - eta_formula)
            max_delta = max(max_delta, delta)
        else:
            eta_formula, delta = math.nan, math.nan
        lower_violations += rep.eta < _gen3_lower_bound(min(n, 1.0)) - 1e-9
        upper_violations += rep.eta > sode.eta_j3(min(n, 1.0)) + 1e-9
        records.append({
            "index": i,
            "n1": inv.N1, "n2": inv.N2, "n3": inv.N3,
            "c12": inv.C12, "c13": inv.C13, "c23": inv.C23,
            "i1": inv.I1, "i2": inv.I2, "i3": inv.I3, "i4": inv.I4, "i5": inv.I5,
            "tau": inv.tau, "theta": inv.Theta, "m": inv.M,
            "eta": rep.eta, "eta_minus": rep.eta_minus, "eta_zero": rep.eta_zero,
            "eta_formula": eta_formula, "delta": delta,
        })
    summary = {
        "rows": len(records),
        "max_delta": max_delta,
        "lower_violations": int(lower_violations),
        "upper_violations": int(upper_violations),
    }
    return _GEN3_COLUMNS, records, summary


def _run_validate3(cfg: ScenarioConfig):
    columns = ["index", "n1", "theta", "eta_formula", "eta_fd", "delta", "eta_zero"]
    records = []
    checked, max_delta = 0, 0.0
    theta_mismatches = sign_mismatches = 0
    for i in range(cfg.samples):
        state = states.random_pure(3, _rng(cfg.seed, i))
        inv = measures.invariants3(state)
        rep = sode.sode_perturbative(state, cfg.qubit, cfg.channel)
        eta_fd = sode.sode_finite_difference(state, cfg.qubit, cfg.channel, cfg.dt)
        if inv.N1 >= NEG_FLOOR:
            eta_formula = sode.eta_gen3(inv)
            delta = abs(eta_formula - eta_fd)
            checked += 1
            max_delta = max(max_delta, delta)
        else:
            eta_formula, delta = math.nan, math.nan
        if abs(inv.Theta) > 1e-8:
            if (inv.Theta > 0) != (rep.eta_zero > 1e-8):
                theta_mismatches += 1
            alt = abs(inv.C12**2 - inv.C13**2) - inv.tau
            if alt != 0.0 and (inv.Theta > 0) != (alt > 0):
                sign_mismatches += 1
        records.append({
            "index": i,
            "n1": inv.N1,
            "theta": inv.Theta,
            "eta_formula": eta_formula,
            "eta_fd": eta_fd,
            "delta": delta,
            "eta_zero": rep.eta_zero,
        })
    summary = {
        "rows": len(records),
        "rows_checked": checked,
        "max_delta": max_delta,
        "theta_mismatches": theta_mismatches,
        "sign_mismatches": sign_mismatches,
    }
    return columns, records, summary


def _run_wseries(cfg: ScenarioConfig):
    columns = ["index", "k", "negativity", "eta", "eta_closed", "delta", "t_star", "robustness"]
    records, max_delta = [], 0.0
    k_max = cfg.k or 10
    for i, k in enumerate(range(2, k_max + 1)):
        rep = sode.sode_perturbative(states.w_state(k), cfg.qubit, cfg.channel)
        closed = sode.eta_w_k(k)
        max_delta = max(max_delta, abs(rep.eta - closed))
        records.append({
            "index": i,
            "k": k,
            "negativity": rep.negativity,
            "eta": rep.eta,
            "eta_closed": closed,
            "delta": abs(rep.eta - closed),
            "t_star": rep.t_star,
            "robustness": rep.robustness,
        })
    peak_k = max(records, key=lambda r: r["eta_closed"])["k"]
    return columns, records, {"rows": len(records), "max_delta": max_delta, "peak_k": peak_k}


def _run_zphase(cfg: ScenarioConfig):
    columns = ["index", "q", "negativity", "delta_eta", "eta_min", "eta_max"]
    k = cfg.k or 3
    phi_grid = np.linspace(0.0, 2.0 * math.pi, cfg.phi_points, endpoint=False)
    records, max_delta = [], 0.0
    q_values = np.arange(0.0, 1.0 + cfg.q_step / 2, cfg.q_step)
    for i, q in enumerate(q_values):
        etas = [
            sode.sode_perturbative(states.z_state(k, float(q), float(phi)), cfg.qubit, cfg.channel).eta
            for phi in phi_grid
        ]
        delta = max(etas) - min(etas)
        max_delta = max(max_delta, delta)
        records.append({
            "index": i,
            "q": float(q),
            "negativity": measures.negativity(states.z_state(k, float(q), 0.0), cfg.qubit),
            "delta_eta": delta,
            "eta_min": min(etas),
            "eta_max": max(etas),
        })
    return columns, records, {"rows": len(records), "k": k, "max_delta_eta": max_delta}


def _run_robustness_scaling(cfg: ScenarioConfig):
    columns = [
        "index", "k", "r_ghz", "k_times_r_ghz", "t_star_ghz",
        "eta_w", "n_w", "r_w", "sqrt_k_times_r_w",
    ]
    k_max = cfg.k or 10000
    ks = sorted(set(int(k) for k in np.geomspace(10, k_max, 25)))
    records = []
    for i, k in enumerate(ks):
        # GHZ at maximal entanglement: eta = k + 1/2, T* = 1/eta
        t_ghz, r_ghz = sode.robustness(1.0, sode.eta_ghz_k(k, 1.0))
        eta_w = sode.eta_w_k(k)
        n_w = 2.0 * math.sqrt(k - 1) / k
        _, r_w = sode.robustness(n_w, eta_w)
        records.append({
            "index": i,
            "k": k,
            "r_ghz": r_ghz,
            "k_times_r_ghz": k * r_ghz,
            "t_star_ghz": t_ghz,
            "eta_w": eta_w,
            "n_w": n_w,
            "r_w": r_w,
            "sqrt_k_times_r_w": math.sqrt(k) * r_w,
        })
    last = records[-1]
    summary = {
        "rows": len(records),
        "k_max": ks[-1],
        "k_times_r_ghz_at_max": last["k_times_r_ghz"],
        "sqrt_k_times_r_w_at_max": last["sqrt_k_times_r_w"],
    }
    return columns, records, summary


def _run_concurrence_speed(cfg: ScenarioConfig):
    columns = ["index", "family", "param", "negativity", "concurrence", "eta_c_fd", "eta_n"]
    records, index = [], 0
    max_gap = 0.0
    for theta in np.linspace(0.05, math.pi / 4, 16):
        state = states.pure_theta(float(theta))
        rep = sode.sode_perturbative(state, cfg.qubit, cfg.channel)
        eta_c = sode.sode_finite_difference(state, cfg.qubit, cfg.channel, cfg.dt, "concurrence2")
        max_gap = max(max_gap, abs(eta_c - rep.eta))
        records.append({
            "index": index, "family": "pure", "param": float(theta),
            "negativity": rep.negativity, "concurrence": measures.concurrence2(state),
            "eta_c_fd": eta_c, "eta_n": rep.eta,
        })
        index += 1
    probe = []
    for b in (1e-2, 1e-3, 1e-4):
        state = states.ansatz(x=0.2, y=0.1, a=0.25 - b, b=b, gamma=0.45)
        rep = sode.sode_perturbative(state, cfg.qubit, cfg.channel)
        eta_c = sode.sode_finite_difference(state, cfg.qubit, cfg.channel, cfg.dt, "concurrence2")
        probe.append(eta_c)
        records.append({
            "index": index, "family": "ansatz", "param": float(b),
            "negativity": rep.negativity, "concurrence": measures.concurrence2(state),
            "eta_c_fd": eta_c, "eta_n": rep.eta,
        })
        index += 1
    summary = {
        "rows": len(records),
        "max_pure_gap": max_gap,
        "singularity_monotone": int(probe[0] < probe[1] < probe[2]),
    }
    return columns, records, summary


def _run_dephasing_check(cfg: ScenarioConfig):
    columns = ["index", "k", "alpha", "negativity", "eta", "k_times_n", "delta"]
    records, index, max_delta = [], 0, 0.0
    k_max = cfg.k or 6
    for k in range(2, k_max + 1):
        for alpha in np.linspace(0.05, 0.95, 19):
            state = states.g_type_k(k, float(alpha))
            rep = sode.sode_perturbative(state, cfg.qubit, channels.DEPHASING)
            delta = abs(rep.eta - k * rep.negativity)
            max_delta = max(max_delta, delta)
            records.append({
                "index": index, "k": k, "alpha": float(alpha),
                "negativity": rep.negativity, "eta": rep.eta,
                "k_times_n": k * rep.negativity, "delta": delta,
            })
            index += 1
    return columns, records, {"rows": len(records), "max_delta": max_delta}


# name -> (runner, default sample count)
SCENARIOS = {
    "scatter2": (_run_scatter2, 30000),
    "weighted-scatter": (_run_weighted_scatter, 5000),
    "xi-chi": (_run_xi_chi, 30000),
    "twoparam-c": (_run_twoparam_c, None),
    "twoparam-sl": (_run_twoparam_sl, None),
    "twoparam-itot": (_run_twoparam_itot, None),
    "scatter3-sym": (_run_scatter3_sym, 30000),
    "scatter3-gen": (_run_scatter3_gen, 30000),
    "validate3": (_run_validate3, 20000),
    "wseries": (_run_wseries, None),
    "zphase": (_run_zphase, None),
    "robustness-scaling": (_run_robustness_scaling, None),
    "concurrence-speed": (_run_concurrence_speed, None),
    "dephasing-check": (_run_dephasing_check, None),
}


def run_scenario(cfg: ScenarioConfig) -> ScenarioResult:
    """Run one scenario; writes the dataset when cfg.out is set."""
    if cfg.scenario not in SCENARIOS:
        raise ValueError(f"unknown scenario {cfg.scenario!r}")
    runner, default_samples = SCENARIOS[cfg.scenario]
    if cfg.samples is None:
        cfg.samples = default_samples
    if default_samples is not None and (cfg.samples is None or cfg.samples < 1):
        raise ValueError(f"samples = {cfg.samples!r} must be at least 1")
    if cfg.q_step <= 0 or cfg.phi_points < 1 or cfg.grid_points < 2:
        raise ValueError("grids must be nonempty (q_step > 0, phi_points >= 1, grid_points >= 2)")
    channels.check_kind(cfg.channel)
    columns, records, summary = runner(cfg)
    records.sort(key=lambda r: r["index"])
    path = None
    if cfg.out is not None:
        meta = {
            "scenario": cfg.scenario,
            "seed": cfg.seed,
            "channel": cfg.channel,
            "qubit": cfg.qubit,
        }
        if default_samples is not None:
            meta["samples"] = cfg.samples
        if cfg.k is not None:
            meta["k"] = cfg.k
        path = emit_dataset(records, columns, cfg.fmt, cfg.out, meta)
    return ScenarioResult(cfg.scenario, columns, records, summary, path)
