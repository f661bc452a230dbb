"""Config-driven ergodic experiments with CSV/JSON/npz persistence."""
from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import __version__
from . import ergodic as E
from .symbols import format_word

MODES = ("pure", "mixed", "uniform")
OUT_ENV = "SCHURWEYL_OUT"
CSV_FIELDS = ("seed", "kind", "m", "key", "estimate", "reference", "deviation")


class ConfigError(ValueError):
    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass
class ExperimentConfig:
    k: int
    l: int
    p: list
    q: list
    n: int
    m: int
    seeds: list[int]
    mode: str = "pure"
    log_every: int = 0
    tolerance: float = 0.02
    density_tolerance: float = 0.015
    name: str = "experiment"

    def spec(self, seed: int = 0) -> E.BernoulliSpec:
        return E.BernoulliSpec(self.k, self.l, tuple(self.p), tuple(self.q), seed)

    def to_dict(self) -> dict:
        return asdict(self)


def _field(doc: dict, key: str, kind, problems: list[str], default=None, required=True):
    if key not in doc:
        if required and default is None:
            problems.append(f"{key}: missing")
        return default
    val = doc[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        problems.append(f"{key}: expected integer, got {val!r}")
        return default
    if kind is float and (isinstance(val, bool) or not isinstance(val, (int, float))):
        problems.append(f"{key}: expected number, got {val!r}")
        return default
    if kind is list and not isinstance(val, list):
        problems.append(f"{key}: expected list, got {val!r}")
        return default
    if kind is str and not isinstance(val, str):
        problems.append(f"{key}: expected string, got {val!r}")
        return default
    return val


def parse_config(doc: Any, name: str = "experiment") -> ExperimentConfig:
    """Validate a decoded JSON config; all problems are reported together."""
    if not isinstance(doc, dict):
        raise ConfigError(["config: expected a JSON object"])
    problems: list[str] = []
    known = {"k", "l", "p", "q", "n", "m", "seeds", "mode", "log_every", "tolerance",
             "density_tolerance", "name"}
    problems += [f"{key}: unknown field" for key in sorted(set(doc) - known)]
    mode = _field(doc, "mode", str, problems, "pure")
    if mode not in MODES:
        problems.append(f"mode: must be one of {', '.join(MODES)}, got {mode!r}")
    k = _field(doc, "k", int, problems)
    l = _field(doc, "l", int, problems, 0)
    n = _field(doc, "n", int, problems)
    m = _field(doc, "m", int, problems)
    seeds = _field(doc, "seeds", list, problems)
    log_every = _field(doc, "log_every", int, problems, 0)
    tol = _field(doc, "tolerance", float, problems, 0.02)
    dtol = _field(doc, "density_tolerance", float, problems, 0.015)
    cname = _field(doc, "name", str, problems, name)
    if isinstance(k, int) and k < 1:
        problems.append("k: must be >= 1")
    if isinstance(l, int) and l < 0:
        problems.append("l: must be >= 0")
    if mode == "mixed" and l == 0:
        problems.append("l: mixed mode needs l >= 1")
    if mode in ("pure", "uniform") and l:
        problems.append(f"l: {mode} mode needs l = 0")
    if isinstance(n, int) and n < 1:
        problems.append("n: must be >= 1")
    if isinstance(m, int) and not 0 <= m <= 6:
        problems.append("m: must be in 0..6")
    if isinstance(n, int) and isinstance(m, int) and m > n:
        problems.append("m: must not exceed n")
    if isinstance(seeds, list) and (not seeds or not all(isinstance(s, int) and s >= 0 for s in seeds)):
        problems.append("seeds: expected a nonempty list of nonnegative integers")
    if isinstance(log_every, int) and log_every < 0:
        problems.append("log_every: must be >= 0")
    if mode == "uniform" and isinstance(k, int) and k >= 1:
        p = doc.get("p", [Fraction(1, k)] * k)
        q = []
    else:
        p = _field(doc, "p", list, problems)
        q = _field(doc, "q", list, problems, [] if not l else None, required=bool(l))
    if problems:
        raise ConfigError(problems)
    try:
        spec = E.BernoulliSpec(k, l, tuple(p), tuple(q))
    except (ValueError, TypeError) as exc:
        raise ConfigError([f"p/q: {exc}"]) from exc
    if mode == "uniform" and any(x != spec.p[0] for x in spec.p):
        raise ConfigError(["p: uniform mode needs equal probabilities"])
    return ExperimentConfig(k, l, [str(x) for x in spec.p], [str(x) for x in spec.q], n, m, list(seeds),
                            mode, log_every, float(tol), float(dtol), cname)


def load_config(path: str | os.PathLike) -> ExperimentConfig:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError([f"{path.name}: invalid JSON ({exc})"]) from exc
    return parse_config(doc, path.stem)


def _configs():
    return resources.files("schurweyl") / "configs"


def presets() -> list[str]:
    return sorted(p.name[:-5] for p in _configs().iterdir() if p.name.endswith(".json"))


def load_preset(name: str) -> ExperimentConfig:
    stem = name[:-5] if name.endswith(".json") else name
    res = _configs() / f"{stem}.json"
    if not res.is_file():
        raise ConfigError([f"preset: unknown preset {name!r}; known: {', '.join(presets())}"])
    return parse_config(json.loads(res.read_text()), stem)


def default_out_dir() -> Path:
    return Path(os.environ.get(OUT_ENV, "schurweyl-out"))


# -- running ----------------------------------------------------------------------

@dataclass
class SeedResult:
    seed: int
    shape_rows: list[int]
    shape_cols: list[int]
    row_deviation: float
    col_deviation: float
    trajectory: list[dict]
    reports: list[E.EstimateReport] = field(repr=False)


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    seeds: list[SeedResult]
    shape_checks: list[dict]
    words: dict[int, np.ndarray] = field(repr=False)

    @property
    def max_shape_deviation(self) -> float:
        return max((abs(c["deviation"]) for c in self.shape_checks), default=0.0)

    @property
    def max_density_deviation(self) -> float:
        return max(max(s.row_deviation, s.col_deviation) for s in self.seeds)

    @property
    def passed(self) -> bool:
        return (self.max_shape_deviation <= self.config.tolerance
                and self.max_density_deviation <= self.config.density_tolerance)

    def csv_rows(self) -> list[dict]:
        spec = self.config.spec()
        rows = []
        for s in self.seeds:
            for rep in s.reports:
                rows.extend(E.estimate_rows(rep, spec, s.seed))
        for c in self.shape_checks:
            rows.append({"seed": "mean", "kind": "shape", "m": c["m"], "key": c["shape"],
                         "estimate": c["mean"], "reference": c["target"], "deviation": c["deviation"]})
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in self.csv_rows():
            writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in row.items()})
        return buf.getvalue()

    def to_json(self) -> str:
        spec = self.config.spec()
        doc = {
            "config": self.config.to_dict(),
            "metadata": {
                "package_version": __version__,
                "rng": E.RNG_ALGORITHM,
                "cylinder_reference": "Bernoulli measure of the configured p, q",
                "shape_reference": "dim(lambda) * hook Schur function at the Thoma parameters",
                "thoma": {"alpha": [str(x) for x in spec.thoma().alpha],
                          "beta": [str(x) for x in spec.thoma().beta]},
            },
            "seeds": [
                {
                    "seed": s.seed,
                    "shape_rows": s.shape_rows,
                    "shape_cols": s.shape_cols,
                    "row_deviation": s.row_deviation,
                    "col_deviation": s.col_deviation,
                    "trajectory": s.trajectory,
                    "estimates": {str(r.m): {format_word(a): str(v) for a, v in sorted(r.estimates.items())}
                                  for r in s.reports},
                }
                for s in self.seeds
            ],
            "shape_checks": self.shape_checks,
            "summary": {
                "max_shape_deviation": self.max_shape_deviation,
                "max_density_deviation": self.max_density_deviation,
                "tolerance": self.config.tolerance,
                "density_tolerance": self.config.density_tolerance,
                "passed": self.passed,
            },
        }
        return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


def _trajectory(stats: E.TrajectoryStats) -> list[dict]:
    return [{"step": int(t), "rows": [int(x) for x in r], "cols": [int(x) for x in c]}
            for t, r, c in zip(stats.log_steps, stats.row_lengths, stats.col_lengths)]


def run_seed(cfg: ExperimentConfig, seed: int, word: np.ndarray | None = None) -> tuple[SeedResult, np.ndarray]:
    spec = cfg.spec(seed)
    if word is None:
        word = E.sample_word(spec, cfg.n)
    log = range(cfg.log_every, cfg.n + 1, cfg.log_every) if cfg.log_every else ()
    stats = E.youngize(word, cfg.k, cfg.l, log_steps=log)
    th = spec.thoma()
    rows = [int(x) for x in stats.rows]
    cols = [int(x) for x in stats.cols]
    rdev = max((abs(r / cfg.n - float(a)) for r, a in zip(rows, th.alpha)), default=0.0)
    cdev = max((abs(c / cfg.n - float(b)) for c, b in zip(cols, th.beta)), default=0.0)
    t = stats.p_tableau()
    reports = [E.tail_estimate_tableau(t, j, cfg.k, cfg.l) for j in range(1, cfg.m + 1)]
    return SeedResult(seed, rows, cols, rdev, cdev, _trajectory(stats), reports), word


def run(cfg: ExperimentConfig, words: dict[int, np.ndarray] | None = None, jobs: int = 1) -> ExperimentResult:
    """Run every seed; with ``words`` given, replay those instead of sampling."""
    words = words or {}

    def one(seed: int):
        w = words.get(seed)
        return run_seed(cfg, seed, w[:cfg.n] if w is not None and len(w) >= cfg.n else None)

    done = E._map_seeds(one, cfg.seeds, jobs)
    seeds = [r for r, _ in done]
    spec = cfg.spec()
    target = (lambda lam: E.equal_density_target(lam, cfg.k)) if cfg.mode == "uniform" \
        else (lambda lam: E.thoma_target(lam, spec))
    checks = []
    for j in range(1, cfg.m + 1):
        sums = [s.reports[j - 1].shape_sums() for s in seeds]
        for lam in sums[0]:
            vals = [float(x[lam]) for x in sums]
            mean = sum(vals) / len(vals)
            tgt = target(lam)
            checks.append({"m": j, "shape": ",".join(map(str, lam)), "target": float(tgt),
                           "target_exact": str(tgt), "per_seed": vals, "mean": mean,
                           "deviation": mean - float(tgt)})
    return ExperimentResult(cfg, seeds, checks, {s: w for s, (_, w) in zip(cfg.seeds, done)})


def save(result: ExperimentResult, out_dir: str | os.PathLike) -> dict[str, Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = result.config.name
    paths = {"csv": out / f"{stem}.csv", "json": out / f"{stem}.json", "words": out / f"{stem}.words.npz"}
    paths["csv"].write_text(result.to_csv())
    paths["json"].write_text(result.to_json())
    np.savez_compressed(paths["words"], **{f"seed_{s}": w for s, w in result.words.items()})
    return paths


def load_words(path: str | os.PathLike) -> dict[int, np.ndarray]:
    with np.load(path) as data:
        return {int(key.split("_", 1)[1]): data[key] for key in data.files}
