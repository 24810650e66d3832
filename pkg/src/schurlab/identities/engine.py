"""Suite configuration and the check runner."""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Any, Mapping

from ..errors import UsageError
from ..weights import f_abc
from .bounded import POINT_IDS, verify_point_identity
from .catalog import CATALOG
from .combinatorial import COMBI_IDS, verify_combinatorial
from .determinants import DET_IDS, verify_det_identity
from .report import CheckReport
from .series_ids import SERIES_SPECS, verify_series_identity

MUTATIONS = ("drop_delta_term",)
_FIELDS = ("id", "n", "m", "D", "trials", "mutation")


@dataclass(frozen=True)
class CheckSpec:
    id: str
    n: int | None = None
    m: int | None = None
    D: int | None = None
    trials: int | None = None
    mutation: str | None = None

    def resolved(self) -> "CheckSpec":
        """Fill unset sizes from the catalog defaults."""
        d = CATALOG[self.id].defaults
        return CheckSpec(
            self.id,
            self.n if self.n is not None else d.get("n"),
            self.m if self.m is not None else d.get("m"),
            self.D if self.D is not None else d.get("D"),
            self.trials if self.trials is not None else d.get("trials"),
            self.mutation,
        )


@dataclass(frozen=True)
class SuiteConfig:
    checks: tuple[CheckSpec, ...]
    seed: int = 0


def _int_or_none(entry: Mapping, key: str):
    v = entry.get(key)
    if v is None:
        return None
    if isinstance(v, bool) or not isinstance(v, int):
        raise UsageError(f"{key} must be an integer, got {v!r}")
    return v


def unknown_id_message(identity: str) -> str:
    return f"unknown identity {identity!r}; known ids: {', '.join(CATALOG)}"


def _expand(entry: Mapping[str, Any]) -> list[CheckSpec]:
    if not isinstance(entry, Mapping):
        raise UsageError(f"suite entries must be objects, got {entry!r}")
    extra = set(entry) - set(_FIELDS)
    if extra:
        raise UsageError(f"unknown suite fields {sorted(extra)}")
    identity = entry.get("id")
    if identity not in CATALOG:
        raise UsageError(unknown_id_message(str(identity)))
    mutation = entry.get("mutation")
    if mutation is not None and mutation not in MUTATIONS:
        raise UsageError(f"unknown mutation {mutation!r}")
    # "n": [1, 2, 3] expands to one check per value
    axes = []
    for key in ("n", "m", "D", "trials"):
        v = entry.get(key)
        values = v if isinstance(v, list) else [v]
        for item in values:
            _int_or_none({key: item}, key)
        axes.append(values)
    return [CheckSpec(identity, n, m, D, t, mutation) for n, m, D, t in product(*axes)]


def parse_config(obj: Any, seed: int | None = None) -> SuiteConfig:
    """Accept ``{"suite": [...], "seed": s}`` or a bare list of entries."""
    if isinstance(obj, list):
        entries, file_seed = obj, 0
    elif isinstance(obj, Mapping):
        extra = set(obj) - {"suite", "seed"}
        if extra:
            raise UsageError(f"unknown config keys {sorted(extra)}")
        entries = obj.get("suite", [])
        file_seed = _int_or_none(obj, "seed") or 0
        if not isinstance(entries, list):
            raise UsageError("'suite' must be a list")
    else:
        raise UsageError("config must be a JSON object or list")
    checks: list[CheckSpec] = []
    for entry in entries:
        checks.extend(_expand(entry))
    return SuiteConfig(tuple(checks), file_seed if seed is None else seed)


def load_config(path: str | os.PathLike, seed: int | None = None) -> SuiteConfig:
    try:
        obj = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read suite {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"suite {path} is not valid JSON: {exc}") from None
    return parse_config(obj, seed)


def _mutated_abc(lam):
    return f_abc(lam, skip=(1,))


def run_check(spec: CheckSpec, seed: int = 0) -> CheckReport:
    spec = spec.resolved()
    i = spec.id
    if spec.mutation and i not in ("eq8", "thm1"):
        raise UsageError(f"mutation {spec.mutation!r} only applies to eq8 and thm1")
    start = time.perf_counter()
    if i in SERIES_SPECS:
        weight = (lambda lam, ctx: _mutated_abc(lam).embed(ctx)) if spec.mutation else None
        report = verify_series_identity(i, spec.n, spec.D, weight=weight)
    elif i in POINT_IDS:
        report = verify_point_identity(i, spec.n, spec.m, spec.trials, seed)
    elif i in DET_IDS:
        report = verify_det_identity(i, spec.n, spec.m or 0)
    elif i in COMBI_IDS:
        report = verify_combinatorial(i, n=spec.n, m=spec.m, D=spec.D, trials=spec.trials, seed=seed,
                                      weight=_mutated_abc if spec.mutation else None)
    else:  # pragma: no cover - the catalog and the dispatch are kept in sync
        raise UsageError(unknown_id_message(i))
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def thread_count() -> int:
    raw = os.environ.get("SCHURLAB_THREADS")
    if raw:
        try:
            n = int(raw)
        except ValueError:
            raise UsageError(f"SCHURLAB_THREADS must be an integer, got {raw!r}") from None
        return max(1, n)
    return min(4, os.cpu_count() or 1)


def run_suite(config: SuiteConfig | Mapping | list, seed: int | None = None,
              threads: int | None = None) -> list[CheckReport]:
    """Run every configured check; reports come back in configuration order.

    ``config`` is a :class:`SuiteConfig`, a parsed JSON suite, or a list of
    :class:`CheckSpec`.
    """
    if isinstance(config, SuiteConfig):
        if seed is not None:
            config = SuiteConfig(config.checks, seed)
    elif isinstance(config, list) and all(isinstance(c, CheckSpec) for c in config):
        config = SuiteConfig(tuple(config), seed or 0)
    else:
        config = parse_config(config, seed)
    checks = config.checks
    if not checks:
        return []
    workers = min(threads or thread_count(), len(checks))
    if workers == 1:
        return [run_check(c, config.seed) for c in checks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda c: run_check(c, config.seed), checks))


DEFAULT_SUITE: dict[str, Any] = {
    "seed": 0,
    "suite": [
        {"id": "eq7", "D": 12},
        {"id": "eq8", "D": 10},
        {"id": "lemma1", "D": 10},
        {"id": "lemma2", "D": 8},
        {"id": "incl_excl", "D": 8},
        {"id": "littlewood1", "n": 3, "D": 8},
        {"id": "iw2", "n": 3, "D": 8},
        {"id": "eq3", "n": 3, "D": 8},
        {"id": "eq4", "n": 3, "D": 8},
        {"id": "eq5", "n": 3, "D": 8},
        {"id": "thm1", "n": 3, "D": 7},
        {"id": "littlewood2", "n": 3, "D": 8},
        {"id": "remark3a", "n": 3, "D": 8},
        {"id": "remark3b", "n": 3, "D": 7},
        {"id": "thm5", "n": [1, 2, 3], "m": [0, 1, 2, 3, 4], "trials": 20},
        {"id": "cor1a", "n": [1, 2, 3], "m": [0, 1, 2, 3, 4], "trials": 20},
        {"id": "cor1b", "n": [1, 2, 3], "m": [0, 1, 2, 3, 4], "trials": 20},
        {"id": "cor1c", "n": 2, "m": [0, 1, 2, 3, 4], "trials": 20},
        {"id": "thm2", "n": [1, 2, 3, 4], "m": [0, 1, 2, 3, 4]},
        {"id": "thm3", "n": [1, 2, 3, 4], "m": [0, 1, 2, 3, 4]},
        {"id": "thm4", "n": [2, 4], "m": [0, 1, 2, 3, 4]},
        {"id": "cor2a", "n": [1, 2, 3, 4, 5]},
        {"id": "cor2b", "n": [1, 2, 3, 4, 5]},
        {"id": "cor2c", "n": [1, 2, 3, 4, 5]},
        {"id": "eq13", "n": [1, 2, 3, 4, 5]},
        {"id": "eq14", "n": [1, 2, 3, 4]},
        {"id": "schur_routes", "n": 4, "D": 8, "trials": 5},
        {"id": "pieri", "n": 4, "D": 6, "m": 4},
        {"id": "remark1", "n": [1, 2, 3], "m": [0, 1, 2]},
        {"id": "m_to_inf", "n": [1, 2, 3], "trials": 5},
    ],
}

__all__ = [
    "DEFAULT_SUITE",
    "CheckSpec",
    "SuiteConfig",
    "load_config",
    "parse_config",
    "run_check",
    "run_suite",
    "thread_count",
    "unknown_id_message",
]
