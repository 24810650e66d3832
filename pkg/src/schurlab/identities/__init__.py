"""Right-hand sides and the verification engine for every identity in the catalog."""
from .bounded import phi_eval, rect_sum_eval, rhs_theorem5_eval, verify_point_identity
from .catalog import CATALOG, IdentityInfo, catalog_text
from .combinatorial import verify_combinatorial
from .determinants import verify_det_identity
from .engine import DEFAULT_SUITE, CheckSpec, SuiteConfig, load_config, parse_config, run_check, run_suite
from .report import CheckReport, reports_to_json, reports_to_text
from .series_ids import lhs_series, phi_truncated, verify_series_identity


def verify(identity: str, **params) -> CheckReport:
    """Run one catalog check with the given sizes (catalog defaults fill the rest)."""
    seed = params.pop("seed", 0)
    return run_check(CheckSpec(identity, **params), seed)


__all__ = [
    "CATALOG",
    "DEFAULT_SUITE",
    "CheckReport",
    "CheckSpec",
    "IdentityInfo",
    "SuiteConfig",
    "catalog_text",
    "lhs_series",
    "load_config",
    "parse_config",
    "phi_eval",
    "phi_truncated",
    "rect_sum_eval",
    "reports_to_json",
    "reports_to_text",
    "rhs_theorem5_eval",
    "run_check",
    "run_suite",
    "verify",
    "verify_combinatorial",
    "verify_det_identity",
    "verify_point_identity",
    "verify_series_identity",
]
