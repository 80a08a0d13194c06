"""Exact computations for rank-2 CR symbols, prolongations and models."""

from _crsym import (  # noqa: F401
    GNLA,
    CRModel,
    InternalConsistencyError,
    ModelParseError,
    catalog,
    cauchy_dim,
    classify_hc,
    cocycle_dim,
    cr_g0_r,
    der0_dim,
    deprolong,
    enumerate_211,
    fixture_names,
    fixture_source,
    free_gnla,
    invariant_j_exists,
    necklace_dim,
    normalize_j,
    parse_model,
    prolong_report,
    run_acceptance,
    symmetry_bound,
)

__all__ = [
    "GNLA",
    "CRModel",
    "InternalConsistencyError",
    "ModelParseError",
    "catalog",
    "cauchy_dim",
    "classify_hc",
    "cocycle_dim",
    "cr_g0_r",
    "der0_dim",
    "deprolong",
    "enumerate_211",
    "fixture_names",
    "fixture_source",
    "free_gnla",
    "invariant_j_exists",
    "necklace_dim",
    "normalize_j",
    "parse_model",
    "prolong_report",
    "run_acceptance",
    "symmetry_bound",
]
