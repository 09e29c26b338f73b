"""Fractional (g,f)-factor feasibility, all-factors checks and sharpness constructions."""

from ._core import (
    Certificate,
    ConditionReport,
    FractionalResult,
    Graph,
    Hypothesis,
    NiessenResult,
    SharpnessReport,
    Verdict,
    ContractError,
    DomainError,
    ResourceError,
    ParseError,
    VerificationError,
    anstee_deficiency,
    box_oracle,
    complete_graph,
    components,
    corner_oracle,
    disjoint_union,
    edgeless_graph,
    fractional_gf_feasible,
    fractional_q_feasible,
    gen_mindegree_sharp,
    gen_neighborhood_sharp,
    has_all_fractional,
    has_all_fractional_ab,
    join,
    kano_hypotheses,
    lu3_hypotheses,
    max_flow,
    mindegree_sharp_m,
    niessen_all_integral,
    parse_graph,
    format_graph,
    verify_sharpness,
    worst_set_deficiency,
)

__all__ = [name for name in dir() if not name.startswith("_")]
