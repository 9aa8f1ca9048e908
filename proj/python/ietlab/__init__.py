"""Exact arithmetic for interval exchange transformations."""

from ._ietlab import (
    GnElement,
    Iet,
    IetLabError,
    MarkedAction,
    Permutation,
    Scalar,
    SymbolTable,
    a_morphism_is_zero,
    bounded_freeness,
    bs_faithfulness,
    builtin_example,
    builtin_example_names,
    check_relations,
    compose,
    decompose,
    eval_word,
    factor_four_involutions,
    factor_periodic_two_involutions,
    factor_reversible_four_involutions,
    finite_order_reverser,
    from_iet,
    inverse,
    load_value,
    minimality_certificate,
    order,
    parse_gn,
    parse_iet,
    period,
    power,
    rank,
    run_cli,
    saf,
    six_involutions_rr,
    strengthen_reverser,
    to_iet,
    two_restricted_rotation_map,
)

__all__ = [
    "GnElement",
    "Iet",
    "IetLabError",
    "MarkedAction",
    "Permutation",
    "Scalar",
    "SymbolTable",
    "a_morphism_is_zero",
    "bounded_freeness",
    "bs_faithfulness",
    "builtin_example",
    "builtin_example_names",
    "check_relations",
    "compose",
    "decompose",
    "eval_word",
    "factor_four_involutions",
    "factor_periodic_two_involutions",
    "factor_reversible_four_involutions",
    "finite_order_reverser",
    "from_iet",
    "inverse",
    "load_value",
    "minimality_certificate",
    "order",
    "parse_gn",
    "parse_iet",
    "period",
    "power",
    "rank",
    "run_cli",
    "saf",
    "six_involutions_rr",
    "strengthen_reverser",
    "to_iet",
    "two_restricted_rotation_map",
]
