"""Escher degree of chair (L-substitution) tilings.

Exact relation solving, exhaustive classification, and SVG rendering of
escherized chair tilings with one or two prototiles.
"""

from .edges import (
    AMPLITUDE_CAP,
    ALPHA_SYMBOLS,
    ALL_SYMBOLS,
    BETA_SYMBOLS,
    EdgeSymbol,
    EdgeTerm,
    PerturbedCurve,
    Prototile,
    Word,
    concat,
    curve_dual,
    curve_invert,
    curve_mirror,
    dual,
    invert,
    make_curve,
    matches,
    mirror,
    split_equal,
    split_match,
    symbol,
    symbols,
    word,
)
from .geometry import (
    Placement,
    Spread,
    SubstitutionRule,
    compose_spread,
    extract_matchings,
    format_placements,
    generate_spread,
    interior_matchings,
    one_rule_spread,
    oracle_relations,
    parse_placements,
)
from .relations import (
    RelationSystem,
    SolveMode,
    SolveResult,
    closure,
    detect_prototile_collapse,
    solve,
    systems_agree,
)
from .classify import (
    CaseTable,
    OneRuleTable,
    admissible_pairs,
    classify_all,
    classify_one_rule,
    equivalence_classes,
)
from .escher import (
    AmplitudeError,
    RenderedTiling,
    TilingConsistencyError,
    build_tiling,
    consistency_check,
    propagate,
    random_params,
    render,
    simplicity_check,
    svg_document,
    tiling_dump,
    zero_params,
)

__version__ = "0.1.0"
