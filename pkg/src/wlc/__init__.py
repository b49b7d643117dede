"""Pure win-lose coordination games: rationality principles, symmetry and solvability."""

from .algebra import (
    disjoint_union,
    evaluate,
    game_from_expression,
    make_cycle,
    make_path,
    make_product,
    parse_expression,
    replicate,
    to_text,
)
from .classify import (
    SolvabilityReport,
    Verdict,
    brute_force_structural_solvable,
    canonical_assignment,
    canonical_protocol,
    classify,
    enumerate_games,
    enumerate_shape,
    is_structurally_indeterminate,
    sample_games,
)
from .core import (
    ChoiceStatus,
    Comparison,
    Game,
    build_game,
    choice_status,
    compare_choices,
    complement,
    losing_extension,
    optimal_choices,
    restrict,
    winning_extension,
)
from .errors import (
    GameError,
    Indeterminate,
    MalformedRenaming,
    ParseError,
    SchemaError,
    SemanticError,
    SizeLimitExceeded,
    WLCError,
)
from .io import export_dot, load_game, save_game, to_dot
from .principles import (
    NAMED,
    SymmetryKind,
    cir,
    cir_reduce,
    exhibits_bad_symmetry,
    generates_bad_symmetry,
    parse_principle,
    permissible,
    solves,
)
from .symmetry import (
    Partition,
    Renaming,
    apply_renaming,
    are_isomorphic,
    automorphisms,
    canonical_form,
    choice_equivalence,
    full_renamings,
    structural_classes,
)

__version__ = "0.1.0"
