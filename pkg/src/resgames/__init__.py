"""Resource games whose resources are formulas of (affine) MALL."""

__version__ = "0.1.0"

from resgames.logic import (  # noqa: E402
    AFFINE_MALL,
    AFFINE_MLL,
    BOT,
    EMPTY,
    LINEAR_MALL,
    LINEAR_MLL,
    ONE,
    TOP,
    ZERO,
    Atom,
    Formula,
    Fragment,
    FragmentError,
    LogicMode,
    Lollipop,
    Neg,
    One,
    Plus,
    ResGamesError,
    ResourceBag,
    Sequent,
    Tensor,
    Top,
    Weakening,
    With,
    bag,
    multisubsets,
    par,
    tensor_fold,
)
from resgames.syntax import ParseError, parse_formula, parse_sequent, print_formula  # noqa: E402
from resgames.prover import (  # noqa: E402
    BudgetExhausted,
    ProofResult,
    Prover,
    ProverLimits,
    Status,
    entails_goal,
    prove,
)
from resgames.model import (  # noqa: E402
    EnumerationCapExceeded,
    Game,
    GameError,
    Limits,
    PrefKind,
    Profile,
    Redistribution,
)
from resgames.games import (  # noqa: E402
    DICHOTOMOUS,
    PARSIMONIOUS,
    all_equilibria,
    concentrate,
    is_nash,
    outcome,
    prefers,
    rationally_constructible,
    rationally_eliminable,
    redistributions,
    satisfied,
)
from resgames.coop import CoalitionGame, CoalitionModel, ModelMismatch, PayoffVector  # noqa: E402
from resgames.gamefile import dump_game, fixture_path, load_game, loads_game, parse_profile  # noqa: E402
