"""Three-valued subjective probability.

Partial-set algebra, Kleene possible-world semantics, partial probability
measures and belief assignments, R^2-valued bets with exhaustive Dutch
Book detection, and constructive Dutch Book synthesis with verified
certificates.
"""

from .pairs import (
    BOTTOM_VALUE,
    EPSILON,
    NEUTRAL_VALUE,
    PartialValue,
    RPair,
    TOP_VALUE,
    pair_approx,
    pair_leq,
    pv_leq,
    sigma,
)
from .partial_sets import PartialSet, Universe, UniverseMismatchError, generated_subalgebra
from .formulas import (
    And,
    Const,
    Formula,
    Not,
    Or,
    ParseError,
    TruthValue,
    Var,
    is_classical,
    neutral,
    one,
    parse,
    to_text,
    zero,
)
from .semantics import (
    ARITY_CAP,
    ArityCapError,
    ArityMismatchError,
    World,
    classical_worlds,
    classically_equivalent,
    classically_valid,
    dnf_formula_for,
    entails,
    equivalent,
    evaluate,
    info_leq,
    is_classical_world,
    kleene_universe,
    meaning,
    meaning_by_scan,
    value_info_leq,
    world_from_str,
    world_to_str,
    worlds,
)
from .probability import (
    BeliefAssignment,
    ClassicalBeliefAssignment,
    ClassicalMeasure,
    CoherenceReport,
    Unchecked,
    Violation,
    check_belief_axioms,
    check_derived_properties,
    check_measure_axioms,
    induced_belief_assignment,
    measure_from_classical,
)
from .betting import (
    Book,
    ClassicalBet,
    ClassicalBook,
    DetectionResult,
    PartialBet,
    Region,
    Verdict,
    book_from_json,
    book_to_json,
    classify,
    detect,
)
from .synthesis import (
    CLASSICAL_ADDITIVITY,
    CLASSICAL_AXIOM1,
    CLASSICAL_EQUIVALENCE,
    CLASSICAL_ZERO,
    Certificate,
    IncomparableSidesError,
    SolverPreconditionError,
    StakeQuadruple,
    SynthesisError,
    SynthesisOutcome,
    stake_solver,
    synth_axiom1,
    synth_axiom2,
    synth_axiom3,
    synth_axiom4,
    synth_classical,
    synth_equivalence,
    synthesize_all,
)
from .verification import SUITE_NAMES, SuiteResult, run_suites

__version__ = "0.1.0"
