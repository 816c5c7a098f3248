"""Syntactic ordered monoids, downset power monoids and ω-inequalities for
regular languages, with the commutative and one-letter machinery built on them."""
from types import ModuleType as _ModuleType

from .automata import Alphabet, Dfa, Morphism, Nfa, determinize, empty_dfa, minimize, universal_dfa
from .commutative import ClosureFamily, ShuffleTerm, decompose_commutative, lattice_closure
from .downset import Downset, downclose, downset_monoid, quotient_check, u1_down
from .errors import (
    AlphabetMismatch,
    CapExceeded,
    MorphismKindError,
    NotCommutativeError,
    RegexSyntaxError,
    SynmonError,
)
from .ineq import (
    Finite,
    Inequality,
    OmegaPlus,
    OmegaTerm,
    check,
    enumerate_power_inequalities,
    eval_term,
    parse_inequality,
    parse_term,
    satisfies,
    stamp_satisfies,
)
from .languages import (
    boolean,
    complement,
    concat,
    difference,
    equivalent,
    intersect,
    inverse_morphism,
    left_quotient,
    quotient,
    rename_image,
    right_quotient,
    shuffle,
    to_regex,
    union,
)
from .monoid import (
    OrderedMonoid,
    Stamp,
    SyntacticData,
    direct_product,
    isomorphic,
    monoid_props,
    restricted_product,
    syntactic_monoid,
    syntactic_order,
    transition_monoid,
    trivial_monoid,
)
from .numsemigroup import NumericalSemigroup, build_LS, generate, vs_characterization
from .regex import compile_regex, parse_regex
from .unary import EPSet, ep_divide, ep_shift, from_epset, to_epset

__version__ = "0.1.0"

__all__ = sorted(
    name for name, value in globals().items()
    if not name.startswith("_") and not isinstance(value, _ModuleType)
)
