"""Exact colored HOMFLYPT invariants of braid closures via skein theory."""

from .annulus import AnnulusElement, PatternAtom, pp_to_atoms, q_element, q_expand_qq, qlm_to_pp
from .combinatorics import Partition, character, lr_coefficient, partitions_of
from .diagram import BraidWord, Diagram, braid_closure, cable_satellite, pattern_braid
from .errors import (
    BoundExceeded,
    ComponentMismatch,
    DivisionNotExact,
    NotDivisible,
    ResourceLimit,
    SizeMismatch,
    SkeinlabError,
)
from .homfly import Evaluator, evaluate, jones_oracle
from .invariants import (
    ColoredLink,
    InvariantReport,
    eigenvalue_ratio,
    full_W,
    naive_P_link,
    normalized_P_link,
    prefactor,
    rectangle_prefactor,
    reduced_P_knot,
    reduced_Q_link,
    unknot_value,
    verify_integrality,
    verify_symmetries,
)
from .ring import LaurentPoly, Ring, SkeinScalar, bracket, divide, membership, substitute

__version__ = "0.1.0"
