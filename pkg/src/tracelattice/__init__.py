"""Trace-form lattices of cyclotomic and quadratic fields."""

from .cyclotomic import CycloElement, Involution, gram_trace_form
from .discgroup import crosscheck, criterion
from .lattice import DiscGroup, GramLattice, disc_group, primitive_rescale
from .quadratic import QuadField, quad_gram
from .roots import RootDecomposition, RootType, enumerate_short, similar_to, witt_decompose
from .theorems import FieldSpec, check_bk, predict, rescale_not_even_unimodular, sweep, verify

__all__ = [
    "CycloElement",
    "DiscGroup",
    "FieldSpec",
    "GramLattice",
    "Involution",
    "QuadField",
    "RootDecomposition",
    "RootType",
    "check_bk",
    "criterion",
    "crosscheck",
    "disc_group",
    "enumerate_short",
    "gram_trace_form",
    "predict",
    "primitive_rescale",
    "quad_gram",
    "rescale_not_even_unimodular",
    "similar_to",
    "sweep",
    "verify",
    "witt_decompose",
]
