"""Exact computations with crossed products of finite-dimensional Hopf algebras."""

from .braiding import BraidingQuadruple, PairingData, assemble_sigma, certify_quadruple, decompose_sigma
from .crossed import CrossedSystemData, build_crossed_product, certify, factorize, verify_crossed_system
from .exactfield import Cyclo, Field, parse_scalar, render, zeta
from .hopfcore import (
    AxiomReport,
    HopfData,
    cyclic_group_algebra,
    group_algebra,
    map_predicates,
    sweedler_h4,
    tensor_hopf,
    verify_hopf,
)

__version__ = "0.1.0"
