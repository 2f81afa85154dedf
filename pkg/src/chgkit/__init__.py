"""Exact arithmetic for complex hyperbolic geometry.

Number fields with a conjugation, hermitian forms of signature (n, 1), the
group SU(n,1) with its parabolic and standard subgroups, chains on the
boundary, integral lattices over Z[i], adjoint traces, and a relative
proportionality classifier for curves on ball quotient surfaces.
"""

from .errors import ChgkitError
from .numfield import QI, QQ, FieldElement, NumberField, char_poly, is_algebraic_integer, parse_element, sqrt
from .embedding import Sign, certified_sign, default_embedding
from .linalg import HermitianForm, Matrix, h0_form, h_form, restricted_signature
from .chgeom import BoundaryPoint, Chain, GroupElement, chain_through, on_chain, su_membership, triple_on_chain
from .parabolic import ParabolicCoords, decompose_P, make_A, make_M, make_U, make_Z, u_compose
from .arith import adjoint_trace, default_generators, lattice_membership, obstruction_check, word_ball
from .propcheck import CurveData, Verdict, classify, ingest, report

__version__ = "0.1.0"

__all__ = [
    "ChgkitError",
    "QI",
    "QQ",
    "FieldElement",
    "NumberField",
    "char_poly",
    "is_algebraic_integer",
    "parse_element",
    "sqrt",
    "Sign",
    "certified_sign",
    "default_embedding",
    "HermitianForm",
    "Matrix",
    "h0_form",
    "h_form",
    "restricted_signature",
    "BoundaryPoint",
    "Chain",
    "GroupElement",
    "chain_through",
    "on_chain",
    "su_membership",
    "triple_on_chain",
    "ParabolicCoords",
    "decompose_P",
    "make_A",
    "make_M",
    "make_U",
    "make_Z",
    "u_compose",
    "adjoint_trace",
    "default_generators",
    "lattice_membership",
    "obstruction_check",
    "word_ball",
    "CurveData",
    "Verdict",
    "classify",
    "ingest",
    "report",
    "__version__",
]
