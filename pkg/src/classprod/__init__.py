"""Exact conjugacy-class product analysis in GL_n over Q and prime fields.

The package computes canonical forms (Smith over K[X], Frobenius, Jordan)
with verified transforms, decides the minimal number of conjugate factors
of a matrix and its inverse needed to reach the unit transvection, emits
machine-verified witness decompositions, cross-checks everything against a
brute-force oracle over small finite fields, and carries the stable
(direct-limit) variant of the theory.
"""

from .classify import (Bounds, ClassDescriptor, Exact, MReport,
                       classify_m_general, classify_m_n3, describe_class)
from .fields import GF, QQ, Field, PrimeField, RationalField, Scalar
from .matrix import (ElemGen, Matrix, commutator, diag_one, diag_pair, perm,
                     signed_perm, transvection, transvection_normalizer)
from .normalforms import (FrobeniusData, JordanData, PolyMat, SNFResult,
                          elementary_divisors, frobenius_form,
                          invariant_factors, is_similar, jordan_block,
                          jordan_form, smith_normal_form, solve_similarity)
from .oracle import (ClassSet, OracleVerdict, all_classes,
                     class_product_contains_t, enumerate_E_class,
                     minimal_m_search)
from .poly import (Irreducibility, Poly, eisenstein_test, factor_completely,
                   irreducibility, poly_divmod, poly_gcd, reciprocal,
                   roots_in_field)
from .stable import (StableElement, StableFrobenius, StableVerdict, pad_rule,
                     stable_frobenius, stable_is_similar, stable_m)
from .witness import (Witness, lemperm_move, solve_conjugator,
                      synthesize_witness, to_E_conjugators, verify_witness,
                      witness_cube_n3, witness_four, witness_m1,
                      witness_root, witness_square_n3)

__version__ = "0.1.0"
