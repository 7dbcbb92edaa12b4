"""State polytopes and Hilbert-Mumford indices of Hilbert points, over the rationals."""

from .arith import Monomial, Polynomial, TermOrder, compare, monomials_of_degree, parse_polynomial, weight_of
from .chain import (ChainAssemblyError, ChainConfig, ChainInstance, assemble, build_T_ideals,
                    verify_polytope_decomposition, verify_state_decomposition,
                    verify_vertex_sharpness)
from .hm import OneParamSubgroup, mu, mu_decomposition_check, mu_dual, pairing
from .ideal import (BlockEmbedding, GradedPiece, IdealPresentation, direct_sum_check, embed,
                    gotzmann_number, graded_piece, intersect, product_monomial_ideal, read_ideal,
                    tau_point)
from .polytope import (BlockHyperplaneWitness, Polytope, hull_vertices, minkowski_sum,
                       vertex_sum_lemma_check)
from .states import (BudgetExceeded, StateSet, bayer_morrison_check, initial_monomials, states,
                     state_of_initial, state_polytope)

__version__ = "0.1.0"
