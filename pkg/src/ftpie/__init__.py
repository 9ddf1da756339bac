"""Exact static fault tree analysis: minimal cut sets, inclusion-exclusion, and oracles."""
from .cutsets import cut_sets, minimize, mcs
from .distributions import Exponential, FixedProb, Weibull, assign_probabilities, unreliability
from .errors import *  # noqa: F401,F403
from .ftio import parse_ft, print_ft
from .gates import and_prob, nand_prob, nor_prob, not_prob, or_prob, xor_prob
from .model import And, FaultTree, Nand, Nor, Not, Or, Xor, build_tree, structure_eval
from .oracle import McEstimate, enum_prob, mc_prob
from .pie import AnalysisReport, intersection_prob, pie_probability, pie_term_count, top_probability
from .solar import compare_solar, eq5_eval, solar_tree

__version__ = "0.1.0"
