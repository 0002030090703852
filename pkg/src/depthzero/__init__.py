"""Exact depth-zero branching laws for Iwahori-spherical representations of GL_n."""
from .branching import (BranchingResult, branch, branch_report, expand_in_standard_basis,
                        generic_branching)
from .hecke import HeckeElement, WeylElement, induce_module, specialize_q1_decompose
from .kl import bruhat_leq, kl_polynomial
from .multisegments import (Multisegment, Segment, decomposition_number, leq, parse_multisegment,
                            partition_P, poset, zelevinsky_dual)
from .partitions import (Partition, PartitionVector, conjugate, dominates, kostka_ssyt,
                         sign_induction_multiplicities)
from .polynomial import IntPolynomial

__version__ = "0.1.0"
