"""Atom structures for Boolean algebras with operators, their complex
algebras, and the games and witnesses that probe them."""

from .atoms import (AtomSet, FiniteAtomStructure,
                    check_atom_structure_axioms)
from .algebra import (ComplexAlgebra, ParseError, complex_algebra, eval_term,
                      parse_term)
from .additivity import AdditivityWitness, Confirmed, check_complete_additivity
from .builder import (BuilderState, StepRecord, Task, builder_step,
                      builder_verify, run_builder, s_sequences, trace_lines)
from .errors import (BaolabError, BudgetExceededError, ConfigurationError,
                     PreconditionError, UnboundVariableError,
                     UnsupportedQueryError)
from .fincof import FinCofSet
from .graphs import Graph
from .labelled import (LabelledGraph, gg_membership, saturate_labelled_model)
from .matrices import (BasicMatrix, brute_force_basic_matrices,
                       ca_atoms_from_matrices, enumerate_basic_matrices,
                       is_basic_matrix)
from .partition import (FailureCertificate, PartitionAlgebra,
                        additivity_failure_certificate, concrete_partition,
                        pa_complement, pa_leq, pa_s01, pa_transposition,
                        pa_union)
from .ra import RelationAtomStructure, build_alpha, check_ra_atom_structure
from .ramsey import ramsey_kernel_check
from .report import CheckReport, emit_report, report_from_findings
from .schema import SchemaVerdict, check_crpa2_schema
from .setalg import (SetAlgebraRepresentation, diagonal_quotient_lift,
                     full_set_algebra, identity_representation,
                     tuple_atom_structure, verify_complete_representation)
from .signature import Signature
from .vectorspace import (FiniteSupportSeq, in_y, neat_embedding_map_check,
                          plane_witnesses, singleton_recovery_check)
from .games import (UNBOUNDED, AtomicPresentation, GameResult, Network,
                    SquareResult, bf_system_check, boolean_algebra,
                    brute_force_square, certificate_system_prefix, ef_decide,
                    ef_system_equivalence_test, fresh_atom_strategy_verify,
                    product_model, square_game, system_exists)

__version__ = "0.1.0"

__all__ = [
    "AtomSet", "FiniteAtomStructure", "check_atom_structure_axioms",
    "ComplexAlgebra", "ParseError", "complex_algebra", "eval_term",
    "parse_term",
    "AdditivityWitness", "Confirmed", "check_complete_additivity",
    "BuilderState", "StepRecord", "Task", "builder_step", "builder_verify",
    "run_builder", "s_sequences", "trace_lines",
    "BaolabError", "BudgetExceededError", "ConfigurationError",
    "PreconditionError", "UnboundVariableError", "UnsupportedQueryError",
    "FinCofSet", "Graph",
    "LabelledGraph", "gg_membership", "saturate_labelled_model",
    "BasicMatrix", "brute_force_basic_matrices", "ca_atoms_from_matrices",
    "enumerate_basic_matrices", "is_basic_matrix",
    "FailureCertificate", "PartitionAlgebra",
    "additivity_failure_certificate", "concrete_partition",
    "pa_complement", "pa_leq", "pa_s01", "pa_transposition", "pa_union",
    "RelationAtomStructure", "build_alpha", "check_ra_atom_structure",
    "ramsey_kernel_check",
    "CheckReport", "emit_report", "report_from_findings",
    "SchemaVerdict", "check_crpa2_schema",
    "SetAlgebraRepresentation", "diagonal_quotient_lift", "full_set_algebra",
    "identity_representation", "tuple_atom_structure",
    "verify_complete_representation",
    "Signature",
    "FiniteSupportSeq", "in_y", "neat_embedding_map_check", "plane_witnesses",
    "singleton_recovery_check",
    "UNBOUNDED", "AtomicPresentation", "GameResult", "Network",
    "SquareResult", "bf_system_check", "boolean_algebra",
    "brute_force_square", "certificate_system_prefix", "ef_decide",
    "ef_system_equivalence_test", "fresh_atom_strategy_verify",
    "product_model", "square_game", "system_exists",
    "__version__",
]
