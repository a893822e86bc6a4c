from .presentations import (UNBOUNDED, AtomicPresentation, boolean_algebra,
                            product_model)
from .ef import (GameResult, ef_decide, system_exists, bf_system_check,
                 certificate_system_prefix, ef_system_equivalence_test,
                 fresh_atom_strategy_verify, qf_type)
from .square import (Network, SquareResult, square_game, brute_force_square,
                     RelabelledProtocol)

__all__ = [
    "UNBOUNDED", "AtomicPresentation", "boolean_algebra", "product_model",
    "GameResult", "ef_decide", "system_exists", "bf_system_check",
    "certificate_system_prefix", "ef_system_equivalence_test",
    "fresh_atom_strategy_verify", "qf_type",
    "Network", "SquareResult", "square_game", "brute_force_square",
    "RelabelledProtocol",
]
