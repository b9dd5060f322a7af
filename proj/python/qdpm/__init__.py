"""Parity game solving by quasi-dominion progress measures."""

from ._qdpm import (
    BudgetExceeded,
    GameError,
    ParityGame,
    ParseError,
    Player,
    SolveTimeout,
    brute_force,
    clustered_game,
    figure1_game,
    parse_pgsolver,
    random_game,
    read_pgsolver,
    solve,
    spm,
    validate,
    verify_winning,
    write_pgsolver,
    zielonka,
)

__all__ = [
    "BudgetExceeded",
    "GameError",
    "ParityGame",
    "ParseError",
    "Player",
    "SolveTimeout",
    "brute_force",
    "clustered_game",
    "figure1_game",
    "parse_pgsolver",
    "random_game",
    "read_pgsolver",
    "solve",
    "spm",
    "validate",
    "verify_winning",
    "write_pgsolver",
    "zielonka",
]
