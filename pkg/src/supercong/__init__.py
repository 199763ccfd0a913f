"""Exact modular verification of truncated hypergeometric supercongruences."""

from .checks import CheckId, CongruenceReport, Status, cross_consistency, run_check, run_grid
from .cyclo import CycloContext, CycloElem, cyclo_context
from .gamma import gamma_at, morita_factorial, table_for
from .padic import TOP, PAdic, PAdicContext, context_new

__all__ = [
    "TOP",
    "PAdic",
    "PAdicContext",
    "context_new",
    "CycloContext",
    "CycloElem",
    "cyclo_context",
    "gamma_at",
    "morita_factorial",
    "table_for",
    "CheckId",
    "CongruenceReport",
    "Status",
    "run_check",
    "run_grid",
    "cross_consistency",
]
