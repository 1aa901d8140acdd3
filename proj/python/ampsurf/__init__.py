"""Exact positivity verdicts for Chern characters on P2 and Hirzebruch surfaces.

Characters use the text form ``r:c1:ch2`` with ``c1 = a`` on P2 and
``c1 = a,b`` (meaning aE + bF) on F_e. Rationals come back as
``fractions.Fraction``; reports come back as the structured report decoded
into plain dicts.
"""

from ._ampsurf import (
    SCHEMA,
    AmpsurfError,
    ParseError,
    PreconditionError,
    ample_gg_verdict,
    effective_n_bound,
    euler_characteristic,
    gieseker_report,
    log_invariants,
    report,
    report_text,
)

__all__ = [
    "SCHEMA",
    "AmpsurfError",
    "ParseError",
    "PreconditionError",
    "ample_gg_verdict",
    "effective_n_bound",
    "euler_characteristic",
    "gieseker_report",
    "log_invariants",
    "report",
    "report_text",
]
