"""Deciding whether a partition pair is a genuine vertex of the licci graph.

Two exact procedures are provided.  ``is_decoration_descent`` applies the
tight double link, which strictly lowers the level whenever the window
``0 <= lam_c + p < mu_1`` holds, and every link is reversible, so the pair is
a decoration exactly when its descent reaches the complete intersection.
``is_decoration_smallest_chain`` iterates the smallest minimal link and can
return ``unknown`` on non-decorations whose chain does not close up.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .core import Decoration, squares_defect
from .errors import NegativePartProduced, TooFewParts
from .linkage import LinkResult, smallest_minimal_link, tight_double_link

DEFAULT_MAX_STEPS = 10_000


class Status(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    status: Status
    reason: str
    certificate: tuple[LinkResult, ...] = field(default=(), compare=False)
    method: str = ""

    def __bool__(self) -> bool:
        return self.status is Status.YES

    def terminal(self) -> Optional[Decoration]:
        return self.certificate[-1].target if self.certificate else None

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "reason": self.reason,
            "method": self.method,
            "certificate": [
                {"from": step.source.to_json(), **step.to_json()} for step in self.certificate
            ],
        }


def is_terminal(dec: Decoration) -> bool:
    """Unit ideal or complete intersection."""
    return dec.k == 0 or (dec.k == 1 and dec.lam == (1,) * dec.c)


def smallest_window(dec: Decoration) -> Optional[int]:
    """``lam_c + p`` for the smallest minimal link, or None when undefined."""
    if dec.b < dec.c or dec.t < 1:
        return None
    p = sum(dec.lam[dec.c :]) - dec.k
    return dec.lam[dec.c - 1] + p


def necessary_filters(dec: Decoration) -> Optional[str]:
    """Return the name of the first violated necessary condition, or None."""
    c, k, lam, mu = dec.c, dec.k, dec.lam, dec.mu
    if squares_defect(dec) != 0:
        return "squares"
    if k == 0:
        return None
    if k >= 2 and lam[0] > k:
        return "lambda_bound"
    w = smallest_window(dec)
    if w is None or not 0 <= w < mu[0]:
        return "window"
    if c == 3:
        l1, l2 = lam[0], dec.lam_part(2)
        if l1 + l2 > k + 1:
            return "lambda1_plus_lambda2"
        if mu[0] + l1 + l2 <= k + 1:
            return "mu1_plus_lambda1_plus_lambda2"
        if l1 + mu[0] > k + 1:
            return "lambda1_plus_mu1"
        if dec.t > 1 and dec.b > k + 2:
            return "generator_bound"
    return None


def is_decoration_descent(dec: Decoration) -> Verdict:
    path: list[LinkResult] = []
    cur = dec
    while True:
        if is_terminal(cur):
            return Verdict(Status.YES, "reached_ci" if cur.k else "reached_unit", tuple(path), "descent")
        if cur.k <= 1:
            return Verdict(Status.NO, "bad_base_case", tuple(path), "descent")
        w = smallest_window(cur)
        if w is None:
            return Verdict(Status.NO, "too_few_parts", tuple(path), "descent")
        if not 0 <= w < cur.mu[0]:
            return Verdict(Status.NO, "window", tuple(path), "descent")
        try:
            first, second = tight_double_link(cur)
        except NegativePartProduced:
            return Verdict(Status.NO, "negative_part", tuple(path), "descent")
        path += [first, second]
        cur = second.target


def is_decoration_smallest_chain(dec: Decoration, max_steps: int = DEFAULT_MAX_STEPS) -> Verdict:
    path: list[LinkResult] = []
    seen = {dec}
    cur = dec
    for _ in range(max_steps):
        if is_terminal(cur):
            return Verdict(Status.YES, "reached_ci" if cur.k else "reached_unit", tuple(path), "smallest_chain")
        try:
            step = smallest_minimal_link(cur)
        except (NegativePartProduced, TooFewParts) as exc:
            return Verdict(Status.NO, exc.code, tuple(path), "smallest_chain")
        path.append(step)
        cur = step.target
        if cur in seen:
            return Verdict(Status.NO, "cycle", tuple(path), "smallest_chain")
        seen.add(cur)
    if is_terminal(cur):
        return Verdict(Status.YES, "reached_ci" if cur.k else "reached_unit", tuple(path), "smallest_chain")
    return Verdict(Status.UNKNOWN, "max_steps", tuple(path), "smallest_chain")


def is_decoration(dec: Decoration, max_steps: int = 200, oracle_k: int = 6) -> Verdict:
    """Filters, then descent, cross-checked against the smallest chain.

    When the two procedures disagree, the Weyl oracle settles the question for
    small ``k`` in codimension 3.
    """
    reason = necessary_filters(dec)
    if reason is not None:
        return Verdict(Status.NO, reason, (), "filters")
    descent = is_decoration_descent(dec)
    chain = is_decoration_smallest_chain(dec, max_steps)
    if chain.status is Status.UNKNOWN or chain.status == descent.status:
        return descent
    if dec.c == 3 and dec.k <= oracle_k:
        from .weyl import membership

        ok = membership(dec)
        return Verdict(Status.YES if ok else Status.NO, "oracle", descent.certificate, "oracle")
    return Verdict(Status.UNKNOWN, "procedures_disagree", (), "dispatcher")
