"""Chains of certified adjacent swaps.

A plan drives an arrangement from its current left-to-right order to a
target order by repeatedly swapping the leftmost adjacent pair that is
inverted relative to the target, certifying every step.  The step count
is the inversion count between the two orders, and the scheduling rule
makes plans reproducible byte for byte.  A REFUTED step does not stop a
plan (the arrangement-level swap and the field diff stay well defined)
unless strict mode is on; a step that cannot produce a swapped matrix
always stops it, with the partial plan attached.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrange import apexes, x_order
from .mfcore import (MatchingField, WeightMatrix, block_diagonal_weights,
                     diagonal, induce)
from .mutate import (MutationCertificate, certificate_to_text, certify,
                     parse_certificate)


@dataclass(frozen=True)
class PlanStep:
    i: int
    j: int
    certificate: MutationCertificate
    matrix_after: WeightMatrix


@dataclass
class Plan:
    initial: WeightMatrix
    target: tuple
    steps: list
    final_field: MatchingField

    def summary(self) -> dict:
        counts = {"noop": 0, "shear": 0, "mutation": 0,
                  "verified": 0, "refuted": 0, "inapplicable": 0}
        for s in self.steps:
            kind = (s.certificate.kind or "").lower()
            if kind in counts:
                counts[kind] += 1
            counts[s.certificate.verdict.lower()] += 1
        return counts


class PlanError(RuntimeError):
    """A step could not continue; carries the partial plan."""

    def __init__(self, message: str, partial: Plan):
        self.partial = partial
        super().__init__(message)


class EndpointMismatch(RuntimeError):
    """The plan finished but the final field is not the expected one."""


def _leftmost_inversion(order, target):
    position = {line: t for t, line in enumerate(target)}
    for t in range(len(order) - 1):
        if position[order[t]] > position[order[t + 1]]:
            return t
    return None


def plan_to_order(M: WeightMatrix, target, strict: bool = False) -> Plan:
    """Swap the leftmost inverted adjacent pair until the x order matches
    the target permutation."""
    target = tuple(target)
    if sorted(target) != list(range(1, M.n + 1)):
        raise ValueError("target must be a permutation of 1..%d" % M.n)
    steps = []
    current = M

    def partial():
        return Plan(initial=M, target=target, steps=steps,
                    final_field=induce(current))

    while True:
        order = x_order(apexes(current))
        t = _leftmost_inversion(order, target)
        if t is None:
            break
        i, j = order[t], order[t + 1]
        cert = certify(current, i, j)
        if cert.matrix_after is None:
            raise PlanError("step %d (%d, %d): %s"
                            % (len(steps) + 1, i, j, cert.reason), partial())
        steps.append(PlanStep(i=i, j=j, certificate=cert,
                              matrix_after=cert.matrix_after))
        current = cert.matrix_after
        if strict and cert.verdict == "REFUTED":
            raise PlanError("step %d (%d, %d) refuted" % (len(steps), i, j),
                            partial())
    return partial()


def plan_block_to_diagonal(n: int, ell: int, strict: bool = False) -> Plan:
    """Plan from the block-diagonal weight matrix to the diagonal order
    (n, n-1, .., 1), and check the endpoint field exactly."""
    M = block_diagonal_weights(n, ell)
    target = tuple(range(n, 0, -1))
    plan = plan_to_order(M, target, strict=strict)
    if plan.final_field != diagonal(n):
        raise EndpointMismatch("final field differs from the diagonal field")
    return plan


# ---------------------------------------------------------------------------
# plan text format

def plan_to_text(plan: Plan, source: str = "matrix") -> str:
    from .mfcore import weight_matrix_to_text
    out = ["PLAN",
           "n: %d" % plan.initial.n,
           "source: %s" % source,
           "matrix:"]
    out.extend("  " + ln for ln in weight_matrix_to_text(plan.initial).splitlines())
    out.append("target: %s" % " ".join(str(x) for x in plan.target))
    out.append("steps: %d" % len(plan.steps))
    for idx, step in enumerate(plan.steps, start=1):
        out.append("STEP %d" % idx)
        out.append(certificate_to_text(step.certificate).rstrip("\n"))
    counts = plan.summary()
    out.append("SUMMARY")
    for key in ("noop", "shear", "mutation", "verified", "refuted", "inapplicable"):
        out.append("%s: %d" % (key, counts[key]))
    out.append("END-PLAN")
    return "\n".join(out) + "\n"


@dataclass
class ParsedPlan:
    n: int
    source: str
    matrix: WeightMatrix
    target: tuple
    certificates: list
    summary: dict


def parse_plan(text: str) -> ParsedPlan:
    """Inverse of plan_to_text (on its exact output format)."""
    from fractions import Fraction

    from .mfcore import WeightMatrix as WM
    lines = text.splitlines()
    pos = 0

    def take():
        nonlocal pos
        ln = lines[pos]
        pos += 1
        return ln

    def value(key):
        ln = take()
        if not ln.startswith(key + ":"):
            raise ValueError("expected %r, got %r" % (key, ln))
        return ln[len(key) + 1:].strip()

    if take() != "PLAN":
        raise ValueError("not a plan file")
    n = int(value("n"))
    source = value("source")
    value("matrix")
    rows = [take().strip() for _ in range(4)]
    matrix = WM.from_rows([[Fraction(t) for t in row.split()] for row in rows[1:]])
    target = tuple(int(t) for t in value("target").split())
    count = int(value("steps"))
    certificates = []
    for k in range(1, count + 1):
        if take() != "STEP %d" % k:
            raise ValueError("missing STEP %d" % k)
        start = pos
        while lines[pos] != "END":
            pos += 1
        pos += 1
        certificates.append(parse_certificate("\n".join(lines[start:pos]) + "\n"))
    if take() != "SUMMARY":
        raise ValueError("missing SUMMARY")
    summary = {}
    for key in ("noop", "shear", "mutation", "verified", "refuted", "inapplicable"):
        summary[key] = int(value(key))
    if take() != "END-PLAN":
        raise ValueError("missing END-PLAN")
    return ParsedPlan(n=n, source=source, matrix=matrix, target=target,
                      certificates=certificates, summary=summary)


def parsed_plan_to_text(p: ParsedPlan) -> str:
    from .mfcore import weight_matrix_to_text
    out = ["PLAN", "n: %d" % p.n, "source: %s" % p.source, "matrix:"]
    out.extend("  " + ln for ln in weight_matrix_to_text(p.matrix).splitlines())
    out.append("target: %s" % " ".join(str(x) for x in p.target))
    out.append("steps: %d" % len(p.certificates))
    for idx, cert in enumerate(p.certificates, start=1):
        out.append("STEP %d" % idx)
        out.append(certificate_to_text(cert).rstrip("\n"))
    out.append("SUMMARY")
    for key in ("noop", "shear", "mutation", "verified", "refuted", "inapplicable"):
        out.append("%s: %d" % (key, p.summary[key]))
    out.append("END-PLAN")
    return "\n".join(out) + "\n"
