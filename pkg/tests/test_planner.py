"""Plans: chained certified swaps from one x order to another."""

import pytest

from conftest import pair_matrix
from tropmf import (MatchingField, PlanError, apexes, block_diagonal,
                    block_diagonal_weights, diagonal, induce,
                    plan_block_to_diagonal, plan_to_order, x_order)
from tropmf.planner import parse_plan, parsed_plan_to_text, plan_to_text


def replay(initial_field, steps):
    assignment = dict(initial_field.assignment)
    for step in steps:
        for T, before, after in step.certificate.diff:
            assert assignment[T] == before
            assignment[T] = after
    return MatchingField(initial_field.n, assignment)


def test_plan_already_in_order(diag6):
    plan = plan_to_order(diag6, (6, 5, 4, 3, 2, 1))
    assert plan.steps == []
    assert plan.final_field == diagonal(6)


def test_plan_single_transposition():
    M = block_diagonal_weights(6, 2)
    assert x_order(apexes(M)) == (2, 1, 6, 5, 4, 3)
    plan = plan_to_order(M, (2, 6, 1, 5, 4, 3))
    assert len(plan.steps) == 1
    assert (plan.steps[0].i, plan.steps[0].j) == (1, 6)


def test_plan_rejects_non_permutation(diag6):
    with pytest.raises(ValueError):
        plan_to_order(diag6, (1, 1, 2, 3, 4, 5))


def test_block2_to_diagonal_full_run():
    plan = plan_block_to_diagonal(6, 2)
    assert len(plan.steps) == 8
    assert [(s.i, s.j) for s in plan.steps] == [
        (1, 6), (2, 6), (1, 5), (2, 5), (1, 4), (2, 4), (1, 3), (2, 3)]
    kinds = [s.certificate.kind for s in plan.steps]
    assert kinds == ["NOOP", "NOOP", "MUTATION", "SHEAR", "MUTATION",
                     "MUTATION", "SHEAR", "MUTATION"]
    assert all(s.certificate.verdict == "VERIFIED" for s in plan.steps)
    assert plan.final_field == diagonal(6)
    assert plan.summary() == {"noop": 2, "shear": 2, "mutation": 4,
                              "verified": 8, "refuted": 0, "inapplicable": 0}


def test_block2_replay_identity():
    plan = plan_block_to_diagonal(6, 2)
    start = induce(block_diagonal_weights(6, 2))
    assert start == block_diagonal(6, 2)
    assert replay(start, plan.steps) == plan.final_field == diagonal(6)


def test_block1_to_diagonal_step_count():
    # The construction puts the x order at (1, 6, 5, 4, 3, 2), which has
    # five inversions against (6, 5, 4, 3, 2, 1).
    M = block_diagonal_weights(6, 1)
    assert x_order(apexes(M)) == (1, 6, 5, 4, 3, 2)
    plan = plan_block_to_diagonal(6, 1)
    assert len(plan.steps) == 5
    assert plan.final_field == diagonal(6)


def test_block0_and_blockn_are_trivial():
    assert plan_block_to_diagonal(6, 0).steps == []
    assert plan_block_to_diagonal(6, 6).steps == []


def test_step_count_equals_inversion_count():
    for n, ell in [(4, 1), (5, 2), (6, 3), (7, 2)]:
        M = block_diagonal_weights(n, ell)
        order = x_order(apexes(M))
        target = tuple(range(n, 0, -1))
        pos = {line: t for t, line in enumerate(target)}
        inversions = sum(1 for a in range(n) for b in range(a + 1, n)
                         if pos[order[a]] > pos[order[b]])
        plan = plan_block_to_diagonal(n, ell)
        assert len(plan.steps) == inversions


def test_plan_chains_matrices():
    plan = plan_block_to_diagonal(6, 2)
    current = plan.initial
    for step in plan.steps:
        assert step.certificate.digest  # recorded per step
        assert step.matrix_after is not None
        current = step.matrix_after
    assert induce(current) == plan.final_field


def test_plan_error_carries_partial_plan():
    # Third line in blue with the (j, i, k) pattern: the very first swap
    # is unrealizable.
    from fractions import Fraction
    B = pair_matrix([(0, 0), (1, 2), (3, Fraction(1, 2))])
    with pytest.raises(PlanError) as err:
        plan_to_order(B, (2, 1, 3))
    assert err.value.partial.steps == []


def test_strict_mode_aborts_on_refuted_step():
    # Arrangement whose (1, 2) swap is refuted; the order transposition
    # itself is fine, so the default mode completes and flags it.
    H = pair_matrix([(0, 0), (1, 2), (-1, -5), (2, 6), (-2, 1)])
    assert x_order(apexes(H)) == (5, 3, 1, 2, 4)
    target = (5, 3, 2, 1, 4)
    plan = plan_to_order(H, target)
    assert len(plan.steps) == 1
    assert plan.steps[0].certificate.verdict == "REFUTED"
    assert plan.summary()["refuted"] == 1
    with pytest.raises(PlanError) as err:
        plan_to_order(H, target, strict=True)
    assert len(err.value.partial.steps) == 1


def test_plan_text_roundtrip_and_stability():
    plan = plan_block_to_diagonal(6, 2)
    text = plan_to_text(plan, source="block-diagonal 6 2")
    assert parsed_plan_to_text(parse_plan(text)) == text
    again = plan_to_text(plan_block_to_diagonal(6, 2),
                         source="block-diagonal 6 2")
    assert again == text
    parsed = parse_plan(text)
    assert parsed.summary == {"noop": 2, "shear": 2, "mutation": 4,
                              "verified": 8, "refuted": 0, "inapplicable": 0}
