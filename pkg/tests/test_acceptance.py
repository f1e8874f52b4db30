"""The acceptance gate: one test per criterion, exact tolerances.

Criterion 4 is asserted exactly as stated and marked as an expected
failure: its iso-class clause contradicts the split witness of criterion 5
(S^2(P -> 1) can only split when S^2(P) is purely even).  The Hilbert
clause of criterion 4, and the paper-true iso-classes, are pinned by
separate green tests.
"""

import pytest

from verlinde import acceptance
from verlinde import gradedalg as ga
from verlinde.backends import get_backend
from verlinde.ver4plus import indecomposable_p


def _run(func):
    ok, detail = func()
    assert ok, detail


def test_criterion_1_fusion_tables():
    _run(acceptance.criterion_fusion)


def test_criterion_2_green_ring_oracle():
    _run(acceptance.criterion_green)


def test_criterion_3_symmetric_power_vanishing():
    _run(acceptance.criterion_sym_vanishing)


@pytest.mark.xfail(strict=True,
                   reason="spec defect: S^{2k}(P) is purely even (iso (2,0)),"
                          " forced by the criterion-5 split witness; the"
                          " stated per-degree iso-class (0,1) cannot hold")
def test_criterion_4_v4_symmetric_algebra_as_stated():
    _run(acceptance.criterion_v4_symmetric_algebra)


def test_criterion_4_hilbert_clause_and_true_iso_classes():
    be = get_backend("ver4plus", 2)
    alg = ga.free_symmetric(be, indecomposable_p(), 8)
    assert ga.dims(alg) == [1] + [2] * 8
    classes = ga.hilbert(alg)
    assert classes[0] == (1, 0)
    for d in range(1, 9):
        assert classes[d] == ((0, 1) if d % 2 else (2, 0))


def test_criterion_5_mn2_gr_witnesses():
    _run(acceptance.criterion_witnesses)


def test_criterion_6_homogeneous_space():
    _run(acceptance.criterion_homog_space)


def test_criterion_7_verification_suite():
    _run(acceptance.criterion_verification_suite)


def test_criterion_8_frobenius_twist_values():
    _run(acceptance.criterion_frobenius_twist)


def test_criterion_9_twist_of_product():
    _run(acceptance.criterion_twist_of_product)


def test_criterion_10_property_suite():
    _run(acceptance.criterion_property_suite)


def test_acceptance_runner_covers_all_criteria():
    results = acceptance.run_acceptance()
    assert [r.cid for r in results] == list(range(1, 11))
    failing = [r.cid for r in results if not r.ok]
    assert failing == [4]                       # the documented defect only
    table = acceptance.format_table(results)
    assert "9/10" in table
