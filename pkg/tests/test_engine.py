from fractions import Fraction as F

import pytest

import oracle
from levintype import corpus, engine
from levintype import schedules as sch
from levintype.estimates import d_estimator, explicit_omega, t_estimator, u_estimator, v_estimator
from levintype.numeric import SingularError
from levintype.schedules import ScheduleError
from levintype.sequence import Sequence

LN2 = Sequence(tuple(oracle.ln2_sums(10)))
SCHEDULES = [sch.constant(1), sch.factorial_shift(1), sch.reverse_shift(3), sch.interpolating(2, 1), sch.square(),
             sch.explicit([F(1, 2), 3, 7, F(5, 4), 2, 9, 4, 1])]


# -- explicit formula ----------------------------------------------------------


def test_order_zero_returns_the_element():
    s = Sequence((F(5, 3), F(2)))
    assert engine.g_explicit(0, 0, sch.square(), s, [F(9), F(1)]) == F(5, 3)


def test_perfect_remainder_estimate_gives_the_limit():
    omega = [F(1, 2 ** n) for n in range(3)]
    s = Sequence(tuple(1 + 2 * w for w in omega))
    for q in SCHEDULES:
        assert engine.g_explicit(1, 0, q, s, omega) == 1


def test_factorial_schedule_on_ln2_hand_value():
    num, den = engine.g_explicit_parts(1, 0, sch.factorial_shift(1), LN2, lambda n: LN2.a(n + 1))
    assert (num, den) == (F(-7, 2), F(-5))
    assert engine.g_explicit(1, 0, sch.factorial_shift(1), LN2, lambda n: LN2.a(n + 1)) == F(7, 10)


def test_explicit_matches_unnormalized_oracle():
    omega = lambda n: LN2.a(n + 1)
    for q in SCHEDULES:
        for k in range(6):
            for n in range(3):
                assert engine.g_explicit(k, n, q, LN2, omega) == oracle.g_value(q.q, LN2.s, omega, k, n)


def test_explicit_reports_zero_omega_and_singular_denominator():
    s = Sequence((F(1), F(2), F(3)))
    with pytest.raises(ArithmeticError):
        engine.g_explicit(1, 0, sch.constant(1), s, [F(1), F(0)])
    with pytest.raises(SingularError):
        engine.g_explicit(1, 0, sch.constant(1), s, [F(1), F(1)])


# -- recursion -------------------------------------------------------------------


def test_constant_input_has_vanishing_first_differences():
    rows = engine.g_recursive_table(sch.constant(1), [F(4)] * 6, 3)
    assert rows[1] == [0] * 5


@pytest.mark.parametrize("q", SCHEDULES, ids=lambda q: q.kind)
def test_recursive_table_matches_normalized_oracle(q):
    u = [F(n * n + 1, n + 3) for n in range(9)]
    rows = engine.g_recursive_table(q, u, 8)
    for k, row in enumerate(rows):
        for n, value in enumerate(row):
            assert value == oracle.normalized_table_entry(q.q, lambda x: u[x], k, n)


def test_levin_schedule_on_linear_input():
    u = [F(n) for n in range(6)]
    rows = engine.g_recursive_table(sch.constant(1), u, 5)
    assert rows[1] == [1] * 5
    assert rows[2] == [oracle.normalized_table_entry(lambda m: 1, lambda x: F(x), 2, n) for n in range(4)]


def test_order_one_is_schedule_independent():
    u = [F(3), F(-1, 2), F(7, 5), F(2)]
    first = [engine.g_recursive_table(q, u, 1)[1] for q in SCHEDULES]
    assert all(row == first[0] for row in first)


def test_recursion_rejects_zero_normalization_factor():
    bad = sch.explicit([-3, -3, -3])
    with pytest.raises(ScheduleError):
        engine.g_recursive_table(bad, [F(1)] * 6, 4)


# -- transform -------------------------------------------------------------------


def test_geometric_partial_sums_with_t_estimator():
    s = Sequence.from_terms([F(1, 2 ** n) for n in range(4)])
    table = engine.transform(sch.constant(1), s, t_estimator(), 1)
    assert table.value(1, 0) == 2


def test_u_estimator_on_ln2_hand_value():
    assert engine.levin_L(1, LN2, u_estimator(), 1).value(1, 0) == F(3, 4)


def test_weniger_delta_on_ln2_hand_value():
    assert engine.weniger_S(1, LN2, d_estimator(), 1).value(1, 0) == F(7, 10)


def test_order_cap_keeps_the_full_window():
    for est in (u_estimator(), t_estimator(), d_estimator(), v_estimator()):
        full = engine.transform(sch.constant(1), LN2, est)
        capped = engine.transform(sch.constant(1), LN2, est, 2)
        assert capped.values == full.values[:3]


def test_row_zero_is_the_input():
    for est in (u_estimator(), t_estimator(), d_estimator(), v_estimator()):
        table = engine.transform(sch.square(), LN2, est)
        assert table.row(0) == list(LN2.values[: len(table.row(0))])


def test_window_convention():
    s = Sequence.from_terms([F(1, n + 1) ** 2 for n in range(8)])
    assert engine.transform(sch.constant(1), s, u_estimator()).k_max == 7
    assert engine.transform(sch.constant(1), s, d_estimator()).k_max == 6
    assert len(engine.transform(sch.constant(1), s, v_estimator()).row(0)) == 7
    with pytest.raises(ValueError):
        engine.transform(sch.constant(1), Sequence((F(1),)), d_estimator())


def test_transform_matches_explicit_formula_for_every_estimator():
    for est in (u_estimator(), d_estimator(), v_estimator(), t_estimator()):
        for q in SCHEDULES[:5]:
            table = engine.transform(q, LN2, est)

            def omega(n):
                return est.omega(LN2, n, q)
            for k, n, value, ok in table:
                assert ok
                assert value == engine.g_explicit(k, n, q, LN2, omega), (est.kind, q.kind, k, n)


def test_model_sequence_exactness():
    omega = lambda n: F(1, (n + 1) * (n + 2))
    for k in range(1, 5):
        spec = corpus.g_model(sch.square(), range(1, k + 1), F(-4, 3), omega)
        s = corpus.generate(spec, k + 5)
        table = engine.transform(sch.square(), s, explicit_omega(omega), k)
        assert table.row(k) == [F(-4, 3)] * len(table.row(k))


def test_invalid_entries_are_flagged_not_fatal():
    # a constant sequence makes the d estimator blow up, so use explicit omegas
    # chosen so that one order-1 denominator vanishes
    s = Sequence((F(1), F(2), F(3), F(5)))
    table = engine.transform(sch.constant(1), s, explicit_omega([F(1), F(1), F(2), F(3)]))
    assert not table.is_valid(1, 0)
    assert table.is_valid(1, 1)
    with pytest.raises(SingularError):
        table.value(1, 0)
    assert table.column(0)[1] is None


def test_recommended_and_stable_selection():
    s = Sequence((F(3),) * 6)
    table = engine.transform(sch.constant(1), s, explicit_omega([F(1, n + 1) for n in range(6)]))
    assert table.recommended() == (5, 3, 0)
    k, value, err = table.stable()
    assert value == 3 and err == 0


# -- named families and their dedicated recursions --------------------------------


FAMILIES = [
    ("L", lambda s, e, d: engine.levin_L(F(3, 2), s, e, dedicated=d)),
    ("S", lambda s, e, d: engine.weniger_S(1, s, e, dedicated=d)),
    ("M", lambda s, e, d: engine.transform_M(4, s, e, dedicated=d)),
    ("C", lambda s, e, d: engine.transform_C(3, 1, s, e, dedicated=d)),
]


@pytest.mark.parametrize("name, build", FAMILIES, ids=[f[0] for f in FAMILIES])
@pytest.mark.parametrize("est", [u_estimator(), t_estimator(), d_estimator(), v_estimator()], ids="utdv")
def test_dedicated_recursions_match_general_scheme(name, build, est):
    general = build(LN2, est, False)
    dedicated = build(LN2, est, True)
    assert dedicated.values == general.values


def test_interpolating_with_alpha_one_is_factorial():
    for est in (u_estimator(), d_estimator(), v_estimator(), t_estimator()):
        assert engine.transform_C(1, 2, LN2, est).values == engine.weniger_S(2, LN2, est).values


def test_interpolating_with_huge_alpha_approaches_levin():
    s = Sequence.from_terms([1.0 / (n + 1) ** 2 for n in range(12)])
    c = engine.transform_C(1e6, 1, s, u_estimator(), 5)
    lev = engine.levin_L(1, s, u_estimator(), 5)
    for rc, rl in zip(c.values, lev.values):
        for a, b in zip(rc, rl):
            assert abs(a - b) <= 1e-8 * abs(b)


def test_schedule_parameters_are_validated():
    with pytest.raises(ScheduleError):
        engine.levin_L(0, LN2, u_estimator())
    with pytest.raises(ScheduleError):
        engine.transform_M(-1, LN2, u_estimator())
    with pytest.raises(ScheduleError):
        engine.transform_C(0, 1, LN2, u_estimator())


def test_float_and_rational_runs_agree():
    exact = engine.weniger_S(1, LN2, d_estimator(), 8)
    approx = engine.weniger_S(1, LN2.map(float), d_estimator(), 8)
    for ra, rb in zip(exact.values, approx.values):
        for a, b in zip(ra, rb):
            assert abs(float(a) - b) <= 1e-12 * abs(float(a))
