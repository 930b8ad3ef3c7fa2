import random

import pytest

from loopforge import (
    GapAlphabet,
    PreconditionError,
    Snail,
    Word,
    analytic_bounds,
    family_bound_snails,
    find_snails,
    find_windings,
    forced_arc_intersection,
    parse_word,
    snail_pair_lower_bound,
    winding_self_lower_bound,
)
from loopforge.words import NORTH, SOUTH, V


# -- forced arc intersections ----------------------------------------------------


def test_forced_example_fires(alpha2):
    assert forced_arc_intersection((0, 1), (V, 2), alpha2)


def test_forced_rejects_equal_ends(alpha2):
    with pytest.raises(PreconditionError):
        forced_arc_intersection((0, 1), (2, 1), alpha2)
    with pytest.raises(PreconditionError):
        forced_arc_intersection((0, 2), (1, 2), alpha2)


def test_forced_rejects_middle_mismatch(alpha2):
    with pytest.raises(PreconditionError):
        forced_arc_intersection((0, 1, 2), (2, 0, 1), alpha2)


def test_forced_rejects_polarity_flag(alpha2):
    with pytest.raises(PreconditionError):
        forced_arc_intersection((0, 1), (V, 2), alpha2, same_polarity=False)


def test_forced_degenerate_triple_is_false(alpha2):
    # 01 vs 10: the orientation triples repeat points; no claim is made
    assert not forced_arc_intersection((0, 1), (1, 0), alpha2)


# -- windings ---------------------------------------------------------------------


def test_windings_example_basepoint(alpha2):
    word = Word.v_word((2, 0, 1, 0, 2, 1, 2))
    found = find_windings(word, alpha2)
    assert [(w.obstacle, w.depth) for w in found] == [(1, 1), (2, 1)]
    w = found[0]
    assert (w.span.start, w.span.end) == (1, 3)
    assert w.form == "aba"
    # the trailing 212 block borders the basepoint on its right, which is a
    # valid border for the non-basepoint obstacle it circles
    assert (found[1].span.start, found[1].span.end) == (4, 6)


def test_windings_deep_block(alpha2):
    word = Word.v_word((2, 0, 1, 0, 1, 0, 1, 2))
    found = find_windings(word, alpha2)
    assert [(w.obstacle, w.depth) for w in found] == [(1, 2)]


def test_windings_none(alpha2):
    assert find_windings(Word.v_word((2, 0, 1, 2)), alpha2) == []


def test_windings_end_blocks(alpha2):
    # blocks away from the basepoint pair wind even when they touch the ends
    word = Word.v_word((2, 0, 2, 0, 2))
    found = find_windings(word, alpha2)
    assert [(w.obstacle, w.depth) for w in found] == [(0, 2)]


def test_basepoint_end_blocks_are_not_windings(alpha2):
    # a basepoint-adjacent block at a word end is snail material
    word = Word.v_word((0, 1, 0, 2))
    assert find_windings(word, alpha2) == []


def test_x_word_end_blocks_are_not_windings(alpha2):
    # an off-equator based word has no bordering crossing at its ends
    word = Word.x_word((0, 2, 0, 2))
    assert find_windings(word, alpha2) == []
    word = Word.x_word((1, 0, 2, 0, 2, 1))
    assert [(w.obstacle, w.depth) for w in find_windings(word, alpha2)] == [(0, 1)]


def test_winding_lb_values(alpha2):
    assert winding_self_lower_bound(Word.v_word((2, 0, 1, 0, 2)), alpha2) == 1
    # two depth-1 windings around one obstacle: 1 + 1 + 2*min = 4
    assert (
        winding_self_lower_bound(Word.v_word((2, 0, 1, 0, 2, 1, 0, 1, 2)), alpha2) == 4
    )
    assert winding_self_lower_bound(Word.v_word((2, 0, 1, 2)), alpha2) == 0
    # distinct obstacles do not add; the best single obstacle wins
    assert winding_self_lower_bound(Word.v_word((2, 0, 2, 1, 2, 0, 2)), alpha2) == 4


def test_winding_lb_obstacles_do_not_add(alpha2, config):
    """Regression: summing the per-obstacle bounds would claim 8 crossings
    for this word, but a drawing with 6 exists, so the aggregate must take
    the maximum."""
    from loopforge import self_intersection_number

    word = Word.v_word((2, 0, 2, 1, 2, 0, 2, 1, 2))
    lb = winding_self_lower_bound(word, alpha2)
    assert lb == 4
    res = self_intersection_number(word, alpha2, config)
    assert res.exact
    assert res.value == 6
    assert lb <= res.value


def test_winding_lb_rejects_adjacent_repeats(alpha2):
    with pytest.raises(PreconditionError):
        winding_self_lower_bound(Word.v_word((2, 2)), alpha2)


# -- snails -----------------------------------------------------------------------


def test_snail_start_and_end(alpha2):
    word = Word.v_word((0, 1, 0, 1, 0, 2, 1, 0))
    snails = find_snails(word, alpha2, NORTH)
    assert len(snails) == 2
    start, end = snails
    assert (start.depth, start.terminal, start.polarity) == (2, 2, NORTH)
    # reversed traversal: 0 1 2 ...; 8 letters so the last arc is northern
    assert (end.depth, end.terminal, end.polarity) == (0, 2, NORTH)


def test_snail_whole_word_terminal_is_basepoint(alpha2):
    word = Word.v_word((0, 1, 0, 1))
    snails = find_snails(word, alpha2, NORTH)
    assert snails[0].terminal == V
    assert snails[0].depth == 1
    # reversed: 1 0 1 0 -> negative direction
    assert snails[1].depth == -1
    assert snails[1].polarity == NORTH  # even inner length keeps the hemisphere


def test_snail_depth_parsing(alpha2):
    cases = {
        (0, 2): 0,
        (0, 1, 2): 0,
        (0, 1, 0, 2): 1,
        (0, 1, 0, 1, 2): 1,
        (1, 2): 0,
        (1, 0, 2): 0,
        (1, 0, 1, 2): -1,
        (1, 0, 1, 0, 1, 2): -2,
    }
    for inner, depth in cases.items():
        snails = find_snails(Word.v_word(inner), alpha2, NORTH)
        assert snails[0].depth == depth, inner


def test_no_snail_without_basepoint_prefix(alpha2):
    assert find_snails(Word.v_word((2, 0, 1, 2)), alpha2, NORTH) == []


def test_snail_pair_lower_bound():
    span = None
    make = lambda depth, terminal, pol: Snail(depth, terminal, pol, span)
    assert snail_pair_lower_bound(make(2, 2, NORTH), make(-1, 2, NORTH)) == 1
    assert snail_pair_lower_bound(make(5, 2, NORTH), make(2, 2, NORTH)) == 2
    assert snail_pair_lower_bound(make(0, 2, NORTH), make(3, 2, NORTH)) == 0
    # same direction with a basepoint terminal: no claim
    assert snail_pair_lower_bound(make(5, V, NORTH), make(2, 2, NORTH)) == 0
    # opposite direction allows basepoint terminals
    assert snail_pair_lower_bound(make(3, V, NORTH), make(-2, V, NORTH)) == 2
    assert snail_pair_lower_bound(make(1, 2, SOUTH), make(1, 2, SOUTH)) == 0
    with pytest.raises(PreconditionError):
        snail_pair_lower_bound(make(1, 2, NORTH), make(1, 2, SOUTH))


# -- family threshold and closed forms ---------------------------------------------


def test_family_bound_threshold():
    assert family_bound_snails(1) == 36
    assert family_bound_snails(2) == 100
    assert family_bound_snails(5) == 484
    with pytest.raises(PreconditionError):
        family_bound_snails(0)


def test_analytic_bounds_single_puncture():
    report = analytic_bounds(1, 3)
    assert report.f_upper_single_puncture == 7
    assert analytic_bounds(2, 3).f_upper_single_puncture is None


def test_analytic_bounds_double_exponential():
    report = analytic_bounds(2, 1)
    assert report.f_upper_double_exp_exponent == 16
    assert report.f_upper_double_exp_value == str(2**16)


def test_analytic_bounds_sqrt_exponent():
    report = analytic_bounds(2, 8)
    assert report.f_lower_sqrt_exponent_sqrt_arg == 16
    assert str(report.f_lower_sqrt_exponent) == "4/3"
    # non-square argument keeps the root form without a rational exponent
    report = analytic_bounds(2, 3)
    assert report.f_lower_sqrt_exponent_sqrt_arg == 6
    assert report.f_lower_sqrt_exponent is None


def test_analytic_bounds_ratio_case():
    from fractions import Fraction

    report = analytic_bounds(10, 2)
    assert report.f_lower_ratio_power == Fraction(10, 2) ** 1
    assert analytic_bounds(1, 5).f_lower_ratio_power is None


def test_analytic_bounds_coefficients():
    report = analytic_bounds(2, 3)
    assert report.f_from_g_coefficient == 484 * 9
    assert report.f_from_g_argument == 15
    assert report.snail_family_threshold == 4 * 49


def test_analytic_bounds_json_big_numbers():
    report = analytic_bounds(2, 8)
    data = report.to_json()
    assert data["fUpperDoubleExp"]["exponent"] == str(16**4)
    # 2^65536 has ~20k digits; the decimal expansion is still emitted
    assert data["fUpperDoubleExp"]["value"] is None or isinstance(
        data["fUpperDoubleExp"]["value"], str
    )
    assert data["exact"] is True


def test_analytic_bounds_rejects_bad_args():
    with pytest.raises(PreconditionError):
        analytic_bounds(0, 1)
    with pytest.raises(PreconditionError):
        analytic_bounds(1, 0)
