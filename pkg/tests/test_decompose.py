"""Path factorizations and partition decompositions used by the bijection."""

import pytest

from motzkin_ncl import (
    Arc,
    DecomposeError,
    LargeMotzkinPath,
    LinkedPartition,
    Step,
    arc_reachable,
    concat_components,
    elevate,
    factor_components,
    outer_decompose,
    parse_partition,
    restrict_partition,
    split_axis_l3,
    strip_elevation,
    validate_large,
)
from motzkin_ncl.decompose import AxisLevel, Elevated


class TestFactorComponents:
    def test_axis_levels_and_one_elevated(self):
        assert [c.word for c in factor_components("abUx")] == ["a", "b", "Ux"]

    def test_worked_example_splits_in_two(self):
        first, second = factor_components("UbxUbUxcUycy")
        assert isinstance(first, Elevated)
        assert (first.inner.text, first.down) == ("b", Step.DOWN1)
        assert (second.inner.text, second.down) == ("bUxcUyc", Step.DOWN2)

    def test_empty_path_has_no_components(self):
        assert factor_components("") == ()

    def test_inner_may_touch_its_own_baseline(self):
        # the l3 steps sit at height 1, the component's own baseline
        (only,) = factor_components("UcUxcy")
        assert only.word == "UcUxcy" and only.inner.text == "cUxc"

    def test_concat_inverts_factor(self):
        for text in ("", "a", "UxbUcy", "UbxUbUxcUycy"):
            parts = factor_components(text)
            assert concat_components(parts).text == text

    def test_rejects_non_large_words(self):
        with pytest.raises(ValueError):
            factor_components("c")


class TestElevate:
    def test_wraps_inner_path(self):
        assert elevate("", Step.DOWN2).word == "Uy"
        assert elevate("bUxcUyc", Step.DOWN2).word == "UbUxcUycy"

    def test_strip_inverts_elevate(self):
        inner, down = strip_elevation("Ucx")
        assert inner.text == "c" and down is Step.DOWN1

    def test_strip_requires_one_component(self):
        with pytest.raises(DecomposeError):
            strip_elevation("ab")
        with pytest.raises(DecomposeError):
            strip_elevation("UxUy")

    def test_strip_rejects_axis_level_component(self):
        (component,) = factor_components("a")
        with pytest.raises(DecomposeError):
            strip_elevation(component)

    def test_down_color_must_be_a_down_step(self):
        with pytest.raises(ValueError):
            elevate("", Step.LEVEL1)


class TestAxisSplit:
    def test_splits_at_every_baseline_l3(self):
        split = split_axis_l3("bUxcUyc")
        assert split.k == 3
        assert split.lengths == (3, 2, 0)
        assert [s.text for s in split.segments] == ["bUx", "Uy", ""]

    def test_no_l3_gives_one_segment(self):
        split = split_axis_l3("")
        assert split.k == 1 and split.segments[0].text == ""

    def test_lone_l3_gives_two_empty_segments(self):
        split = split_axis_l3("c")
        assert [s.text for s in split.segments] == ["", ""]

    def test_elevated_l3_does_not_split(self):
        split = split_axis_l3("Ucx")
        assert split.k == 1 and split.segments[0].text == "Ucx"

    def test_segments_are_large(self):
        for segment in split_axis_l3("UcxcaUcy").segments:
            assert isinstance(segment, LargeMotzkinPath)
            validate_large(segment)


class TestRestrict:
    def test_keeps_inside_arcs_and_relabels(self):
        p = parse_partition("{1,3,4}{2}{4,13}{5,6,7}{8,10,11}{9}{11,12}")
        q = restrict_partition(p, 5, 12)
        assert q.n == 8
        assert q.arcs == frozenset(
            {Arc(1, 2), Arc(1, 3), Arc(4, 6), Arc(4, 7), Arc(7, 8)}
        )

    def test_single_vertex_window(self):
        p = parse_partition("{1,2}")
        q = restrict_partition(p, 2, 2)
        assert q.n == 1 and q.arcs == frozenset()


class TestOuterDecompose:
    def test_arc_free_partition_is_one_component(self):
        d = outer_decompose(parse_partition("{1}{2}"))
        assert d.split_points == (1, 2)
        assert len(d.components) == 1
        assert d.components[0].n == 2 and not d.components[0].arcs

    def test_worked_example_outer_points(self):
        p = parse_partition("{1,3,4}{2}{4,13}{5,6,7}{8,10,11}{9}{11,12}")
        d = outer_decompose(p)
        assert d.split_points == (1, 4, 13)
        first, second = d.components
        assert first.n == 4
        assert first.arcs == frozenset({Arc(1, 3), Arc(1, 4)})
        assert second.n == 10 and Arc(1, 10) in second.arcs

    def test_axis_chain_cuts_at_every_link(self):
        d = outer_decompose(parse_partition("{1,2}{2,3}"))
        assert d.split_points == (1, 2, 3)
        first, second = d.components
        assert first.arcs == second.arcs == frozenset({Arc(1, 2)})

    def test_covered_chain_stays_in_one_component(self):
        # the outer arc (1,4) shields the chain 1-2-3 from being cut
        d = outer_decompose(parse_partition("{1,2,4}{2,3}"))
        assert d.split_points == (1, 4)
        (only,) = d.components
        assert only.n == 4
        assert only.arcs == frozenset({Arc(1, 2), Arc(1, 4), Arc(2, 3)})


class TestArcReachable:
    def test_reflexive(self):
        p = parse_partition("{1}{2}")
        assert arc_reachable(p, 1, 1)

    def test_follows_shared_vertices(self):
        p = parse_partition("{1,2}{2,3}")
        assert arc_reachable(p, 1, 3)

    def test_nesting_alone_does_not_connect(self):
        p = parse_partition("{1,4}{2,3}")
        assert not arc_reachable(p, 1, 3)
        assert arc_reachable(p, 1, 4)

    def test_undirected(self):
        p = parse_partition("{1,2}{2,3}")
        assert arc_reachable(p, 3, 1)
