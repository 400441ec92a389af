"""Randomized properties over feasible words and arc sets."""

from itertools import combinations

from hypothesis import given, settings, strategies as st

from motzkin_ncl import (
    LinkedPartition,
    blocks_of,
    double,
    parse_partition,
    partition_to_path,
    path_to_partition,
    project,
    render_partition,
    validate_large,
    validate_ncl,
    validate_ncl_blockwise,
)

DELTA = {"U": 1, "a": 0, "b": 0, "c": 0, "x": -1, "y": -1}


@st.composite
def motzkin_words(draw, max_len=12, large=True):
    """A feasible colored Motzkin word built step by step."""
    length = draw(st.integers(0, max_len))
    chars = []
    h = 0
    for i in range(length):
        remaining = length - i
        options = []
        if h + 1 <= remaining - 1:
            options.append("U")
        if h <= remaining - 1:
            options.extend("ab")
            if h > 0 or not large:
                options.append("c")
        if h >= 1:
            options.extend("xy")
        chars.append(draw(st.sampled_from(options)))
        h += DELTA[chars[-1]]
    return "".join(chars)


@st.composite
def arc_sets(draw, max_n=7):
    """Any arc subset on [n], valid or not."""
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return LinkedPartition(n, chosen)


class TestBijectionProperties:
    @given(motzkin_words())
    def test_round_trip_from_paths(self, word):
        path = validate_large(word)
        assert partition_to_path(path_to_partition(path)) == path

    @given(motzkin_words())
    def test_image_is_a_valid_partition(self, word):
        p = path_to_partition(word)
        assert p.n == len(word) + 1
        validate_ncl(p)
        validate_ncl_blockwise(p)

    @given(motzkin_words())
    def test_partition_text_round_trips(self, word):
        p = path_to_partition(word)
        assert parse_partition(render_partition(p)) == p

    @given(motzkin_words())
    def test_blocks_cover_every_vertex(self, word):
        p = path_to_partition(word)
        covered = set()
        for block in blocks_of(p):
            covered.update(block)
        assert covered == set(range(1, p.n + 1))


class TestDoublingProperties:
    @given(motzkin_words(large=False), st.integers(0, 1))
    def test_project_inverts_double(self, word, bit):
        doubled = double(word, bit)
        q, b = project(doubled)
        assert (q.text, b) == (word, bit)

    @given(motzkin_words(max_len=13).filter(bool))
    def test_double_inverts_project(self, word):
        assert double(*project(word)).text == word

    @given(motzkin_words(large=False), st.integers(0, 1))
    def test_doubling_adds_one_step(self, word, bit):
        assert len(double(word, bit)) == len(word) + 1


class TestValidatorAgreement:
    @settings(max_examples=300)
    @given(arc_sets())
    def test_arc_and_block_validators_agree(self, p):
        assert _accepts(validate_ncl, p) == _accepts(validate_ncl_blockwise, p)


def _accepts(validator, p):
    try:
        validator(p)
    except ValueError:
        return False
    return True
