from hypothesis import strategies as st

from trofn import TrOFN

coords = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def quadruples(draw, direction=None):
    """Sorted quadruple, reversed when the direction is "down"."""
    q = sorted(draw(st.lists(coords, min_size=4, max_size=4)))
    if direction is None:
        direction = draw(st.sampled_from(["up", "down"]))
    return tuple(q) if direction == "up" else tuple(reversed(q))


def trofns(direction=None):
    return quadruples(direction).map(lambda q: TrOFN(*q))


def crisps():
    return coords.map(TrOFN.crisp)


def any_trofns():
    # Plenty of crisp and degenerate-edge values on top of generic ones.
    degenerate = st.builds(_edge, coords, coords, st.sampled_from(["up", "down"]))
    return st.one_of(trofns(), trofns(), crisps(), degenerate)


def _edge(u, v, direction):
    lo, hi = sorted((u, v))
    q = (lo, lo, hi, hi)
    return TrOFN(*(q if direction == "up" else q[::-1]))


def raw_quadruples():
    return st.tuples(coords, coords, coords, coords)


def uniform_operand_lists(min_size=1, max_size=5):
    return st.sampled_from(["up", "down"]).flatmap(
        lambda d: st.lists(st.one_of(trofns(d), crisps()), min_size=min_size, max_size=max_size)
    )

