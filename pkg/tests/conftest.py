import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from uhg.field import GF, QQ
from uhg.projective import Point

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CORPUS = os.path.join(ROOT, "corpus")

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")

FIELDS = [QQ, GF(5), GF(7), GF(11), GF(13), GF(101)]
FIELD_IDS = [f.name for f in FIELDS]

small = st.integers(-12, 12)
triples = st.tuples(small, small, small).filter(lambda v: v != (0, 0, 0))
fields = st.sampled_from(FIELDS)


def _nonzero_mod(ctx, v):
    return any(not ctx.is_zero_int(c) for c in v)


@st.composite
def points(draw, ctx=None, allow_null=True):
    ctx = ctx or draw(fields)
    v = draw(triples.filter(lambda v: _nonzero_mod(ctx, v)))
    p = Point._raw(ctx, v)
    if not allow_null:
        from uhg.duality import is_null
        from hypothesis import assume
        assume(not is_null(p))
    return p


@st.composite
def lines(draw, ctx=None, allow_null=True):
    return draw(points(ctx, allow_null)).dual()


@st.composite
def point_pairs(draw, allow_null=True):
    ctx = draw(fields)
    return draw(points(ctx, allow_null)), draw(points(ctx, allow_null))


def form(u, v):
    """Independent oracle: <u,v> = u0 v0 + u1 v1 - u2 v2 on raw integers."""
    return u[0] * v[0] + u[1] * v[1] - u[2] * v[2]


@pytest.fixture
def corpus_files():
    return sorted(os.path.join(CORPUS, f) for f in os.listdir(CORPUS) if f.endswith(".uhg"))
