import pytest
from hypothesis import settings, strategies as st

from finred.stream import UpStream, all_streams, canonicalize

# brute-force oracles make per-example time uneven; wall-clock deadlines only add flakes
settings.register_profile("finred", deadline=None)
settings.load_profile("finred")

colors = st.sampled_from("RB")


@st.composite
def raw_streams(draw, max_prefix=7, max_cycle=5):
    prefix = draw(st.text(alphabet="RB", max_size=max_prefix))
    cycle = draw(st.text(alphabet="RB", min_size=1, max_size=max_cycle))
    return UpStream.of(prefix, cycle)


def up_streams(**kw):
    return raw_streams(**kw).map(canonicalize)


@pytest.fixture(scope="session")
def family():
    return all_streams(5, 4)


@pytest.fixture(scope="session")
def small_family():
    return all_streams(3, 3)
