import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pflab import FieldContext, FieldElement, Poly

settings.register_profile(
    "pflab",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("pflab")

CTX2 = FieldContext(2)
CTX3 = FieldContext(3)


@pytest.fixture(scope="session")
def ctx2():
    return CTX2


@pytest.fixture(scope="session")
def ctx3():
    return CTX3


def polys(ctx, max_degree=3, max_terms=4):
    monomial = st.tuples(*([st.integers(0, max_degree)] * ctx.n))
    return st.frozensets(monomial, max_size=max_terms).map(lambda t: Poly(t, ctx.n))


def nonzero_polys(ctx, max_degree=3, max_terms=4):
    return polys(ctx, max_degree, max_terms).filter(bool)


def elements(ctx, max_degree=3, max_terms=4):
    return st.builds(
        lambda num, den: FieldElement(ctx, num, den),
        polys(ctx, max_degree, max_terms),
        nonzero_polys(ctx, max_degree, max_terms),
    )


def nonzero_elements(ctx, max_degree=3, max_terms=4):
    return elements(ctx, max_degree, max_terms).filter(bool)
