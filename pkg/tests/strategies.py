"""hypothesis strategies for exact rational test data"""

from fractions import Fraction
from itertools import product

from hypothesis import strategies as st

from coupling.maximal import MarginalFamily
from scenario.behavior import Behavior, ContextDistribution, deterministic_behavior, mix_behaviors
from scenario.scenario import Scenario

MAX_WEIGHT = 6


@st.composite
def weights(draw, size: int, allow_zero: bool = True):
    low = 0 if allow_zero else 1
    values = draw(
        st.lists(
            st.integers(min_value=low, max_value=MAX_WEIGHT), min_size=size, max_size=size
        ).filter(lambda w: sum(w) > 0)
    )
    total = sum(values)
    return [Fraction(v, total) for v in values]


@st.composite
def distributions(draw, outcomes):
    outcomes = tuple(outcomes)
    return dict(zip(outcomes, draw(weights(len(outcomes)))))


@st.composite
def marginal_families(draw, min_members=2, max_members=4, min_outcomes=2, max_outcomes=4):
    members = draw(st.integers(min_value=min_members, max_value=max_members))
    k = draw(st.integers(min_value=min_outcomes, max_value=max_outcomes))
    outcomes = tuple(range(k))
    return MarginalFamily.of(
        outcomes,
        {f"x^{j + 1}": draw(distributions(outcomes)) for j in range(members)},
    )


@st.composite
def behaviors(draw, s: Scenario):
    """Independent random table per context; usually disturbing."""
    tables = []
    for context in s.contexts:
        tuples = list(product(s.outcomes, repeat=len(context)))
        table = dict(zip(tuples, draw(weights(len(tuples)))))
        tables.append(ContextDistribution(context=context, table=table))
    return Behavior(scenario=s, distributions=tuple(tables))


@st.composite
def noncontextual_behaviors(draw, s: Scenario, max_terms: int = 3):
    """Convex mixture of deterministic behaviors."""
    terms = draw(st.integers(min_value=1, max_value=max_terms))
    parts = [
        deterministic_behavior(
            s, {m: draw(st.sampled_from(s.outcomes)) for m in s.measurements}
        )
        for _ in range(terms)
    ]
    return mix_behaviors(draw(weights(terms, allow_zero=False)), parts)
