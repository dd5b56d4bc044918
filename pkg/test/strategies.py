import numpy as np
from hypothesis import assume, strategies as st

from corpus import load_fixture
from corpus.fixtures import random_discrete_action, random_space_action, random_swap_action
from isg import from_partial_bijections
from xprod import CrossedProduct

FD_FIXTURES = ['fd-sign-discrete', 'fd-natural-I2', 'fd-character-swap']


def seeds():
    return st.integers(min_value=0, max_value=10_000)


@st.composite
def space_actions(draw):
    family = draw(st.sampled_from([random_space_action, random_swap_action,
                                   random_discrete_action]))
    return family(draw(seeds()))


@st.composite
def crossed_products(draw):
    name = draw(st.one_of(st.sampled_from(FD_FIXTURES),
                          seeds().map(lambda seed: f'random-fd-action-{seed}')))
    return CrossedProduct(load_fixture(name, 'fd-action'))


@st.composite
def crossed_elements(draw, crossed, count=1):
    '''`count` random elements of `crossed` from one drawn seed'''
    rng = np.random.default_rng(draw(seeds()))
    return [crossed.random_element(rng) for _ in range(count)]


@st.composite
def partial_bijections(draw, n):
    '''A partial injection of {1..n} as a dict'''
    image = draw(st.permutations(range(1, n + 1)))
    kept = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return {x: y for x, y, keep in zip(range(1, n + 1), image, kept) if keep}


@st.composite
def bijection_semigroups(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    generators = draw(st.lists(partial_bijections(n), min_size=1, max_size=3))
    assume(any(generators))
    return from_partial_bijections(n, generators)
