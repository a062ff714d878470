from pomsat.benchgen import random_corpus, random_pomdp
from pomsat.pomdp import dump_pomdp
from pomsat.types.benchgen import RandomPomdpParams


def test_same_seed_same_model():
    params = RandomPomdpParams(num_states=5, num_actions=2, seed=7)
    assert dump_pomdp(random_pomdp(params)) == dump_pomdp(random_pomdp(params))


def test_shape():
    p = random_pomdp(RandomPomdpParams(num_states=5, num_actions=3, seed=1))
    assert p.num_states == 5
    assert p.num_actions == 3
    assert p.states[p.goal] == "G"
    assert p.is_absorbing(p.goal)
    assert p.states_with_observation(p.observation_of[p.goal]) == (p.goal,)


def test_corpus():
    corpus = random_corpus(10, seed=3, max_states=4)
    assert len(corpus) == 10
    assert all(2 <= p.num_states <= 4 for p in corpus)
    assert [dump_pomdp(p) for p in corpus] == [
        dump_pomdp(p) for p in random_corpus(10, seed=3, max_states=4)
    ]
