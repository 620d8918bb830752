import math

import pytest

import plbandits as plb


def test_instance_basics():
    inst = plb.PLInstance([1.0, 0.5, 0.25])
    assert inst.n == 3
    assert inst.best_item == 0
    assert inst.subset_mass([0, 1, 2]) == pytest.approx(1.75)
    assert inst.pairwise_prob(0, 1) == pytest.approx(2 / 3)


def test_envs_and_bounds():
    names = plb.builtin_env_names()
    assert "g1" in names and "geob" in names
    g1 = plb.load_env("g1")
    assert g1.top_k_mass(5) == pytest.approx(1.6)
    assert plb.delta_tilde(g1) == pytest.approx(0.6)
    expect = (1.6 / 5) * 15 * (1 / 0.36) * math.log(50) * math.log(1 / 0.6)
    assert plb.pac_upper_bound(g1, 5, 1, 0.0, 0.1) == pytest.approx(expect)
    assert plb.min_feasible_budget(16, 5) == 9


def test_topm_pmf_normalizes():
    inst = plb.PLInstance([1.0, 0.5, 0.25])
    pmf = inst.topm_pmf([0, 1, 2], 2)
    assert len(pmf) == 6
    assert sum(pmf.values()) == pytest.approx(1.0)


def test_sampling_is_seeded():
    inst = plb.load_env("geo")
    a = plb.sample_topm(inst, [0, 1, 2, 3], 2, seed=5)
    b = plb.sample_topm(inst, [0, 1, 2, 3], 2, seed=5)
    assert a == b
    assert len(a) == 2


def test_algorithms_run():
    g1 = plb.load_env("g1")
    item, plays, item_plays = plb.pac_wrapper(g1, k=5, m=1, eps=0.0,
                                              delta=0.1, seed=3)
    assert item == 0
    assert plays > 0
    assert len(item_plays) == 16

    item, plays, _ = plb.uniform_allocation(g1, Q=5000, k=5, seed=3)
    assert item == 0
    assert plays <= 5000

    item, plays = plb.pac_best_item(g1, k=5, eps=0.3, delta=0.1, seed=3)
    assert item == 0
    assert plays > 0
