"""Shared generators for the test suite."""

import numpy as np

from semihilbert import CampaignConfig, random_context, random_semihilbertian


def gauss(rng, *shape):
    """Standard complex Gaussian array."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def rand_hermitian(rng, n):
    g = gauss(rng, n, n)
    return (g + g.conj().T) / 2


def rand_psd(rng, n, rank=None):
    """Random positive semidefinite matrix of the given rank."""
    r = n if rank is None else rank
    b = gauss(rng, n, r)
    return b @ b.conj().T


def make_ctx(dim, ensemble, seed):
    """Context drawn from one of the campaign ensembles."""
    cfg = CampaignConfig(dimension=dim, trials=1, seed=seed, ensemble=ensemble)
    return random_context(cfg)


def make_member(ctx, seed):
    """Random semi-Hilbertian operator for the context."""
    return random_semihilbertian(ctx, np.random.default_rng(seed))
