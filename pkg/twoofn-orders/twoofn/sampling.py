# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains the seeded random streams and the chunked Monte Carlo driver
shared by the independent and dependent second-largest oracles.
"""

import logging
import math
import numpy as np
from twoofn import constant, els
from twoofn.common import evaluation_thread
from twoofn.models.reports import MonteCarloEstimate

logger = logging.getLogger(__name__)

# Uniforms are kept away from 0 so that quantile functions stay finite.
_UNIFORM_FLOOR = np.finfo(float).tiny


def stream(seed, *keys):
    """Return a numpy Generator on a Philox stream derived from the seed and extra keys"""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed] + list(keys))))


def independent_uniforms(rng, samples, n):
    """Uniforms of independent components"""
    return np.maximum(rng.random((samples, n)), _UNIFORM_FLOOR)


def _chunks(samples):
    sizes = [constant.MC_CHUNK_SIZE] * (samples // constant.MC_CHUNK_SIZE)
    if samples % constant.MC_CHUNK_SIZE:
        sizes.append(samples % constant.MC_CHUNK_SIZE)
    return list(enumerate(sizes))


def second_largest_counts(cfg, xs, samples, seed, draw_uniforms=independent_uniforms):
    """Count the samples whose second-largest lifetime is at most each point of xs.

    Samples are drawn in chunks, each on its own stream keyed by (seed, chunk index),
    and chunks run on the Monte Carlo executor.

    :param cfg: ELSConfig to sample.
    :param xs: Evaluation points.
    :param int samples: Number of n-vectors to draw.
    :param int seed: Seed of the random streams.
    :param draw_uniforms: Callable (rng, samples, n) returning component uniforms.
    :returns: Array of counts, one per point.
    """
    if samples < 1:
        raise ValueError("Invalid sample count {}".format(samples))
    xs = np.atleast_1d(np.asarray(xs, dtype=float))

    def run_chunk(chunk):
        index, size = chunk
        rng = stream(seed, index)
        uniforms = np.minimum(draw_uniforms(rng, size, cfg.n), 1.0 - np.finfo(float).eps)
        uniforms = np.maximum(uniforms, _UNIFORM_FLOOR)
        lifetimes = els.sample_components(cfg, uniforms)
        second = np.sort(lifetimes, axis=1)[:, -2]
        return np.searchsorted(np.sort(second), xs, side="right")

    chunks = _chunks(samples)
    logger.debug("Drawing {} samples in {} chunks with seed {}".format(samples, len(chunks), seed))
    counts = evaluation_thread.map_on_named_executor(
        evaluation_thread.MONTE_CARLO, run_chunk, chunks
    )
    return np.sum(counts, axis=0)


def estimates(cfg, xs, samples, seed, draw_uniforms=independent_uniforms):
    """Return a MonteCarloEstimate per point; points at or below the largest location get 0."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    counts = second_largest_counts(cfg, xs, samples, seed, draw_uniforms)
    counts = np.where(xs <= cfg.max_location, 0, counts)
    return [MonteCarloEstimate(count / float(samples), samples, seed) for count in counts]


def dkw_bound(samples, failure_probability=constant.DKW_FAILURE_PROBABILITY):
    """Dvoretzky-Kiefer-Wolfowitz bound on the sup distance between an empirical CDF
    from `samples` draws and the true CDF, exceeded with the given probability.
    """
    return math.sqrt(math.log(2.0 / failure_probability) / (2.0 * samples))
