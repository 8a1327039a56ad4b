# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
import logging
from transitions import Machine
from twoofn import constant, sampling
from twoofn.common import evaluation_thread
from twoofn.common.errors import PolicyExhausted
from twoofn.models.reports import SuiteReport
from . import registry, policies
from .hypotheses import ConditionCache

logger = logging.getLogger(__name__)


class PropertySuite(object):
    """
    Randomized validation of one theorem: draws hypothesis-satisfying configuration pairs
    from a policy, then checks the theorem's conclusion on each of them.

    The suite moves through the states ready, sampling, checking and completed, or ends in
    exhausted when the policy keeps producing pairs that violate a hypothesis.
    """

    def __init__(
        self,
        theorem_id,
        policy=None,
        trials=100,
        seed=0,
        grid=None,
        rejection_limit=constant.REJECTION_LIMIT,
    ):
        """
        :param str theorem_id: Registry id of the theorem.
        :param policy: Policy drawing candidate pairs; defaults to the theorem's policy.
        :param int trials: Number of accepted pairs to check.
        :param int seed: Seed; trial i draws from the stream keyed by (seed, i).
        :param grid: GridSpec for every conclusion check, or None for a grid per pair.
        :param int rejection_limit: Rejected candidates tolerated before giving up.
        """
        if trials < 1:
            raise ValueError("Invalid suite - trials must be positive")
        self._spec = registry.resolve(theorem_id)
        self._policy = policy or policies.policy_for(self._spec.id)
        self._trials = int(trials)
        self._seed = seed
        self._grid = grid
        self._rejection_limit = rejection_limit
        self._cache = ConditionCache()

        self._pairs = []
        self._rejected = 0
        self._last_rejection = None
        self._report = None

        states = ["ready", "sampling", "checking", "completed", "exhausted"]

        transitions = [
            {
                "trigger": "_trig_sample",
                "source": "ready",
                "dest": "sampling",
                "after": "_sample_pairs",
            },
            {
                "trigger": "_trig_check",
                "source": "sampling",
                "dest": "checking",
                "after": "_check_pairs",
            },
            {"trigger": "_trig_exhaust", "source": "sampling", "dest": "exhausted"},
            {"trigger": "_trig_complete", "source": "checking", "dest": "completed"},
        ]

        def _on_transition_complete(event_data):
            if not event_data.transition:
                dest = "[no transition]"
            else:
                dest = event_data.transition.dest
            logger.debug(
                "Transition complete.  Trigger={}, Src={}, Dest={}, error={}".format(
                    event_data.event.name,
                    event_data.transition.source if event_data.transition else None,
                    dest,
                    str(event_data.error),
                )
            )

        self._state_machine = Machine(
            model=self,
            states=states,
            transitions=transitions,
            initial="ready",
            send_event=True,
            finalize_event=_on_transition_complete,
            queued=True,
        )

    @property
    def rejected(self):
        return self._rejected

    def run(self):
        """
        Run the suite to completion.

        :returns: SuiteReport
        :raises: PolicyExhausted if the rejection limit was reached before enough pairs
            satisfying every hypothesis were found.
        """
        if self.state != "ready":
            raise RuntimeError("Suite has already been run")
        logger.info(
            "Starting {} suite: {} trials, seed {}, policy {!r}".format(
                self._spec.id, self._trials, self._seed, self._policy
            )
        )
        self._trig_sample()
        if self.state == "exhausted":
            raise PolicyExhausted(
                "{} policy {!r} produced no hypothesis-satisfying pair in {} attempts "
                "(last failure: {})".format(
                    self._spec.id, self._policy, self._rejected, self._last_rejection
                )
            )
        return self._report

    def _grid_for(self, cfgX, cfgY):
        return self._grid or self._policy.grid(cfgX, cfgY)

    def _first_failure(self, cfgX, cfgY):
        grid = self._grid_for(cfgX, cfgY)
        for hypothesis in self._spec.hypotheses:
            if not hypothesis.evaluate(cfgX, cfgY, self._cache, grid).passed:
                return hypothesis.name
        return None

    def _sample_pairs(self, event_data):
        for trial in range(self._trials):
            rng = sampling.stream(self._seed, trial)
            while True:
                cfgX, cfgY = self._policy.draw(rng)
                failure = self._first_failure(cfgX, cfgY)
                if failure is None:
                    self._pairs.append((cfgX, cfgY))
                    break
                self._rejected += 1
                self._last_rejection = failure
                logger.debug("Trial {} rejected a pair failing {}".format(trial, failure))
                if self._rejected >= self._rejection_limit:
                    self._trig_exhaust()
                    return
        logger.info(
            "Drew {} pairs for {} ({} rejected)".format(
                len(self._pairs), self._spec.id, self._rejected
            )
        )
        self._trig_check()

    def _check_pair(self, pair):
        cfgX, cfgY = pair
        grid = self._grid_for(cfgX, cfgY)
        return registry.run_theorem(self._spec.id, cfgX, cfgY, grid, self._cache)

    def _check_pairs(self, event_data):
        verdicts = evaluation_thread.map_on_named_executor(
            evaluation_thread.SUITE, self._check_pair, self._pairs
        )
        dumps = ["X={!r} Y={!r}".format(cfgX, cfgY) for cfgX, cfgY in self._pairs]
        self._report = SuiteReport(self._spec.id, self._seed, verdicts, self._rejected, dumps)
        logger.info(self._report.to_record())
        for index, verdict, dump in self._report.inconsistencies:
            logger.warning(
                "Trial {} is inconsistent: {} {}".format(index, verdict.to_record(), dump)
            )
        self._trig_complete()


def property_suite(
    theorem_id,
    policy=None,
    trials=100,
    seed=0,
    grid=None,
    rejection_limit=constant.REJECTION_LIMIT,
):
    """Run a randomized property suite for a theorem and return its SuiteReport.

    :raises: PolicyExhausted if the policy cannot produce hypothesis-satisfying pairs.
    """
    return PropertySuite(theorem_id, policy, trials, seed, grid, rejection_limit).run()
