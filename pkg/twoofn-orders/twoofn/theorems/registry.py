# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains the registry of executable ordering theorems for 2-out-of-n
systems and the runner that checks a theorem's hypotheses and conclusion on two
configurations.

Every theorem compares X (generator psi_1) with Y (generator psi_2); both sides use the
field names lambda, theta and alpha with the suffixes _X and _Y.
"""

import logging
from twoofn import baseline, copula, orderstats
from twoofn.common.errors import StructuralMismatch
from twoofn.models.reports import TheoremVerdict, ST, RH, X_LE_Y, Y_LE_X
from twoofn.majorization import WEAK_SUPER, MAJ, RECIP
from . import hypotheses as h

logger = logging.getLogger(__name__)


class TheoremSpec(object):
    """A theorem as data: a hypothesis checklist and a conclusion.

    :ivar str id: Registry identifier, e.g. "T3_1".
    :ivar str statement: One-line statement of the theorem.
    :ivar list hypotheses: Hypothesis predicates in checklist order.
    :ivar str order: Conclusion order, "st" or "rh".
    :ivar str direction: Conclusion direction, "X<=Y" or "Y<=X".
    :ivar str setting: "independent", "dependent" or "common-generator".
    """

    def __init__(self, id, statement, hypotheses, order, direction, setting):
        self.id = id
        self.statement = statement
        self.hypotheses = list(hypotheses)
        self.order = order
        self.direction = direction
        self.setting = setting

    @property
    def hypothesis_names(self):
        return [hypothesis.name for hypothesis in self.hypotheses]

    def __repr__(self):
        return "TheoremSpec({}: {} {})".format(self.id, self.order, self.direction)


INDEPENDENT = "independent"
DEPENDENT = "dependent"
COMMON_GENERATOR = "common-generator"


def _independent(*checks):
    return [h.independent(), h.common_baseline()] + list(checks)


def _dependent(*checks):
    return [h.common_baseline()] + list(checks)


def _common_generator(*checks):
    return [h.common_generator(), h.common_baseline()] + list(checks)


def _w2_rev_hazard_increasing():
    return h.baseline_monotone(baseline.W2_REV_HAZARD, baseline.INCREASING)


def _w_rev_hazard_increasing():
    return h.baseline_monotone(baseline.W_REV_HAZARD, baseline.INCREASING)


_theorems = {}


def register_theorem(spec):
    """Add a TheoremSpec to the registry, replacing one with the same id"""
    logger.debug("Registering theorem {}".format(spec.id))
    _theorems[spec.id] = spec


def _register(id, statement, checks, order, direction, setting):
    register_theorem(TheoremSpec(id, statement, checks, order, direction, setting))


_register(
    "T3_1",
    "theta_X weakly supermajorizes theta_Y => X <=st Y (common lambda, common alpha)",
    _independent(
        h.common_scalar("lambda"),
        h.common_scalar("alpha"),
        h.cone("theta_X", "theta_Y"),
        _w2_rev_hazard_increasing(),
        h.preorder(WEAK_SUPER, "theta_X", "theta_Y"),
    ),
    ST,
    X_LE_Y,
    INDEPENDENT,
)
_register(
    "T3_2",
    "theta_Y weakly supermajorizes theta_X => Y <=st X (shared lambda vector, common alpha)",
    _independent(
        h.equal_vectors("lambda"),
        h.common_scalar("alpha"),
        h.cone("lambda_X", "theta_X", "theta_Y"),
        _w_rev_hazard_increasing(),
        h.preorder(WEAK_SUPER, "theta_Y", "theta_X"),
    ),
    ST,
    Y_LE_X,
    INDEPENDENT,
)
_register(
    "T3_3",
    "alpha_X weakly supermajorizes alpha_Y => X <=st Y (common lambda, common theta)",
    _independent(
        h.common_scalar("lambda"),
        h.common_scalar("theta"),
        h.cone("alpha_X", "alpha_Y"),
        h.preorder(WEAK_SUPER, "alpha_X", "alpha_Y"),
    ),
    ST,
    X_LE_Y,
    INDEPENDENT,
)
_register(
    "T3_4",
    "theta_X majorizes theta_Y => X <=rh Y (common lambda, unit shapes, C1)",
    _independent(
        h.common_scalar("lambda"),
        h.unit_shape(),
        h.cone("theta_X", "theta_Y"),
        h.baseline_block(baseline.C1),
        h.preorder(MAJ, "theta_X", "theta_Y"),
    ),
    RH,
    X_LE_Y,
    INDEPENDENT,
)
_register(
    "T3_5",
    "lambda_X majorizes lambda_Y => Y <=rh X (common theta, unit shapes, C2)",
    _independent(
        h.common_scalar("theta"),
        h.unit_shape(),
        h.cone("lambda_X", "lambda_Y"),
        h.baseline_block(baseline.C2),
        h.preorder(MAJ, "lambda_X", "lambda_Y"),
    ),
    RH,
    Y_LE_X,
    INDEPENDENT,
)
_register(
    "T3_6",
    "theta_X weakly supermajorizes theta_Y => X <=rh Y (common lambda, unit shapes, C3)",
    _independent(
        h.common_scalar("lambda"),
        h.unit_shape(),
        h.cone("theta_X", "theta_Y"),
        h.baseline_block(baseline.C3),
        h.preorder(WEAK_SUPER, "theta_X", "theta_Y"),
    ),
    RH,
    X_LE_Y,
    INDEPENDENT,
)
_register(
    "T3_7",
    "1/theta_X reciprocally majorizes 1/theta_Y => Y <=rh X "
    "(shared lambda vector, unit shapes, C4)",
    _independent(
        h.equal_vectors("lambda"),
        h.unit_shape(),
        h.cone("lambda_X", "theta_X", "theta_Y"),
        h.baseline_block(baseline.C4),
        h.preorder(RECIP, "theta_X", "theta_Y", reciprocal=True),
    ),
    RH,
    Y_LE_X,
    INDEPENDENT,
)


def _scale_under_copulas(id, mode, shared_lambda_vector):
    location = (
        [h.equal_vectors("lambda"), h.common_scalar("alpha")]
        if shared_lambda_vector
        else [h.common_scalar("lambda"), h.common_scalar("alpha")]
    )
    cone = (
        h.cone("lambda_X", "theta_X", "theta_Y")
        if shared_lambda_vector
        else h.cone("theta_X", "theta_Y")
    )
    shape = _w_rev_hazard_increasing() if shared_lambda_vector else _w2_rev_hazard_increasing()
    if mode == copula.SUB:
        premise = h.preorder(WEAK_SUPER, "theta_X", "theta_Y")
        direction = X_LE_Y
        statement = (
            "theta_X weakly supermajorizes theta_Y and phi_2(psi_1) sub-additive => X <=st Y"
        )
    else:
        premise = h.preorder(WEAK_SUPER, "theta_Y", "theta_X")
        direction = Y_LE_X
        statement = (
            "theta_Y weakly supermajorizes theta_X and phi_2(psi_1) super-additive => Y <=st X"
        )
    checks = _dependent(
        *(location + [h.logconcave_either(), cone, shape, h.additivity(mode), premise])
    )
    _register(id, statement, checks, ST, direction, DEPENDENT)


_scale_under_copulas("T3_8i", copula.SUB, shared_lambda_vector=False)
_scale_under_copulas("T3_8ii", copula.SUPER, shared_lambda_vector=False)
_scale_under_copulas("T3_9i", copula.SUB, shared_lambda_vector=True)
_scale_under_copulas("T3_9ii", copula.SUPER, shared_lambda_vector=True)

_register(
    "T3_10",
    "theta_X weakly supermajorizes theta_Y => X <=st Y (common psi with psi/psi' increasing)",
    _common_generator(
        h.common_scalar("lambda"),
        h.common_scalar("alpha"),
        h.cone("theta_X", "theta_Y"),
        _w2_rev_hazard_increasing(),
        h.psi_ratio_increasing(),
        h.preorder(WEAK_SUPER, "theta_X", "theta_Y"),
    ),
    ST,
    X_LE_Y,
    COMMON_GENERATOR,
)
_register(
    "T3_11",
    "theta_X weakly supermajorizes theta_Y => X <=st Y (common psi, shared lambda vector)",
    _common_generator(
        h.equal_vectors("lambda"),
        h.common_scalar("alpha"),
        h.cone("lambda_X", "theta_X", "theta_Y"),
        _w_rev_hazard_increasing(),
        h.psi_ratio_increasing(),
        h.preorder(WEAK_SUPER, "theta_X", "theta_Y"),
    ),
    ST,
    X_LE_Y,
    COMMON_GENERATOR,
)
_register(
    "T3_12",
    "alpha_Y weakly supermajorizes alpha_X => Y <=st X (common psi, common lambda and theta)",
    _common_generator(
        h.common_scalar("lambda"),
        h.common_scalar("theta"),
        h.cone("alpha_X", "alpha_Y"),
        h.psi_ratio_increasing(),
        h.preorder(WEAK_SUPER, "alpha_Y", "alpha_X"),
    ),
    ST,
    Y_LE_X,
    COMMON_GENERATOR,
)

_register(
    "C3_1",
    "Y homogeneous in scale with n * theta_Y >= sum(theta_X) => X <=st Y",
    _independent(
        h.common_scalar("lambda"),
        h.common_scalar("alpha"),
        h.homogeneous("theta_Y"),
        h.cone("theta_X"),
        _w2_rev_hazard_increasing(),
        h.sum_bound("theta_Y", "theta_X", at_least=True),
    ),
    ST,
    X_LE_Y,
    INDEPENDENT,
)
_register(
    "C3_2",
    "X homogeneous in scale with n * theta_X >= sum(theta_Y) => Y <=st X",
    _independent(
        h.equal_vectors("lambda"),
        h.common_scalar("alpha"),
        h.homogeneous("theta_X"),
        h.cone("lambda_Y", "theta_Y"),
        _w_rev_hazard_increasing(),
        h.sum_bound("theta_X", "theta_Y", at_least=True),
    ),
    ST,
    Y_LE_X,
    INDEPENDENT,
)
_register(
    "C3_6",
    "Y homogeneous in scale with n * theta_Y >= sum(theta_X) => X <=rh Y (C3)",
    _independent(
        h.common_scalar("lambda"),
        h.unit_shape(),
        h.homogeneous("theta_Y"),
        h.cone("theta_X"),
        h.baseline_block(baseline.C3),
        h.sum_bound("theta_Y", "theta_X", at_least=True),
    ),
    RH,
    X_LE_Y,
    INDEPENDENT,
)
_register(
    "C3_7",
    "Y homogeneous in scale with n * theta_Y <= sum(theta_X) => Y <=rh X (C4)",
    _independent(
        h.equal_vectors("lambda"),
        h.unit_shape(),
        h.homogeneous("theta_Y"),
        h.cone("lambda_X", "theta_X"),
        h.baseline_block(baseline.C4),
        h.sum_bound("theta_Y", "theta_X", at_least=False),
    ),
    RH,
    Y_LE_X,
    INDEPENDENT,
)

# Bare ids of theorems with two parts resolve to the first part.
_aliases = {"T3_8": "T3_8i", "T3_9": "T3_9i"}


def resolve(theorem_id):
    """Return the registered TheoremSpec for an id or alias.

    :raises: ValueError for unknown ids.
    """
    theorem_id = _aliases.get(theorem_id, theorem_id)
    try:
        return _theorems[theorem_id]
    except KeyError:
        raise ValueError(
            "Invalid theorem - unknown id {}; known ids are {}".format(
                theorem_id, ", ".join(theorem_ids())
            )
        )


def theorem_ids():
    return sorted(_theorems.keys(), key=_sort_key)


def _sort_key(theorem_id):
    kind, _, rest = theorem_id.partition("3_")
    digits = "".join(ch for ch in rest if ch.isdigit())
    return (kind, int(digits), rest)


def run_theorem(theorem_id, cfgX, cfgY, grid, cache=None):
    """Evaluate a theorem's hypothesis checklist and test its conclusion on a grid.

    The conclusion is checked whether or not the hypotheses hold, so counterexamples show
    both the failing hypotheses and the failing order. When an rh conclusion holds, the st
    order is checked on the same grid as a companion report.

    :param str theorem_id: Registry id such as "T3_1" or "C3_6".
    :param cfgX: ELSConfig of X.
    :param cfgY: ELSConfig of Y.
    :param grid: GridSpec for the conclusion check.
    :param cache: Optional ConditionCache shared across runs.
    :returns: TheoremVerdict
    :raises: StructuralMismatch if X and Y have different numbers of components.
    """
    spec = resolve(theorem_id)
    if cfgX.n != cfgY.n:
        raise StructuralMismatch(
            "{} compares systems of equal size, got n={} and n={}".format(spec.id, cfgX.n, cfgY.n)
        )
    cache = cache if cache is not None else h.ConditionCache()
    results = [hypothesis.evaluate(cfgX, cfgY, cache, grid) for hypothesis in spec.hypotheses]
    conclusion = orderstats.check_order(cfgX, cfgY, spec.order, grid, spec.direction)
    companion = None
    if spec.order == RH and conclusion.holds:
        companion = orderstats.check_order(cfgX, cfgY, ST, grid, spec.direction)

    flags = []
    for cfg in (cfgX, cfgY):
        for flag in cfg.flags:
            if flag not in flags:
                flags.append(flag)
    verdict = TheoremVerdict(spec.id, results, conclusion, companion, flags)
    logger.info("{}".format(verdict.to_record()))
    if not verdict.consistent:
        logger.warning("Inconsistent verdict for {}: {!r} vs {!r}".format(spec.id, cfgX, cfgY))
    return verdict
