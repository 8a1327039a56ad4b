# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------

import pytest
import logging
from twoofn.common import errors

logging.basicConfig(level=logging.INFO)


@pytest.mark.describe("OrderingError hierarchy")
class TestOrderingErrors(object):
    @pytest.mark.it("Derives every library error from OrderingError")
    @pytest.mark.parametrize(
        "error_class",
        [
            pytest.param(errors.OutOfSupport, id="OutOfSupport"),
            pytest.param(errors.DegenerateDenominator, id="DegenerateDenominator"),
            pytest.param(errors.InvalidProbability, id="InvalidProbability"),
            pytest.param(errors.ShapeNotUnit, id="ShapeNotUnit"),
            pytest.param(errors.GridBelowLocation, id="GridBelowLocation"),
            pytest.param(errors.GeneratorDomain, id="GeneratorDomain"),
            pytest.param(errors.UnsupportedGenerator, id="UnsupportedGenerator"),
            pytest.param(errors.LengthMismatch, id="LengthMismatch"),
            pytest.param(errors.StructuralMismatch, id="StructuralMismatch"),
            pytest.param(errors.EvaluationFailure, id="EvaluationFailure"),
            pytest.param(errors.PolicyExhausted, id="PolicyExhausted"),
        ],
    )
    def test_base_class(self, error_class):
        assert issubclass(error_class, errors.OrderingError)

    @pytest.mark.it("Treats argument errors as ValueErrors too")
    @pytest.mark.parametrize(
        "error_class",
        [
            pytest.param(errors.InvalidProbability, id="InvalidProbability"),
            pytest.param(errors.LengthMismatch, id="LengthMismatch"),
            pytest.param(errors.ScenarioError, id="ScenarioError"),
        ],
    )
    def test_value_errors(self, error_class):
        assert issubclass(error_class, ValueError)

    @pytest.mark.it("Keeps the failing point and cause on EvaluationFailure")
    def test_evaluation_failure(self):
        cause = ZeroDivisionError("boom")
        e = errors.EvaluationFailure("f failed", point=(1.0, 2.0), cause=cause)
        assert e.point == (1.0, 2.0)
        assert e.cause is cause
        assert str(e) == "f failed"


@pytest.mark.describe("ScenarioError")
class TestScenarioError(object):
    @pytest.mark.it("Prefixes the message with the line number when one is given")
    def test_line_prefix(self):
        e = errors.ScenarioError("bad value", line=12, field="theta_X")
        assert str(e) == "line 12: bad value"
        assert e.line == 12
        assert e.field == "theta_X"

    @pytest.mark.it("Leaves the message alone without a line number")
    def test_no_line(self):
        e = errors.ScenarioError("bad value")
        assert str(e) == "bad value"
        assert e.line is None
        assert e.field is None


@pytest.mark.describe("exit_code_from_error()")
class TestExitCodeFromError(object):
    @pytest.mark.it("Maps every error to the usage exit status")
    @pytest.mark.parametrize(
        "error",
        [
            pytest.param(errors.ScenarioError("x"), id="ScenarioError"),
            pytest.param(errors.GridBelowLocation("x"), id="GridBelowLocation"),
            pytest.param(errors.PolicyExhausted("x"), id="PolicyExhausted"),
            pytest.param(errors.EvaluationFailure("x"), id="Unlisted OrderingError"),
            pytest.param(ValueError("x"), id="Plain ValueError"),
        ],
    )
    def test_usage(self, error):
        assert errors.exit_code_from_error(error) == errors.EXIT_USAGE

    @pytest.mark.it("Keeps the success, inconsistency and usage statuses distinct")
    def test_distinct(self):
        assert len({errors.EXIT_OK, errors.EXIT_INCONSISTENT, errors.EXIT_USAGE}) == 3
        assert errors.EXIT_OK == 0
