import json
from pathlib import Path

import jsonschema
import pytest

from padicpairs import Config, DependenceError, DomainError, GroupElement, StandardModel
from padicpairs.audit import CHECKS, FAIL, INCONCLUSIVE, PASS, audit, recheck
from padicpairs.padic import multiplicative_order

from conftest import DENSE

SCHEMA = json.loads(
    (Path(__file__).parents[1] / "src/padicpairs/schemas/audit.schema.json").read_text()
)
DENSITY = {"axiom7", "axiom8"}


def test_example_all_pass():
    report = audit(Config(5, 6, 11), depth=6, bound=10_000)
    assert list(report.results) == list(CHECKS)
    assert {s.status for s in report.results.values()} == {PASS}
    assert report.ok


@pytest.mark.parametrize("cfg", DENSE)
def test_no_fails_at_depth_10(cfg):
    report = audit(Config(*cfg), depth=10)
    for name, s in report.results.items():
        assert s.status != FAIL, (name, s.detail)
        if s.status == INCONCLUSIVE:
            assert name in DENSITY
    assert report.results["density_order"].status == PASS


def test_order_example():
    assert multiplicative_order(6, 5, 3) == 25


def test_degenerate_config_rejected():
    with pytest.raises(DependenceError) as err:
        Config(5, 6, 6)
    m, n = err.value.witness
    assert 6**m == 6**n or 6**m * 6**n == 1


def test_bad_parameters():
    with pytest.raises(DomainError):
        audit(Config(5, 6, 11), depth=0)
    with pytest.raises(DomainError):
        audit(Config(5, 6, 11), bound=0)


def test_deterministic_in_seed():
    a = audit(Config(3, 4, 7), depth=5, seed=7).to_json(timing=False)
    b = audit(Config(3, 4, 7), depth=5, seed=7).to_json(timing=False)
    assert a == b
    assert a["parameters"]["seed"] == 7


@pytest.mark.parametrize("cfg", DENSE)
def test_monotone_in_depth_and_bound(cfg):
    big = audit(Config(*cfg), depth=8, bound=5000, samples=100)
    for depth, bound in [(8, 500), (5, 5000), (3, 50), (1, 1)]:
        small = audit(Config(*cfg), depth=depth, bound=bound, samples=100)
        for name, s in big.results.items():
            if s.status == PASS:
                assert small.results[name].status != FAIL, (name, depth, bound)


@pytest.mark.parametrize("cfg", DENSE)
def test_report_matches_schema(cfg):
    jsonschema.validate(audit(Config(*cfg), depth=4).to_json(), SCHEMA)


def test_recheck_genuine_and_spurious(model5):
    cfg = model5.config
    x, y = GroupElement(1, 0), GroupElement(0, 0)
    # V(alpha - 1) = v_5(5) - 1 = 0
    assert recheck(cfg, "axiom7", {"x": x.to_json(), "y": y.to_json(), "gamma": 1})
    assert not recheck(cfg, "axiom7", {"x": x.to_json(), "y": y.to_json(), "gamma": 0})
    assert not recheck(cfg, "valued_group_laws", {"x": {"m": 2, "n": 3}, "n": 10})
    assert not recheck(cfg, "axiom4", {"x": {"m": 2, "n": 3}, "y": {"m": -1, "n": 4}})
    with pytest.raises(DomainError):
        recheck(cfg, "axiom1", {})


def test_fail_counterexamples_recheck(monkeypatch):
    """A deliberately broken valuation produces fails that re-verify."""
    true_V = StandardModel.big_V

    def broken(self, g, method="exact"):
        v = true_V(self, g, method)
        return v + 1 if isinstance(v, int) and g.n % 3 == 1 else v

    monkeypatch.setattr(StandardModel, "big_V", broken)
    report = audit(Config(5, 6, 11), depth=6)
    fails = {n: s for n, s in report.results.items() if s.status == FAIL}
    assert fails
    jsonschema.validate(report.to_json(), SCHEMA)
    checked = 0
    for name, s in fails.items():
        assert s.counterexample
        if name in ("axiom4", "axiom7", "axiom8", "valued_group_laws"):
            assert recheck(report.config, name, s.counterexample)
            checked += 1
    assert checked
