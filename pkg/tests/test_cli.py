import json
import os

import pytest

from quadralg import cli
from quadralg.errors import ConfigParseError

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CONFIGS = os.path.join(ROOT, "configs")


class Args:
    mode = None
    seed = None
    trials = None
    out = None


def small(config, **over):
    cfg = json.loads(json.dumps(config))
    cfg.setdefault("verification", {}).update(over)
    return cfg


def load(name):
    with open(os.path.join(CONFIGS, name)) as f:
        return json.load(f)


def strip_times(report):
    def walk(o):
        if isinstance(o, dict):
            return {k: walk(v) for k, v in o.items() if k != "wall_time"}
        if isinstance(o, list):
            return [walk(v) for v in o]
        return o

    return walk(cli._strip_witnesses(report))


def test_octonion_config():
    rep = cli.run(load("octonion_identities.json"), Args())
    assert rep["verdict"] == "pass"
    names = {c["name"] for c in rep["checks"]}
    assert "moufang_middle" in names and "norm_multiplicativity" in names


def test_pseudo_quadratic_config():
    cfg = small(load("pseudoquadratic_gauss.json"), trials=60, d2_trials=200,
                h2_trials=100)
    rep = cli.run(cfg, Args())
    assert rep["verdict"] == "pass"
    assert rep["instance"]["dims"] == {"V": 2, "X0": 4}


def test_rootgroups_config():
    cfg = small(load("rootgroups_quadform.json"), trials=80)
    rep = cli.run(cfg, Args())
    assert rep["verdict"] == "pass"
    assert any(c["name"] == "specialize_quadratic_form" for c in rep["checks"])


def test_tensor_config():
    cfg = {"field": {"kind": "rationals"},
           "construction": {"kind": "tensor", "c1": ["-1", "-1", "-1"], "c2": ["-1"]},
           "verification": {"seed": 1, "trials": 25}}
    rep = cli.run(cfg, Args())
    assert rep["verdict"] == "pass"


def test_jordan_configs():
    cfg = {"field": {"kind": "rationals"},
           "construction": {"kind": "jordan",
                            "jordan": {"kind": "reduced_spin",
                                       "form": ["1", "1", "1"],
                                       "base": ["1", "0", "0"]}},
           "verification": {"seed": 1, "trials": 50}}
    rep = cli.run(cfg, Args())
    assert rep["verdict"] == "pass"
    cfg["construction"]["jordan"] = {"kind": "herm_mat2", "L": ["-1", "-1"]}
    rep = cli.run(cfg, Args())
    assert rep["verdict"] == "pass"
    cfg["construction"]["jordan"] = {"kind": "spin_factor"}
    with pytest.raises(ConfigParseError):
        cli.run(cfg, Args())
    cfg["construction"].pop("jordan")
    with pytest.raises(ConfigParseError):
        cli.run(cfg, Args())


def test_malformed_config(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{ not json")
    with pytest.raises(ConfigParseError) as exc:
        cli.load_config(str(p))
    assert "1:" in str(exc.value) or "line" in str(exc.value) or ":" in str(exc.value)
    with pytest.raises(ConfigParseError):
        cli.run({"field": {"kind": "rationals"}, "construction": {"kind": "nope"}},
                Args())
    with pytest.raises(ConfigParseError):
        cli.run({"field": {"kind": "padic"}, "construction": {"kind": "composition"}},
                Args())


def test_report_determinism():
    cfg = small(load("pseudoquadratic_gauss.json"), trials=30, d2_trials=60,
                h2_trials=50)
    r1 = strip_times(cli.run(cfg, Args()))
    r2 = strip_times(cli.run(cfg, Args()))
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)


def test_main_entry(tmp_path, capsys):
    out = tmp_path / "rep.json"
    code = cli.main(["verify", os.path.join(CONFIGS, "octonion_identities.json"),
                     "--out", str(out)])
    assert code == 0
    blob = json.loads(out.read_text())
    assert blob["verdict"] == "pass"
    cli.main(["report", str(out)])
    text = capsys.readouterr().out
    assert "verdict: pass" in text


def test_cli_build_and_bad_config(tmp_path, capsys):
    code = cli.main(["build", os.path.join(CONFIGS, "octonion_identities.json")])
    assert code == 0
    p = tmp_path / "broken.json"
    p.write_text('{"field": {"kind": "rationals"}}')
    code = cli.main(["verify", str(p)])
    assert code == 2
