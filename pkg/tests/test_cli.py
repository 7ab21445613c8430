import io
import json
import subprocess
import sys

import pytest

from polyweyl import GroupElement, Partition
from polyweyl import serialize as ser
from polyweyl.cli import run


def call(argv, payload=None):
    out = io.StringIO()
    text = "" if payload is None else json.dumps(payload)
    code = run(argv, stdin=io.StringIO(text), stdout=out)
    return code, json.loads(out.getvalue())


G = ser.to_json(GroupElement.of(1, 0, 1))
HALVES = ser.to_json(Partition.from_points(0, 1, 2))
WHOLE = ser.to_json(Partition.from_points(0, 2))
Q = ser.to_json(Partition.from_points(0, "1/2", 1, "3/2", 2))


def test_compose():
    code, out = call(["compose"], {"g": G, "h": G})
    assert code == 0
    assert ser.group_from_json(out) == GroupElement.of(2, 0, 2)


def test_invert_tw_shift():
    assert call(["invert"], {"g": G})[1]["u"] == "-1/1"
    _, out = call(["tw"], {"w": "1", "P": {"n": 2, "coeffs": [0, 0, 1]}})
    assert out["coeffs"] == ["1/3", "1/1", "1/1"]
    _, back = call(["tw"], {"w": "1", "P": out, "inverse": True})
    assert back["coeffs"] == ["0/1", "0/1", "1/1"]
    _, out = call(["shift"], {"u": "2", "P": {"n": 1, "coeffs": [0, 1]}})
    assert out["coeffs"] == ["2/1", "1/1"]


def test_khat_and_constants():
    g = ser.to_json(GroupElement.of(1, 1, 1, 1))
    _, out = call(["khat"], {"length": "4", "g": g})
    assert out["exact"] and out["g"]["u"] == "2/1"
    _, out = call(["rescale-constants"], {"length": "4", "n": 2})
    assert out["b"] == "2/1" and out["structure_holds"]


def test_bracket_and_jacobi():
    x = {"n": 2, "u": "1", "a": ["0", "0", "0"]}
    y = {"n": 2, "u": "0", "a": ["0", "0", "1"]}
    _, out = call(["bracket"], {"x": x, "y": y})
    assert out["a"] == ["0/1", "2/1", "0/1"]
    chi = [{"lo": "0", "hi": "1", "val": "1"}]
    cur = {"n": 1, "c0": "0", "fields": [chi, []]}
    cur2 = {"n": 1, "c0": "0", "fields": [[], chi]}
    _, out = call(["bracket"], {"x": cur2, "y": cur})
    assert out["c0"] == "1/1"
    _, out = call(["jacobi"], {"x": cur, "y": cur2, "z": cur2})
    assert out["zero"]


def test_embed_refine_cocycle():
    elem = [{"g": G, "c": 1}]
    _, t = call(["embed"], {"partition": WHOLE, "elem": elem})
    _, t2 = call(["refine"], {"tensor": t, "finer": Q})
    assert len(t2["words"][0]["factors"]) == 4
    code, out = call(["cocycle-check"], {"tensor": t, "mid": HALVES, "fine": Q})
    assert code == 0 and out["equal"]


def test_state_factor_gram():
    spec = {"n": 1, "density": None}
    _, t = call(["embed"], {"partition": HALVES, "elem": [{"g": G, "c": 1}]})
    _, out = call(["state"], {"spec": spec, "tensor": t})
    assert abs(complex(out["value"]["re"], out["value"]["im"])) < 1
    _, out = call(["factor-check"], {"spec": spec, "region": HALVES["of"],
                                     "partition": HALVES, "g": G})
    assert out["defect"] < 1e-12
    _, out = call(["gram"], {"spec": spec, "region": HALVES["of"], "elems": [G, G]})
    assert out["psd"]


def test_oracle_verb():
    e = ser.to_json(GroupElement.of(0, 0, 0))
    code, out = call(["oracle"], {"n": 1, "g": e, "h": G, "N": 32})
    assert code == 0 and out["ok"]
    assert set(out["compose"]["product"]) == {"re", "im"}


def test_nogo_n1():
    code, out = call(["nogo", "--n", "1", "--trials", "1000", "--seed", "7"])
    assert code == 0 and out["max_defect"] < 1e-12


def test_nogo_n2_reference():
    code, out = call(["nogo", "--n", "2", "--A", "1", "--cells", "2", "--trials", "5"])
    assert code == 0
    for c in out["ratio_checks"]:
        m = complex(c["measured"]["re"], c["measured"]["im"])
        assert abs(abs(m) - 0.6687403049764220) < 1e-9
    code, out = call(["nogo", "--n", "2", "--a2", "2", "--cells", "2", "--trials", "5"])
    assert out["ratio_checks"][0]["A"] == 1


def test_nogo_regression_exit():
    code, out = call(["nogo", "--n", "2", "--trials", "5", "--tolerance", "-1"])
    assert code == 3 and not out["passed"]


def test_exit_codes():
    assert call(["compose"], {"g": G})[0] == 2
    out = io.StringIO()
    assert run(["compose"], stdin=io.StringIO("not json"), stdout=out) == 2
    bad = ser.to_json(GroupElement.of(1, 0, 0, 1))
    code, out = call(["compose"], {"g": G, "h": bad})
    assert code == 1 and out["kind"] == "DegreeMismatchError"
    assert call(["khat"], {"length": "0", "g": G})[0] == 1
    assert call(["nogo", "--a2", "1", "--A", "1"])[0] == 2


def test_deterministic_bytes():
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        run(["nogo", "--n", "2", "--trials", "50", "--seed", "11"], stdin=io.StringIO(""), stdout=buf)
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]


@pytest.mark.slow
def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polyweyl", "compose", "--pretty"],
                          input=json.dumps({"g": G, "h": G}), capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["u"] == "2/1"
