import io
import json
import subprocess
import sys

import pytest

from signpoly import MN, Partition, Shape, ShapeFirstCol, Padded, enumerate_family
from signpoly import serialize as ser
from signpoly.checks import SPLIT_EXAMPLE
from signpoly.cli import run
from signpoly.membership import decompose

from conftest import TABLEAU_EXAMPLE_MATRIX, TABLEAU_EXAMPLE_ROWS


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, obj, name="in.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


@pytest.mark.parametrize(
    "tag",
    [MN(2, 3), Shape(Partition((3, 1)), 4), ShapeFirstCol((1, 3), Partition((2, 1)), 3), Padded(3, Partition((2, 1)), 3)],
    ids=str,
)
def test_tag_round_trip(tag):
    assert ser.tag_from_json(json.loads(ser.dumps(ser.tag_to_json(tag)))) == tag


def test_combination_round_trip():
    tag = Shape(Partition((3, 3, 1)), 4)
    combo = decompose(SPLIT_EXAMPLE, tag)
    back = ser.combination_from_json(json.loads(ser.dumps(ser.combination_to_json(combo))))
    assert back == combo


def test_enumerate():
    code, out, _ = call("enumerate", "--shape", "2,2", "--n", "3")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 6 and len(doc["tableaux"]) == 6
    code, out, _ = call("enumerate", "--mn", "2,2")
    assert json.loads(out)["count"] == len(enumerate_family(MN(2, 2)))


def test_map_both_directions(tmp_path):
    code, out, _ = call("map", "--input", write(tmp_path, {"entries": [list(r) for r in TABLEAU_EXAMPLE_MATRIX]}))
    assert code == 0
    T = json.loads(out)["tableau"]
    assert [tuple(r) for r in T["rows"]] == [tuple(r) for r in TABLEAU_EXAMPLE_ROWS]
    code, out, _ = call("map", "--input", write(tmp_path, T, "t.json"))
    assert json.loads(out)["matrix"]["entries"] == [list(r) for r in TABLEAU_EXAMPLE_MATRIX]


def test_check_and_decompose(tmp_path):
    path = write(tmp_path, [[str(x) for x in row] for row in SPLIT_EXAMPLE])
    code, out, _ = call("check", "--shape", "3,3,1", "--n", "4", "--input", path)
    assert code == 0 and json.loads(out)["member"] is True
    code, out, _ = call("decompose", "--shape", "3,3,1", "--n", "4", "--input", path)
    doc = json.loads(out)
    assert code == 0 and doc["meta"]["reconstructs"] and doc["meta"]["total_weight"] == "1"
    code, out, _ = call("check", "--mn", "2,2", "--input", write(tmp_path, [[0, 2], [0, 0]], "bad.json"))
    assert json.loads(out)["member"] is False


def test_vertex_cert_and_facets():
    code, out, _ = call("vertex-cert", "--mn", "2,3")
    assert code == 0 and all(c["separates"] for c in json.loads(out)["certificates"])
    code, out, _ = call("facets", "--mn", "2,3", "--verify")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 13 and doc["pass"]
    code, out, _ = call("facets", "--shape", "2,2", "--n", "3", "--source", "proof", "--verify")
    assert json.loads(out)["pass"]


def test_face_lattice_formats():
    code, out, _ = call("face-lattice", "--mn", "1,1")
    assert code == 0 and len(json.loads(out)["elements"]) == 4
    code, out, _ = call("face-lattice", "--mn", "1,1", "--format", "dot")
    assert out.lstrip().startswith(("graph", "digraph"))


def test_output_file_and_determinism(tmp_path):
    target = tmp_path / "o.json"
    assert call("enumerate", "--mn", "2,2", "--output", str(target))[0] == 0
    first = target.read_text()
    assert call("enumerate", "--mn", "2,2", "--output", str(target))[0] == 0
    assert target.read_text() == first == call("enumerate", "--mn", "2,2")[1]


def test_exit_codes(tmp_path):
    assert call("enumerate")[0] == 2
    assert call("enumerate", "--mn", "2")[0] == 2
    assert call("bogus")[0] == 2
    assert call("enumerate", "--shape", "2,2")[0] == 2
    code, out, _ = call("decompose", "--mn", "2,2", "--input", write(tmp_path, [[3, 0], [0, 0]]))
    assert code == 1 and "error" in json.loads(out)
    code, out, _ = call("map", "--input", str(tmp_path / "missing.json"))
    assert code == 1
    assert call("enumerate", "--mn", "2,2", "--threads", "0")[0] == 2


def test_verify_suite():
    code, out, _ = call("verify", "vertices", "--mn", "2,2")
    assert code == 0 and json.loads(out)["pass"]


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "signpoly.cli", "enumerate", "--mn", "1,1"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["count"] == 2
