import io
import json
import subprocess
import sys

import pytest

from depthzero.cli import render, run
from depthzero.multisegments import parse_multisegment, poset
from depthzero.partitions import PartitionVector, parse_partition


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_partition_command():
    assert call("partition", "3,1") == (0, "partition: 3,1\nn: 4\nconjugate: 2,1,1\n", "")
    assert call("partition", "3,1", "--dominates", "2,2")[1] == "true\n"
    assert json.loads(call("partition", "3,1", "--format", "json")[1]) == {
        "partition": [3, 1], "n": 4, "conjugate": [2, 1, 1]}


def test_kostka_and_kl():
    assert call("kostka", "2,1", "1,1,1")[1] == "2\n"
    assert call("kl", "--n", "4", "--x", "1,3,2,4", "--w", "3,4,1,2")[1] == "1 + 1*q\n"
    assert call("kl", "--n", "4", "--x", "2,1,3,4", "--w", "3,4,1,2")[1] == "1\n"
    data = json.loads(call("kl", "--n", "3", "--x", "1,2,3", "--w", "3,2,1", "--format", "json")[1])
    assert data["coefficients"] == [1]


def test_mseg_exports():
    code, out, _ = call("mseg", "[0]+[1]", "--poset", "dot")
    assert code == 0 and out.count("->") == 1
    data = json.loads(call("mseg", "[0]+[1]+[2]", "--poset", "json")[1])
    assert set(data) == {"nodes", "edges", "m_values"}
    assert len(data["nodes"]) == 4
    assert "dual: [0,1]" in call("mseg", "[1]+[0]")[1]


def test_branch_json_and_report():
    assert call("branch", "[0]+[1]", "--format", "json")[1] == '{"n":2,"entries":[{"partition":[2],"coeff":1}]}\n'
    report = json.loads(call("branch", "[0]+[1]", "--report")[1])
    assert report["flags"]["dual_partition_is_minimum"] is True


def test_hecke_and_symgroup():
    assert call("hecke", "verify", "--n", "3")[0] == 0
    table = json.loads(call("symgroup", "table", "4")[1])
    assert sum(table["class_sizes"]) == 24


def test_exit_codes():
    code, out, err = call("m", "[0]", "[1]")
    assert (code, out) == (1, "") and "different cuspidal support" in err
    code, _, err = call("partition", "1,2")
    assert code == 2 and "'1,2'" in err
    code, _, err = call("branch", "[0]+[2,x]")
    assert code == 2 and "[2,x]" in err
    code, _, err = call("mseg", "[0]+[1]+[2]+[3]", "--poset", "dot", "--cap", "3")
    assert code == 1 and "cap of 3" in err
    assert call("generic", "2,0")[0] == 2
    assert call()[0] == 2


def test_render_edge_cases():
    assert render(PartitionVector(0)) == "(no constituents)"
    assert render(PartitionVector(0), "json") == '{"n":0,"entries":[]}'
    dot = poset(parse_multisegment("[0]+[1]")).to_dot()
    assert dot.count(";") == 3


def test_table_rows_reparse():
    _, out, _ = call("generic", "1,1,1,1")
    rows = [line.split(" : ") for line in out.splitlines()]
    parts = [parse_partition(p) for p, _ in rows]
    assert parts == sorted(parts, reverse=True)
    assert sum(int(c) for _, c in rows) == 10


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "depthzero", "generic", "2,1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "2,1 : 1\n1,1,1 : 1\n"
