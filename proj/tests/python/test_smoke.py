# Copyright 2026 The cliqueq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import json
import math
import os
from pathlib import Path

import pytest

import cliqueq

DATA = Path(os.environ.get("CLIQUEQ_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def six_vertex():
    return cliqueq.read_graph(str(DATA / "graphs" / "six_vertex.col"))


def test_graph_roundtrip():
    g = six_vertex()
    assert g.num_vertices == 6
    assert g.num_edges == 9
    again = cliqueq.parse_graph(cliqueq.format_graph(g))
    assert again.edges == g.edges
    assert cliqueq.enumerate_k_cliques(g, 4) == [[1, 2, 3, 4]]
    assert cliqueq.max_clique_bruteforce(g) == [1, 2, 3, 4]


def test_kclique_known_count():
    r = cliqueq.kclique(six_vertex(), 4, prep="hilbert", iterations=6, seed=3)
    closed = math.sin(13 * math.asin(1 / 8)) ** 2
    assert r["success_probability"] == pytest.approx(closed, abs=1e-6)
    assert r["found"] and r["witness"] == [1, 2, 3, 4]
    assert sum(r["histogram"].values()) == 1024


def test_kclique_is_deterministic():
    a = cliqueq.kclique(six_vertex(), 4, mode="unknown", seed=9)
    b = cliqueq.kclique(six_vertex(), 4, mode="unknown", seed=9)
    assert a == b


def test_max_clique_descent():
    r = cliqueq.max_clique(six_vertex())
    assert r["clique_size"] == 4
    assert r["skipped_sizes"] == [6, 5]


def test_decompose_rows():
    for n, size in [(2, 3), (3, 5), (4, 7)]:
        d = cliqueq.decompose(n)
        assert (d["size"], d["depth"], d["qd"]) == (size, size, size)
    assert cliqueq.decompose(5, "tree")["depth"] == 7
    assert cliqueq.standard_cost(3)["size"] == 27


def test_prep_amplitudes():
    amps = cliqueq.prep_amplitudes("dicke", 6, 4)
    assert len(amps) == 15
    assert all(s.count("1") == 4 for s in amps)
    assert all(abs(a - 1 / math.sqrt(15)) < 1e-9 for a in amps.values())
    assert set(cliqueq.prep_amplitudes("w", 3)) == {"100", "010", "001"}


def test_report_json():
    g = cliqueq.read_graph(str(DATA / "graphs" / "one_triangle.col"))
    rows = json.loads(cliqueq.report([("one_triangle", g)], 3, prep="hilbert", oracle="increment",
                                     with_reference=True))
    assert [r["method"] for r in rows] == ["standard_model", "qudit_vchain"]
    assert rows[1]["reduction_pct"]["size"] >= 60
    cost = cliqueq.instance_cost(g, 3, prep="hilbert", oracle="increment")
    assert cost["qudit"]["size"] < cost["standard"]["size"]


def test_errors():
    with pytest.raises(ValueError):
        cliqueq.kclique(six_vertex(), 4, oracle="bogus")
    with pytest.raises(cliqueq.InstanceTooLarge):
        cliqueq.kclique(cliqueq.Graph.complete(21), 2)
