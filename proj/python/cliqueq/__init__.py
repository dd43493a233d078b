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


"""Grover k-clique search with qudit-assisted Toffoli lowering."""

from ._core import (
    Graph,
    InstanceTooLarge,
    decompose,
    enumerate_k_cliques,
    format_graph,
    instance_cost,
    is_clique,
    kclique,
    max_clique,
    max_clique_bruteforce,
    optimal_iterations,
    oracle_census,
    parse_graph,
    prep_amplitudes,
    read_graph,
    report,
    standard_cost,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "InstanceTooLarge",
    "decompose",
    "enumerate_k_cliques",
    "format_graph",
    "instance_cost",
    "is_clique",
    "kclique",
    "max_clique",
    "max_clique_bruteforce",
    "optimal_iterations",
    "oracle_census",
    "parse_graph",
    "prep_amplitudes",
    "read_graph",
    "report",
    "standard_cost",
]
