// Copyright 2026 The cliqueq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliqueq/circuit.hpp"
#include "cliqueq/decompose.hpp"
#include "cliqueq/graph.hpp"
#include "cliqueq/grover.hpp"
#include "cliqueq/oracle.hpp"

namespace cliqueq {

enum class CostMethod { StandardModel, QuditVChain, QuditTree };

std::string_view to_string(CostMethod m);

struct CostReport {
  CostMethod method = CostMethod::QuditVChain;
  std::size_t wires = 0;
  long one_qubit = 0;
  long two_qubit = 0;
  long two_qudit = 0;
  long size = 0;
  long depth = 0;
  ToffoliCensus census;
  bool extrapolated = false;

  bool operator==(const CostReport&) const = default;
};

/// Gate classes of a lowered circuit. A multi-wire gate counts as a qudit
/// gate when it reads or writes a level above 1 on any wire.
CostReport analyze_qudit(const Circuit& lowered, CostMethod method = CostMethod::QuditVChain,
                         const ToffoliCensus& census = {});

/// Sequential model: every MCT contributes its full size and depth, and each
/// pass-through gate adds one to both.
CostReport analyze_standard(const ToffoliCensus& census, long extra_1q, long extra_2q,
                            const StandardCostModel& model = StandardCostModel());

struct Comparison {
  double size_reduction_pct = 0.0;
  double depth_reduction_pct = 0.0;
};

/// 100 * (1 - qudit / standard) for size and depth.
Comparison compare(const CostReport& standard, const CostReport& qudit);

/// One published cost row.
struct ReferenceRow {
  std::string table;
  std::string method;  // "standard" or "qudit"
  std::string instance;
  long wires = 0;
  long q1 = 0;
  long q2 = 0;
  long qd = 0;
  long size = 0;
  long depth = 0;
};

/// Reference cost rows bundled with the library.
class ReferenceTable {
 public:
  static const ReferenceTable& builtin();
  static ReferenceTable parse(std::string_view json_text);

  /// Table covering a given oracle and prep, e.g. "increment/hilbert".
  static std::string table_key(OracleVariant oracle, PrepKind prep);
  std::optional<ReferenceRow> find(const std::string& table_key, const std::string& instance,
                               const std::string& method) const;
  const std::vector<ReferenceRow>& rows() const { return rows_; }

 private:
  std::vector<ReferenceRow> rows_;
};

/// Standard and qudit costs of the full search circuit for one instance.
struct InstanceCost {
  std::string instance;
  std::string table_key;
  std::size_t iterations = 0;
  CostReport standard;
  CostReport qudit;
  Comparison comparison;
  std::optional<ReferenceRow> ref_standard;
  std::optional<ReferenceRow> ref_qudit;
};

/// Builds prep plus t iterations (t from config or the optimal count for the
/// instance) and costs it both ways.
InstanceCost analyze_instance(const std::string& name, const Graph& g, std::size_t k, const GroverConfig& config,
                              const ReferenceTable* reference = nullptr);

enum class TableFormat { Markdown, Csv, Json };

TableFormat parse_table_format(std::string_view s);

/// Two rows (standard, qudit) per instance.
std::string emit_table(const std::vector<InstanceCost>& rows, TableFormat format);

}  // namespace cliqueq
