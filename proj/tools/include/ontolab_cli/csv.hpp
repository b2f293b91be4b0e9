// Copyright 2026 The ontolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOLAB_CLI_CSV_HPP
#define ONTOLAB_CLI_CSV_HPP

// Results CSV: the only contract between the simulator and downstream
// plotting. Columns are fixed; reals use 12 significant digits; LF endings.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ontolab::cli {

inline constexpr std::string_view kCsvHeader =
    "experiment,model,delta,theta,outcome,qm_prob,om_prob,std_err,n_samples,seed";

/// One CSV record. Empty optionals print as empty fields (for example the
/// delta of the Haar law or the outcome of an agreement row).
struct CsvRow {
  std::string experiment;
  std::string model;
  std::optional<double> delta;
  std::optional<double> theta;
  std::optional<int> outcome;
  double qm_prob = 0.0;
  double om_prob = 0.0;
  double std_err = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

std::string format_real(double v);
std::string format_row(const CsvRow& row);

/// Header line followed by one line per row.
void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);

/// Strict reader for files produced by write_csv; throws std::runtime_error
/// on a header or field-count mismatch.
std::vector<CsvRow> read_csv(std::istream& in);

}  // namespace ontolab::cli

#endif  // ONTOLAB_CLI_CSV_HPP
