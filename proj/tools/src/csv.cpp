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

#include "ontolab_cli/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace ontolab::cli {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string::npos ? comma : comma - start));
    if (comma == std::string::npos) return fields;
    start = comma + 1;
  }
}

std::optional<double> optional_real(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

// Model ids and experiment names never contain commas or quotes, so plain
// fields are valid RFC 4180; anything else is quoted defensively.
std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_row(const CsvRow& row) {
  std::string line = quote(row.experiment);
  line += ',' + quote(row.model);
  line += ',' + (row.delta ? format_real(*row.delta) : std::string());
  line += ',' + (row.theta ? format_real(*row.theta) : std::string());
  line += ',' + (row.outcome ? std::to_string(*row.outcome) : std::string());
  line += ',' + format_real(row.qm_prob);
  line += ',' + format_real(row.om_prob);
  line += ',' + format_real(row.std_err);
  line += ',' + std::to_string(row.n_samples);
  line += ',' + std::to_string(row.seed);
  return line;
}

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& row : rows) out << format_row(row) << '\n';
}

std::vector<CsvRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::runtime_error("csv: unexpected header");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 10)
      throw std::runtime_error("csv: expected 10 fields, got " + std::to_string(f.size()));
    CsvRow row;
    row.experiment = f[0];
    row.model = f[1];
    row.delta = optional_real(f[2]);
    row.theta = optional_real(f[3]);
    if (!f[4].empty()) row.outcome = std::stoi(f[4]);
    row.qm_prob = std::stod(f[5]);
    row.om_prob = std::stod(f[6]);
    row.std_err = std::stod(f[7]);
    row.n_samples = std::stoll(f[8]);
    row.seed = std::stoull(f[9]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ontolab::cli
