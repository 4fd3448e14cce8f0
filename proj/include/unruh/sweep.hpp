// Copyright 2026 The unruh-chsh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// S(r) sweeps, crossing detection and CSV/JSON output.

#ifndef UNRUH_SWEEP_HPP
#define UNRUH_SWEEP_HPP

#include <cstddef>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "unruh/wigner.hpp"

namespace unruh {

enum class OutputFormat { csv, json };

struct SweepSpec {
  double r_start = 0.0;
  double r_stop = 2.0;
  double r_step = 0.01;
  double theta = std::numbers::pi / 4.0;
  TruncationSpec trunc = TruncationSpec::fixed(3);
  Mode mode = Mode::accelerated_compat;
  BobObservables bob_observables = BobObservables::reduced;
  OutputFormat output_format = OutputFormat::csv;
  double level = 2.0;

  void validate() const;
  /// Half-open grid r_start + i·r_step, i < ceil((r_stop - r_start)/r_step).
  std::vector<double> grid() const;
  ExperimentConfig config_at(double r) const;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct SweepRow {
  double r = 0.0;
  double a_over_kc = 0.0;
  double S = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct CrossingReport {
  double r_cross = 0.0;
  double a_cross = 0.0;
  SweepRow lower;
  SweepRow upper;

  friend bool operator==(const CrossingReport&, const CrossingReport&) = default;
};

/// Evaluates every grid point; rows come back in grid order regardless of
/// `threads`.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 1);

/// First adjacent pair whose S values straddle `level`, with a_cross from
/// linear interpolation in (a_over_kc, S).
std::optional<CrossingReport> find_crossing(std::span<const SweepRow> rows,
                                            double level = 2.0);
/// Every straddling pair, in order.
std::vector<CrossingReport> find_crossings(std::span<const SweepRow> rows,
                                           double level = 2.0);

inline constexpr const char* kCsvHeader = "r,a_over_kc,S";

std::string format_csv(std::span<const SweepRow> rows);
std::string format_json(std::span<const SweepRow> rows,
                        const std::optional<CrossingReport>& crossing,
                        const SweepSpec& spec);

struct SweepDocument {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  std::optional<CrossingReport> crossing;

  friend bool operator==(const SweepDocument&, const SweepDocument&) = default;
};

SweepDocument parse_json(const std::string& text);

/// Writes in spec.output_format to `out`.
void write_output(std::ostream& out, std::span<const SweepRow> rows,
                  const std::optional<CrossingReport>& crossing, const SweepSpec& spec);
/// Writes to a file; throws IoError if it cannot be opened or written.
void write_output(const std::string& path, std::span<const SweepRow> rows,
                  const std::optional<CrossingReport>& crossing, const SweepSpec& spec);

}  // namespace unruh

#endif  // UNRUH_SWEEP_HPP
