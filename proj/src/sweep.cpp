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

#include "unruh/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace unruh {
namespace {

using ordered_json = nlohmann::ordered_json;

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::inertial: return "inertial";
    case Mode::accelerated_compat: return "compat";
    case Mode::accelerated_faithful: return "faithful";
  }
  return "?";
}

Mode mode_from_name(const std::string& s) {
  if (s == "compat") return Mode::accelerated_compat;
  if (s == "faithful") return Mode::accelerated_faithful;
  if (s == "inertial") return Mode::inertial;
  throw ArgumentError("unknown mode '" + s + "'");
}

const char* bob_name(BobObservables b) {
  return b == BobObservables::global ? "global" : "reduced";
}

BobObservables bob_from_name(const std::string& s) {
  if (s == "global") return BobObservables::global;
  if (s == "reduced") return BobObservables::reduced;
  throw ArgumentError("unknown bob_observables '" + s + "'");
}

ordered_json row_json(const SweepRow& row) {
  return ordered_json{{"r", row.r}, {"a_over_kc", row.a_over_kc}, {"S", row.S}};
}

SweepRow row_from_json(const ordered_json& j) {
  return {j.at("r").get<double>(), j.at("a_over_kc").get<double>(), j.at("S").get<double>()};
}

ordered_json spec_json(const SweepSpec& spec) {
  ordered_json trunc;
  if (spec.trunc.kind() == TruncationSpec::Kind::fixed) {
    trunc = {{"kind", "fixed"}, {"n_max", spec.trunc.n()}};
  } else {
    trunc = {{"kind", "epsilon"}, {"epsilon", spec.trunc.epsilon()}};
  }
  return ordered_json{{"mode", mode_name(spec.mode)},
                      {"bob_observables", bob_name(spec.bob_observables)},
                      {"truncation", trunc},
                      {"theta", spec.theta},
                      {"r_start", spec.r_start},
                      {"r_stop", spec.r_stop},
                      {"r_step", spec.r_step},
                      {"level", spec.level},
                      {"output_format", spec.output_format == OutputFormat::csv ? "csv" : "json"}};
}

SweepSpec spec_from_json(const ordered_json& j) {
  SweepSpec spec;
  spec.mode = mode_from_name(j.at("mode").get<std::string>());
  spec.bob_observables = bob_from_name(j.at("bob_observables").get<std::string>());
  const auto& trunc = j.at("truncation");
  const auto kind = trunc.at("kind").get<std::string>();
  if (kind == "fixed") {
    spec.trunc = TruncationSpec::fixed(trunc.at("n_max").get<std::size_t>());
  } else if (kind == "epsilon") {
    spec.trunc = TruncationSpec::from_epsilon(trunc.at("epsilon").get<double>());
  } else {
    throw ArgumentError("unknown truncation kind '" + kind + "'");
  }
  spec.theta = j.at("theta").get<double>();
  spec.r_start = j.at("r_start").get<double>();
  spec.r_stop = j.at("r_stop").get<double>();
  spec.r_step = j.at("r_step").get<double>();
  spec.level = j.at("level").get<double>();
  const auto fmt = j.at("output_format").get<std::string>();
  if (fmt != "csv" && fmt != "json") throw ArgumentError("unknown output_format '" + fmt + "'");
  spec.output_format = fmt == "csv" ? OutputFormat::csv : OutputFormat::json;
  return spec;
}

}  // namespace

void SweepSpec::validate() const {
  if (!std::isfinite(r_start) || !std::isfinite(r_stop) || !std::isfinite(r_step))
    throw ArgumentError("sweep: grid bounds must be finite");
  if (r_start < 0.0) throw ArgumentError("sweep: r_start must be >= 0");
  if (!(r_step > 0.0)) throw ArgumentError("sweep: r_step must be > 0");
  if (!(r_start < r_stop)) throw ArgumentError("sweep: r_start must be < r_stop");
  if (!std::isfinite(theta)) throw ArgumentError("sweep: theta must be finite");
  if (!std::isfinite(level)) throw ArgumentError("sweep: level must be finite");
  if (mode == Mode::inertial) throw ArgumentError("sweep: mode must be compat or faithful");
  if (mode != Mode::accelerated_faithful && bob_observables == BobObservables::global)
    throw ArgumentError("sweep: bob_observables=global applies to faithful mode only");
}

std::vector<double> SweepSpec::grid() const {
  validate();
  const auto count = static_cast<std::size_t>(std::ceil((r_stop - r_start) / r_step));
  std::vector<double> r(count);
  for (std::size_t i = 0; i < count; ++i) r[i] = r_start + static_cast<double>(i) * r_step;
  return r;
}

ExperimentConfig SweepSpec::config_at(double r) const {
  ExperimentConfig config;
  config.theta = theta;
  config.trunc = trunc;
  config.r = SqueezeParameter(r);
  config.mode = mode;
  config.bob_observables = bob_observables;
  return config;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads) {
  const std::vector<double> grid = spec.grid();
  std::vector<SweepRow> rows(grid.size());

  auto evaluate = [&](std::size_t i) {
    const double r = grid[i];
    rows[i] = {r, acceleration_from_squeeze(SqueezeParameter(r)).value(),
               chsh(spec.config_at(r)).S};
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(grid.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) evaluate(i);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < grid.size(); i = next++) {
        try {
          evaluate(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<CrossingReport> find_crossings(std::span<const SweepRow> rows, double level) {
  if (rows.size() < 2) throw ArgumentError("find_crossing: need at least 2 rows");
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i - 1].r <= rows[i].r))
      throw ArgumentError("find_crossing: rows must be sorted by ascending r");

  std::vector<CrossingReport> found;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double lo = rows[i].S - level;
    const double hi = rows[i + 1].S - level;
    // A row sitting exactly on the level counts as the lower side.
    if ((lo > 0.0) == (hi > 0.0)) continue;
    const double frac = lo / (lo - hi);
    CrossingReport report;
    report.a_cross = rows[i].a_over_kc + frac * (rows[i + 1].a_over_kc - rows[i].a_over_kc);
    report.r_cross = squeeze_from_acceleration(AccelerationRatio(report.a_cross)).value();
    report.lower = rows[i];
    report.upper = rows[i + 1];
    found.push_back(report);
  }
  return found;
}

std::optional<CrossingReport> find_crossing(std::span<const SweepRow> rows, double level) {
  auto all = find_crossings(rows, level);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::string format_csv(std::span<const SweepRow> rows) {
  std::string out = kCsvHeader;
  out += '\n';
  char line[96];
  for (const SweepRow& row : rows) {
    std::snprintf(line, sizeof line, "%.9g,%.9g,%.9g\n", row.r, row.a_over_kc, row.S);
    out += line;
  }
  return out;
}

std::string format_json(std::span<const SweepRow> rows,
                        const std::optional<CrossingReport>& crossing,
                        const SweepSpec& spec) {
  ordered_json doc;
  doc["spec"] = spec_json(spec);
  ordered_json arr = ordered_json::array();
  for (const SweepRow& row : rows) arr.push_back(row_json(row));
  doc["rows"] = std::move(arr);
  if (crossing) {
    doc["crossing"] = {{"r_cross", crossing->r_cross},
                       {"a_cross", crossing->a_cross},
                       {"lower", row_json(crossing->lower)},
                       {"upper", row_json(crossing->upper)}};
  } else {
    doc["crossing"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

SweepDocument parse_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("parse_json: ") + e.what());
  }
  SweepDocument out;
  try {
    out.spec = spec_from_json(doc.at("spec"));
    for (const auto& row : doc.at("rows")) out.rows.push_back(row_from_json(row));
    const auto& c = doc.at("crossing");
    if (!c.is_null()) {
      out.crossing = CrossingReport{c.at("r_cross").get<double>(), c.at("a_cross").get<double>(),
                                    row_from_json(c.at("lower")), row_from_json(c.at("upper"))};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("parse_json: ") + e.what());
  }
  return out;
}

void write_output(std::ostream& out, std::span<const SweepRow> rows,
                  const std::optional<CrossingReport>& crossing, const SweepSpec& spec) {
  if (rows.empty()) throw ArgumentError("write_output: no rows");
  out << (spec.output_format == OutputFormat::csv ? format_csv(rows)
                                                  : format_json(rows, crossing, spec));
  if (!out) throw IoError("write_output: stream write failed");
}

void write_output(const std::string& path, std::span<const SweepRow> rows,
                  const std::optional<CrossingReport>& crossing, const SweepSpec& spec) {
  if (rows.empty()) throw ArgumentError("write_output: no rows");
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write_output(file, rows, crossing, spec);
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace unruh
