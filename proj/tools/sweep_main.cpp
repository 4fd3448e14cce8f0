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

// sweep: tabulate the CHSH value S against acceleration.
//
// Exit codes: 0 success, 2 usage error, 3 I/O error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "unruh/sweep.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kIoError = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sweep the CHSH value S of the accelerated Wigner's-friend Bell test over r"};
  app.name("sweep");

  std::string mode = "compat";
  std::string bob_obs;
  std::optional<std::size_t> n_max;
  std::optional<double> epsilon;
  unruh::SweepSpec spec;
  std::string format = "csv";
  std::string out_path;
  bool want_crossing = false;

  app.add_option("--mode", mode, "State construction")
      ->check(CLI::IsMember({"compat", "faithful"}))
      ->capture_default_str();
  auto* bob_opt = app.add_option("--bob-obs", bob_obs, "Bob's observables (faithful mode)")
                      ->check(CLI::IsMember({"global", "reduced"}));
  auto* n_opt = app.add_option("--n-max", n_max, "Fixed Fock truncation N (default 3)")
                    ->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  auto* eps_opt = app.add_option("--epsilon", epsilon,
                                 "Pick N per point as the smallest with tanh^N r < epsilon");
  n_opt->excludes(eps_opt);
  app.add_option("--theta", spec.theta, "State angle in radians")->capture_default_str();
  app.add_option("--r-start", spec.r_start, "First squeeze parameter")->capture_default_str();
  app.add_option("--r-stop", spec.r_stop, "Grid end (exclusive)")->capture_default_str();
  app.add_option("--r-step", spec.r_step, "Grid spacing")->capture_default_str();
  app.add_option("--level", spec.level, "Crossing level for --find-crossing")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Output file (default: standard output)");
  app.add_flag("--find-crossing", want_crossing, "Report where S crosses the level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  std::vector<unruh::SweepRow> rows;
  std::optional<unruh::CrossingReport> crossing;
  try {
    spec.mode = mode == "faithful" ? unruh::Mode::accelerated_faithful
                                   : unruh::Mode::accelerated_compat;
    if (!bob_opt->empty()) {
      if (spec.mode != unruh::Mode::accelerated_faithful)
        throw unruh::ArgumentError("--bob-obs requires --mode faithful");
      spec.bob_observables =
          bob_obs == "global" ? unruh::BobObservables::global : unruh::BobObservables::reduced;
    }
    if (n_max) spec.trunc = unruh::TruncationSpec::fixed(*n_max);
    if (epsilon) {
      spec.trunc = unruh::TruncationSpec::from_epsilon(*epsilon);
      if (spec.trunc.below_stability_floor())
        std::cerr << "warning: epsilon " << *epsilon << " is below "
                  << unruh::kEpsilonStabilityFloor
                  << "; S(a) is known to become unstable there\n";
    }
    spec.output_format = format == "json" ? unruh::OutputFormat::json : unruh::OutputFormat::csv;
    spec.validate();

    rows = unruh::run_sweep(spec, std::max(1u, std::thread::hardware_concurrency()));
    if (want_crossing) {
      crossing = unruh::find_crossing(rows, spec.level);
      if (crossing) {
        std::fprintf(stderr,
                     "crossing: S=%.9g at r=%.9g a_over_kc=%.9g (between r=%.9g and r=%.9g)\n",
                     spec.level, crossing->r_cross, crossing->a_cross, crossing->lower.r,
                     crossing->upper.r);
      } else {
        std::fprintf(stderr, "crossing: none at S=%.9g\n", spec.level);
      }
    }
  } catch (const unruh::ArgumentError& e) {
    std::cerr << "sweep: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (out_path.empty()) {
      unruh::write_output(std::cout, rows, crossing, spec);
      std::cout.flush();
    } else {
      unruh::write_output(out_path, rows, crossing, spec);
    }
  } catch (const unruh::IoError& e) {
    std::cerr << "sweep: " << e.what() << "\n";
    return kIoError;
  }
  return 0;
}
