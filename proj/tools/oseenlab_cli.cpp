// Copyright 2026 The oseenlab Authors.
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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "oseenlab/csv.hpp"
#include "oseenlab/harness.hpp"

namespace {

struct Common {
  std::string config;
  std::string out;
  std::vector<std::string> set;
  long long seed = -1;
  int threads = 0;
};

oseenlab::ExperimentConfig build_config(oseenlab::Experiment e, const Common& c) {
  std::ostringstream text;
  if (!c.config.empty()) {
    std::ifstream in(c.config);
    if (!in) throw std::runtime_error("cannot open config " + c.config);
    text << in.rdbuf() << '\n';
  } else {
    text << "experiment = " << oseenlab::to_string(e) << '\n';
  }
  for (const auto& kv : c.set) text << kv << '\n';
  std::istringstream in(text.str());
  oseenlab::ExperimentConfig cfg = oseenlab::parse_config(in);
  if (cfg.experiment != e) {
    throw std::invalid_argument("config describes '" + oseenlab::to_string(cfg.experiment) + "', not '" +
                                oseenlab::to_string(e) + "'");
  }
  if (c.seed >= 0) cfg.seed = static_cast<std::uint64_t>(c.seed);
  if (!c.out.empty()) cfg.output = c.out;
  cfg.validate();
  return cfg;
}

void print_report(const oseenlab::ExperimentReport& rep) {
  for (const auto& [k, v] : rep.summary) std::cout << k << " = " << oseenlab::format_double(v) << '\n';
  for (const auto& a : rep.assertions) std::cout << (a.passed ? "PASS " : "FAIL ") << a.name << ": " << a.detail << '\n';
}

void write_outputs(const oseenlab::ExperimentReport& rep, const std::filesystem::path& out) {
  if (out.empty()) {
    oseenlab::emit_csv(rep, std::cout);
    return;
  }
  if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
  oseenlab::emit_csv(rep, out);
  auto dat = out;
  std::ofstream d(dat.replace_extension(".dat"));
  oseenlab::emit_dat(rep, d);
  auto sum = out;
  sum.replace_filename(out.stem().string() + "_summary.csv");
  std::ofstream s(sum);
  oseenlab::emit_summary_csv(rep, s);
  if (!d || !s) throw std::runtime_error("cannot write outputs next to " + out.string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oseen flow experiments: scaling sweeps, ensembles, manufactured solutions and Picard runs"};
  app.require_subcommand(1);

  Common common;
  int status = 0;
  const oseenlab::Experiment all[] = {oseenlab::Experiment::MMS,          oseenlab::Experiment::ScalingSteady,
                                      oseenlab::Experiment::ScalingTP,    oseenlab::Experiment::BilinearEnsemble,
                                      oseenlab::Experiment::PicardSteady, oseenlab::Experiment::PicardTP,
                                      oseenlab::Experiment::LiftingCheck};
  for (const auto e : all) {
    auto* sub = app.add_subcommand(oseenlab::to_string(e), "Run the " + oseenlab::to_string(e) + " experiment");
    sub->add_option("--config", common.config, "Key = value experiment file")->check(CLI::ExistingFile);
    sub->add_option("--out", common.out, "CSV path; .dat and _summary.csv are written next to it");
    sub->add_option("--seed", common.seed, "Override the seed")->check(CLI::NonNegativeNumber);
    sub->add_option("--threads", common.threads, "Worker threads (0: default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--set", common.set, "Extra 'key = value' line, applied after the file");
    sub->callback([e, &common, &status] {
      oseenlab::set_thread_count(common.threads);
      const auto cfg = build_config(e, common);
      const auto rep = oseenlab::run_experiment(cfg);
      write_outputs(rep, cfg.output);
      print_report(rep);
      status = rep.passed() ? 0 : 1;
    });
  }

  int n = 3;
  double q = 4.0, r = 2.0;
  auto* ex = app.add_subcommand("exponents", "Print the exponent profile of (n, q, r)");
  ex->add_option("--n", n, "Dimension")->check(CLI::IsMember({2, 3}));
  ex->add_option("--q", q, "Integrability of the strong norms");
  ex->add_option("--r", r, "Integrability of the weak norms");
  ex->callback([&] {
    const auto rep = oseenlab::exponent_table(n, q, r);
    oseenlab::emit_csv(rep, std::cout);
    print_report(rep);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
