// Copyright 2026 The Rubicon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rubicon: command-line front end over the librubicon C API.
//
// Exit codes: 0 success with every check passing, 1 a violation,
// falsification or undecided check was found, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rubicon/rubicon.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int status_exit(rubicon_status s) {
  std::cerr << "rubicon: " << rubicon_last_error() << "\n";
  return s == RUBICON_ERROR_FALSIFIED ? kExitFailed : kExitUsage;
}

// Flags are forwarded verbatim; the library applies defaults and validation.
struct Forwarded {
  std::map<std::string, std::optional<std::string>> values;

  void add(CLI::App* app, const std::string& name, const std::string& help) {
    app->add_option("--" + name, values[name], help);
  }
};

int run_config(const std::string& command, const Forwarded& flags,
               unsigned long long seed, const std::string& out_path,
               const std::string& worst_out) {
  Json params = Json::object();
  for (const auto& [k, v] : flags.values) {
    if (v) params[k] = *v;
  }
  Json cfg{{"command", command}, {"seed", seed}, {"output", out_path},
           {"params", params}};
  char* report = nullptr;
  int passed = 0;
  const rubicon_status s = rubicon_run(cfg.dump().c_str(), &report, &passed);
  if (s != RUBICON_OK) return status_exit(s);
  const std::string text(report);
  rubicon_string_free(report);
  write_output(out_path, text);

  if (!worst_out.empty()) {
    const Json doc = Json::parse(text);
    const Json& worst = doc["result"]["worst_case"];
    if (worst.is_null()) throw UsageError("report has no worst-case instance");
    Json poly = worst["tested"];
    poly["schema_version"] = doc["schema_version"];
    poly["source"] = Json{{"campaign", doc["result"]["campaign"]},
                          {"trial", worst["trial"]},
                          {"trial_seed", worst["trial_seed"]}};
    write_output(worst_out, poly.dump(2) + "\n");
  }
  return passed ? kExitOk : kExitFailed;
}

int run_roots_csv(const std::string& input, const std::string& out_path) {
  rubicon_poly* poly = nullptr;
  rubicon_status s = rubicon_poly_from_json(input.c_str(), &poly);
  if (s != RUBICON_OK) return status_exit(s);
  rubicon_roots* roots = nullptr;
  s = rubicon_roots_solve(poly, &roots);
  rubicon_poly_free(poly);
  if (s != RUBICON_OK) return status_exit(s);

  std::string csv = "index,re,im,modulus,residual\n";
  char line[160];
  for (size_t i = 0; i < rubicon_roots_count(roots); ++i) {
    double re = 0, im = 0, res = 0;
    rubicon_roots_get(roots, i, &re, &im, &res);
    std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g,%.17g\n", i, re, im,
                  std::hypot(re, im), res);
    csv += line;
  }
  const bool converged = rubicon_roots_converged(roots) != 0;
  rubicon_roots_free(roots);
  write_output(out_path, csv);
  if (!converged) std::cerr << "rubicon: root iteration did not converge\n";
  return converged ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-free radii for perturbed binomial-basis polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rubicon_version()));

  std::string out_path;
  unsigned long long seed = 0;

  auto* bound = app.add_subcommand("bound", "Best certified zero-free radius");
  Forwarded bound_flags;
  bound_flags.add(bound, "R", "all zeros of f satisfy |z| > R");
  bound_flags.add(bound, "n", "degree");
  bound_flags.add(bound, "p", "number of perturbed top coefficients");
  bound_flags.add(bound, "eps-max", "bound on |eps_k|");
  bound->add_option("--out", out_path, "output file (default stdout)");

  auto* roots = app.add_subcommand("roots", "All roots of a polynomial");
  std::string roots_in = "-";
  bool csv = false;
  roots->add_option("--in,input", roots_in, "polynomial JSON file, - for stdin");
  roots->add_flag("--csv", csv, "emit index,re,im,modulus,residual rows");
  roots->add_option("--out", out_path, "output file (default stdout)");

  auto* compose = app.add_subcommand("compose", "Coefficient-wise composition");
  std::string compose_a, compose_b;
  Forwarded compose_flags;
  compose->add_option("--a", compose_a, "first factor (polynomial JSON)")->required();
  compose->add_option("--b", compose_b, "second factor (polynomial JSON)")->required();
  compose_flags.add(compose, "basis", "output basis: binomial or power");
  compose->add_option("--out", out_path, "output file (default stdout)");

  auto* ineq = app.add_subcommand("ineq", "Exact inequality scans");
  Forwarded ineq_flags;
  ineq_flags.add(ineq, "check",
                 "biernacki|biernacki-upper|lemma2-1|lemma2-2|ratio|counterexample");
  ineq_flags.add(ineq, "n-max", "largest n scanned (default 60)");
  ineq_flags.add(ineq, "q-max", "largest q for the counterexample scan (default 50)");
  ineq->add_option("--out", out_path, "output file (default stdout)");

  auto* fuzz = app.add_subcommand("fuzz", "Monte-Carlo falsification campaign");
  Forwarded fuzz_flags;
  std::string worst_out;
  fuzz_flags.add(fuzz, "theorem", "1|2|lemma1|szego|coincidence");
  fuzz_flags.add(fuzz, "trials", "number of trials");
  fuzz_flags.add(fuzz, "n", "degree (maximum degree for coincidence)");
  fuzz_flags.add(fuzz, "p", "number of perturbed top coefficients");
  fuzz_flags.add(fuzz, "R", "zero-free radius of the base polynomial");
  fuzz_flags.add(fuzz, "eps", "|eps| for the lemma1 campaign");
  fuzz_flags.add(fuzz, "eps-max", "bound on |eps_k| for theorems 1 and 2");
  fuzz_flags.add(fuzz, "r1", "szego: radius for the first factor");
  fuzz_flags.add(fuzz, "r2", "szego: radius for the second factor");
  fuzz_flags.add(fuzz, "margin", "generator margin above R");
  fuzz->add_option("--seed", seed, "campaign seed");
  fuzz->add_option("--out", out_path, "report file (default stdout)");
  fuzz->add_option("--worst-out", worst_out, "dump the worst instance as polynomial JSON");

  auto* sharp = app.add_subcommand("sharpness", "Adversarial search on (1+z/R)^n");
  Forwarded sharp_flags;
  sharp_flags.add(sharp, "n", "degree");
  sharp_flags.add(sharp, "p", "number of perturbed top coefficients");
  sharp_flags.add(sharp, "R", "radius scale");
  sharp_flags.add(sharp, "restarts", "random restarts");
  sharp_flags.add(sharp, "iterations", "coordinate sweeps per restart");
  sharp->add_option("--seed", seed, "search seed");
  sharp->add_option("--out", out_path, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "rubicon: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*bound) return run_config("bound", bound_flags, 0, out_path, "");
    if (*roots) {
      const std::string input = read_input(roots_in);
      if (csv) return run_roots_csv(input, out_path);
      Forwarded f;
      f.values["poly"] = input;
      return run_config("roots", f, 0, out_path, "");
    }
    if (*compose) {
      compose_flags.values["a"] = read_input(compose_a);
      compose_flags.values["b"] = read_input(compose_b);
      return run_config("compose", compose_flags, 0, out_path, "");
    }
    if (*ineq) return run_config("ineq", ineq_flags, 0, out_path, "");
    if (*fuzz) return run_config("fuzz", fuzz_flags, seed, out_path, worst_out);
    if (*sharp) return run_config("sharpness", sharp_flags, seed, out_path, "");
  } catch (const UsageError& e) {
    std::cerr << "rubicon: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "rubicon: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
