// Copyright 2026 The pathip Authors
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

#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <unordered_map>

#include "pathip/error.hpp"
#include "pathip/instance_io.hpp"
#include "pathip/lp_format.hpp"
#include "pathip/solver.hpp"

namespace pathip {
namespace {

std::string shell_quote(const std::string& text) {
  std::string out = "'";
  for (char c : text) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

class ScratchDir {
 public:
  ScratchDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("pathip-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ignored;
    std::filesystem::remove_all(path_, ignored);
  }
  std::filesystem::path file(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace

SolveOutcome EmbeddedBackend::solve(const IpModel& model, const SolveConfig& config) const {
  return pathip::solve(model, config);
}

SolveOutcome ExternalBackend::solve(const IpModel& model, const SolveConfig& config) const {
  config.validate();
  auto start = std::chrono::steady_clock::now();
  ScratchDir dir;
  auto lp_path = dir.file("model.lp").string();
  auto sol_path = dir.file("model.sol").string();
  write_text_file(lp_path, export_lp(model));
  std::string command = command_ + " " + shell_quote(lp_path) + " " + shell_quote(sol_path);
  int rc = std::system(command.c_str());
  if (rc != 0) throw Error("external solver exited with status " + std::to_string(rc));
  SolveOutcome outcome = read_solution_file(model, read_text_file(sol_path));
  outcome.stats.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

std::unique_ptr<SolverBackend> make_backend(const std::string& spec) {
  if (spec == "embedded") return std::make_unique<EmbeddedBackend>();
  const std::string prefix = "external:";
  if (spec.rfind(prefix, 0) == 0 && spec.size() > prefix.size()) {
    return std::make_unique<ExternalBackend>(spec.substr(prefix.size()));
  }
  throw Error("unknown backend '" + spec + "'; expected embedded or external:<command>");
}

std::string write_solution_file(const IpModel& model, const SolveOutcome& outcome) {
  std::string out = "status " + to_string(outcome.status) + "\n";
  if (!outcome.has_solution()) return out;
  out += "objective " + format_number(outcome.objective) + "\n";
  const auto names = lp_names(model);
  for (int j = 0; j < model.variable_count(); ++j) {
    out += names[j] + " " + format_number(outcome.assignment[j]) + "\n";
  }
  return out;
}

SolveOutcome read_solution_file(const IpModel& model, const std::string& text) {
  const auto names = lp_names(model);
  std::unordered_map<std::string, int> id;
  for (int j = 0; j < model.variable_count(); ++j) id.emplace(names[j], j);

  SolveOutcome outcome;
  bool have_status = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    std::string value;
    if (!(fields >> value)) throw ParseError("missing value", line_no, key);
    if (key == "status") {
      try {
        outcome.status = outcome_status_from_string(value);
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no, key);
      }
      have_status = true;
      if (outcome.has_solution()) outcome.assignment.assign(model.variable_count(), 0.0);
      continue;
    }
    char* end = nullptr;
    double number = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size()) throw ParseError("malformed number", line_no, key);
    if (key == "objective") {
      outcome.objective = number;
      continue;
    }
    if (key == "bound") {
      outcome.bound = number;
      continue;
    }
    auto it = id.find(key);
    if (it == id.end()) throw ParseError("unknown variable", line_no, key);
    if (!outcome.has_solution()) throw ParseError("values given without a solution", line_no, key);
    outcome.assignment[it->second] = number;
  }
  if (!have_status) throw ParseError("missing status line", line_no, "status");
  if (outcome.has_solution()) {
    outcome.objective = model.evaluate(outcome.assignment);
    outcome.bound = outcome.status == OutcomeStatus::kOptimal ? outcome.objective : outcome.bound;
  }
  return outcome;
}

}  // namespace pathip
