#pragma once

// Golden-file harness for the command-line front end. Each line of
// golden/cases.txt is "name | args"; the command runs in-process from the
// golden directory and its stdout, stderr and exit code are compared byte for
// byte with golden/expected/<name>.{stdout,stderr,code}. Setting
// UPDATE_GOLDEN=1 rewrites the expected files instead.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "enriques/cli/app.hpp"

namespace enriques::testing {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

struct GoldenResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline std::filesystem::path golden_dir() { return GOLDEN_DIR; }

inline std::vector<GoldenCase> load_golden_cases() {
  std::ifstream in(golden_dir() / "cases.txt");
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find(" | ");
    if (bar == std::string::npos) continue;
    GoldenCase c;
    c.name = line.substr(0, bar);
    c.args.push_back("enriques");
    std::istringstream words(line.substr(bar + 3));
    for (std::string w; words >> w;) c.args.push_back(w);
    cases.push_back(std::move(c));
  }
  return cases;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void spit(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

inline GoldenResult run_golden_case(const GoldenCase& c) {
  const auto previous = std::filesystem::current_path();
  std::filesystem::current_path(golden_dir());
  std::ostringstream out, err;
  const int code = enriques::cli::run(c.args, out, err);
  std::filesystem::current_path(previous);

  const std::filesystem::path base = golden_dir() / "expected" / c.name;
  const std::string code_text = std::to_string(code) + "\n";
  const char* update = std::getenv("UPDATE_GOLDEN");
  if (update && std::string(update) == "1") {
    spit(base.string() + ".stdout", out.str());
    spit(base.string() + ".stderr", err.str());
    spit(base.string() + ".code", code_text);
    return {c.name, true, "updated"};
  }
  if (!std::filesystem::exists(base.string() + ".code")) return {c.name, false, "missing fixture"};
  if (slurp(base.string() + ".code") != code_text) return {c.name, false, "exit code " + std::to_string(code)};
  if (slurp(base.string() + ".stdout") != out.str()) return {c.name, false, "stdout differs:\n" + out.str()};
  if (slurp(base.string() + ".stderr") != err.str()) return {c.name, false, "stderr differs:\n" + err.str()};
  return {c.name, true, ""};
}

}  // namespace enriques::testing
