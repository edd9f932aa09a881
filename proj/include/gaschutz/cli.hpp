#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace gaschutz {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitError = 2 };

/// Ordered key/value report, printed one "key: value" per line.
class Report {
public:
  void add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }
  const std::vector<std::pair<std::string, std::string>> &entries() const { return entries_; }
  /// First value stored under key, or empty.
  std::string get(const std::string &key) const;
  void print(std::ostream &out) const;

private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Runs one command line (args excludes the program name), printing the
/// report to `out` and usage/parse diagnostics to `err`. Returns the exit
/// status.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace gaschutz
