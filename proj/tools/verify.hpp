#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace soleknot::verify {

struct Options {
  std::uint64_t seed = 1;
  /// `default` or `quick`.
  std::string corpus = "default";
  std::uint64_t budget = 1'000'000;
};

struct Report {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
};

/// Records one checked case; keeps the first few failure messages.
class Recorder {
public:
  explicit Recorder(Report &r) : r_(r) {}
  void check(bool ok, const std::string &what);
  template <class F> void guard(const std::string &what, F &&fn) {
    try {
      fn();
    } catch (const std::exception &e) {
      check(false, what + ": " + e.what());
    }
  }

private:
  Report &r_;
};

using Suite = std::function<void(const Options &, Recorder &)>;

std::map<std::string, Suite> default_suites();

/// Runs the named suites (all when `only` is empty). Results are ordered by
/// suite name. An exception escaping a suite counts as a failure.
std::vector<Report> run(const std::map<std::string, Suite> &suites, const Options &opts,
                        const std::vector<std::string> &only = {});

/// One line per suite; returns 0 when every suite passed and 2 otherwise.
int print(const std::vector<Report> &reports, std::ostream &out, bool structured);

} // namespace soleknot::verify
