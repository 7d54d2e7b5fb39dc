#pragma once

// Always-on assertion harness for the subprocess-driven test binaries: each
// named case prints exactly one PASS or FAIL line, and one failing case never
// hides the others.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace harness {

struct failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define HARNESS_STR_INNER(x) #x
#define HARNESS_STR(x) HARNESS_STR_INNER(x)

#define REQUIRE(cond)                                                              \
  do {                                                                             \
    if (!(cond)) {                                                                 \
      throw harness::failure(__FILE__ ":" HARNESS_STR(__LINE__) ": failed: " #cond); \
    }                                                                              \
  } while (0)

#define REQUIRE_MSG(cond, msg)                                                \
  do {                                                                        \
    if (!(cond)) {                                                            \
      std::ostringstream harness_oss;                                         \
      harness_oss << __FILE__ ":" HARNESS_STR(__LINE__) ": failed: " #cond    \
                  << " (" << msg << ")";                                      \
      throw harness::failure(harness_oss.str());                              \
    }                                                                         \
  } while (0)

#define REQUIRE_NEAR(actual, expected, tol)                                          \
  do {                                                                               \
    const double harness_a = (actual);                                               \
    const double harness_e = (expected);                                             \
    const double harness_t = (tol);                                                  \
    if (!(std::fabs(harness_a - harness_e) <= harness_t)) {                          \
      std::ostringstream harness_oss;                                                \
      harness_oss << __FILE__ ":" HARNESS_STR(__LINE__) ": " #actual " = "           \
                  << harness_a << " differs from " << harness_e << " by "            \
                  << std::fabs(harness_a - harness_e) << " (tolerance " << harness_t \
                  << ")";                                                            \
      throw harness::failure(harness_oss.str());                                     \
    }                                                                                \
  } while (0)

class Runner {
 public:
  void add(std::string name, std::function<void()> body) {
    cases_.emplace_back(std::move(name), std::move(body));
  }

  // Runs every case; returns the process exit code.
  int run() {
    int failed = 0;
    for (const auto& [name, body] : cases_) {
      try {
        body();
        std::printf("PASS %s\n", name.c_str());
      } catch (const std::exception& e) {
        ++failed;
        std::printf("FAIL %s: %s\n", name.c_str(), e.what());
      }
      std::fflush(stdout);
    }
    if (failed > 0) std::printf("%d of %zu cases failed\n", failed, cases_.size());
    return failed == 0 ? 0 : 1;
  }

 private:
  std::vector<std::pair<std::string, std::function<void()>>> cases_;
};

}  // namespace harness
