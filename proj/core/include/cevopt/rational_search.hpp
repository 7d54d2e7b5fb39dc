#pragma once

#include "cevopt/cubic.hpp"
#include "cevopt/scalar.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cevopt {

// Filesystem failures and malformed checkpoint data; mapped to a dedicated
// process exit code by the CLI.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CellStatus {
  ok,                // candidates enumerated and tested exhaustively
  identically_zero,  // the cubic vanishes identically; 0/1 recorded as representative
  aborted,           // enumeration exceeded the resource guard; nothing certified
};

std::string_view to_string(CellStatus status);
CellStatus cell_status_from_string(std::string_view text);

inline constexpr std::uint64_t kDefaultCandidateLimit = 100000000;

// Rational-root-theorem candidate set for the (k, m) cell's cubic: every
// rational zero p/r in lowest terms must have p dividing the constant term
// and r dividing the leading coefficient, both taken after stripping zero
// coefficients at either end. Zero is included iff the constant term
// vanishes. Values are sorted and deduplicated.
struct CandidateSet {
  CellStatus status = CellStatus::ok;
  std::vector<Rational> values;
  std::string diagnostic;
};

CandidateSet candidate_set(long long k, long long m,
                           std::uint64_t limit = kDefaultCandidateLimit);

struct CellResult {
  long long k = 0;
  long long m = 0;
  CellStatus status = CellStatus::ok;
  std::vector<Rational> zeros;  // certified exact zeros, ascending
  std::uint64_t candidates_tested = 0;
  std::string diagnostic;
};

// Tests every candidate exactly: the expanded and factored integer forms of
// r^3 q(p/r) are evaluated independently and must agree; a certified zero is
// one where both vanish.
CellResult analyze_cell(long long k, long long m,
                        std::uint64_t limit = kDefaultCandidateLimit);

// Just the certified zeros of the (k, m) cell.
std::vector<Rational> rational_zeros(long long k, long long m);

struct SearchHit {
  long long k = 0;
  long long m = 0;
  Rational zero;
  bool in_interval = false;  // 0 < zero < 1/k exactly; false when k = 0
};

struct SearchReport {
  long long k_max = 0;
  long long m_max = 0;
  std::vector<CellResult> cells;  // row-major: k = 0..k_max, then m = 0..m_max
  std::vector<SearchHit> hits;    // ordered by (k, m, zero)
  std::vector<SearchHit> open_question_hits;  // hits with k > 1 and m > 1
  std::uint64_t candidates_tested = 0;
  double duration_seconds = 0.0;  // in-memory diagnostic; never serialized
};

// One checkpoint record: "k,m,status,zeros" with zeros ";"-separated in
// lowest terms, LF-terminated. candidates_tested is not stored; it is
// recounted from the candidate set on load.
std::string to_checkpoint_line(const CellResult& cell);
CellResult parse_checkpoint_line(const std::string& line);

// Scans the full grid k = 0..k_max, m = 0..m_max. When `checkpoint_path` is
// nonempty, previously completed cells are loaded from it (their zeros are
// re-certified) and newly completed cells are appended after each row, so an
// interrupted scan resumes where it stopped. The assembled report depends
// only on (k_max, m_max), not on thread count or resume history.
SearchReport search_grid(long long k_max, long long m_max,
                         const std::string& checkpoint_path = {});

}  // namespace cevopt
