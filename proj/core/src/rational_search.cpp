#include "cevopt/rational_search.hpp"

#include "cevopt/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace cevopt {

namespace {

struct EffortExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kFactoringStepLimit = 1u << 26;

// All positive divisors of n > 0 via trial division, with a step budget so a
// pathological input aborts the cell instead of hanging the scan.
std::vector<Int> divisors(Int n) {
  std::vector<std::pair<Int, unsigned>> factors;
  std::uint64_t steps = 0;
  Int d = 2;
  while (d * d <= n) {
    if (++steps > kFactoringStepLimit) {
      throw EffortExceeded("factoring effort exceeded while enumerating divisors");
    }
    if (n % d == 0) {
      unsigned count = 0;
      while (n % d == 0) {
        n /= d;
        ++count;
      }
      factors.emplace_back(d, count);
    }
    ++d;
  }
  if (n > 1) factors.emplace_back(n, 1);

  std::vector<Int> result{Int(1)};
  for (const auto& [prime, count] : factors) {
    const std::size_t base = result.size();
    Int power = 1;
    for (unsigned e = 1; e <= count; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * power);
    }
  }
  return result;
}

bool certified_zero(const CubicPoly& poly, const Rational& value) {
  const Int p = boost::multiprecision::numerator(value);
  const Int r = boost::multiprecision::denominator(value);
  const Int expanded = eval_scaled_expanded(poly, p, r);
  const Int factored = eval_scaled_factored(poly, p, r);
  if (expanded != factored) {
    throw std::logic_error("expanded and factored cubic forms disagree at " +
                           to_fraction_string(value));
  }
  return expanded == 0;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    if (end == std::string::npos) {
      parts.push_back(text.substr(begin));
      return parts;
    }
    parts.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
}

}  // namespace

std::string_view to_string(CellStatus status) {
  switch (status) {
    case CellStatus::ok:
      return "ok";
    case CellStatus::identically_zero:
      return "identically_zero";
    case CellStatus::aborted:
      return "aborted";
  }
  throw std::logic_error("unknown cell status");
}

CellStatus cell_status_from_string(std::string_view text) {
  if (text == "ok") return CellStatus::ok;
  if (text == "identically_zero") return CellStatus::identically_zero;
  if (text == "aborted") return CellStatus::aborted;
  throw io_error("unknown cell status: '" + std::string(text) + "'");
}

CandidateSet candidate_set(long long k, long long m, std::uint64_t limit) {
  const CubicPoly poly = critical_cubic(k, m);
  CandidateSet out;
  if (poly.is_identically_zero()) {
    out.status = CellStatus::identically_zero;
    out.values = {Rational(0)};
    out.diagnostic = "all coefficients vanish; 0/1 recorded as representative";
    return out;
  }

  // Strip zero coefficients: leading ones lower the degree, trailing ones
  // are roots at the origin and are deflated away.
  std::vector<Int> coeffs{poly.a3, poly.a2, poly.a1, poly.a0};
  std::size_t first = 0;
  while (coeffs[first] == 0) ++first;  // a nonzero coefficient exists
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(first));
  bool zero_at_origin = false;
  while (coeffs.back() == 0) {
    coeffs.pop_back();
    zero_at_origin = true;
  }

  std::set<Rational> values;
  if (zero_at_origin) values.insert(Rational(0));
  if (coeffs.size() >= 2) {
    const Int lead = coeffs.front() < 0 ? Int(-coeffs.front()) : coeffs.front();
    const Int constant = coeffs.back() < 0 ? Int(-coeffs.back()) : coeffs.back();
    std::vector<Int> numerators;
    std::vector<Int> denominators;
    try {
      numerators = divisors(constant);
      denominators = divisors(lead);
    } catch (const EffortExceeded& e) {
      out.status = CellStatus::aborted;
      out.diagnostic = e.what();
      return out;
    }
    const std::uint64_t estimate =
        2 * static_cast<std::uint64_t>(numerators.size()) *
            static_cast<std::uint64_t>(denominators.size()) +
        (zero_at_origin ? 1 : 0);
    if (estimate > limit) {
      std::ostringstream msg;
      msg << "candidate count " << estimate << " exceeds the limit " << limit;
      out.status = CellStatus::aborted;
      out.diagnostic = msg.str();
      return out;
    }
    for (const Int& p : numerators) {
      for (const Int& r : denominators) {
        if (boost::multiprecision::gcd(p, r) != 1) continue;
        values.insert(Rational(p, r));
        values.insert(Rational(-p, r));
      }
    }
  }

  out.values.assign(values.begin(), values.end());
  return out;
}

CellResult analyze_cell(long long k, long long m, std::uint64_t limit) {
  const CandidateSet candidates = candidate_set(k, m, limit);
  CellResult cell;
  cell.k = k;
  cell.m = m;
  cell.status = candidates.status;
  cell.diagnostic = candidates.diagnostic;
  if (candidates.status == CellStatus::aborted) return cell;

  const CubicPoly poly = critical_cubic(k, m);
  for (const Rational& value : candidates.values) {
    if (certified_zero(poly, value)) cell.zeros.push_back(value);
  }
  cell.candidates_tested = candidates.values.size();
  return cell;
}

std::vector<Rational> rational_zeros(long long k, long long m) {
  return analyze_cell(k, m).zeros;
}

std::string to_checkpoint_line(const CellResult& cell) {
  std::ostringstream line;
  line << cell.k << ',' << cell.m << ',' << to_string(cell.status) << ',';
  for (std::size_t i = 0; i < cell.zeros.size(); ++i) {
    if (i > 0) line << ';';
    line << to_fraction_string(cell.zeros[i]);
  }
  return line.str();
}

CellResult parse_checkpoint_line(const std::string& line) {
  const std::vector<std::string> fields = split(line, ',');
  if (fields.size() != 4) {
    throw io_error("malformed checkpoint record: '" + line + "'");
  }
  CellResult cell;
  try {
    std::size_t used = 0;
    cell.k = std::stoll(fields[0], &used);
    if (used != fields[0].size()) throw std::invalid_argument(fields[0]);
    cell.m = std::stoll(fields[1], &used);
    if (used != fields[1].size()) throw std::invalid_argument(fields[1]);
    cell.status = cell_status_from_string(fields[2]);
    if (!fields[3].empty()) {
      for (const std::string& zero : split(fields[3], ';')) {
        cell.zeros.push_back(parse_fraction(zero));
      }
    }
  } catch (const std::exception& e) {
    throw io_error("malformed checkpoint record: '" + line + "': " + e.what());
  }
  if (cell.k < 0 || cell.m < 0) {
    throw io_error("malformed checkpoint record: '" + line + "': negative cell index");
  }
  if (!std::is_sorted(cell.zeros.begin(), cell.zeros.end())) {
    throw io_error("malformed checkpoint record: '" + line + "': zeros out of order");
  }
  return cell;
}

SearchReport search_grid(long long k_max, long long m_max, const std::string& checkpoint_path) {
  if (k_max < 2 || m_max < 2) {
    throw std::invalid_argument("grid bounds must be at least 2 in each direction");
  }
  const auto start_time = std::chrono::steady_clock::now();

  std::map<std::pair<long long, long long>, CellResult> done;
  if (!checkpoint_path.empty()) {
    std::ifstream in(checkpoint_path);
    if (in.is_open()) {
      std::string line;
      while (std::getline(in, line)) {
        if (in.eof()) {
          // getline hit end-of-file before the delimiter: a record was cut
          // off mid-write and the file cannot be trusted.
          throw io_error("checkpoint ends with an unterminated record: '" + line + "'");
        }
        CellResult cell = parse_checkpoint_line(line);
        if (cell.k > k_max || cell.m > m_max) {
          throw io_error("checkpoint cell outside the requested grid");
        }
        // Zeros are re-certified rather than trusted; the candidate count and
        // diagnostic are recomputed so resumed and fresh scans report
        // identical cells.
        const CandidateSet candidates = candidate_set(cell.k, cell.m);
        if (cell.status != candidates.status) {
          throw io_error("checkpoint status mismatch for cell " + std::to_string(cell.k) + "," +
                         std::to_string(cell.m));
        }
        cell.diagnostic = candidates.diagnostic;
        if (cell.status != CellStatus::aborted) {
          const CubicPoly poly = critical_cubic(cell.k, cell.m);
          for (const Rational& zero : cell.zeros) {
            if (!certified_zero(poly, zero)) {
              throw io_error("checkpoint zero fails certification: " + to_fraction_string(zero));
            }
          }
          cell.candidates_tested = candidates.values.size();
        }
        done.insert_or_assign({cell.k, cell.m}, std::move(cell));
      }
    }
  }

  std::ofstream append;
  if (!checkpoint_path.empty()) {
    append.open(checkpoint_path, std::ios::app);
    if (!append.is_open()) {
      throw io_error("cannot open checkpoint for writing: " + checkpoint_path);
    }
  }

  for (long long k = 0; k <= k_max; ++k) {
    std::vector<long long> missing;
    for (long long m = 0; m <= m_max; ++m) {
      if (!done.count({k, m})) missing.push_back(m);
    }
    if (missing.empty()) continue;
    std::vector<CellResult> row(missing.size());
    parallel_for(missing.size(), [&](std::size_t i) { row[i] = analyze_cell(k, missing[i]); });
    for (CellResult& cell : row) {
      if (append.is_open()) {
        append << to_checkpoint_line(cell) << '\n';
        if (!append) throw io_error("failed to append to checkpoint: " + checkpoint_path);
      }
      done.insert_or_assign({cell.k, cell.m}, std::move(cell));
    }
    if (append.is_open()) append.flush();
  }

  SearchReport report;
  report.k_max = k_max;
  report.m_max = m_max;
  report.cells.reserve(static_cast<std::size_t>((k_max + 1) * (m_max + 1)));
  for (long long k = 0; k <= k_max; ++k) {
    for (long long m = 0; m <= m_max; ++m) {
      CellResult& cell = done.at({k, m});
      report.candidates_tested += cell.candidates_tested;
      for (const Rational& zero : cell.zeros) {
        SearchHit hit;
        hit.k = k;
        hit.m = m;
        hit.zero = zero;
        hit.in_interval = k >= 1 && zero > 0 && zero < Rational(1, k);
        report.hits.push_back(hit);
        if (k > 1 && m > 1) report.open_question_hits.push_back(hit);
      }
      report.cells.push_back(std::move(cell));
    }
  }

  report.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  return report;
}

}  // namespace cevopt
