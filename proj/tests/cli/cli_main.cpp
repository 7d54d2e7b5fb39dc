// End-to-end tests of the command-line binary: spec'd examples, output
// formats, determinism across processes and thread counts, and the process
// exit-code contract. argv[1] is the path of the binary under test.

#include "../support/harness.hpp"
#include "../support/subprocess.hpp"

#include "cevopt/cubic.hpp"
#include "cevopt/scalar.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>
#include <vector>

using harness::RunResult;
using harness::Tool;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kThetaPair = 0.22745204561176172;   // unique zero of the (2, 2) cubic
constexpr double kMaxPair = 0.018800151866698107;    // objective value at that zero

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = line.find(',', begin);
    if (end == std::string::npos) {
      fields.push_back(line.substr(begin));
      return fields;
    }
    fields.push_back(line.substr(begin, end - begin));
    begin = end + 1;
  }
}

ordered_json parse_output(const RunResult& result) {
  REQUIRE_MSG(result.exit_code == 0, "exit code " << result.exit_code);
  return ordered_json::parse(result.output);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Scratch path unique to this process; removed eagerly.
struct TempFile {
  std::filesystem::path path;

  explicit TempFile(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("cevopt_cli_" + std::to_string(::getpid()) + "_" + tag + ".csv");
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <path-to-cevopt-binary>\n", argv[0]);
    return 2;
  }
  const Tool tool(argv[1]);
  harness::Runner runner;

  runner.add("ratio exact centroid", [&] {
    const auto envelope = parse_output(tool.run("ratio --lambda 1/3,1/3,1/3 --all --format json"));
    REQUIRE(envelope["inputs"]["mode"] == "exact");
    const auto& entries = envelope["results"]["entries"];
    REQUIRE(entries.size() == 3);
    for (const auto& entry : entries) {
      REQUIRE(entry["product"] == "1/12");
      REQUIRE(entry["determinant"] == "1/12");
      REQUIRE(entry["discrepancy"] == "0/1");
    }
  });

  runner.add("ratio exact reference points", [&] {
    const auto centroid =
        parse_output(tool.run("ratio --lambda 1/4,1/4,1/4,1/4 --index 1 --format json"));
    const auto& entry = centroid["results"]["entries"][0];
    REQUIRE(entry["index"] == 1);
    REQUIRE(entry["product"] == "1/108");
    REQUIRE(entry["determinant"] == "1/108");

    const auto skew =
        parse_output(tool.run("ratio --lambda 1/10,1/5,3/10,2/5 --index 2 --format json"));
    REQUIRE(skew["results"]["entries"][0]["product"] == "2/315");
    REQUIRE(skew["results"]["entries"][0]["discrepancy"] == "0/1");
  });

  runner.add("ratio float path agreement", [&] {
    const auto centroid =
        parse_output(tool.run("ratio --lambda 0.25,0.25,0.25,0.25 --index 1 --format json"));
    REQUIRE(centroid["inputs"]["mode"] == "float");
    const auto& entry = centroid["results"]["entries"][0];
    REQUIRE_NEAR(entry["product"].get<double>(), 1.0 / 108.0, 1e-12);
    REQUIRE(entry["discrepancy"].get<double>() <= 1e-12);

    const auto skew =
        parse_output(tool.run("ratio --lambda 0.1,0.2,0.3,0.4 --index 2 --format json"));
    REQUIRE_NEAR(skew["results"]["entries"][0]["product"].get<double>(), 2.0 / 315.0, 1e-12);
    REQUIRE(skew["results"]["entries"][0]["discrepancy"].get<double>() <= 1e-12);
  });

  runner.add("ratio text output", [&] {
    const auto result = tool.run("ratio --lambda 1/3,1/3,1/3 --all");
    REQUIRE(result.exit_code == 0);
    const auto lines = split_lines(result.output);
    REQUIRE(lines.size() == 4);
    REQUIRE(lines[0] == "mode exact");
    REQUIRE(lines[1] == "index 1: product 1/12, determinant 1/12, discrepancy 0/1");
  });

  runner.add("ratio input errors", [&] {
    REQUIRE(tool.run("ratio --lambda 1/3,1/3,1/3").exit_code == 2);
    REQUIRE(tool.run("ratio --lambda 1/3,1/3,1/3 --index 1 --all").exit_code == 2);
    REQUIRE(tool.run("ratio --lambda 0.5,oops --index 1").exit_code == 2);
    REQUIRE(tool.run("ratio --lambda 0.3,0.3,0.3 --index 1").exit_code == 2);
    REQUIRE(tool.run("ratio --lambda 0.5,0.5,0 --index 1").exit_code == 2);
    REQUIRE(tool.run("ratio --lambda 1/3,1/3,1/3 --index 5").exit_code == 2);
  });

  runner.add("optimum reference values", [&] {
    const auto envelope = parse_output(tool.run("optimum --n 3 --k 2 --format json"));
    const auto& results = envelope["results"];
    REQUIRE_NEAR(results["theta"].get<double>(), kThetaPair, 1e-14);
    REQUIRE_NEAR(results["theta_trig"].get<double>(), kThetaPair, 1e-12);
    REQUIRE_NEAR(results["max_ratio"].get<double>(), kMaxPair, 1e-14);
    REQUIRE(results["residual"].get<double>() <= 1e-13);
    REQUIRE(results["q"] == ordered_json::array({4, 0, -9, 2}));
    REQUIRE(results["method"] == "newton-bisection");

    const auto& point = results["equality_point"];
    REQUIRE(point.size() == 4);
    REQUIRE_NEAR(point[0].get<double>(), kThetaPair, 1e-14);
    REQUIRE_NEAR(point[1].get<double>(), kThetaPair, 1e-14);
    REQUIRE_NEAR(point[2].get<double>(), 0.27254795438823826, 1e-14);
    REQUIRE_NEAR(point[3].get<double>(), 0.27254795438823826, 1e-14);

    const auto& bracket = results["bracket"];
    REQUIRE(bracket[0].get<double>() <= results["theta"].get<double>());
    REQUIRE(bracket[1].get<double>() >= results["theta"].get<double>());
    REQUIRE(bracket[1].get<double>() - bracket[0].get<double>() <= 1e-12);
  });

  runner.add("optimum csv and text", [&] {
    const auto csv = tool.run("optimum --n 3 --k 2 --format csv");
    REQUIRE(csv.exit_code == 0);
    const auto lines = split_lines(csv.output);
    REQUIRE(lines.size() == 2);
    REQUIRE(lines[0] == "n,k,m,theta,theta_trig,max_ratio,residual");
    const auto fields = split_fields(lines[1]);
    REQUIRE(fields.size() == 7);
    REQUIRE(fields[0] == "3");
    REQUIRE(fields[1] == "2");
    REQUIRE(fields[2] == "2");
    REQUIRE_NEAR(std::stod(fields[3]), kThetaPair, 1e-14);

    const auto text = tool.run("optimum --n 3 --k 2");
    REQUIRE(text.exit_code == 0);
    REQUIRE(contains(text.output, "method newton-bisection"));
    REQUIRE(contains(text.output, "q 4 0 -9 2"));
  });

  runner.add("optimum input errors", [&] {
    const auto degenerate = tool.run_merged("optimum --n 3 --k 1");
    REQUIRE(degenerate.exit_code == 2);
    REQUIRE(contains(degenerate.output, "1 < k < n"));
    REQUIRE(tool.run("optimum --n 5 --k 5").exit_code == 2);
    REQUIRE(tool.run("optimum --n 3").exit_code == 2);
    REQUIRE(tool.run("optimum --n 3 --k 2 --tol 1e-16").exit_code == 2);
    REQUIRE(tool.run("optimum --n 3 --k 2 --format yaml").exit_code == 2);
  });

  runner.add("curve boundary and unimodality", [&] {
    const auto result = tool.run("curve --n 3 --k 2 --samples 512");
    REQUIRE(result.exit_code == 0);
    const auto lines = split_lines(result.output);
    REQUIRE(lines.size() == 513);
    REQUIRE(lines[0] == "x,f,fprime,q");

    std::vector<double> xs, fs, fps, qs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto fields = split_fields(lines[i]);
      REQUIRE(fields.size() == 4);
      xs.push_back(std::stod(fields[0]));
      fs.push_back(std::stod(fields[1]));
      fps.push_back(std::stod(fields[2]));
      qs.push_back(std::stod(fields[3]));
    }

    REQUIRE(std::fabs(fs.front()) <= 1e-6);
    REQUIRE(std::fabs(fs.back()) <= 1e-6);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      REQUIRE(xs[i] > 0.0);
      REQUIRE(xs[i] < 0.5);
      if (i > 0) REQUIRE(xs[i] > xs[i - 1]);
    }

    int sign_changes = 0;
    for (std::size_t i = 1; i < qs.size(); ++i) {
      if (qs[i - 1] * qs[i] < 0.0) ++sign_changes;
    }
    REQUIRE(sign_changes == 1);

    std::size_t nearest = 0;
    std::size_t flattest = 0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (std::fabs(xs[i] - kThetaPair) < std::fabs(xs[nearest] - kThetaPair)) nearest = i;
      if (std::fabs(fps[i]) < std::fabs(fps[flattest])) flattest = i;
    }
    REQUIRE_MSG(nearest == flattest, "nearest row " << nearest << ", flattest row " << flattest);
  });

  runner.add("curve json shape", [&] {
    const auto envelope = parse_output(tool.run("curve --n 4 --k 3 --samples 32 --format json"));
    REQUIRE(envelope["results"]["header"] == ordered_json::array({"x", "f", "fprime", "q"}));
    const auto& rows = envelope["results"]["rows"];
    REQUIRE(rows.size() == 32);
    for (const auto& row : rows) REQUIRE(row.size() == 4);
    REQUIRE_NEAR(rows[0][0].get<double>(), 1.0 / 64.0 / 3.0, 1e-15);
  });

  runner.add("verify passes on a small budget", [&] {
    const auto envelope =
        parse_output(tool.run("verify --n 3 --k 2 --restarts 16 --trials 50 --format json"));
    const auto& results = envelope["results"];
    REQUIRE(results["pass"] == true);
    REQUIRE(results["checks"].size() == 4);
    for (const auto& check : results["checks"]) REQUIRE(check["pass"] == true);
    REQUIRE(results["oracle"]["agreement_abs"].get<double>() <= 1e-6);
    REQUIRE(results["geometry"]["max_rel_measure"].get<double>() <= 1e-9);

    const auto text = tool.run("verify --n 4 --k 2 --restarts 8 --trials 20");
    REQUIRE(text.exit_code == 0);
    const auto lines = split_lines(text.output);
    REQUIRE(lines.back() == "result PASS");
  });

  runner.add("verify is deterministic across runs and threads", [&] {
    const std::string args = "verify --n 3 --k 2 --restarts 16 --trials 50 --format json";
    const auto base = tool.run(args);
    REQUIRE(base.exit_code == 0);
    for (const std::string env : {"", "CEVOPT_THREADS=1", "CEVOPT_THREADS=3"}) {
      const auto repeat = tool.run(args, env);
      REQUIRE(repeat.exit_code == 0);
      REQUIRE_MSG(repeat.output == base.output, "run with '" << env << "' differs");
    }
  });

  runner.add("search grid contract", [&] {
    const auto envelope = parse_output(tool.run("search --k-max 5 --m-max 5 --format json"));
    const auto& results = envelope["results"];
    REQUIRE(results["k_max"] == 5);
    REQUIRE(results["m_max"] == 5);
    const auto& cells = results["cells"];
    REQUIRE(cells.size() == 36);

    std::uint64_t total_candidates = 0;
    std::size_t zero_count = 0;
    for (const auto& cell : cells) {
      const long long k = cell["k"].get<long long>();
      const long long m = cell["m"].get<long long>();
      total_candidates += cell["candidates_tested"].get<std::uint64_t>();
      zero_count += cell["zeros"].size();
      if (k <= 1 || m <= 1) REQUIRE(!cell["zeros"].empty());
      if (k == 2 && m == 2) {
        REQUIRE(cell["candidates_tested"] == 8);
        REQUIRE(cell["zeros"].empty());
        REQUIRE(cell["status"] == "ok");
      }
      if (cell["status"] == "identically_zero") {
        REQUIRE(k == 0);
        REQUIRE(m == 1);
      }
    }
    REQUIRE(results["candidates_tested"].get<std::uint64_t>() == total_candidates);

    // Every reported hit must be an exact root of its cell's cubic.
    const auto& hits = results["hits"];
    REQUIRE(hits.size() == zero_count);
    for (const auto& hit : hits) {
      const long long k = hit["k"].get<long long>();
      const long long m = hit["m"].get<long long>();
      const cevopt::Rational zero = cevopt::parse_fraction(hit["zero"].get<std::string>());
      REQUIRE(cevopt::eval_exact(cevopt::critical_cubic(k, m), zero) == cevopt::Rational(0));
      const bool inside =
          k >= 1 && zero > cevopt::Rational(0) && zero < cevopt::Rational(1, k);
      REQUIRE(hit["in_interval"] == inside);
    }
    for (const auto& hit : results["open_question_hits"]) {
      REQUIRE(hit["k"].get<long long>() > 1);
      REQUIRE(hit["m"].get<long long>() > 1);
    }
  });

  runner.add("search text output", [&] {
    const auto result = tool.run("search --k-max 3 --m-max 3");
    REQUIRE(result.exit_code == 0);
    REQUIRE(contains(result.output, "cells 16"));
    REQUIRE(contains(result.output, "hit k=0 m=0 zero=0/1 outside"));
    REQUIRE(contains(result.output, "open_question_hits"));
  });

  runner.add("search is deterministic across runs and threads", [&] {
    const std::string args = "search --k-max 5 --m-max 5 --format json";
    const auto base = tool.run(args);
    REQUIRE(base.exit_code == 0);
    for (const std::string env : {"CEVOPT_THREADS=1", "CEVOPT_THREADS=3"}) {
      const auto repeat = tool.run(args, env);
      REQUIRE(repeat.exit_code == 0);
      REQUIRE_MSG(repeat.output == base.output, "run with '" << env << "' differs");
    }
  });

  runner.add("search checkpoint resume", [&] {
    TempFile checkpoint("resume");
    const std::string plain = "search --k-max 4 --m-max 4 --format json";
    const std::string with_file = plain + " --checkpoint '" + checkpoint.path.string() + "'";

    const auto fresh = tool.run(plain);
    REQUIRE(fresh.exit_code == 0);
    const auto first = tool.run(with_file);
    REQUIRE(first.exit_code == 0);

    // The envelope echoes the checkpoint path; results must be identical.
    auto fresh_json = ordered_json::parse(fresh.output);
    auto first_json = ordered_json::parse(first.output);
    REQUIRE(first_json["inputs"]["checkpoint"] == checkpoint.path.string());
    REQUIRE(fresh_json["results"] == first_json["results"]);

    // Truncate to two complete rows and resume.
    std::string written;
    {
      std::ifstream in(checkpoint.path, std::ios::binary);
      written.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    REQUIRE(std::count(written.begin(), written.end(), '\n') == 25);
    std::string truncated;
    int lines = 0;
    for (const char c : written) {
      truncated.push_back(c);
      if (c == '\n' && ++lines == 10) break;
    }
    {
      std::ofstream out(checkpoint.path, std::ios::binary | std::ios::trunc);
      out << truncated;
    }
    const auto resumed = tool.run(with_file);
    REQUIRE(resumed.exit_code == 0);
    REQUIRE(resumed.output == first.output);
  });

  runner.add("search checkpoint errors", [&] {
    TempFile checkpoint("corrupt");
    {
      std::ofstream out(checkpoint.path, std::ios::binary);
      out << "not,a,valid\n";
    }
    const std::string args =
        "search --k-max 3 --m-max 3 --checkpoint '" + checkpoint.path.string() + "'";
    REQUIRE(tool.run(args).exit_code == 3);

    REQUIRE(tool.run("search --k-max 3 --m-max 3 --checkpoint /nonexistent/dir/cp.csv")
                .exit_code == 3);
    REQUIRE(tool.run("search --k-max 1 --m-max 5").exit_code == 2);
  });

  runner.add("table contract", [&] {
    const auto result = tool.run("table --n-max 6");
    REQUIRE(result.exit_code == 0);
    const auto lines = split_lines(result.output);
    REQUIRE(lines[0] == "n,k,m,theta,max_ratio,residual");
    REQUIRE(lines.size() == 11);

    const auto first = split_fields(lines[1]);
    REQUIRE(first[0] == "3");
    REQUIRE(first[1] == "2");
    REQUIRE(first[2] == "2");
    REQUIRE_NEAR(std::stod(first[3]), kThetaPair, 1e-12);

    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto fields = split_fields(lines[i]);
      REQUIRE(fields.size() == 6);
      const int n = std::stoi(fields[0]);
      const int k = std::stoi(fields[1]);
      const int m = std::stoi(fields[2]);
      REQUIRE(m == n + 1 - k);
      REQUIRE(std::stod(fields[4]) < 1.0);
      REQUIRE(std::stod(fields[5]) <= 1e-13);
    }

    REQUIRE(tool.run("table --n-max 2").exit_code == 2);
  });

  runner.add("json envelopes round-trip byte-identically", [&] {
    const std::vector<std::string> commands = {
        "ratio --lambda 1/3,1/3,1/3 --all --format json",
        "optimum --n 4 --k 2 --format json",
        "verify --n 3 --k 2 --restarts 4 --trials 10 --format json",
        "curve --n 3 --k 2 --samples 16 --format json",
        "search --k-max 3 --m-max 3 --format json",
        "table --n-max 4 --format json",
    };
    for (const auto& command : commands) {
      const auto result = tool.run(command);
      REQUIRE_MSG(result.exit_code == 0, command);
      const auto parsed = ordered_json::parse(result.output);
      REQUIRE_MSG(parsed.dump(2) + "\n" == result.output, command);

      std::vector<std::string> keys;
      for (const auto& item : parsed.items()) keys.push_back(item.key());
      const std::vector<std::string> expected = {"command", "version", "inputs", "results",
                                                 "diagnostics"};
      REQUIRE_MSG(keys == expected, command);
      REQUIRE(parsed["version"] == "0.1.0");
    }
  });

  runner.add("exit codes", [&] {
    REQUIRE(tool.run("--help").exit_code == 0);
    REQUIRE(tool.run("optimum --help").exit_code == 0);
    REQUIRE(tool.run("bogus").exit_code == 2);
    REQUIRE(tool.run("").exit_code == 2);
  });

  return runner.run();
}
