// Copyright 2026 The mgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mgsim/cli.hpp"

#include <charconv>
#include <fstream>
#include <future>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "mgsim/bench.hpp"
#include "mgsim/circuit.hpp"
#include "mgsim/error.hpp"
#include "mgsim/matchgate4.hpp"

namespace mgsim {

namespace {

std::string format17(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

double json_number(const nlohmann::json& j) {
  if (!j.is_number()) throw PreconditionError("expected a number, got " + j.dump());
  return j.get<double>();
}

}  // namespace

nlohmann::json complex_to_json(cplx z) { return format17(z.real()) + "," + format17(z.imag()); }

cplx complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {json_number(j[0]), json_number(j[1])};
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto comma = s.find(',');
    if (comma == std::string::npos) return parse_complex(s);
    const cplx re = parse_complex(s.substr(0, comma));
    const cplx im = parse_complex(s.substr(comma + 1));
    if (re.imag() != 0.0 || im.imag() != 0.0) {
      throw PreconditionError("malformed complex pair '" + s + "'");
    }
    return {re.real(), im.real()};
  }
  throw PreconditionError("cannot read a complex number from " + j.dump());
}

Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j) {
  if (j.is_object()) {
    if (!j.contains("matrix")) throw PreconditionError("JSON object has no \"matrix\" field");
    return matrix_from_json(j.at("matrix"));
  }
  if (!j.is_array() || j.empty()) throw PreconditionError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw PreconditionError("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw DimensionError("matrix rows have different lengths");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[c]);
  }
  return m;
}

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json result_to_json(const SimResult& r) {
  nlohmann::json j;
  j["expectation"] = complex_to_json(r.expectation);
  j["p0"] = r.p0 ? nlohmann::json(*r.p0) : nlohmann::json(nullptr);
  j["p1"] = r.p1 ? nlohmann::json(*r.p1) : nlohmann::json(nullptr);
  j["engine"] = r.engine;
  j["gates"] = r.gates;
  j["ms"] = r.ms;
  j["det_factor"] = complex_to_json(r.det_factor);
  return j;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

struct CommonFlags {
  std::string engine = "quadratic";
  double tol = 1e-9;
  std::string c0_mode = "parity";
  std::string heisenberg_mode = "inverse";
  std::string observable = "z";
};

Engine parse_engine(const std::string& s) {
  if (s == "quadratic") return Engine::quadratic;
  if (s == "lie") return Engine::lie;
  return Engine::dense;
}

RunOptions run_options(const CommonFlags& f) {
  RunOptions o;
  o.engine = parse_engine(f.engine);
  o.tol = f.tol;
  o.c0_mode = f.c0_mode == "extra-line" ? C0Mode::extra_line : C0Mode::parity;
  o.heisenberg_mode = f.heisenberg_mode == "adjoint" ? oracle::HeisenbergMode::adjoint
                                                     : oracle::HeisenbergMode::inverse;
  if (f.observable == "x1") o.observable = Observable::x1();
  if (f.observable == "y1") o.observable = Observable::y1();
  if (o.heisenberg_mode == oracle::HeisenbergMode::adjoint && o.engine != Engine::dense) {
    throw UsageError("--heisenberg-mode adjoint requires --engine dense");
  }
  return o;
}

void add_sim_flags(CLI::App* cmd, CommonFlags& f, bool with_engine) {
  if (with_engine) {
    cmd->add_option("--engine", f.engine, "quadratic, lie or dense")
        ->check(CLI::IsMember({"quadratic", "lie", "dense"}));
    cmd->add_option("--heisenberg-mode", f.heisenberg_mode,
                    "inverse (C^-1 O C) or adjoint (C^dagger O C, dense only)")
        ->check(CLI::IsMember({"inverse", "adjoint"}));
  }
  cmd->add_option("--tol", f.tol, "tolerance for treating the expectation as real")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--c0-mode", f.c0_mode, "parity or extra-line")
      ->check(CLI::IsMember({"parity", "extra-line"}));
  cmd->add_option("--observable", f.observable, "z (measured line), x1 or y1")
      ->check(CLI::IsMember({"z", "x1", "y1"}));
}

double max_deviation(const std::map<std::string, SimResult>& results) {
  double worst = 0.0;
  for (auto a = results.begin(); a != results.end(); ++a) {
    for (auto b = std::next(a); b != results.end(); ++b) {
      worst = std::max(worst, std::abs(a->second.expectation - b->second.expectation));
    }
  }
  return worst;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matchgate circuit simulator", "mgsim"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mgsim 0.1.0");

  CommonFlags run_flags;
  std::string run_file;
  auto* run = app.add_subcommand("run", "simulate a circuit file");
  run->add_option("circuit", run_file, "circuit file")->required();
  add_sim_flags(run, run_flags, true);

  double mg_tol = kMatchgateTol;
  std::string mg_file;
  auto* verify = app.add_subcommand("verify-matchgate", "check the matchgate identities");
  verify->add_option("matrix", mg_file, "JSON file with a 4x4 matrix")->required();
  verify->add_option("--tol", mg_tol, "relative tolerance")->check(CLI::PositiveNumber);

  std::string cls_file;
  double cls_tol = kMatchgateTol;
  auto* classify = app.add_subcommand("classify", "report the gate classes a matrix fits");
  classify->add_option("matrix", cls_file, "JSON file with a 2x2 or 4x4 matrix")->required();
  classify->add_option("--tol", cls_tol, "relative tolerance")->check(CLI::PositiveNumber);

  CommonFlags cmp_flags;
  std::string cmp_file;
  auto* compare = app.add_subcommand("compare", "run every engine on a circuit");
  compare->add_option("circuit", cmp_file, "circuit file")->required();
  add_sim_flags(compare, cmp_flags, false);

  std::vector<int> bench_n{50, 100, 200};
  int bench_gates = 1000;
  std::uint64_t bench_seed = 1;
  std::string bench_engine = "quadratic";
  auto* bench = app.add_subcommand("bench", "time random circuits of growing width");
  bench->add_option("--n", bench_n, "line counts, comma separated")
      ->delimiter(',')
      ->check(CLI::Range(2, 1 << 20));
  bench->add_option("--gates", bench_gates, "gates per circuit")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "random seed");
  bench->add_option("--engine", bench_engine, "quadratic, lie or dense")
      ->check(CLI::IsMember({"quadratic", "lie", "dense"}));

  std::vector<std::string> argv_store;
  argv_store.push_back("mgsim");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    nlohmann::json j;
    j["schema"] = 1;
    if (*run) {
      const RunOptions opt = run_options(run_flags);
      const Circuit c = parse_circuit(read_file(run_file));
      const SimResult r = run_circuit(c, opt);
      j.update(result_to_json(r));
      j["observable"] = opt.observable.value_or(Observable::z(c.measure)).str();
    } else if (*verify) {
      const Eigen::MatrixXcd m = matrix_from_json(read_json(mg_file));
      if (m.rows() != 4 || m.cols() != 4) throw DimensionError("expected a 4x4 matrix");
      const Mat4 b = m;
      nlohmann::json ids = nlohmann::json::array();
      for (cplx v : identities(b)) ids.push_back(complex_to_json(v));
      j["is_matchgate"] = is_matchgate(b, mg_tol);
      j["identities"] = ids;
      j["eigenvector_predicate"] = eigenvector_predicate(b, mg_tol);
      j["max_residual"] = identity_residual(b);
    } else if (*classify) {
      const Eigen::MatrixXcd m = matrix_from_json(read_json(cls_file));
      j["classes"] = classify_matrix(m, cls_tol);
      if (m.rows() == 4 && m.cols() == 4) j["is_matchgate"] = is_matchgate(Mat4(m), cls_tol);
    } else if (*compare) {
      const RunOptions base = run_options(cmp_flags);
      const Circuit c = parse_circuit(read_file(cmp_file));
      std::vector<Engine> engines{Engine::quadratic, Engine::lie};
      if (c.n <= oracle::kMaxLines) engines.push_back(Engine::dense);
      std::vector<std::future<SimResult>> jobs;
      for (Engine e : engines) {
        RunOptions o = base;
        o.engine = e;
        jobs.push_back(std::async(std::launch::async, [&c, o] { return run_circuit(c, o); }));
      }
      std::map<std::string, SimResult> results;
      for (std::size_t i = 0; i < jobs.size(); ++i) results[engine_name(engines[i])] = jobs[i].get();
      nlohmann::json per = nlohmann::json::object();
      for (const auto& [name, r] : results) per[name] = result_to_json(r);
      j["results"] = per;
      j["max_deviation"] = max_deviation(results);
      if (c.n > oracle::kMaxLines) j["skipped"] = {"dense"};
    } else if (*bench) {
      const BenchReport rep = run_bench(bench_n, bench_gates, bench_seed, parse_engine(bench_engine));
      j["engine"] = engine_name(rep.engine);
      j["gates"] = bench_gates;
      j["seed"] = bench_seed;
      nlohmann::json pts = nlohmann::json::array();
      double total = 0.0;
      for (const BenchPoint& p : rep.points) {
        pts.push_back({{"n", p.n}, {"seconds", p.seconds}, {"gates_per_sec", p.gates_per_sec}});
        total += p.seconds;
      }
      j["points"] = pts;
      j["total_seconds"] = total;
      j["exponent"] = rep.points.size() >= 2 ? nlohmann::json(rep.exponent) : nlohmann::json(nullptr);
    }
    out << j.dump(2) << "\n";
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mgsim
