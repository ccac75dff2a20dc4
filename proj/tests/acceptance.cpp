// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Golden checks drive the CLI end-to-end; property sweeps use the library
// with fixed seeds.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "matmor/fixtures.hpp"
#include "matmor/io.hpp"
#include "matmor/lorentzian.hpp"
#include "matmor/morphism.hpp"
#include "matmor/random_gen.hpp"
#include "matmor/setfunction.hpp"
#include "matmor/tutte.hpp"

using namespace matmor;
using nlohmann::json;

namespace {

std::string g_cli;
std::string g_fixtures;
int g_failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("%s  criterion %2d  %s\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

struct CliRun {
  int exit_code = -1;
  json output;
  double seconds = 0;
};

CliRun run_cli(const std::string& args) {
  CliRun run;
  std::string cmd = g_cli + " " + args;
  auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return run;
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), got);
  }
  run.exit_code = pclose(pipe);
  run.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  try {
    run.output = json::parse(out);
  } catch (...) {
    run.exit_code = -1;
  }
  return run;
}

bool b_matches(const json& result, const std::vector<long long>& expected) {
  if (!result.contains("b")) return false;
  auto b = result.at("b").get<std::vector<long long>>();
  return b == expected;
}

std::string quoted(const std::filesystem::path& p) {
  return "'" + p.string() + "'";
}

void criterion1() {
  auto run = run_cli("bvector " +
                     quoted(std::filesystem::path(g_fixtures) /
                            "fano-projection.json"));
  std::vector<long long> expected(15, 0);
  expected[3] = 224;
  expected[4] = 840;
  expected[5] = 1232;
  bool ok = run.exit_code == 0 &&
            b_matches(run.output.value("result", json()), expected) &&
            run.seconds < 5.0;
  report(1, ok,
         "Fano projection b-vector (0,0,0,224,840,1232,0,...) in < 5 s "
         "[took " + std::to_string(run.seconds) + " s]");
}

void criterion2() {
  auto run = run_cli("bvector " + quoted(std::filesystem::path(g_fixtures) /
                                         "graph-hom.json"));
  std::vector<long long> expected = {0, 0, 27, 79, 111, 75, 0, 0, 0, 0};
  bool ok = run.exit_code == 0 &&
            b_matches(run.output.value("result", json()), expected) &&
            run.seconds < 1.0;
  report(2, ok,
         "graph homomorphism b-vector (0,0,27,79,111,75,0,...) in < 1 s "
         "[took " + std::to_string(run.seconds) + " s]");
}

void criterion3() {
  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / "matmor-acceptance";
  fs::create_directories(tmp);
  auto start = std::chrono::steady_clock::now();

  bool ok = run_cli("fixtures k7-torus --out " + quoted(tmp)).exit_code == 0;

  auto dual_run = run_cli("dualize " + quoted(tmp / "k7-graph.json") + " " +
                          quoted(tmp / "k7-rotation.json"));
  ok = ok && dual_run.exit_code == 0;
  if (ok) {
    const json& result = dual_run.output.at("result");
    ok = result.at("face_count") == 14 &&
         result.at("euler_characteristic") == 0;
    for (const json& d : result.at("face_degrees")) {
      ok = ok && d == 3;
    }
    Graph dual = io::graph_from_json(result.at("dual"));
    ok = ok && dual.vertex_count() == 14 && dual.is_bipartite() &&
         dual.girth() == 6;
  }

  auto bv_run = run_cli("bvector " + quoted(tmp / "k7-torus.json"));
  ok = ok && bv_run.exit_code == 0;
  if (ok) {
    auto b = bv_run.output.at("result").at("b").get<std::vector<long long>>();
    ok = b.size() == 22 && b[13] == 50421 && b[14] == 47715 && b[15] == 16807;
    for (int k = 0; k <= 12; ++k) ok = ok && b[k] == 0;
  }
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  ok = ok && seconds < 60.0;
  report(3, ok,
         "K7-torus: 14 triangular faces, Heawood dual, b13..b15 = "
         "50421,47715,16807 in < 60 s [took " + std::to_string(seconds) +
         " s]");
}

void criterion4() {
  Rng rng(kDefaultSeed);
  const Rat choices[4] = {Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform_int(2, 5);
    FlagMatroid flag = random_flag(rng, n, 3);
    std::vector<Rat> q;
    for (int k = 0; k < flag.length(); ++k) {
      q.push_back(choices[rng.uniform_int(0, 3)]);
    }
    if (!is_lorentzian(homogeneous_tutte(flag, q)).ok) ++failures;
  }
  report(4, failures == 0,
         "flag-matroid Tutte polynomials Lorentzian on 200 random instances "
         "(q_k in {1/4,1/2,3/4,1}), failures = " + std::to_string(failures));
}

void criterion5() {
  Rng rng(kDefaultSeed + 1);
  int failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = rng.uniform_int(1, 8);
    MatroidMorphism f = random_morphism(rng, n, rng.uniform_int(1, 6));
    auto counts = b_vector(f);
    std::vector<Rat> a;
    for (long long c : counts) a.push_back(Rat(static_cast<long>(c)));
    if (!is_ultra_log_concave(a).ok) ++failures;
  }
  report(5, failures == 0,
         "b-vectors ultra-log-concave on 500 random morphisms (n <= 8), "
         "failures = " + std::to_string(failures));
}

Polynomial lift_minor(const Polynomial& p, int i, int n) {
  std::vector<int> var_map(n - 1);
  for (int v = 0; v < n - 1; ++v) var_map[v] = v + 1 < i ? v : v + 1;
  return p.reindexed(var_map, n);
}

Polynomial lift_minor_homogeneous(const Polynomial& p, int i, int n) {
  std::vector<int> var_map(n);
  var_map[0] = 0;
  for (int v = 1; v < n; ++v) var_map[v] = v < i ? v : v + 1;
  return p.reindexed(var_map, n + 1);
}

void criterion6() {
  Rng rng(kDefaultSeed + 2);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform_int(2, 7);
    Matroid m = random_matroid(rng, n);
    Rat q = rng.nonzero_rational(5, 5);
    int i = rng.uniform_int(1, n);
    Polynomial z = multivariate_tutte(m, q);
    Polynomial rhs =
        lift_minor(multivariate_tutte(m.deleted(i), q), i, n) +
        Polynomial::variable(n, i - 1) *
            lift_minor(multivariate_tutte(m.contracted(i), q), i, n) *
            rat_pow(q, -m.rank(singleton(i)));
    if (!(z == rhs)) ++failures;
  }
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform_int(2, 5);
    FlagMatroid flag = random_flag(rng, n, 3);
    std::vector<Rat> q;
    for (int k = 0; k < flag.length(); ++k) q.push_back(rng.rational_01(4));
    int i = rng.uniform_int(1, n);
    Rat qr(1);
    for (int k = 0; k < flag.length(); ++k) {
      qr *= rat_pow(q[k], -flag.constituent(k).rank(singleton(i)));
    }
    Polynomial z = homogeneous_tutte(flag, q);
    Polynomial del =
        lift_minor_homogeneous(homogeneous_tutte(flag.deleted(i), q), i, n);
    Polynomial con =
        lift_minor_homogeneous(homogeneous_tutte(flag.contracted(i), q), i, n);
    bool delcon = z == Polynomial::variable(n + 1, 0) * del +
                           Polynomial::variable(n + 1, i) * con * qr;
    if (!delcon) ++failures;
    if (!(z.derivative(i) == con * qr)) ++failures;
  }
  report(6, failures == 0,
         "deletion-contraction and derivative identities exact on 200+200 "
         "random instances, failures = " + std::to_string(failures));
}

void criterion7() {
  Rng rng(kDefaultSeed + 3);
  int failures = 0;
  for (int instance = 0; instance < 100; ++instance) {
    int n = rng.uniform_int(1, 6);
    Matroid m = random_matroid(rng, n);
    TrivariatePolynomial t = lasvergnas_tutte(m, m);
    for (int pt = 0; pt < 20; ++pt) {
      Rat x = rng.nonzero_rational(7, 4) + 1;
      Rat y = rng.nonzero_rational(7, 4) + 1;
      Rat q = (x - 1) * (y - 1);
      std::vector<Rat> w(n, y - 1);
      if (rat_pow(x - 1, -m.rank()) * t.evaluate(x, y, Rat(1)) !=
          multivariate_tutte(m, q).evaluate(w)) {
        ++failures;
      }
    }
  }
  for (int instance = 0; instance < 100; ++instance) {
    int n = rng.uniform_int(1, 6);
    auto [m, nq] = random_quotient_pair(rng, n);
    TrivariatePolynomial t = lasvergnas_tutte(m, nq);
    for (int pt = 0; pt < 20; ++pt) {
      Rat x = rng.nonzero_rational(7, 4) + 1;
      Rat y = rng.nonzero_rational(7, 4) + 1;
      Rat z = rng.nonzero_rational(7, 4);
      Rat p = z * (y - 1);
      Rat q = (x - 1) / z;
      std::vector<Rat> w(n, y - 1);
      Rat lhs = rat_pow(x - 1, -nq.rank()) *
                rat_pow(z, nq.rank() - m.rank()) * t.evaluate(x, y, z);
      if (lhs != multivariate_tutte_quotient(m, nq, p, q).evaluate(w)) {
        ++failures;
      }
    }
  }
  report(7, failures == 0,
         "change-of-variables identities exact at 20 points x 100 instances "
         "(matroid and quotient forms), failures = " +
             std::to_string(failures));
}

void criterion8() {
  json golden = io::load_file(
      (std::filesystem::path(g_fixtures) / "example-5-6-golden.json")
          .string());
  SetFunction r = io::setfunction_from_json(
      io::load_file((std::filesystem::path(g_fixtures) / "example-5-6.json")
                        .string()));

  std::vector<int> scaling = golden.at("limit_scaling").get<std::vector<int>>();
  Polynomial expected = io::polynomial_from_json(golden.at("limit"));
  bool limit_ok = limit_extraction(r, scaling) == expected;

  auto probe = sampled_log_concavity(expected, 50, 1e-8, kDefaultSeed, 0.9, 1.1);
  bool fails_near_ones = !probe.ok;

  auto mnat_run = run_cli("mnat " + quoted(std::filesystem::path(g_fixtures) /
                                           "example-5-6.json"));
  bool mnat_ok = mnat_run.exit_code == 0 &&
                 mnat_run.output.at("result").at("mnat").at("ok") == true;

  auto probe_run = run_cli(
      "probe-ln " +
      quoted(std::filesystem::path(g_fixtures) / "example-5-6.json"));
  Rat witness = io::rational_from_json(golden.at("witness_p"));
  bool witness_ok = false;
  if (probe_run.exit_code == 0) {
    const json& result = probe_run.output.at("result");
    witness_ok = result.at("conclusion") == "not-in-Ln" &&
                 io::rational_from_json(result.at("witness_p")) == witness;
  }

  auto tag = [](bool b) { return b ? std::string("ok") : std::string("FAILED"); };
  report(8, limit_ok && fails_near_ones && mnat_ok && witness_ok,
         "counterexample set function [limit " + tag(limit_ok) +
             ", log-concavity-fails-near-(1,1,1) " + tag(fails_near_ones) +
             ", M-natural-concave " + tag(mnat_ok) + ", probe witness p=" +
             rat_str(witness) + " " + tag(witness_ok) + "]");
}

void criterion9() {
  Rng rng(kDefaultSeed + 4);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = rng.uniform_int(2, 7);
    FlagMatroid flag = random_flag(rng, n, 3);
    std::vector<Rat> q;
    for (int k = 0; k < flag.length(); ++k) {
      q.push_back(rng.rational_01_closed(8));
    }
    std::vector<Rat> w;
    for (int i = 0; i < n; ++i) w.push_back(rng.nonzero_rational(9, 7));
    if (!lemma46_holds(flag, q, w)) ++failures;
  }
  report(9, failures == 0,
         "pairing-polynomial inequality exact on 1000 random (flag, q, w) "
         "trials, failures = " + std::to_string(failures));
}

void criterion10() {
  Rng rng(kDefaultSeed + 5);
  int disagreements = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int m = rng.uniform_int(1, 8);
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m));
    std::vector<std::vector<double>> ad(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        int x = rng.uniform_int(-5, 5);
        a[i][j] = a[j][i] = x;
        ad[i][j] = ad[j][i] = x;
      }
    }
    if (positive_eigenvalue_count(a) !=
        positive_eigenvalue_count_float(ad, 1e-9)) {
      ++disagreements;
    }
  }
  report(10, disagreements == 0,
         "Descartes eigenvalue count matches the floating oracle on 1000 "
         "random symmetric integer matrices (m <= 8), disagreements = " +
             std::to_string(disagreements));
}

void criterion11() {
  Rng rng(kDefaultSeed + 6);
  int disagreements = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.uniform_int(1, 6), m = rng.uniform_int(1, 6);
    auto [src, tgt, map] = random_triple(rng, n, m);
    bool c1 = is_morphism_nested(map, src, tgt).ok;
    bool c1_step = is_morphism(map, src, tgt).ok;
    bool c2 = is_morphism_via_cocircuits(map, src, tgt).ok;
    bool c3 = is_morphism_via_flats(map, src, tgt).ok;
    if (c1 != c1_step || c1 != c2 || c1 != c3) ++disagreements;
  }
  report(11, disagreements == 0,
         "the three morphism conditions agree on 300 random (f, M, N) "
         "(n, m <= 6), disagreements = " + std::to_string(disagreements));
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli") g_cli = argv[i + 1];
    if (flag == "--fixtures") g_fixtures = argv[i + 1];
  }
  if (g_cli.empty() || g_fixtures.empty()) {
    std::fprintf(stderr, "usage: matmor_acceptance --cli PATH --fixtures DIR\n");
    return 2;
  }
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::printf("%s: %d criterion(s) failed\n",
              g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
