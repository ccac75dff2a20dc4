#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matmor/error.hpp"
#include "matmor/fixtures.hpp"
#include "matmor/graph.hpp"
#include "matmor/io.hpp"
#include "matmor/lorentzian.hpp"
#include "matmor/morphism.hpp"
#include "matmor/random_gen.hpp"
#include "matmor/setfunction.hpp"
#include "matmor/tutte.hpp"

namespace {

using matmor::Error;
using matmor::Rat;
using nlohmann::json;

struct Context {
  std::uint64_t seed = matmor::kDefaultSeed;
  bool timing = false;
  std::string command;
  std::string digest_input;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  json load(const std::string& path) {
    json j = matmor::io::load_file(path);
    digest_input += matmor::io::canonical_dump(j);
    return j;
  }
  void fold(const std::string& arg) { digest_input += arg + "\n"; }

  int emit(json result) {
    json report = {{"command", command},
                   {"inputs_digest", matmor::io::digest_hex(digest_input)},
                   {"result", std::move(result)},
                   {"seed", seed}};
    if (timing) {
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      report["elapsed_ms"] = elapsed.count();
    }
    std::cout << matmor::io::canonical_dump(report);
    return 0;
  }
};

std::vector<Rat> parse_rat_list(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(matmor::rat_parse(item));
  }
  if (out.empty()) throw Error("invalid-argument", "empty rational list");
  return out;
}

json dual_report(const matmor::GeometricDual& dual) {
  json faces = json::array();
  json degrees = json::array();
  for (const auto& face : dual.faces) {
    json f = json::array();
    for (const matmor::Dart& d : face) f.push_back({d.edge, d.end});
    degrees.push_back(face.size());
    faces.push_back(std::move(f));
  }
  json dual_edges = json::array();
  for (int e = 1; e <= dual.dual.edge_count(); ++e) {
    auto [a, b] = dual.dual.edge(e);
    dual_edges.push_back({a, b});
  }
  return {{"euler_characteristic", dual.euler_characteristic},
          {"face_count", dual.faces.size()},
          {"face_degrees", degrees},
          {"faces", faces},
          {"edge_bijection", dual.edge_bijection},
          {"dual",
           {{"kind", "graph"},
            {"vertices", dual.dual.vertex_count()},
            {"edges", dual_edges}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid morphisms, Tutte polynomials, Lorentzian certification"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--seed", ctx.seed, "seed echoed into reports");
  app.add_flag("--timing", ctx.timing, "include elapsed_ms in the report");

  // bvector
  std::string morphism_path, format = "json";
  auto* bvector = app.add_subcommand("bvector", "basis counts of a morphism");
  bvector->add_option("morphism", morphism_path)->required();
  bvector->add_option("--format", format)
      ->check(CLI::IsMember({"json", "tsv"}));

  // tutte
  auto* tutte = app.add_subcommand("tutte", "Tutte-type polynomials");
  tutte->require_subcommand(1);
  std::string matroid_path, q_arg = "1";
  auto* tutte_multi = tutte->add_subcommand("multivariate");
  tutte_multi->add_option("matroid", matroid_path)->required();
  tutte_multi->add_option("--q", q_arg)->required();
  std::string lv_m_path, lv_n_path;
  auto* tutte_lv = tutte->add_subcommand("lasvergnas");
  tutte_lv->add_option("matroid_m", lv_m_path)->required();
  tutte_lv->add_option("matroid_n", lv_n_path)->required();
  std::string flag_path, flag_q;
  auto* tutte_flag = tutte->add_subcommand("flag");
  tutte_flag->add_option("flag", flag_path)->required();
  tutte_flag->add_option("--q", flag_q)->required();

  // lorentzian
  std::string poly_path, lor_flag_path, lor_q;
  auto* lorentzian = app.add_subcommand("lorentzian", "exact certification");
  lorentzian->add_option("poly", poly_path);
  lorentzian->add_option("--flag", lor_flag_path);
  lorentzian->add_option("--q", lor_q);

  // ulc
  std::vector<std::string> ulc_values;
  auto* ulc = app.add_subcommand("ulc", "ultra-log-concavity of a sequence");
  ulc->add_option("values", ulc_values)->required()->expected(-1);

  // mnat
  std::string setfn_path;
  auto* mnat = app.add_subcommand("mnat", "M-natural-concavity");
  mnat->add_option("setfn", setfn_path)->required();

  // probe-ln
  std::string probe_path, grid_arg;
  auto* probe = app.add_subcommand("probe-ln", "Lorentzian grid probe");
  probe->add_option("setfn", probe_path)->required();
  probe->add_option("--grid", grid_arg);

  // dualize
  std::string graph_path, rotation_path;
  auto* dualize = app.add_subcommand("dualize", "geometric dual by face tracing");
  dualize->add_option("graph", graph_path)->required();
  dualize->add_option("rotation", rotation_path)->required();

  // check
  auto* check = app.add_subcommand("check", "verdicts with witnesses");
  check->require_subcommand(1);
  std::string chk_morphism_path;
  auto* chk_morphism = check->add_subcommand("morphism");
  chk_morphism->add_option("morphism", chk_morphism_path)->required();
  std::string chk_q_m, chk_q_n;
  auto* chk_quotient = check->add_subcommand("quotient");
  chk_quotient->add_option("matroid_m", chk_q_m)->required();
  chk_quotient->add_option("matroid_n", chk_q_n)->required();
  std::string chk_flag_path;
  auto* chk_flag = check->add_subcommand("flag");
  chk_flag->add_option("flag", chk_flag_path)->required();
  std::string chk_delta_path;
  auto* chk_delta = check->add_subcommand("delta");
  chk_delta->add_option("family", chk_delta_path)->required();

  // fixtures
  std::string fixture_name, out_dir = ".";
  auto* fixtures = app.add_subcommand("fixtures", "emit bundled examples");
  fixtures->add_option("name", fixture_name)
      ->required()
      ->check(CLI::IsMember(
          {"fano-projection", "graph-hom", "k7-torus", "example-5-6"}));
  fixtures->add_option("--out", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (const auto* sub : app.get_subcommands()) {
      ctx.command += (ctx.command.empty() ? "" : " ") + sub->get_name();
      for (const auto* nested : sub->get_subcommands()) {
        ctx.command += " " + nested->get_name();
      }
    }

    if (bvector->parsed()) {
      ctx.fold(format);
      auto f = matmor::io::morphism_from_json(ctx.load(morphism_path));
      auto b = matmor::b_vector(f);
      if (format == "tsv") {
        for (std::size_t k = 0; k < b.size(); ++k) {
          std::cout << b[k] << (k + 1 < b.size() ? '\t' : '\n');
        }
        return 0;
      }
      return ctx.emit({{"n", f.source().size()}, {"b", b}});
    }

    if (tutte_multi->parsed()) {
      ctx.fold(q_arg);
      auto m = matmor::io::matroid_from_json(ctx.load(matroid_path));
      auto z = matmor::multivariate_tutte(m, matmor::rat_parse(q_arg));
      return ctx.emit(matmor::io::polynomial_to_json(z));
    }
    if (tutte_lv->parsed()) {
      auto m = matmor::io::matroid_from_json(ctx.load(lv_m_path));
      auto n = matmor::io::matroid_from_json(ctx.load(lv_n_path));
      return ctx.emit(
          matmor::io::trivariate_to_json(matmor::lasvergnas_tutte(m, n)));
    }
    if (tutte_flag->parsed()) {
      ctx.fold(flag_q);
      auto flag = matmor::io::flag_from_json(ctx.load(flag_path));
      auto qs = parse_rat_list(flag_q);
      return ctx.emit(matmor::io::polynomial_to_json(
          matmor::homogeneous_tutte(flag, qs)));
    }

    if (lorentzian->parsed()) {
      matmor::Polynomial h(0);
      if (!poly_path.empty()) {
        h = matmor::io::polynomial_from_json(ctx.load(poly_path));
      } else if (!lor_flag_path.empty()) {
        ctx.fold(lor_q);
        auto flag = matmor::io::flag_from_json(ctx.load(lor_flag_path));
        h = matmor::homogeneous_tutte(flag, parse_rat_list(lor_q));
      } else {
        throw Error("invalid-argument",
                    "lorentzian needs a polynomial file or --flag with --q");
      }
      return ctx.emit(
          matmor::io::lorentzian_verdict_to_json(matmor::is_lorentzian(h)));
    }

    if (ulc->parsed()) {
      std::vector<Rat> a;
      for (const auto& v : ulc_values) {
        ctx.fold(v);
        a.push_back(matmor::rat_parse(v));
      }
      return ctx.emit(
          matmor::io::ulc_verdict_to_json(matmor::is_ultra_log_concave(a)));
    }

    if (mnat->parsed()) {
      auto r = matmor::io::setfunction_from_json(ctx.load(setfn_path));
      return ctx.emit(
          {{"mnat", matmor::io::mnat_verdict_to_json(matmor::is_mnat_concave(r))},
           {"submodular",
            matmor::io::submodular_verdict_to_json(matmor::is_submodular(r))}});
    }

    if (probe->parsed()) {
      ctx.fold(grid_arg);
      auto r = matmor::io::setfunction_from_json(ctx.load(probe_path));
      std::vector<Rat> grid = grid_arg.empty() ? matmor::default_probe_grid()
                                               : parse_rat_list(grid_arg);
      return ctx.emit(matmor::io::ln_report_to_json(matmor::probe_ln(r, grid)));
    }

    if (dualize->parsed()) {
      auto g = matmor::io::graph_from_json(ctx.load(graph_path));
      auto rot = matmor::io::rotation_from_json(ctx.load(rotation_path), g);
      return ctx.emit(dual_report(matmor::geometric_dual(g, rot)));
    }

    if (chk_morphism->parsed()) {
      auto f = matmor::io::morphism_from_json(ctx.load(chk_morphism_path));
      auto verdict = matmor::is_morphism(f.map(), f.source(), f.target());
      return ctx.emit(matmor::io::morphism_verdict_to_json(verdict));
    }
    if (chk_quotient->parsed()) {
      auto m = matmor::io::matroid_from_json(ctx.load(chk_q_m));
      auto n = matmor::io::matroid_from_json(ctx.load(chk_q_n));
      return ctx.emit(
          matmor::io::morphism_verdict_to_json(matmor::is_quotient(m, n)));
    }
    if (chk_flag->parsed()) {
      json j = ctx.load(chk_flag_path);
      try {
        matmor::io::flag_from_json(j);
        return ctx.emit({{"ok", true}});
      } catch (const Error& e) {
        if (e.kind() != "not-a-flag") throw;
        return ctx.emit({{"ok", false},
                         {"message", e.what()},
                         {"witness", e.details()}});
      }
    }
    if (chk_delta->parsed()) {
      json j = ctx.load(chk_delta_path);
      int n = j.at("n").get<int>();
      std::vector<matmor::Subset> family;
      for (const json& s : j.at("family")) {
        family.push_back(matmor::subset_of(s.get<std::vector<int>>(), n));
      }
      return ctx.emit(matmor::io::delta_verdict_to_json(
          matmor::check_delta_matroid(n, family)));
    }

    if (fixtures->parsed()) {
      ctx.fold(fixture_name);
      namespace fs = std::filesystem;
      fs::create_directories(out_dir);
      auto write = [&](const std::string& name, const json& j) {
        std::string path = (fs::path(out_dir) / name).string();
        matmor::io::save_file(path, j);
        return path;
      };
      json written = json::array();
      if (fixture_name == "fano-projection") {
        written.push_back(write("fano-projection.json",
                                matmor::fixtures::fano_projection()));
      } else if (fixture_name == "graph-hom") {
        written.push_back(write("graph-hom.json", matmor::fixtures::graph_hom()));
      } else if (fixture_name == "k7-torus") {
        written.push_back(write("k7-graph.json", matmor::fixtures::k7_graph()));
        written.push_back(
            write("k7-rotation.json", matmor::fixtures::k7_rotation()));
        written.push_back(write("k7-torus.json", matmor::fixtures::k7_torus()));
      } else {
        written.push_back(write("example-5-6.json",
                                matmor::fixtures::example56_setfunction()));
        written.push_back(write("example-5-6-golden.json",
                                matmor::fixtures::example56_golden()));
      }
      return ctx.emit({{"written", written}});
    }

    throw Error("invalid-argument", "no subcommand handled");
  } catch (const Error& e) {
    json err = {{"error",
                 {{"kind", e.kind()},
                  {"message", e.what()},
                  {"details", e.details()}}}};
    std::cout << matmor::io::canonical_dump(err);
    return 1;
  } catch (const std::exception& e) {
    json err = {{"error", {{"kind", "internal"}, {"message", e.what()}}}};
    std::cout << matmor::io::canonical_dump(err);
    return 1;
  }
}
