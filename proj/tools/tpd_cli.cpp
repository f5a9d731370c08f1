// tpd: command-line front end.
//
//   tpd verify [--suite S] [--config PATH] [--json] [--timings] [--out PATH]
//   tpd geodesic --x0 x,y,z --v vx,vy,vz [--t0 T] [--dt DT] [--step H] [--csv]
//   tpd modes --m2 M --xi XI --kk K
//   tpd wkb --order N
//   tpd unruh --de DE --kk K [--sign +1|-1]
//   tpd invariants --spec NAME --species S --convention C [--sign +1|-1]
//   tpd transform --seed N [--scale S] [--x t,x,y,z]
//   tpd export --quantity Q --out PATH
//
// Every verb takes --config PATH and repeated --set key=value overrides.
// Exit codes: 0 ok, 1 failed checks, 2 usage error, 3 domain error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tpd/cli/config.hpp"
#include "tpd/cli/export.hpp"
#include "tpd/cli/report.hpp"
#include "tpd/cli/suites.hpp"
#include "tpd/lie/invariants.hpp"

using namespace tpd;
using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string config_path;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config_path, "flat key = value config file");
  app->add_option("--set", c.overrides, "override one config key (key=value)");
}

RunConfig load(const Common& c) {
  RunConfig cfg = c.config_path.empty() ? RunConfig{} : load_config(c.config_path);
  for (const auto& kv : c.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--set", "expected key=value, got '" + kv + "'");
    apply_setting(cfg, detail::trim(kv.substr(0, eq)), detail::trim(kv.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

template <std::size_t N>
std::array<double, N> parse_vec(const std::string& field, const std::string& text) {
  const auto v = detail::parse_list(field, text);
  if (v.size() != N) throw UsageError(field, "expected " + std::to_string(N) + " comma-separated numbers");
  std::array<double, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

int parse_sign(const std::string& field, int s) {
  if (s != 1 && s != -1) throw UsageError(field, "must be +1 or -1");
  return s;
}

json mat_json(const Mat5& m) {
  json rows = json::array();
  for (int i = 0; i < 5; ++i) {
    json r = json::array();
    for (int j = 0; j < 5; ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

json qmat_json(const QMat5& m) {
  json rows = json::array();
  for (int i = 0; i < 5; ++i) {
    json r = json::array();
    for (int j = 0; j < 5; ++j) r.push_back(m.a[5 * i + j].str());
    rows.push_back(r);
  }
  return rows;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tpd: projective (A)dS geometry, symmetry and mode toolkit"};
  app.require_subcommand(1);

  // verify
  Common verify_c;
  std::string suite = "all", verify_out;
  bool as_json = false, timings = false;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  add_common(verify, verify_c);
  verify->add_option("--suite", suite, "geometry | dynamics | group | lie | modes | all");
  verify->add_flag("--json", as_json, "print the JSON report");
  verify->add_flag("--timings", timings, "include per-check runtimes in JSON");
  verify->add_option("--out", verify_out, "also write the report in the configured format");

  // geodesic
  Common geo_c;
  std::string x0_text, v_text;
  double t0 = 0.0, dt = 0.5, step = 0.01;
  bool geo_csv = false;
  auto* geodesic = app.add_subcommand("geodesic", "integrate free motion and measure straightness");
  add_common(geodesic, geo_c);
  geodesic->add_option("--x0", x0_text, "initial position x,y,z")->required();
  geodesic->add_option("--v", v_text, "initial velocity vx,vy,vz")->required();
  geodesic->add_option("--t0", t0, "initial time");
  geodesic->add_option("--dt", dt, "time span");
  geodesic->add_option("--step", step, "maximum RK4 step");
  geodesic->add_flag("--csv", geo_csv, "print the trajectory as CSV");

  // modes
  Common modes_c;
  std::optional<double> m2, xi, kk;
  auto* modes = app.add_subcommand("modes", "mode function on the configured grid (CSV)");
  add_common(modes, modes_c);
  modes->add_option("--m2", m2, "mass squared");
  modes->add_option("--xi", xi, "curvature coupling");
  modes->add_option("--kk", kk, "k.k");

  // wkb
  Common wkb_c;
  int order = 0;
  auto* wkb = app.add_subcommand("wkb", "w at the given iteration order (CSV)");
  add_common(wkb, wkb_c);
  wkb->add_option("--order", order, "iteration order")->required()->check(CLI::NonNegativeNumber);
  wkb->add_option("--m2", m2, "mass squared");
  wkb->add_option("--xi", xi, "curvature coupling");
  wkb->add_option("--kk", kk, "k.k");

  // unruh
  Common unruh_c;
  double de = 0.0, unruh_kk = 2.0;
  int unruh_sign = 1;
  auto* unruh = app.add_subcommand("unruh", "static-detector amplitude");
  add_common(unruh, unruh_c);
  unruh->add_option("--de", de, "energy gap")->required();
  unruh->add_option("--kk", unruh_kk, "k.k")->required();
  unruh->add_option("--sign", unruh_sign, "mode branch +1 or -1");

  // invariants
  Common inv_c;
  std::string spec_name, species_name, convention_name;
  int inv_sign = 1;
  auto* invariants = app.add_subcommand("invariants", "invariant tensors of a subalgebra");
  add_common(invariants, inv_c);
  invariants->add_option("--spec", spec_name, "subalgebra name")->required();
  invariants->add_option("--species", species_name, "vector | symmetric | antisymmetric")->required();
  invariants->add_option("--convention", convention_name, "covariant | contravariant | vector")->required();
  invariants->add_option("--sign", inv_sign, "generator family +1 or -1");

  // transform
  Common tr_c;
  std::uint64_t tr_seed = 1;
  double tr_scale = 0.3;
  std::string tr_x = "0.1,0.2,-0.1,0.05";
  auto* transform = app.add_subcommand("transform", "sample a group element and apply it");
  add_common(transform, tr_c);
  transform->add_option("--seed", tr_seed, "sampling seed")->required();
  transform->add_option("--scale", tr_scale, "algebra coefficient scale");
  transform->add_option("--x", tr_x, "chart point t,x,y,z");

  // export
  Common ex_c;
  std::string quantity, ex_out;
  auto* exporter = app.add_subcommand("export", "write a plot-ready CSV");
  add_common(exporter, ex_c);
  exporter->add_option("--quantity", quantity, "amplitude | trajectory | mode | w | density")->required();
  exporter->add_option("--out", ex_out, "output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      const RunConfig cfg = load(verify_c);
      const auto rep = run_verify(cfg, suite);
      if (as_json) std::cout << render_json(rep, timings);
      else std::cout << render_text(rep);
      if (!verify_out.empty()) {
        std::ofstream out(verify_out, std::ios::binary);
        if (!out) throw UsageError("out", "cannot write '" + verify_out + "'");
        out << (cfg.format == "csv" ? render_csv(rep) : render_json(rep, timings));
      }
      return rep.exit_status();
    }

    if (geodesic->parsed()) {
      const RunConfig cfg = load(geo_c);
      const KinState s{t0, parse_vec<3>("x0", x0_text), parse_vec<3>("v", v_text)};
      const auto tr = integrate_free_motion(s, t0 + dt, step, cfg.geometry);
      if (geo_csv) {
        write_trajectory_csv(std::cout, tr);
        return 0;
      }
      json j;
      j["samples"] = tr.size();
      j["step"] = tr.step;
      j["t_end"] = tr.t.back();
      j["x_end"] = tr.x.back();
      j["v_end"] = tr.v.back();
      j["max_straightness_error"] = tr.max_straightness_error();
      j["el_residual_initial"] = el_residual(s, cfg.geometry);
      print(j);
      return 0;
    }

    if (modes->parsed() || wkb->parsed()) {
      RunConfig cfg = load(modes->parsed() ? modes_c : wkb_c);
      if (m2) cfg.mode_m2 = *m2;
      if (xi) cfg.mode_xi = *xi;
      if (kk) cfg.mode_kk = *kk;
      cfg.validate();
      if (modes->parsed()) {
        write_mode_csv(std::cout, cfg);
        return 0;
      }
      const auto s = wkb_order(mode_params(cfg), cfg.grid_lo, cfg.grid_hi, cfg.grid_nodes, order);
      std::cout << "x,w\n";
      for (std::size_t i = 0; i < s.size(); ++i)
        std::cout << detail::format_double(s.x(i)) << ',' << detail::format_double(s.w[i]) << '\n';
      return 0;
    }

    if (unruh->parsed()) {
      load(unruh_c);
      const int sg = parse_sign("sign", unruh_sign);
      const double omega = unruh_omega(de, unruh_kk, sg);
      const cplx quad = detector_amplitude(de, unruh_kk, sg, static_detector());
      json j;
      j["dE"] = de;
      j["kk"] = unruh_kk;
      j["sign"] = sg;
      j["omega"] = omega;
      j["closed_form"] = unruh_amplitude(de, unruh_kk, sg);
      j["fourier_closed_form"] = fourier_closed_form(omega);
      j["detector_quadrature"] = {{"re", quad.real()}, {"im", quad.imag()}, {"abs", std::abs(quad)}};
      print(j);
      return 0;
    }

    if (invariants->parsed()) {
      const RunConfig cfg = load(inv_c);
      const int sg = parse_sign("sign", inv_sign);
      SubalgebraSpec spec;
      Species species;
      Convention convention;
      try {
        spec = subalgebra(spec_name, sg);
      } catch (const InvalidInput& e) {
        throw UsageError("spec", e.what());
      }
      try {
        species = parse_species(species_name);
      } catch (const InvalidInput& e) {
        throw UsageError("species", e.what());
      }
      try {
        convention = parse_convention(convention_name);
      } catch (const InvalidInput& e) {
        throw UsageError("convention", e.what());
      }
      const auto basis = invariant_space(spec, species, convention, cfg.geometry.branch);
      json j;
      j["spec"] = spec.name;
      j["generators"] = spec.generators;
      j["species"] = to_string(species);
      j["convention"] = to_string(convention);
      j["dimension"] = basis.dimension();
      auto& arr = j["basis"] = json::array();
      for (const auto& t : basis.tensors) {
        if (species == Species::vector) {
          json col = json::array();
          for (int i = 0; i < 5; ++i) col.push_back(t.a[5 * i].str());
          arr.push_back(col);
        } else {
          arr.push_back(qmat_json(t));
        }
      }
      print(j);
      return 0;
    }

    if (transform->parsed()) {
      const RunConfig cfg = load(tr_c);
      if (!(tr_scale > 0.0)) throw UsageError("scale", "must be > 0");
      const Point4 x = parse_vec<4>("x", tr_x);
      const auto g = sample_group_element(tr_seed, tr_scale, cfg.geometry.branch);
      const auto d = decompose(g);
      json j;
      j["seed"] = tr_seed;
      j["branch"] = to_string(g.branch);
      j["matrix"] = mat_json(g.M);
      j["defining_residual"] = defining_residual(g);
      j["decomposition"] = {{"lambda", d.lambda},
                            {"constraint_residual", d.eq11_residual},
                            {"reassembly_residual", d.reassembly_residual}};
      j["x"] = x;
      const Point4 y = flt_apply(g, x, cfg.geometry);
      j["image"] = y;
      const Point4 yp = flt_projective(g, x, cfg.geometry);
      double proj = 0.0;
      for (int i = 0; i < 4; ++i) proj = std::max(proj, std::abs(y[i] - yp[i]));
      j["projective_residual"] = proj;
      j["B_invariance_residual"] = max_abs(verify_B_invariance(g, x, cfg.geometry));
      print(j);
      return 0;
    }

    if (exporter->parsed()) {
      const RunConfig cfg = load(ex_c);
      const auto rows = export_grid(cfg, quantity, ex_out);
      std::cerr << "wrote " << rows << " rows to " << ex_out << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
