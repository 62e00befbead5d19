// tropint: tropical hypersurfaces and complete intersections from
// leading-term Puiseux data, with exact JSON results.

#include "trop/generators.hpp"
#include "trop/invariants.hpp"
#include "trop/io.hpp"
#include "trop/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace trop;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitValidationFailure = 2;

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("input is not valid JSON: " + path);
  return j;
}

struct Loaded {
  Json raw;
  TropicalSystem system;
};

Loaded load(const std::string& path) {
  Json raw = read_json(path);
  return {raw, parse_system(raw)};
}

Json envelope(const std::string& command, const Json& input) {
  Json env;
  env["command"] = command;
  env["inputs_digest"] = input_digest(input);
  env["outputs"] = Json::object();
  env["verdicts"] = Json::object();
  return env;
}

void print_envelope(const Json& env) { std::cout << env.dump(2) << "\n"; }

Json cells_json(const MixedSubdivision& ms) {
  Json cells = Json::array();
  for (const auto& cell : ms.cells()) {
    Json cj;
    cj["dim"] = cell.dim;
    cj["factor_dims"] = cell.factor_dims;
    cj["interior"] = cell.interior;
    cj["maximal"] = cell.maximal;
    Json factors = Json::array();
    for (int i = 0; i < ms.system().size(); ++i) {
      Json pts = Json::array();
      for (const auto& p : ms.factor_points(cell, i)) {
        Json pt = Json::array();
        for (Index c = 0; c < p.size(); ++c) pt.push_back(json_int(p(c)));
        pts.push_back(pt);
      }
      factors.push_back(pts);
    }
    cj["factors"] = factors;
    cells.push_back(cj);
  }
  return cells;
}

int run_subdivide(const Loaded& in) {
  Json env = envelope("subdivide", in.raw);
  Json duals = Json::array();
  for (const auto& p : in.system.polys()) {
    auto data = dual_subdivision(p);
    Json dj;
    dj["primitive"] = is_primitive_triangulation(data.dual);
    Json cells = Json::array();
    for (const auto& face : data.dual.faces()) {
      cells.push_back(Json{{"points", face.points},
                           {"dim", face.dim},
                           {"interior", face.interior},
                           {"maximal", face.maximal}});
    }
    dj["faces"] = cells;
    duals.push_back(dj);
  }
  env["outputs"]["dual_subdivisions"] = duals;
  MixedSubdivision ms = cayley_trick(in.system);
  env["outputs"]["mixed_subdivision"] = cells_json(ms);
  auto [pure, tight] = purity_flags(ms);
  env["outputs"]["pure"] = pure;
  env["outputs"]["tight"] = tight;
  env["verdicts"]["nondegenerate"] = is_nondegenerate_system(in.system);
  print_envelope(env);
  return kExitOk;
}

int run_nondegenerate(const Loaded& in) {
  Json env = envelope("nondegenerate", in.raw);
  Json per = Json::array();
  for (const auto& p : in.system.polys()) per.push_back(is_nonsingular(p));
  env["outputs"]["polynomial_nonsingular"] = per;
  env["verdicts"]["nondegenerate"] = is_nondegenerate_system(in.system);
  print_envelope(env);
  return kExitOk;
}

int run_weights(const Loaded& in, bool oracle, std::uint64_t seed) {
  Json env = envelope("weights", in.raw);
  MixedSubdivision ms = cayley_trick(in.system);
  Json cells = Json::array();
  bool oracle_ok = true;
  for (const auto& cell : ms.cells()) {
    bool positive = true;
    for (int d : cell.factor_dims)
      if (d == 0) positive = false;
    if (!positive) continue;
    WeightRecord rec = weight_general(ms, cell);
    Json cj = weight_record_json(rec);
    Json factors = Json::array();
    for (int i = 0; i < ms.system().size(); ++i) {
      Json pts = Json::array();
      for (const auto& p : ms.factor_points(cell, i)) {
        Json pt = Json::array();
        for (Index c = 0; c < p.size(); ++c) pt.push_back(json_int(p(c)));
        pts.push_back(pt);
      }
      factors.push_back(pts);
    }
    cj["factors"] = factors;
    if (oracle) {
      Int perturbed = weight_by_perturbation(ms, cell, seed);
      cj["perturbation_weight"] = json_int(perturbed);
      if (perturbed != rec.weight) oracle_ok = false;
    }
    cells.push_back(cj);
  }
  env["outputs"]["intersection_cells"] = cells;
  if (oracle) env["verdicts"]["perturbation_agrees"] = oracle_ok;
  print_envelope(env);
  return (oracle && !oracle_ok) ? kExitVerificationFailure : kExitOk;
}

int run_bernstein(const Loaded& in) {
  Json env = envelope("bernstein", in.raw);
  Int total = stable_intersection_total(in.system);
  env["outputs"]["total"] = json_int(total);
  IMat id(in.system.ambient_dim(), in.system.ambient_dim());
  id.setZero();
  for (Index i = 0; i < id.rows(); ++i) id(i, i) = 1;
  std::vector<int> ones(static_cast<std::size_t>(in.system.size()), 1);
  env["outputs"]["mixed_volume"] = json_rat(mixed_volume(in.system.newton_polytopes(), ones, &id));
  print_envelope(env);
  return kExitOk;
}

int run_patchwork(const Loaded& in, bool compact, bool oracle) {
  Json env = envelope("patchwork", in.raw);
  PatchworkComplex complex = ci_complex(in.system);
  Json counts = Json::array();
  for (const auto& c : complex.cell_counts) counts.push_back(json_int(c));
  env["outputs"]["cell_counts"] = counts;
  env["outputs"]["euler"] = json_int(euler_torus(complex));
  if (compact) env["outputs"]["euler_compact"] = json_int(euler_compactified(in.system));
  if (oracle) {
    // re-count every contribution by brute force over the 2^n copies
    bool agree = true;
    for (const auto& contrib : complex.contributions) {
      std::vector<SignedSimplex> sims;
      for (int i = 0; i < in.system.size(); ++i) {
        SignedSimplex s;
        for (int t : contrib.factor_terms[static_cast<std::size_t>(i)]) {
          s.verts.push_back(in.system.poly(i).terms()[static_cast<std::size_t>(t)].exponent);
          s.signs.push_back(in.system.poly(i).terms()[static_cast<std::size_t>(t)].sign);
        }
        sims.push_back(std::move(s));
      }
      if (count_mixed_copies_bruteforce(sims, static_cast<int>(in.system.ambient_dim())) !=
          contrib.copies)
        agree = false;
    }
    env["verdicts"]["copy_counts_agree"] = agree;
    if (!agree) {
      print_envelope(env);
      return kExitVerificationFailure;
    }
  }
  print_envelope(env);
  return kExitOk;
}

int run_signature(const Loaded& in, bool compact) {
  Json env = envelope("signature", in.raw);
  Json per = Json::array();
  for (const auto& p : in.system.polys()) {
    const auto& delta = p.newton_polytope();
    Json pj;
    if (delta.dim() == 0) {
      pj["sigma"] = 0;
    } else {
      LatticePolytope r =
          (delta.dim() == static_cast<int>(delta.ambient_dim())) ? delta : delta.restricted();
      EhrhartPolynomial e = ehrhart(r);
      Json coeffs = Json::array();
      for (const auto& a : e.a) coeffs.push_back(json_rat(a));
      pj["ehrhart"] = coeffs;
      Json psi = Json::array();
      for (const auto& v : psi_coefficients(e)) psi.push_back(json_int(v));
      pj["psi"] = psi;
      pj["sigma"] = json_int(sigma_hypersurface(e, r.dim()));
      if (compact) pj["sigma_compact"] = json_int(sigma_compactified({delta}));
    }
    per.push_back(pj);
  }
  env["outputs"]["polynomials"] = per;
  env["outputs"]["sigma_ci"] =
      json_int(sigma_complete_intersection(in.system.newton_polytopes(), in.system.ambient_dim()));
  if (compact)
    env["outputs"]["sigma_ci_compact"] = json_int(sigma_compactified(in.system.newton_polytopes()));
  print_envelope(env);
  return kExitOk;
}

int run_verify(const Loaded& in, bool compact) {
  Json env = envelope("verify", in.raw);
  MainTheoremReport rep = verify_main_theorem(in.system, compact);
  env["outputs"]["chi"] = json_int(rep.chi);
  env["outputs"]["sigma"] = json_int(rep.sigma);
  Json counts = Json::array();
  for (const auto& c : rep.cell_counts) counts.push_back(json_int(c));
  env["outputs"]["cell_counts"] = counts;
  Json terms = Json::array();
  for (const auto& [members, value] : rep.sigma_x_terms) {
    terms.push_back(Json{{"subset", members}, {"sigma_x", json_int(value)}});
  }
  env["outputs"]["sigma_x_terms"] = terms;
  env["verdicts"]["equal"] = rep.equal;
  if (compact) {
    env["outputs"]["chi_compact"] = json_int(rep.chi_compact);
    env["outputs"]["sigma_compact"] = json_int(rep.sigma_compact);
    env["verdicts"]["equal_compact"] = rep.equal_compact;
  }
  env["verdicts"]["pass"] = rep.pass();
  print_envelope(env);
  return rep.pass() ? kExitOk : kExitVerificationFailure;
}

int run_identities(int max_n) {
  Json env = envelope("identities", Json{{"max_n", max_n}});
  IdentityReport rep = identity_suite(max_n);
  env["verdicts"]["vanlint"] = rep.vanlint;
  env["verdicts"]["binrmq"] = rep.binrmq;
  env["verdicts"]["recurrences"] = rep.recurrences;
  env["verdicts"]["diagonal"] = rep.diagonal;
  env["verdicts"]["pass"] = rep.all();
  env["outputs"]["notes"] = rep.notes;
  print_envelope(env);
  return rep.all() ? kExitOk : kExitVerificationFailure;
}

int run_plot(const Loaded& in, const std::string& out_path, const std::string& bbox_arg,
             bool show_dual) {
  SvgOptions opts;
  opts.show_dual = show_dual;
  if (!bbox_arg.empty()) {
    std::array<Rat, 4> box;
    std::stringstream ss(bbox_arg);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',') && i < 4) box[static_cast<std::size_t>(i++)] = rat_from_string(part);
    require(i == 4 && ss.eof(), "plot: --bbox expects x0,y0,x1,y1");
    opts.bbox = box;
  }
  std::string svg = emit_svg(in.system, opts);
  std::ofstream out(out_path);
  require(static_cast<bool>(out), "plot: cannot open output file " + out_path);
  out << svg;
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tropical hypersurfaces, intersections and patchworking"};
  app.require_subcommand(1);

  std::string input = "-";
  std::uint64_t seed = 1;
  bool compact = false;
  bool oracle = false;
  int max_n = 10;
  std::string out_path = "out.svg";
  std::string bbox_arg;
  bool show_dual = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "system file (JSON), or - for standard input");
  };

  auto* c_subdivide = app.add_subcommand("subdivide", "dual and mixed subdivision dump");
  add_input(c_subdivide);
  auto* c_nondeg = app.add_subcommand("nondegenerate", "nondegeneracy check");
  add_input(c_nondeg);
  auto* c_weights = app.add_subcommand("weights", "intersection cells with weight records");
  add_input(c_weights);
  c_weights->add_flag("--oracle", oracle, "cross-check weights by perturbation");
  c_weights->add_option("--seed", seed, "perturbation seed");
  auto* c_bernstein = app.add_subcommand("bernstein", "stable intersection total");
  add_input(c_bernstein);
  auto* c_patchwork = app.add_subcommand("patchwork", "real cell counts and Euler characteristic");
  add_input(c_patchwork);
  c_patchwork->add_flag("--compact", compact, "include compactified quantities");
  c_patchwork->add_flag("--oracle", oracle, "brute-force cross-check of copy counts");
  auto* c_signature = app.add_subcommand("signature", "Ehrhart data, psi and mixed signatures");
  add_input(c_signature);
  c_signature->add_flag("--compact", compact, "include compactified quantities");
  auto* c_verify = app.add_subcommand("verify", "main-theorem report (chi vs sigma)");
  add_input(c_verify);
  c_verify->add_flag("--compact", compact, "also compare the compactified pair");
  auto* c_identities = app.add_subcommand("identities", "exhaustive identity checks");
  c_identities->add_option("--max-n", max_n, "largest index (<= 10)");
  auto* c_plot = app.add_subcommand("plot", "SVG plot of plane tropical curves");
  add_input(c_plot);
  c_plot->add_option("-o,--output", out_path, "output SVG path");
  c_plot->add_option("--bbox", bbox_arg, "clip box x0,y0,x1,y1");
  c_plot->add_flag("--dual", show_dual, "overlay the dual subdivisions");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_identities->parsed()) return run_identities(max_n);
    Loaded in = load(input);
    if (c_subdivide->parsed()) return run_subdivide(in);
    if (c_nondeg->parsed()) return run_nondegenerate(in);
    if (c_weights->parsed()) return run_weights(in, oracle, seed);
    if (c_bernstein->parsed()) return run_bernstein(in);
    if (c_patchwork->parsed()) return run_patchwork(in, compact, oracle);
    if (c_signature->parsed()) return run_signature(in, compact);
    if (c_verify->parsed()) return run_verify(in, compact);
    if (c_plot->parsed()) return run_plot(in, out_path, bbox_arg, show_dual);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  }
  return kExitOk;
}
