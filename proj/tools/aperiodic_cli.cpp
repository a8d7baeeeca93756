#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "aperiodic/cpt.hpp"
#include "aperiodic/heights.hpp"
#include "aperiodic/penrose.hpp"
#include "aperiodic/pentagrid.hpp"
#include "aperiodic/spectral.hpp"
#include "aperiodic/svg.hpp"
#include "aperiodic/tiling.hpp"
#include "aperiodic/validator.hpp"

using namespace aperiodic;
using nlohmann::json;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSingular = 3;

std::int64_t max_cells() {
  if (const char* env = std::getenv("APERIODIC_MAX_CELLS")) return std::atoll(env);
  return 1000000;
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

Tiling read_document(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw MalformedTilingError("cannot read " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw MalformedTilingError(std::string("invalid JSON: ") + e.what());
  }
  return Tiling::from_json(j);
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s), 1);
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

int run(int argc, char** argv) {
  CLI::App app{"aperiodic tilings: generation, validation, heights, projection schemes"};
  app.require_subcommand(1);

  // ---- generate ----
  auto* gen = app.add_subcommand("generate", "generate a tiling document");
  std::string gen_kind, gen_out = "-", gen_seed = "kite", gen_offsets = "1/5",
              gen_scheme = "fibonacci", gen_scheme_file;
  int gen_steps = 8;
  double gen_radius = 10.0;
  gen->add_option("kind", gen_kind, "p2 | pentagrid | cpt")->required();
  gen->add_option("--steps", gen_steps, "substitution half-steps (p2)");
  gen->add_option("--seed", gen_seed, "p2 seed: kite | dart | sun");
  gen->add_option("--radius", gen_radius, "patch radius (pentagrid, cpt)");
  gen->add_option("--offsets", gen_offsets, "pentagrid offsets, one rational or 5 comma-separated");
  gen->add_option("--scheme", gen_scheme,
                  "cpt scheme: fibonacci | penrose5 | ammann_beenker | icosahedral");
  gen->add_option("--scheme-file", gen_scheme_file, "user scheme JSON {name,n,d,phys}");
  gen->add_option("--out", gen_out, "output path ('-' for stdout)");

  // ---- validate ----
  auto* val = app.add_subcommand("validate", "check the gluing condition per family");
  std::string val_in, val_json, val_svg;
  val->add_option("input", val_in)->required();
  val->add_option("--json", val_json, "write the report JSON here");
  val->add_option("--svg", val_svg, "render with violations highlighted");

  // ---- mutate ----
  auto* mut = app.add_subcommand("mutate", "inject matching-rule violations");
  std::string mut_in, mut_out = "-", mut_mode = "flip";
  int mut_edge = -1, mut_count = 1, mut_tile = 0;
  unsigned mut_seed = 1;
  mut->add_option("input", mut_in)->required();
  mut->add_option("--edge", mut_edge, "interior edge id to mutate");
  mut->add_option("--count", mut_count, "number of random edges when --edge is absent");
  mut->add_option("--seed", mut_seed, "seed for randomized placement");
  mut->add_option("--mode", mut_mode, "flip | zero");
  mut->add_option("--tile", mut_tile, "which incident tile (0 or 1)");
  mut->add_option("--out", mut_out);

  // ---- heights ----
  auto* hgt = app.add_subcommand("heights", "height functions / atlas");
  std::string hgt_in, hgt_out = "-", hgt_svg;
  int hgt_family = -1;
  hgt->add_option("input", hgt_in)->required();
  hgt->add_option("--family", hgt_family, "single family (default: all)");
  hgt->add_option("--out", hgt_out);
  hgt->add_option("--svg", hgt_svg, "height-coloured SVG");

  // ---- reconstruct ----
  auto* rec = app.add_subcommand("reconstruct", "max reconstruction residual");
  std::string rec_in;
  rec->add_option("input", rec_in)->required();

  // ---- cpt-report ----
  auto* cpt = app.add_subcommand("cpt-report", "CF1-CF5 conservation report");
  std::string cpt_scheme = "fibonacci", cpt_scheme_file, cpt_out = "-";
  double cpt_radius = 10.0;
  cpt->add_option("--scheme", cpt_scheme);
  cpt->add_option("--scheme-file", cpt_scheme_file);
  cpt->add_option("--radius", cpt_radius);
  cpt->add_option("--out", cpt_out);

  // ---- hierarchy ----
  auto* hier = app.add_subcommand("hierarchy", "Perron-Frobenius / entropy / J table");
  bool hier_builtin = true, hier_json = false;
  hier->add_flag("--builtin", hier_builtin, "use the four builtin substitutions");
  hier->add_flag("--json", hier_json);
  std::string hier_out = "-";
  hier->add_option("--out", hier_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (gen->parsed()) {
    Tiling t;
    if (gen_kind == "p2") {
      if (gen_steps % 2 != 0)
        throw CLI::ValidationError("--steps", "p2 generation needs an even number of half-steps");
      auto patch = seed_patch(gen_seed);
      robinson_substitute(patch, gen_steps);
      if (static_cast<std::int64_t>(patch.halves.size()) > max_cells())
        throw std::invalid_argument("patch exceeds APERIODIC_MAX_CELLS");
      t = assemble_p2(patch);
    } else if (gen_kind == "pentagrid") {
      PentagridParams params;
      params.radius = gen_radius;
      std::vector<std::string> parts;
      std::stringstream ss(gen_offsets);
      std::string item;
      while (std::getline(ss, item, ',')) parts.push_back(item);
      if (parts.size() == 1) {
        for (auto& g : params.gamma) g = parse_rational(parts[0]);
      } else if (parts.size() == 5) {
        for (int k = 0; k < 5; ++k) params.gamma[k] = parse_rational(parts[k]);
      } else {
        throw CLI::ValidationError("--offsets", "need one rational or five");
      }
      double est = 10.0 * (2 * gen_radius + 5) * (2 * gen_radius + 5);
      if (est > static_cast<double>(max_cells()))
        throw std::invalid_argument("radius exceeds APERIODIC_MAX_CELLS");
      t = generate_pentagrid(params);
    } else if (gen_kind == "cpt") {
      CptScheme scheme;
      if (!gen_scheme_file.empty()) {
        std::ifstream f(gen_scheme_file);
        if (!f) throw std::invalid_argument("cannot read " + gen_scheme_file);
        json j;
        f >> j;
        scheme = scheme_from_json(j);
      } else {
        scheme = builtin_scheme(gen_scheme);
      }
      t = generate_cpt(scheme, gen_radius, max_cells()).to_tiling();
    } else {
      throw CLI::ValidationError("kind", "unknown generator '" + gen_kind + "'");
    }
    write_file(gen_out, canonical_dump(t.to_json()));
    return kExitValid;
  }

  if (val->parsed()) {
    Tiling t = read_document(val_in);
    auto rep = validate(t);
    if (!val_json.empty()) write_file(val_json, canonical_dump(rep.to_json()));
    if (val_svg.empty() && val_json.empty()) write_file("-", canonical_dump(rep.to_json()));
    if (!val_svg.empty()) {
      SvgOptions opt;
      for (const auto& fam : rep.families)
        opt.violations.insert(opt.violations.end(), fam.begin(), fam.end());
      write_file(val_svg, render_svg(t, opt));
    }
    return rep.valid ? kExitValid : kExitDomain;
  }

  if (mut->parsed()) {
    Tiling t = read_document(mut_in);
    MutationMode mode = mut_mode == "zero" ? MutationMode::kZero : MutationMode::kFlip;
    std::vector<int> edges;
    if (mut_edge >= 0) {
      edges.push_back(mut_edge);
    } else {
      std::vector<int> interior;
      for (int e = 0; e < static_cast<int>(t.edges.size()); ++e)
        if (t.edges[e].tiles.size() == 2) interior.push_back(e);
      std::mt19937 rng(mut_seed);
      std::shuffle(interior.begin(), interior.end(), rng);
      for (int i = 0; i < mut_count && i < static_cast<int>(interior.size()); ++i)
        edges.push_back(interior[i]);
    }
    for (int e : edges) t = inject_violation(t, e, mut_tile, mode);
    write_file(mut_out, canonical_dump(t.to_json()));
    return kExitValid;
  }

  if (hgt->parsed()) {
    Tiling t = read_document(hgt_in);
    int root = default_root(t);
    if (hgt_family >= 0 && hgt_svg.empty()) {
      auto r = height_function(t, hgt_family, root);
      if (std::holds_alternative<ClosureWitness>(r)) {
        const auto& w = std::get<ClosureWitness>(r);
        json j{{"family", hgt_family}, {"witness", {{"walk", w.walk}, {"sum", w.sum}}}};
        write_file(hgt_out, canonical_dump(j));
        return kExitDomain;
      }
      const auto& p = std::get<PotentialMap>(r);
      json j{{"root", p.root}, {"family", hgt_family}, {"heights", p.height}};
      write_file(hgt_out, canonical_dump(j));
      return kExitValid;
    }
    auto r = height_atlas(t, root);
    if (std::holds_alternative<AtlasFailure>(r)) {
      json j;
      j["witnesses"] = json::array();
      for (const auto& [k, w] : std::get<AtlasFailure>(r).witnesses)
        j["witnesses"].push_back({{"family", k}, {"walk", w.walk}, {"sum", w.sum}});
      write_file(hgt_out, canonical_dump(j));
      return kExitDomain;
    }
    const auto& atlas = std::get<HeightAtlas>(r);
    write_file(hgt_out, canonical_dump(atlas.to_json()));
    if (!hgt_svg.empty()) {
      SvgOptions opt;
      opt.colour_family = std::max(0, hgt_family);
      opt.heights = atlas.heights;
      write_file(hgt_svg, render_svg(t, opt));
    }
    return kExitValid;
  }

  if (rec->parsed()) {
    Tiling t = read_document(rec_in);
    int root = default_root(t);
    auto r = height_atlas(t, root);
    if (std::holds_alternative<AtlasFailure>(r)) {
      std::cout << "no atlas: closure fails\n";
      return kExitDomain;
    }
    double resid = reconstruction_check(std::get<HeightAtlas>(r), t);
    std::cout << "max residual " << resid << "\n";
    return kExitValid;
  }

  if (cpt->parsed()) {
    CptScheme scheme;
    if (!cpt_scheme_file.empty()) {
      std::ifstream f(cpt_scheme_file);
      if (!f) throw std::invalid_argument("cannot read " + cpt_scheme_file);
      json j;
      f >> j;
      scheme = scheme_from_json(j);
    } else {
      scheme = builtin_scheme(cpt_scheme);
    }
    auto patch = generate_cpt(scheme, cpt_radius, max_cells());
    auto rep = conservation_report(scheme, patch);
    write_file(cpt_out, canonical_dump(rep.to_json()));
    return rep.all_pass() ? kExitValid : kExitDomain;
  }

  if (hier->parsed()) {
    auto rows = coherence_hierarchy(builtin_substitutions());
    if (hier_json) {
      json j = json::array();
      for (const auto& r : rows)
        j.push_back({{"name", r.name},
                     {"lambda", quantise(r.lambda)},
                     {"entropy", quantise(r.entropy)},
                     {"j_cost", quantise(r.j)}});
      write_file(hier_out, canonical_dump(j));
    } else {
      std::ostringstream os;
      os << "system            lambda_PF     entropy       J\n";
      for (const auto& r : rows) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%-16s  %.10f  %.7f  %.10f\n", r.name.c_str(), r.lambda,
                      r.entropy, r.j);
        os << buf;
      }
      write_file(hier_out, os.str());
    }
    return kExitValid;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    std::cerr << "usage error; see --help\n";
    return kExitUsage;
  } catch (const SingularGridError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingular;
  } catch (const GenericityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingular;
  } catch (const MalformedTilingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
