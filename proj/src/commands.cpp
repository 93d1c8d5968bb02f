// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "pnmr/cube.hpp"
#include "pnmr/elements.hpp"
#include "pnmr/error.hpp"
#include "pnmr/ingest.hpp"
#include "pnmr/log.hpp"
#include "pnmr/observables.hpp"
#include "pnmr/thermo.hpp"
#include "pnmr/units.hpp"

namespace pnmr {

namespace {

using nlohmann::json;

struct DataVersions {
  std::string erf_fit;
  std::string radii;
  std::string nuclear_g;
};

struct Session {
  RunConfig cfg;
  Checkpoint cp;
  ZoraModel zora;
  QuadratureGrid grid;
  Eigen::Vector4d counts = Eigen::Vector4d::Zero();
  std::optional<ReducedSpinDensity> reduced;
  std::unique_ptr<SpinCurrentField> field;
  std::optional<RadiiTable> radii;
  std::optional<NuclearGTable> g_table;
  DataVersions versions;
  double spin = 0.5;
};

std::unique_ptr<Session> open_session(const RunConfig& cfg) {
  if (cfg.input.empty()) throw Error(ErrorKind::DomainError, "no --input checkpoint given");
  set_thread_count(cfg.threads);
  auto s = std::make_unique<Session>();
  s->cfg = cfg;
  s->cp = read_fchk(cfg.input);
  auto& sys = s->cp.system;
  auto& density = s->cp.density;
  if (!cfg.density.empty()) density = read_generalized_density(cfg.density, sys.n_basis());
  if (cfg.reverse_spin) density = density.spin_flipped();
  for (int n : cfg.nuclei) {
    if (n >= static_cast<int>(sys.atoms.size())) {
      throw Error(ErrorKind::DomainError,
                  fmt::format("nucleus {} does not exist ({} atoms)", n + 1, sys.atoms.size()));
    }
  }

  std::optional<ErfFitTable> erf;
  if (!cfg.erf_table.empty()) erf = parse_erf_fit_table(read_text_file(cfg.erf_table));
  s->zora = make_zora_model(sys, erf ? &*erf : nullptr);
  s->versions.erf_fit = s->zora.table_version;

  GridOptions go;
  go.quality = cfg.grid;
  if (!cfg.radii_table.empty()) {
    s->radii = parse_radii_table(read_text_file(cfg.radii_table));
    go.radii = &*s->radii;
  }
  s->grid = build_grid(sys, go);
  s->versions.radii = s->grid.radii_version;
  if (!cfg.g_table.empty()) s->g_table = parse_nuclear_g_table(read_text_file(cfg.g_table));
  s->versions.nuclear_g = s->g_table ? s->g_table->version
                                     : table_version(embedded_nuclear_g_table());

  const bool collinear = density.collinear();
  const bool use_deviation = cfg.mode == CurrentMode::SR_SOC;
  if (cfg.mode == CurrentMode::SR_SOC && collinear) {
    warn("SR+SOC mode with a collinear density: the deviation densities are zero");
  }
  s->counts = integrate_densities(density, sys, s->grid);
  s->reduced = build_reduced(density, sys, s->grid, use_deviation);
  if (cfg.spin) {
    s->spin = *cfg.spin;
  } else if (collinear) {
    s->spin = 0.5 * (sys.n_alpha - sys.n_beta);
  } else {
    s->spin = s->reduced->s_eff();
  }
  if (!(s->spin >= 0.5)) {
    throw Error(ErrorKind::ClosedShellInput, fmt::format("spin {} is below 1/2", s->spin));
  }
  s->field = std::make_unique<SpinCurrentField>(sys, density, *s->reduced, s->zora, cfg.mode);
  return s;
}

std::vector<int> selected_nuclei(const Session& s) {
  if (!s.cfg.nuclei.empty()) return s.cfg.nuclei;
  std::vector<int> all(s.cp.system.atoms.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return all;
}

json matrix_json(const Mat3& m) {
  json out = json::array();
  for (int i = 0; i < 3; ++i) out.push_back({m(i, 0), m(i, 1), m(i, 2)});
  return out;
}

json tensor_json(const PropertyTensor& t) {
  return {{"unit", to_string(t.unit)},
          {"iso", t.iso()},
          {"total", matrix_json(t.total)},
          {"zee", matrix_json(t.zee)},
          {"soc", matrix_json(t.soc)},
          {"zee_iso", t.zee.trace() / 3.0},
          {"soc_iso", t.soc.trace() / 3.0},
          {"soc_included", t.soc_included}};
}

json header_json(const Session& s, const std::string& command) {
  const auto& g = s.grid;
  return {{"program", "pnmr"},
          {"version", kVersion},
          {"command", command},
          {"config_hash", config_hash(s.cfg)},
          {"data_versions",
           {{"erf_fit", s.versions.erf_fit},
            {"radii", s.versions.radii},
            {"nuclear_g", s.versions.nuclear_g}}},
          {"input", s.cfg.input},
          {"density", s.cfg.density},
          {"mode", to_string(s.cfg.mode)},
          {"temperature", s.cfg.temperature},
          {"spin", s.spin},
          {"s_eff", s.reduced->s_eff()},
          {"statistics", s.cfg.exact_statistics ? "exact" : "linear"},
          {"field_tesla", s.cfg.field_tesla},
          {"grid",
           {{"quality", to_string(g.quality)},
            {"radial", g.n_radial},
            {"angular", g.n_angular},
            {"points", g.size()}}},
          {"integrated_electrons", s.counts(0)},
          {"integrated_spin", {s.counts(1), s.counts(2), s.counts(3)}}};
}

void write_results(const RunConfig& cfg, const std::string& command, const json& doc) {
  std::filesystem::create_directories(cfg.out_dir);
  std::ofstream out(std::filesystem::path(cfg.out_dir) / (command + ".json"));
  if (!out) {
    throw Error(ErrorKind::DomainError, fmt::format("cannot write results to '{}'", cfg.out_dir));
  }
  out << doc.dump(2) << '\n';
}

void print_header(std::ostream& os, const Session& s, const std::string& what) {
  fmt::print(os, "{} | mode {} | T = {} K | S = {} | grid {} ({} points)\n", what,
             to_string(s.cfg.mode), s.cfg.temperature, s.spin, to_string(s.grid.quality),
             s.grid.size());
}

Mat3 orbital_tensor(const std::vector<double>& v) {
  if (v.size() == 1) return v[0] * Mat3::Identity();
  Mat3 m;
  for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = v[static_cast<std::size_t>(i)];
  return m;
}

void add_combination(json& entry, const PropertyTensor& t, const RunConfig& cfg) {
  if (!cfg.orbital && !cfg.reference) return;
  const Mat3 orb = cfg.orbital ? orbital_tensor(*cfg.orbital) : Mat3::Zero();
  const CombinedTensor c = combine_with_orbital(t, orb, t.unit, cfg.reference);
  entry["combined"] = {{"total", matrix_json(c.tensor.total)}, {"iso", c.tensor.iso()}};
  if (c.shift) entry["combined"]["shift"] = *c.shift;
}

PrefactorOptions prefactor_options(const RunConfig& cfg) {
  return {cfg.exact_statistics, cfg.field_tesla};
}

Vec3 nearest_nucleus_offset(const MolecularSystem& sys, const Vec3& p) {
  Vec3 best = Vec3::Constant(1e300);
  for (const auto& a : sys.atoms) {
    if ((p - a.position).norm() < best.norm()) best = p - a.position;
  }
  return best;
}

std::array<double, 6> default_box(const MolecularSystem& sys) {
  std::array<double, 6> b{1e300, -1e300, 1e300, -1e300, 1e300, -1e300};
  for (const auto& a : sys.atoms) {
    for (int k = 0; k < 3; ++k) {
      b[2 * k] = std::min(b[2 * k], a.position(k) - 4.0);
      b[2 * k + 1] = std::max(b[2 * k + 1], a.position(k) + 4.0);
    }
  }
  return b;
}

}  // namespace

json cmd_shielding(const RunConfig& cfg, std::ostream& table) {
  auto s = open_session(cfg);
  if (cfg.with_soc_shielding) {
    warn("including the spin-orbit current in the shielding; its Biot-Savart integral "
         "diverges near the nucleus and the result depends on the grid");
  }
  json doc = header_json(*s, "shielding");
  doc["tensors"] = json::array();
  print_header(table, *s, "spin shielding (ppm)");
  fmt::print(table, "{:>4} {:<3} {:>14} {:>14} {:>14}\n", "#", "el", "iso", "zee iso", "soc iso");
  for (int n : selected_nuclei(*s)) {
    const BiotSavartIntegral bs = biot_savart_integral(s->grid, *s->field, n);
    const PropertyTensor t = spin_shielding(bs, s->spin, cfg.temperature, cfg.with_soc_shielding,
                                            prefactor_options(cfg));
    const int z = s->cp.system.atoms[static_cast<std::size_t>(n)].atomic_number;
    json entry = tensor_json(t);
    entry["nucleus"] = n + 1;
    entry["element"] = element_symbol(z);
    add_combination(entry, t, cfg);
    doc["tensors"].push_back(entry);
    fmt::print(table, "{:>4} {:<3} {:>14.4f} {:>14.4f} {:>14.4f}\n", n + 1, element_symbol(z),
               t.iso(), t.zee.trace() / 3.0, t.soc.trace() / 3.0);
  }
  write_results(cfg, "shielding", doc);
  return doc;
}

json cmd_hyperfine(const RunConfig& cfg, std::ostream& table) {
  auto s = open_session(cfg);
  // Resolve every g-factor before integrating so a missing isotope fails fast.
  std::vector<ResolvedG> gs;
  const auto nuclei = selected_nuclei(*s);
  for (int n : nuclei) {
    gs.push_back(resolve_nuclear_g(s->cp.system.atoms[static_cast<std::size_t>(n)].atomic_number,
                                   cfg.g_overrides, s->g_table ? &*s->g_table : nullptr));
  }
  if (cfg.with_soc_shielding) {
    warn("including the spin-orbit current in the hyperfine integral; it diverges near the "
         "nucleus and the result depends on the grid");
  }
  json doc = header_json(*s, "hyperfine");
  doc["tensors"] = json::array();
  print_header(table, *s, "hyperfine coupling (MHz)");
  fmt::print(table, "{:>4} {:<6} {:>12} {:>14} {:>14}\n", "#", "iso", "g_I", "A iso", "zee iso");
  for (std::size_t i = 0; i < nuclei.size(); ++i) {
    const int n = nuclei[i];
    const PropertyTensor t =
        hyperfine(s->grid, *s->field, n, gs[i].g, cfg.with_soc_shielding);
    json entry = tensor_json(t);
    entry["nucleus"] = n + 1;
    entry["element"] =
        element_symbol(s->cp.system.atoms[static_cast<std::size_t>(n)].atomic_number);
    entry["isotope"] = gs[i].isotope;
    entry["g_nuclear"] = gs[i].g;
    doc["tensors"].push_back(entry);
    fmt::print(table, "{:>4} {:<6} {:>12.6f} {:>14.6f} {:>14.6f}\n", n + 1, gs[i].isotope,
               gs[i].g, t.iso(), t.zee.trace() / 3.0);
  }
  write_results(cfg, "hyperfine", doc);
  return doc;
}

json cmd_magnetizability(const RunConfig& cfg, std::ostream& table) {
  auto s = open_session(cfg);
  const bool include_soc = cfg.soc_magnetizability == "on" ||
                           (cfg.soc_magnetizability == "auto" && cfg.mode == CurrentMode::SR_SOC);
  const PropertyTensor t = spin_magnetizability(s->grid, *s->field, s->spin, cfg.temperature,
                                                include_soc, prefactor_options(cfg));
  json doc = header_json(*s, "magnetizability");
  json entry = tensor_json(t);
  entry["curie_closed_form"] = curie_magnetizability(s->spin, cfg.temperature);
  add_combination(entry, t, cfg);
  doc["tensor"] = entry;
  print_header(table, *s, "spin magnetizability (ppm cm^3/mol)");
  fmt::print(table, "iso {:.4f}  zee {:.4f}  soc {:.6f}  closed-form Curie {:.4f}\n", t.iso(),
             t.zee.trace() / 3.0, t.soc.trace() / 3.0, entry["curie_closed_form"].get<double>());
  if (entry.contains("combined")) {
    fmt::print(table, "with orbital part: iso {:.4f}\n", entry["combined"]["iso"].get<double>());
  }
  write_results(cfg, "magnetizability", doc);
  return doc;
}

json cmd_map(const RunConfig& cfg, std::ostream& table) {
  auto s = open_session(cfg);
  const auto& sys = s->cp.system;
  const CubeLattice lat = make_lattice(cfg.box ? *cfg.box : default_box(sys), cfg.spacing);
  bool has_nucleus = false;
  for (const auto& a : sys.atoms) {
    const Vec3 hi = lat.origin + lat.spacing * Vec3(lat.n[0] - 1, lat.n[1] - 1, lat.n[2] - 1);
    has_nucleus = has_nucleus || ((a.position.array() >= lat.origin.array()).all() &&
                                  (a.position.array() <= hi.array()).all());
  }
  if (!has_nucleus) warn("the map box contains no nucleus");

  const int beta = cfg.direction;
  const bool with_soc = cfg.mode == CurrentMode::SR_SOC;
  const int nucleus = cfg.nuclei.empty() ? 0 : cfg.nuclei.front();
  const Vec3 center = sys.atoms[static_cast<std::size_t>(nucleus)].position;
  const double c2 = units::kSpeedOfLight * units::kSpeedOfLight;
  const double sigma_scale =
      units::kElectronG * units::kBohrMagneton * s->spin * (s->spin + 1.0) /
      (3.0 * units::kBoltzmannAu * cfg.temperature) / c2 * 1e6;

  const int ncomp = cfg.map_field == "spin_current" ? 3 : 1;
  std::vector<std::vector<double>> values(static_cast<std::size_t>(ncomp),
                                          std::vector<double>(lat.size(), 0.0));
  const bool collinear = s->cp.density.collinear();
  const std::size_t n_blocks = (lat.size() + kBlockSize - 1) / kBlockSize;
  parallel_blocks(n_blocks, [&](std::size_t b) {
    BasisEvaluation scratch;
    const std::size_t end = std::min(lat.size(), (b + 1) * kBlockSize);
    for (std::size_t i = b * kBlockSize; i < end; ++i) {
      const Vec3 p = lat.point(i);
      if (cfg.map_field == "spin_density") {
        eval_basis(sys, p, scratch);
        values[0][i] = eval_fields(s->cp.density, scratch, collinear).q(2);
        continue;
      }
      const SpinCDTSample j = s->field->sample(p, scratch);
      if (cfg.map_field == "spin_current") {
        const Vec3 v = with_soc ? j.total(beta) : j.zee[beta];
        for (int k = 0; k < 3; ++k) values[static_cast<std::size_t>(k)][i] = v(k);
      } else {
        const Vec3 rel = p - center;
        const double d = rel.norm();
        if (d < 1e-12) continue;
        const Vec3 a = rel / (d * d * d);
        double iso = 0.0;
        for (int al = 0; al < 3; ++al) {
          const Vec3 jal = cfg.with_soc_shielding ? j.total(al) : j.zee[al];
          iso += a.cross(jal)(al);
        }
        values[0][i] = sigma_scale * iso / 3.0;
      }
    }
  });

  std::filesystem::create_directories(cfg.out_dir);
  json doc = header_json(*s, "map");
  doc["field"] = cfg.map_field;
  doc["files"] = json::array();
  doc["voxel_volume"] = lat.voxel_volume();
  doc["lattice"] = {{"origin", {lat.origin.x(), lat.origin.y(), lat.origin.z()}},
                    {"n", {lat.n[0], lat.n[1], lat.n[2]}},
                    {"spacing", lat.spacing}};
  fmt::print(table, "map {} | mode {} | {} x {} x {} voxels\n", cfg.map_field,
             to_string(cfg.mode), lat.n[0], lat.n[1], lat.n[2]);
  const char axes[] = "xyz";
  for (int k = 0; k < ncomp; ++k) {
    std::string name, title, comment;
    if (cfg.map_field == "spin_current") {
      name = fmt::format("spin_current_S{}_{}.cube", axes[beta], axes[k]);
      title = fmt::format("pnmr spin current J^(S_{})_{} mode {}{}", axes[beta], axes[k],
                          to_string(cfg.mode), with_soc ? " (zee+soc)" : " (zee)");
      comment = "atomic units of current density per unit spin; lengths in bohr";
    } else if (cfg.map_field == "shielding_density") {
      name = fmt::format("shielding_density_{}.cube", nucleus + 1);
      title = fmt::format("pnmr isotropic spin shielding density nucleus {} mode {} T {} K",
                          nucleus + 1, to_string(cfg.mode), cfg.temperature);
      comment = "ppm per bohr^3; lengths in bohr";
    } else {
      name = "spin_density.cube";
      title = fmt::format("pnmr spin density Q_z mode {}", to_string(cfg.mode));
      comment = "hbar per bohr^3 (atomic units); lengths in bohr";
    }
    const auto path = std::filesystem::path(cfg.out_dir) / name;
    std::ofstream out(path);
    write_cube(out, sys, lat, values[static_cast<std::size_t>(k)], title, comment);
    double sum = 0.0;
    for (double v : values[static_cast<std::size_t>(k)]) sum += v;
    doc["files"].push_back({{"path", path.string()}, {"voxel_sum", sum * lat.voxel_volume()}});
    fmt::print(table, "  {}  (voxel integral {:.6e})\n", path.string(), sum * lat.voxel_volume());
  }
  write_results(cfg, "map", doc);
  return doc;
}

json cmd_diagnose(const RunConfig& cfg, std::ostream& table) {
  auto s = open_session(cfg);
  const auto& sys = s->cp.system;
  std::array<double, 6> box = default_box(sys);
  for (int k = 0; k < 3; ++k) {
    box[2 * k] += 1.0;
    box[2 * k + 1] -= 1.0;
  }
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ZoraModel nr_zora = s->zora;
  SpinCurrentField nr_field(sys, s->cp.density, *s->reduced, nr_zora, CurrentMode::NR);

  double worst_zee = 0.0, worst_soc = 0.0, diff2 = 0.0, ref2 = 0.0;
  std::array<double, 3> zee_beta{}, soc_beta{};
  int used = 0;
  for (int attempt = 0; used < cfg.samples && attempt < 100 * cfg.samples; ++attempt) {
    const Vec3 p(box[0] + (box[1] - box[0]) * u(rng), box[2] + (box[3] - box[2]) * u(rng),
                 box[4] + (box[5] - box[4]) * u(rng));
    if (nearest_nucleus_offset(sys, p).norm() < 0.3) continue;
    const DivergenceReport r = divergence_diagnostic(*s->field, p);
    worst_zee = std::max(worst_zee, r.zee);
    worst_soc = std::max(worst_soc, r.soc);
    for (int beta = 0; beta < 3; ++beta) {
      zee_beta[beta] = std::max(zee_beta[beta], r.zee_beta[beta]);
      soc_beta[beta] = std::max(soc_beta[beta], r.soc_beta[beta]);
    }
    const SpinCDTSample a = s->field->sample(p);
    const SpinCDTSample b = nr_field.sample(p);
    for (int beta = 0; beta < 3; ++beta) {
      diff2 += (a.total(beta) - b.total(beta)).squaredNorm();
      ref2 += b.total(beta).squaredNorm();
    }
    ++used;
  }
  json doc = header_json(*s, "diagnose");
  doc["samples"] = used;
  doc["step"] = 1e-4;
  doc["max_normalized_divergence"] = {{"zee", worst_zee}, {"soc", worst_soc}};
  doc["max_normalized_divergence_per_axis"] = {{"zee", zee_beta}, {"soc", soc_beta}};
  doc["nr_vs_mode_relative_rms"] = ref2 > 0.0 ? std::sqrt(diff2 / ref2) : 0.0;
  print_header(table, *s, "continuity diagnostic");
  fmt::print(table, "points {}  max |div J|/|J| (1/bohr): zee {:.3e}  soc {:.3e}\n", used,
             worst_zee, worst_soc);
  fmt::print(table, "per axis x/y/z: zee {:.2e} {:.2e} {:.2e}  soc {:.2e} {:.2e} {:.2e}\n",
             zee_beta[0], zee_beta[1], zee_beta[2], soc_beta[0], soc_beta[1], soc_beta[2]);
  fmt::print(table, "relative RMS difference to NR currents: {:.3e}\n",
             doc["nr_vs_mode_relative_rms"].get<double>());
  write_results(cfg, "diagnose", doc);
  return doc;
}

json cmd_thermo(const RunConfig& cfg, std::ostream& table) {
  EquilibriumModel m;
  m.temperature = cfg.temperature;
  m.pressure = cfg.pressure;
  m.chi_monomer = cfg.chi_monomer;
  m.chi_dimer = cfg.chi_dimer;
  EquilibriumResult r;
  if (cfg.k_p) {
    r.k_p = *cfg.k_p;
  } else if (cfg.delta_g) {
    m.delta_g = *cfg.delta_g * 1e3;
    r.k_p = equilibrium_constant(m.delta_g, m.temperature);
  } else {
    throw Error(ErrorKind::DomainError, "thermo needs --delta-g or --kp");
  }
  r.alpha = dissociation_degree(r.k_p, m.pressure);
  r.chi_mix = mixture_chi(r.alpha, m.chi_monomer, m.chi_dimer);
  json doc = {{"program", "pnmr"},
              {"version", kVersion},
              {"command", "thermo"},
              {"config_hash", config_hash(cfg)},
              {"temperature", m.temperature},
              {"pressure_atm", m.pressure},
              {"k_p", r.k_p},
              {"alpha", r.alpha},
              {"chi_mix", r.chi_mix}};
  if (cfg.delta_g) doc["delta_g_kj_mol"] = *cfg.delta_g;
  fmt::print(table, "K_p = {:.6f}  alpha = {:.6f}  chi_mix = {:.4f} ppm cm^3/mol\n", r.k_p,
             r.alpha, r.chi_mix);
  write_results(cfg, "thermo", doc);
  return doc;
}

}  // namespace pnmr
