// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pnmr/commands.hpp"
#include "pnmr/error.hpp"

namespace {

struct Flags {
  std::string config;
  std::map<std::string, std::string> values;
  std::vector<std::string> gi;
  std::map<std::string, bool> switches;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "config file of key = value lines");
  app->add_option("--input", f.values["input"], "formatted checkpoint file");
  app->add_option("--density", f.values["density"], "generalized density file");
  app->add_option("--mode", f.values["mode"], "NR, SR or SR+SOC");
  app->add_option("--temp", f.values["temp"], "temperature in K");
  app->add_option("--grid", f.values["grid"], "coarse, default or fine");
  app->add_option("--spin", f.values["spin"], "spin quantum number S");
  app->add_option("--nuclei", f.values["nuclei"], "comma separated 1-based nuclei");
  app->add_option("--threads", f.values["threads"], "worker threads (0 = all cores)");
  app->add_option("--out", f.values["out"], "output directory");
  app->add_option("--erf-table", f.values["erf-table"], "erf-fit potential table");
  app->add_option("--radii-table", f.values["radii-table"], "radial midpoint table");
  app->add_option("--field", f.values["field"], "field in tesla for exact statistics");
  app->add_option("--orbital", f.values["orbital"], "orbital tensor: iso or 9 values");
  app->add_option("--reference", f.values["reference"], "reference shielding for shifts");
  app->add_flag("--reverse-spin", f.switches["reverse-spin"], "use the M_S = -S density");
  app->add_flag("--exact-statistics", f.switches["exact-statistics"],
                "exact spin statistics in the prefactor");
}

void apply(pnmr::RunConfig& cfg, const Flags& f) {
  if (!f.config.empty()) pnmr::load_config_file(cfg, f.config);
  for (const auto& [key, value] : f.values) {
    if (!value.empty()) pnmr::apply_setting(cfg, key, value);
  }
  for (const auto& g : f.gi) pnmr::apply_setting(cfg, "gi", g);
  for (const auto& [key, on] : f.switches) {
    if (on) pnmr::apply_setting(cfg, key, "true");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin contributions to NMR shielding, hyperfine coupling and magnetizability"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pnmr::kVersion);

  std::map<std::string, Flags> flags;
  auto* shielding = app.add_subcommand("shielding", "spin shielding tensors");
  auto* hfc = app.add_subcommand("hyperfine", "hyperfine coupling tensors");
  auto* magn = app.add_subcommand("magnetizability", "spin magnetizability tensor");
  auto* map = app.add_subcommand("map", "volumetric maps in cube format");
  auto* diag = app.add_subcommand("diagnose", "continuity diagnostic of the spin currents");
  auto* thermo = app.add_subcommand("thermo", "monomer-dimer equilibrium");

  for (auto* sub : {shielding, hfc, magn, map, diag}) add_common(sub, flags[sub->get_name()]);
  for (auto* sub : {shielding, hfc}) {
    auto& f = flags[sub->get_name()];
    sub->add_flag("--with-soc-shielding", f.switches["with-soc-shielding"],
                  "include the spin-orbit current (diverges near the nucleus)");
  }
  hfc->add_option("--gi", flags["hyperfine"].gi, "nuclear g-factor override, e.g. 13C=1.4048");
  magn->add_option("--soc", flags["magnetizability"].values["soc-magnetizability"],
                   "include the spin-orbit current: auto, on, off");
  {
    auto& f = flags["map"];
    map->add_option("--field-type", f.values["map-field"],
                    "spin_current, shielding_density or spin_density");
    map->add_option("--box", f.values["box"], "xmin,xmax,ymin,ymax,zmin,zmax in bohr");
    map->add_option("--spacing", f.values["spacing"], "voxel spacing in bohr");
    map->add_option("--direction", f.values["direction"], "spin axis x, y or z");
    map->add_flag("--with-soc-shielding", f.switches["with-soc-shielding"],
                  "include the spin-orbit current in the shielding density");
  }
  diag->add_option("--samples", flags["diagnose"].values["samples"], "number of sample points");
  {
    auto& f = flags["thermo"];
    thermo->add_option("--config", f.config, "config file");
    thermo->add_option("--delta-g", f.values["delta-g"], "reaction free energy in kJ/mol");
    thermo->add_option("--kp", f.values["kp"], "equilibrium constant");
    thermo->add_option("--temp", f.values["temp"], "temperature in K");
    thermo->add_option("--pressure", f.values["pressure"], "total pressure in atm");
    thermo->add_option("--chi-monomer", f.values["chi-monomer"], "monomer chi, ppm cm^3/mol");
    thermo->add_option("--chi-dimer", f.values["chi-dimer"], "dimer chi, ppm cm^3/mol");
    thermo->add_option("--out", f.values["out"], "output directory");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto* sub : app.get_subcommands()) {
      pnmr::RunConfig cfg;
      apply(cfg, flags[sub->get_name()]);
      const std::string name = sub->get_name();
      if (name == "shielding") pnmr::cmd_shielding(cfg, std::cout);
      else if (name == "hyperfine") pnmr::cmd_hyperfine(cfg, std::cout);
      else if (name == "magnetizability") pnmr::cmd_magnetizability(cfg, std::cout);
      else if (name == "map") pnmr::cmd_map(cfg, std::cout);
      else if (name == "diagnose") pnmr::cmd_diagnose(cfg, std::cout);
      else if (name == "thermo") pnmr::cmd_thermo(cfg, std::cout);
    }
  } catch (const pnmr::Error& e) {
    std::cerr << "error [" << pnmr::to_string(e.kind()) << "]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
