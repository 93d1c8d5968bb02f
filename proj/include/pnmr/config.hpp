// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pnmr/cdt.hpp"
#include "pnmr/grid.hpp"

namespace pnmr {

// Settings shared by all subcommands. The config file holds one
// `key = value` per line ('#' starts a comment); keys are the long flag
// names without the leading dashes. Flags override the file.
struct RunConfig {
  std::string input;         // formatted checkpoint
  std::string density;       // optional generalized density file
  CurrentMode mode = CurrentMode::SR;
  double temperature = 298.15;
  GridQuality grid = GridQuality::Default;
  std::optional<double> spin;
  std::vector<int> nuclei;   // 0-based; empty selects every nucleus
  std::map<std::string, double> g_overrides;
  std::string out_dir = ".";
  bool with_soc_shielding = false;
  std::string soc_magnetizability = "auto";  // auto, on, off
  bool reverse_spin = false;
  unsigned threads = 0;

  bool exact_statistics = false;
  double field_tesla = 0.0;

  std::optional<std::vector<double>> orbital;  // 1 or 9 values
  std::optional<double> reference;

  std::string map_field = "spin_current";
  std::optional<std::array<double, 6>> box;  // xmin xmax ymin ymax zmin zmax, bohr
  double spacing = 0.2;
  int direction = 2;

  int samples = 200;

  std::optional<double> delta_g;  // kJ/mol
  std::optional<double> k_p;
  double pressure = 1.0;
  double chi_monomer = 0.0;
  double chi_dimer = 0.0;

  std::string erf_table;
  std::string radii_table;
  std::string g_table;
};

// Applies one setting; throws DomainError on unknown keys or bad values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);
// Reads a config file and applies every setting in order.
void load_config_file(RunConfig& config, const std::string& path);

// Canonical key = value listing of every setting, sorted by key.
std::string canonical_text(const RunConfig& config);
// FNV-1a 64-bit hash of canonical_text, as 16 hex digits.
std::string config_hash(const RunConfig& config);

}  // namespace pnmr
