// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pnmr {

// Text of the data files under data/, compiled into the library.
std::string_view embedded_erf_fit_table();
std::string_view embedded_radii_table();
std::string_view embedded_nuclear_g_table();

// Value of the first "version <tag>" line, or "unversioned".
std::string table_version(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

struct ErfTerm {
  double coefficient = 0.0;
  double exponent = 0.0;
};

struct ErfFitTable {
  std::string version;
  std::map<int, std::vector<ErfTerm>> elements;
};

ErfFitTable parse_erf_fit_table(std::string_view text);

struct RadiiTable {
  std::string version;
  std::map<int, double> r_m;  // bohr
};

RadiiTable parse_radii_table(std::string_view text);

struct NuclearGEntry {
  std::string isotope;
  int atomic_number = 0;
  int mass_number = 0;
  double g = 0.0;
};

struct NuclearGTable {
  std::string version;
  std::vector<NuclearGEntry> entries;
};

NuclearGTable parse_nuclear_g_table(std::string_view text);

}  // namespace pnmr
