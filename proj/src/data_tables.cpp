// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/data_tables.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "pnmr/error.hpp"

namespace pnmr {

namespace {

// Non-empty, non-comment lines.
std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    out.push_back(line.substr(b));
  }
  return out;
}

[[noreturn]] void bad_table(const std::string& which, const std::string& line) {
  throw Error(ErrorKind::MalformedFile, fmt::format("{} table: cannot parse '{}'", which, line));
}

}  // namespace

std::string table_version(std::string_view text) {
  for (const auto& line : content_lines(text)) {
    std::istringstream ss(line);
    std::string key, value;
    if (ss >> key >> value && key == "version") return value;
  }
  return "unversioned";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedFile, fmt::format("cannot open '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErfFitTable parse_erf_fit_table(std::string_view text) {
  ErfFitTable t;
  t.version = table_version(text);
  const auto lines = content_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream ss(lines[i]);
    std::string key;
    ss >> key;
    if (key == "version") continue;
    int z = 0, k = 0;
    if (key != "element" || !(ss >> z >> k) || k < 0) bad_table("erf-fit", lines[i]);
    std::vector<ErfTerm> terms;
    for (int j = 0; j < k; ++j) {
      if (++i >= lines.size()) bad_table("erf-fit", "truncated element record");
      std::istringstream ts(lines[i]);
      ErfTerm term;
      if (!(ts >> term.coefficient >> term.exponent) || !(term.exponent > 0.0)) {
        bad_table("erf-fit", lines[i]);
      }
      terms.push_back(term);
    }
    t.elements[z] = std::move(terms);
  }
  return t;
}

RadiiTable parse_radii_table(std::string_view text) {
  RadiiTable t;
  t.version = table_version(text);
  for (const auto& line : content_lines(text)) {
    std::istringstream ss(line);
    if (line.rfind("version", 0) == 0) continue;
    int z = 0;
    double r = 0.0;
    if (!(ss >> z >> r) || !(r > 0.0)) bad_table("radii", line);
    t.r_m[z] = r;
  }
  return t;
}

NuclearGTable parse_nuclear_g_table(std::string_view text) {
  NuclearGTable t;
  t.version = table_version(text);
  for (const auto& line : content_lines(text)) {
    if (line.rfind("version", 0) == 0) continue;
    std::istringstream ss(line);
    NuclearGEntry e;
    if (!(ss >> e.isotope >> e.atomic_number >> e.mass_number >> e.g)) bad_table("g-factor", line);
    t.entries.push_back(e);
  }
  return t;
}

}  // namespace pnmr
