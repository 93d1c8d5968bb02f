// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "pnmr/error.hpp"

namespace pnmr {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

[[noreturn]] void bad(const std::string& key, const std::string& value) {
  throw Error(ErrorKind::DomainError, fmt::format("invalid value '{}' for '{}'", value, key));
}

double to_double(const std::string& key, const std::string& value) {
  const std::string t = trim(value);
  double v = 0.0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty()) bad(key, value);
  return v;
}

int to_int(const std::string& key, const std::string& value) {
  const std::string t = trim(value);
  int v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty()) bad(key, value);
  return v;
}

bool to_bool(const std::string& key, const std::string& value) {
  const std::string t = trim(value);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  bad(key, value);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> to_doubles(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const auto& item : split_list(value)) out.push_back(to_double(key, item));
  return out;
}

}  // namespace

void apply_setting(RunConfig& c, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key == "input") {
    c.input = value;
  } else if (key == "density") {
    c.density = value;
  } else if (key == "mode") {
    c.mode = parse_current_mode(value);
  } else if (key == "temp") {
    c.temperature = to_double(key, value);
    if (!(c.temperature > 0.0)) bad(key, value);
  } else if (key == "grid") {
    c.grid = parse_grid_quality(value);
  } else if (key == "spin") {
    c.spin = to_double(key, value);
    if (!(*c.spin >= 0.5)) bad(key, value);
  } else if (key == "nuclei") {
    c.nuclei.clear();
    for (const auto& item : split_list(value)) {
      const int n = to_int(key, item);
      if (n < 1) bad(key, value);
      c.nuclei.push_back(n - 1);
    }
  } else if (key == "gi") {
    for (const auto& item : split_list(value)) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) bad(key, item);
      c.g_overrides[trim(item.substr(0, eq))] = to_double(key, item.substr(eq + 1));
    }
  } else if (key == "out") {
    c.out_dir = value;
  } else if (key == "with-soc-shielding") {
    c.with_soc_shielding = to_bool(key, value);
  } else if (key == "soc-magnetizability") {
    if (value != "auto" && value != "on" && value != "off") bad(key, value);
    c.soc_magnetizability = value;
  } else if (key == "reverse-spin") {
    c.reverse_spin = to_bool(key, value);
  } else if (key == "threads") {
    const int n = to_int(key, value);
    if (n < 0) bad(key, value);
    c.threads = static_cast<unsigned>(n);
  } else if (key == "exact-statistics") {
    c.exact_statistics = to_bool(key, value);
  } else if (key == "field") {
    c.field_tesla = to_double(key, value);
  } else if (key == "orbital") {
    auto v = to_doubles(key, value);
    if (v.size() != 1 && v.size() != 9) bad(key, value);
    c.orbital = v;
  } else if (key == "reference") {
    c.reference = to_double(key, value);
  } else if (key == "map-field") {
    if (value != "spin_current" && value != "shielding_density" && value != "spin_density") {
      bad(key, value);
    }
    c.map_field = value;
  } else if (key == "box") {
    auto v = to_doubles(key, value);
    if (v.size() != 6 || !(v[0] < v[1] && v[2] < v[3] && v[4] < v[5])) bad(key, value);
    c.box = std::array<double, 6>{v[0], v[1], v[2], v[3], v[4], v[5]};
  } else if (key == "spacing") {
    c.spacing = to_double(key, value);
    if (!(c.spacing > 0.0)) bad(key, value);
  } else if (key == "direction") {
    if (value == "x") c.direction = 0;
    else if (value == "y") c.direction = 1;
    else if (value == "z") c.direction = 2;
    else bad(key, value);
  } else if (key == "samples") {
    c.samples = to_int(key, value);
    if (c.samples < 1) bad(key, value);
  } else if (key == "delta-g") {
    c.delta_g = to_double(key, value);
  } else if (key == "kp") {
    c.k_p = to_double(key, value);
  } else if (key == "pressure") {
    c.pressure = to_double(key, value);
  } else if (key == "chi-monomer") {
    c.chi_monomer = to_double(key, value);
  } else if (key == "chi-dimer") {
    c.chi_dimer = to_double(key, value);
  } else if (key == "erf-table") {
    c.erf_table = value;
  } else if (key == "radii-table") {
    c.radii_table = value;
  } else if (key == "g-table") {
    c.g_table = value;
  } else {
    throw Error(ErrorKind::DomainError, fmt::format("unknown setting '{}'", key));
  }
}

void load_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedFile, fmt::format("cannot open config '{}'", path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::MalformedFile,
                  fmt::format("{}:{}: expected 'key = value'", path, lineno));
    }
    apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
  }
}

std::string canonical_text(const RunConfig& c) {
  std::map<std::string, std::string> kv;
  kv["input"] = c.input;
  kv["density"] = c.density;
  kv["mode"] = to_string(c.mode);
  kv["temp"] = fmt::format("{:.17g}", c.temperature);
  kv["grid"] = to_string(c.grid);
  kv["spin"] = c.spin ? fmt::format("{:.17g}", *c.spin) : "auto";
  std::vector<int> one_based;
  for (int n : c.nuclei) one_based.push_back(n + 1);
  kv["nuclei"] = fmt::format("{}", fmt::join(one_based, ","));
  std::vector<std::string> gi;
  for (const auto& [k, v] : c.g_overrides) gi.push_back(fmt::format("{}={:.17g}", k, v));
  kv["gi"] = fmt::format("{}", fmt::join(gi, ","));
  kv["with-soc-shielding"] = c.with_soc_shielding ? "true" : "false";
  kv["soc-magnetizability"] = c.soc_magnetizability;
  kv["reverse-spin"] = c.reverse_spin ? "true" : "false";
  kv["exact-statistics"] = c.exact_statistics ? "true" : "false";
  kv["field"] = fmt::format("{:.17g}", c.field_tesla);
  kv["orbital"] = c.orbital ? fmt::format("{}", fmt::join(*c.orbital, ",")) : "";
  kv["reference"] = c.reference ? fmt::format("{:.17g}", *c.reference) : "";
  kv["map-field"] = c.map_field;
  kv["box"] = c.box ? fmt::format("{}", fmt::join(*c.box, ",")) : "auto";
  kv["spacing"] = fmt::format("{:.17g}", c.spacing);
  kv["direction"] = std::string(1, "xyz"[c.direction]);
  kv["samples"] = std::to_string(c.samples);
  kv["delta-g"] = c.delta_g ? fmt::format("{:.17g}", *c.delta_g) : "";
  kv["kp"] = c.k_p ? fmt::format("{:.17g}", *c.k_p) : "";
  kv["pressure"] = fmt::format("{:.17g}", c.pressure);
  kv["chi-monomer"] = fmt::format("{:.17g}", c.chi_monomer);
  kv["chi-dimer"] = fmt::format("{:.17g}", c.chi_dimer);
  kv["erf-table"] = c.erf_table;
  kv["radii-table"] = c.radii_table;
  kv["g-table"] = c.g_table;
  std::string out;
  for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
  return out;
}

std::string config_hash(const RunConfig& config) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : canonical_text(config)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return fmt::format("{:016x}", h);
}

}  // namespace pnmr
