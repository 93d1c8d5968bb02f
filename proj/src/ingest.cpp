// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "pnmr/basis.hpp"
#include "pnmr/elements.hpp"
#include "pnmr/error.hpp"

namespace pnmr {

namespace {

struct Section {
  char type = 'I';
  bool is_array = false;
  std::string scalar;
  std::vector<std::string> lines;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void malformed(const std::string& msg) { throw Error(ErrorKind::MalformedFile, msg); }

double parse_double(std::string_view s, const std::string& where) {
  const std::string t = trim(s);
  double v = 0.0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
    // Some writers emit Fortran D exponents.
    std::string u = t;
    std::replace(u.begin(), u.end(), 'D', 'E');
    std::replace(u.begin(), u.end(), 'd', 'e');
    auto [p2, ec2] = std::from_chars(u.data(), u.data() + u.size(), v);
    if (ec2 != std::errc() || p2 != u.data() + u.size() || u.empty()) {
      malformed(fmt::format("bad real '{}' in {}", t, where));
    }
  }
  return v;
}

long parse_long(std::string_view s, const std::string& where) {
  const std::string t = trim(s);
  long v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
    malformed(fmt::format("bad integer '{}' in {}", t, where));
  }
  return v;
}

std::map<std::string, Section> split_sections(std::istream& in) {
  std::map<std::string, Section> out;
  std::string line;
  int lineno = 0;
  Section* current = nullptr;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno <= 2) continue;  // title and job-type lines
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (line[0] != ' ' && line[0] != '-' && !std::isdigit(static_cast<unsigned char>(line[0]))) {
      if (line.size() < 44) malformed(fmt::format("truncated header on line {}", lineno));
      Section s;
      s.type = line[43];
      const std::string rest = line.substr(44);
      const auto npos = rest.find("N=");
      if (npos != std::string::npos) {
        s.is_array = true;
        s.scalar = trim(rest.substr(npos + 2));
      } else {
        s.scalar = trim(rest);
      }
      auto [it, _] = out.insert_or_assign(trim(line.substr(0, 40)), std::move(s));
      current = it->second.is_array ? &it->second : nullptr;
    } else if (current != nullptr) {
      current->lines.push_back(line);
    } else {
      malformed(fmt::format("unexpected data on line {}", lineno));
    }
  }
  return out;
}

const Section& require(const std::map<std::string, Section>& s, const std::string& name) {
  auto it = s.find(name);
  if (it == s.end()) malformed(fmt::format("missing section '{}'", name));
  return it->second;
}

template <class T, class Parse>
std::vector<T> fixed_values(const Section& sec, const std::string& name, std::size_t width,
                            Parse parse) {
  const auto count = static_cast<std::size_t>(parse_long(sec.scalar, name));
  std::vector<T> out;
  out.reserve(count);
  for (const auto& line : sec.lines) {
    const std::string body = line.substr(0, line.find_last_not_of(" \t") + 1);
    for (std::size_t pos = 0; pos < body.size(); pos += width) {
      const auto field = body.substr(pos, width);
      if (trim(field).empty()) continue;
      out.push_back(parse(field, name));
    }
  }
  if (out.size() != count) {
    malformed(fmt::format("section '{}' has {} values, expected {}", name, out.size(), count));
  }
  return out;
}

std::vector<long> int_array(const std::map<std::string, Section>& s, const std::string& name) {
  return fixed_values<long>(require(s, name), name, 12, parse_long);
}

std::vector<double> real_array(const std::map<std::string, Section>& s, const std::string& name) {
  return fixed_values<double>(require(s, name), name, 16, parse_double);
}

long int_scalar(const std::map<std::string, Section>& s, const std::string& name) {
  return parse_long(require(s, name).scalar, name);
}

// Checkpoint component order for Cartesian shells, as exponent triples.
std::vector<std::array<int, 3>> checkpoint_components(int l) {
  switch (l) {
    case 2:
      return {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    case 3:
      return {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 2, 0}, {2, 1, 0},
              {2, 0, 1}, {1, 0, 2}, {0, 1, 2}, {0, 2, 1}, {1, 1, 1}};
    case 4:
      return {{0, 0, 4}, {0, 1, 3}, {0, 2, 2}, {0, 3, 1}, {0, 4, 0},
              {1, 0, 3}, {1, 1, 2}, {1, 2, 1}, {1, 3, 0}, {2, 0, 2},
              {2, 1, 1}, {2, 2, 0}, {3, 0, 1}, {3, 1, 0}, {4, 0, 0}};
    default:
      return cartesian_components(l);
  }
}

// perm[checkpoint index] = canonical index.
std::vector<Eigen::Index> checkpoint_permutation(const MolecularSystem& system) {
  std::vector<Eigen::Index> perm;
  Eigen::Index offset = 0;
  for (const auto& shell : system.shells) {
    const auto canon = cartesian_components(shell.l);
    for (const auto& c : checkpoint_components(shell.l)) {
      const auto it = std::find(canon.begin(), canon.end(), c);
      perm.push_back(offset + (it - canon.begin()));
    }
    offset += static_cast<Eigen::Index>(shell.size());
  }
  return perm;
}

Eigen::MatrixXd unpack_lower(const std::vector<double>& packed, std::size_t n,
                             const std::vector<Eigen::Index>& perm, const std::string& name) {
  if (packed.size() != n * (n + 1) / 2) {
    malformed(fmt::format("section '{}' does not match {} basis functions", name, n));
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = packed[k++];
      m(perm[i], perm[j]) = v;
      m(perm[j], perm[i]) = v;
    }
  }
  return m;
}

void check_electron_count(const MolecularSystem& system, const SpinResolvedDensity& density) {
  const double err = electron_count_error(system, density);
  const double n = system.n_alpha + system.n_beta;
  if (std::abs(err) > 1e-4 * std::max(1.0, n)) {
    malformed(fmt::format("trace(P S) differs from the electron count {} by {:.3e}", n, err));
  }
}

}  // namespace

Checkpoint parse_fchk(std::istream& in) {
  const auto sec = split_sections(in);
  Checkpoint cp;
  auto& sys = cp.system;

  const auto z = int_array(sec, "Atomic numbers");
  const auto xyz = real_array(sec, "Current cartesian coordinates");
  if (xyz.size() != 3 * z.size()) malformed("coordinate count does not match the atom count");
  std::vector<long> mass;
  if (sec.count("Integer atomic weights")) mass = int_array(sec, "Integer atomic weights");
  for (std::size_t i = 0; i < z.size(); ++i) {
    Atom a;
    a.atomic_number = static_cast<int>(z[i]);
    if (a.atomic_number < 1) malformed(fmt::format("atom {} has atomic number {}", i + 1, z[i]));
    a.mass_number = i < mass.size() && mass[i] > 0 ? static_cast<int>(mass[i])
                                                    : default_mass_number(a.atomic_number);
    a.position = Vec3(xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]);
    sys.atoms.push_back(a);
  }

  const auto types = int_array(sec, "Shell types");
  const auto nprim = int_array(sec, "Number of primitives per shell");
  const auto map = int_array(sec, "Shell to atom map");
  const auto exps = real_array(sec, "Primitive exponents");
  const auto coefs = real_array(sec, "Contraction coefficients");
  if (nprim.size() != types.size() || map.size() != types.size()) {
    malformed("shell arrays have inconsistent lengths");
  }
  if (coefs.size() != exps.size()) malformed("exponent and coefficient counts differ");
  std::size_t p = 0;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const long t = types[i];
    if (t == -1) {
      throw Error(ErrorKind::UnsupportedShell,
                  fmt::format("shell {} is a combined sp shell (type -1)", i + 1));
    }
    if (t < 0) {
      throw Error(ErrorKind::UnsupportedShell,
                  fmt::format("shell {} is spherical (type {}); only Cartesian shells are read",
                              i + 1, t));
    }
    if (t > 4) {
      throw Error(ErrorKind::UnsupportedShell,
                  fmt::format("shell {} has type {}; at most g (4) is supported", i + 1, t));
    }
    BasisShell s;
    s.l = static_cast<int>(t);
    s.center = static_cast<int>(map[i]) - 1;
    for (long k = 0; k < nprim[i]; ++k, ++p) {
      if (p >= exps.size()) malformed("fewer primitives than declared");
      s.primitives.push_back({exps[p], coefs[p]});
    }
    sys.shells.push_back(std::move(s));
  }
  if (p != exps.size()) malformed("more primitives than declared");

  sys.n_alpha = static_cast<int>(int_scalar(sec, "Number of alpha electrons"));
  sys.n_beta = static_cast<int>(int_scalar(sec, "Number of beta electrons"));
  sys.validate();

  const std::size_t n = sys.n_basis();
  const auto perm = checkpoint_permutation(sys);
  auto& d = cp.density;
  d.total = unpack_lower(real_array(sec, "Total SCF Density"), n, perm, "Total SCF Density");
  d.spin_z = unpack_lower(real_array(sec, "Spin SCF Density"), n, perm, "Spin SCF Density");
  d.spin_x = Eigen::MatrixXd::Zero(d.total.rows(), d.total.cols());
  d.spin_y = Eigen::MatrixXd::Zero(d.total.rows(), d.total.cols());
  check_electron_count(sys, d);
  return cp;
}

Checkpoint read_fchk(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed(fmt::format("cannot open '{}'", path.string()));
  return parse_fchk(in);
}

void write_fchk(std::ostream& out, const MolecularSystem& system,
                const SpinResolvedDensity& density, const std::string& title) {
  auto ints = [&](const std::string& name, const std::vector<long>& v) {
    out << fmt::format("{:<40}   I   N={:>12}\n", name, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << fmt::format("{:>12}", v[i]);
      if (i % 6 == 5 || i + 1 == v.size()) out << '\n';
    }
  };
  auto reals = [&](const std::string& name, const std::vector<double>& v) {
    out << fmt::format("{:<40}   R   N={:>12}\n", name, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << fmt::format("{:16.8E}", v[i]);
      if (i % 5 == 4 || i + 1 == v.size()) out << '\n';
    }
  };
  auto scalar = [&](const std::string& name, long v) {
    out << fmt::format("{:<40}   I     {:>12}\n", name, v);
  };

  const auto perm = checkpoint_permutation(system);
  auto pack = [&](const Eigen::MatrixXd& m) {
    std::vector<double> v;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) v.push_back(m(perm[i], perm[j]));
    }
    return v;
  };

  const int ne = system.n_alpha + system.n_beta;
  long charge = -ne;
  std::vector<long> z, a, types, nprim, map;
  std::vector<double> xyz, charges, exps, coefs;
  for (const auto& at : system.atoms) {
    z.push_back(at.atomic_number);
    a.push_back(at.mass_number);
    charges.push_back(at.atomic_number);
    charge += at.atomic_number;
    for (int k = 0; k < 3; ++k) xyz.push_back(at.position(k));
  }
  for (const auto& s : system.shells) {
    types.push_back(s.l);
    nprim.push_back(static_cast<long>(s.primitives.size()));
    map.push_back(s.center + 1);
    for (const auto& p : s.primitives) {
      exps.push_back(p.exponent);
      coefs.push_back(p.coefficient);
    }
  }

  out << title << '\n';
  out << fmt::format("{:<10}{:<30}{:<30}\n", "SP", "UHF", "Gen");
  scalar("Number of atoms", static_cast<long>(system.atoms.size()));
  scalar("Charge", charge);
  scalar("Multiplicity", system.n_alpha - system.n_beta + 1);
  scalar("Number of electrons", ne);
  scalar("Number of alpha electrons", system.n_alpha);
  scalar("Number of beta electrons", system.n_beta);
  scalar("Number of basis functions", static_cast<long>(system.n_basis()));
  ints("Atomic numbers", z);
  reals("Nuclear charges", charges);
  reals("Current cartesian coordinates", xyz);
  ints("Integer atomic weights", a);
  ints("Shell types", types);
  ints("Number of primitives per shell", nprim);
  ints("Shell to atom map", map);
  reals("Primitive exponents", exps);
  reals("Contraction coefficients", coefs);
  reals("Total SCF Density", pack(density.total));
  reals("Spin SCF Density", pack(density.spin_z));
}

SpinResolvedDensity parse_generalized_density(std::istream& in, std::size_t n_basis) {
  std::string line;
  int lineno = 0;
  auto next = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      out = trim(line);
      if (!out.empty() && out[0] != '#') return true;
    }
    return false;
  };
  std::string t;
  if (!next(t) || t != "pnmr-density 1") malformed("missing 'pnmr-density 1' header");
  if (!next(t) || t.rfind("nbasis", 0) != 0) malformed("missing nbasis line");
  const auto n = static_cast<std::size_t>(parse_long(t.substr(6), "nbasis"));
  if (n != n_basis) {
    malformed(fmt::format("density has {} basis functions, the basis has {}", n, n_basis));
  }
  const auto ni = static_cast<Eigen::Index>(n);
  std::map<std::string, Eigen::MatrixXd> blocks;
  while (next(t)) {
    if (t.rfind("matrix ", 0) != 0) malformed(fmt::format("expected 'matrix' on line {}", lineno));
    const std::string name = trim(t.substr(7));
    if (name != "P" && name != "PSX" && name != "PSY" && name != "PSZ") {
      malformed(fmt::format("unknown matrix block '{}'", name));
    }
    if (blocks.count(name)) malformed(fmt::format("duplicate matrix block '{}'", name));
    Eigen::MatrixXd m(ni, ni);
    for (Eigen::Index i = 0; i < ni; ++i) {
      if (!next(t)) malformed(fmt::format("block {} ends early", name));
      std::istringstream row(t);
      std::string tok;
      Eigen::Index j = 0;
      while (row >> tok) {
        if (j >= ni) malformed(fmt::format("row {} of block {} is too long", i + 1, name));
        m(i, j++) = parse_double(tok, name);
      }
      if (j != ni) malformed(fmt::format("row {} of block {} has {} values", i + 1, name, j));
    }
    if (!next(t) || t != "end") malformed(fmt::format("block {} lacks 'end'", name));
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
      malformed(fmt::format("block {} is not symmetric", name));
    }
    blocks[name] = std::move(m);
  }
  if (!blocks.count("P") || !blocks.count("PSZ")) malformed("blocks P and PSZ are required");
  SpinResolvedDensity d;
  d.total = blocks["P"];
  d.spin_z = blocks["PSZ"];
  d.spin_x = blocks.count("PSX") ? blocks["PSX"] : Eigen::MatrixXd::Zero(ni, ni);
  d.spin_y = blocks.count("PSY") ? blocks["PSY"] : Eigen::MatrixXd::Zero(ni, ni);
  return d;
}

SpinResolvedDensity read_generalized_density(const std::filesystem::path& path,
                                             std::size_t n_basis) {
  std::ifstream in(path);
  if (!in) malformed(fmt::format("cannot open '{}'", path.string()));
  return parse_generalized_density(in, n_basis);
}

void write_generalized_density(std::ostream& out, const SpinResolvedDensity& density) {
  out << "pnmr-density 1\n";
  out << "nbasis " << density.n_basis() << '\n';
  auto block = [&](const char* name, const Eigen::MatrixXd& m) {
    out << "matrix " << name << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        out << (j ? " " : "") << fmt::format("{:.17e}", m(i, j));
      }
      out << '\n';
    }
    out << "end\n";
  };
  block("P", density.total);
  block("PSX", density.spin_x);
  block("PSY", density.spin_y);
  block("PSZ", density.spin_z);
}

double electron_count_error(const MolecularSystem& system, const SpinResolvedDensity& density) {
  const Eigen::MatrixXd s = overlap_matrix(system);
  return density.total.cwiseProduct(s).sum() - (system.n_alpha + system.n_beta);
}

}  // namespace pnmr
