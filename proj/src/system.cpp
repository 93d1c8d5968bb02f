// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <string>

#include <fmt/format.h>

#include "pnmr/elements.hpp"
#include "pnmr/error.hpp"
#include "pnmr/system.hpp"

namespace pnmr {

namespace {

constexpr std::array<const char*, 55> kSymbols = {
    "",   "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg", "Al",
    "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr", "Mn", "Fe", "Co",
    "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y",  "Zr", "Nb",
    "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe"};

constexpr std::array<int, 55> kMassNumbers = {
    0,  1,  4,  7,  9,  11, 12, 14, 16, 19, 20, 23, 24, 27, 28, 31, 32, 35, 40,
    39, 40, 45, 48, 51, 52, 55, 56, 59, 58, 63, 64, 69, 74, 75, 80, 79, 84, 85,
    88, 89, 90, 93, 98, 98, 102, 103, 106, 107, 114, 115, 120, 121, 130, 127, 132};

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedFile: return "MalformedFile";
    case ErrorKind::UnsupportedShell: return "UnsupportedShell";
    case ErrorKind::UnsupportedElement: return "UnsupportedElement";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ClosedShellInput: return "ClosedShellInput";
    case ErrorKind::MissingNuclearData: return "MissingNuclearData";
  }
  return "Error";
}

std::string element_symbol(int z) {
  if (z >= 1 && z <= kMaxTabulatedElement) return kSymbols[static_cast<std::size_t>(z)];
  return fmt::format("Z{}", z);
}

int default_mass_number(int z) {
  if (z < 1 || z > kMaxTabulatedElement) {
    throw Error(ErrorKind::UnsupportedElement, fmt::format("no default mass number for Z={}", z));
  }
  return kMassNumbers[static_cast<std::size_t>(z)];
}

int atomic_number(std::string_view symbol) {
  for (int z = 1; z <= kMaxTabulatedElement; ++z) {
    if (symbol == kSymbols[static_cast<std::size_t>(z)]) return z;
  }
  return 0;
}

std::size_t MolecularSystem::n_basis() const {
  std::size_t n = 0;
  for (const auto& s : shells) n += s.size();
  return n;
}

void MolecularSystem::validate() const {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].atomic_number < 1 || atoms[i].mass_number < 1) {
      throw Error(ErrorKind::MalformedFile, fmt::format("atom {} has invalid Z or A", i + 1));
    }
  }
  for (std::size_t i = 0; i < shells.size(); ++i) {
    const auto& s = shells[i];
    if (s.center < 0 || static_cast<std::size_t>(s.center) >= atoms.size()) {
      throw Error(ErrorKind::MalformedFile, fmt::format("shell {} maps to a missing atom", i + 1));
    }
    if (s.l < 0 || s.l > 4) {
      throw Error(ErrorKind::UnsupportedShell,
                  fmt::format("shell {} has angular momentum {}", i + 1, s.l));
    }
    if (s.primitives.empty()) {
      throw Error(ErrorKind::MalformedFile, fmt::format("shell {} has no primitives", i + 1));
    }
    for (const auto& p : s.primitives) {
      if (!(p.exponent > 0.0)) {
        throw Error(ErrorKind::MalformedFile,
                    fmt::format("shell {} has a nonpositive exponent", i + 1));
      }
    }
  }
  if (n_beta > n_alpha) {
    throw Error(ErrorKind::DomainError,
                fmt::format("n_beta ({}) exceeds n_alpha ({}); flip the spin of the input so "
                            "that the alpha electrons are in excess",
                            n_beta, n_alpha));
  }
}

bool SpinResolvedDensity::collinear() const {
  return (spin_x.size() == 0 || (spin_x.array() == 0.0).all()) &&
         (spin_y.size() == 0 || (spin_y.array() == 0.0).all());
}

SpinResolvedDensity SpinResolvedDensity::spin_flipped() const {
  SpinResolvedDensity d = *this;
  d.spin_x = -spin_x;
  d.spin_y = -spin_y;
  d.spin_z = -spin_z;
  return d;
}

}  // namespace pnmr
