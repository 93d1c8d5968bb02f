// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pnmr/system.hpp"

namespace pnmr {

struct Checkpoint {
  MolecularSystem system;
  SpinResolvedDensity density;
};

// Formatted checkpoint reader. Densities are reordered from the checkpoint
// component order into the canonical lexicographic order of the basis module.
Checkpoint parse_fchk(std::istream& in);
Checkpoint read_fchk(const std::filesystem::path& path);

// Writes the subset of sections read by parse_fchk.
void write_fchk(std::ostream& out, const MolecularSystem& system,
                const SpinResolvedDensity& density, const std::string& title);

// Generalized density file:
//
//   pnmr-density 1
//   nbasis <n>
//   matrix P
//   <n rows of n values>
//   end
//   matrix PSX ... matrix PSY ... matrix PSZ ...
//
// Values are row-major, written as %.17e so a write/read cycle is exact.
// Lines starting with '#' are comments. Missing PSX/PSY blocks are zero.
SpinResolvedDensity parse_generalized_density(std::istream& in, std::size_t n_basis);
SpinResolvedDensity read_generalized_density(const std::filesystem::path& path,
                                             std::size_t n_basis);
void write_generalized_density(std::ostream& out, const SpinResolvedDensity& density);

// trace(P S) - (n_alpha + n_beta).
double electron_count_error(const MolecularSystem& system, const SpinResolvedDensity& density);

}  // namespace pnmr
