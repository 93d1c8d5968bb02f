// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

namespace pnmr {

inline constexpr int kMaxTabulatedElement = 54;

// Symbol for Z in 1..54, "Z<n>" otherwise.
std::string element_symbol(int z);
// Mass number of the most abundant isotope; throws UnsupportedElement
// outside 1..54.
int default_mass_number(int z);
// 0 if the symbol is unknown.
int atomic_number(std::string_view symbol);

}  // namespace pnmr
