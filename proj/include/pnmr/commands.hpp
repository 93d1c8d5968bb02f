// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "pnmr/config.hpp"

namespace pnmr {

inline constexpr const char* kVersion = "1.0.0";

// Each command writes a table to `table`, writes <out>/<command>.json (and
// cube files for the map command) and returns the results document.
nlohmann::json cmd_shielding(const RunConfig& config, std::ostream& table);
nlohmann::json cmd_hyperfine(const RunConfig& config, std::ostream& table);
nlohmann::json cmd_magnetizability(const RunConfig& config, std::ostream& table);
nlohmann::json cmd_map(const RunConfig& config, std::ostream& table);
nlohmann::json cmd_diagnose(const RunConfig& config, std::ostream& table);
nlohmann::json cmd_thermo(const RunConfig& config, std::ostream& table);

}  // namespace pnmr
