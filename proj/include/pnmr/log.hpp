// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>

namespace pnmr {

// Warnings go to stderr unless a sink is installed.
void warn(const std::string& message);
void set_warning_sink(std::function<void(const std::string&)> sink);

}  // namespace pnmr
