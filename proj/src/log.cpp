// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/log.hpp"

#include <iostream>
#include <mutex>

namespace pnmr {

namespace {
std::mutex g_mutex;
std::function<void(const std::string&)> g_sink;
}  // namespace

void warn(const std::string& message) {
  std::lock_guard lock(g_mutex);
  if (g_sink) {
    g_sink(message);
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

void set_warning_sink(std::function<void(const std::string&)> sink) {
  std::lock_guard lock(g_mutex);
  g_sink = std::move(sink);
}

}  // namespace pnmr
