// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

// Writes the model systems as formatted checkpoints (and the tilted doublet
// as a generalized density) into the given directory.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "pnmr/models.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <directory>\n";
    return 1;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const pnmr::Checkpoint& cp, const char* title) {
    std::ofstream out(dir / name);
    pnmr::write_fchk(out, cp.system, cp.density, title);
  };
  write("h_atom.fchk", pnmr::models::hydrogen_atom(), "hydrogen atom, one s primitive");
  write("triplet_diatomic.fchk", pnmr::models::triplet_diatomic(),
        "model triplet diatomic, pi_x and pi_y singly occupied");
  write("doublet_diatomic.fchk", pnmr::models::doublet_diatomic(),
        "model doublet diatomic, one unpaired pi_x electron");
  std::ofstream out(dir / "tilted_doublet.density");
  out << "# doublet_diatomic spin density tilted by 0.3 rad towards x\n";
  pnmr::write_generalized_density(out, pnmr::models::tilted_doublet(0.3).density);
  return 0;
}
