// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pnmr/ingest.hpp"

namespace pnmr::models {

// H atom with one unit-exponent s primitive; P = Spin = [[1]].
Checkpoint hydrogen_atom();

// Two O nuclei 2.28 bohr apart on z with one p shell each; two parallel
// electrons in the antibonding pi_x and pi_y combinations.
Checkpoint triplet_diatomic();

// N and O nuclei 2.173 bohr apart on z with s and p shells; a doubly occupied
// sigma combination of the s functions and one unpaired electron in pi_x.
Checkpoint doublet_diatomic();

// doublet_diatomic with its spin density tilted by `angle` radians from z
// towards x.
Checkpoint tilted_doublet(double angle);

}  // namespace pnmr::models
