// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/basis.hpp"

#include <cmath>

#include "pnmr/units.hpp"

namespace pnmr {

namespace {

double double_factorial(int n) {
  double r = 1.0;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

// Beyond this value of alpha*r^2 a primitive is below 1e-20 of its peak.
constexpr double kScreen = 46.0;

// Integral of (x-A)^i (x-B)^j exp(-a (x-A)^2 - b (x-B)^2) over the real line.
double overlap_1d(int i, int j, double a, double b, double A, double B) {
  const double p = a + b;
  const double P = (a * A + b * B) / p;
  const double pre = std::exp(-a * b / p * (A - B) * (A - B)) * std::sqrt(units::kPi / p);
  double sum = 0.0;
  double bi = 1.0;
  for (int k = 0; k <= i; ++k) {
    double bj = 1.0;
    for (int m = 0; m <= j; ++m) {
      const int n = k + m;
      if (n % 2 == 0) {
        sum += bi * bj * ipow(P - A, i - k) * ipow(P - B, j - m) * double_factorial(n - 1) /
               ipow(2.0 * p, n / 2);
      }
      bj = bj * (j - m) / (m + 1);
    }
    bi = bi * (i - k) / (k + 1);
  }
  return pre * sum;
}

}  // namespace

std::vector<std::array<int, 3>> cartesian_components(int l) {
  std::vector<std::array<int, 3>> out;
  for (int i = l; i >= 0; --i) {
    for (int j = l - i; j >= 0; --j) out.push_back({i, j, l - i - j});
  }
  return out;
}

double primitive_norm(double exponent, int i, int j, int k) {
  const int l = i + j + k;
  return std::pow(2.0 * exponent / units::kPi, 0.75) * std::pow(4.0 * exponent, 0.5 * l) /
         std::sqrt(double_factorial(2 * i - 1) * double_factorial(2 * j - 1) *
                   double_factorial(2 * k - 1));
}

BasisEvaluation eval_basis(const MolecularSystem& system, const Vec3& point) {
  BasisEvaluation out;
  eval_basis(system, point, out);
  return out;
}

void eval_basis(const MolecularSystem& system, const Vec3& point, BasisEvaluation& out) {
  const auto n = static_cast<Eigen::Index>(system.n_basis());
  out.values.setZero(n);
  out.gradients.setZero(n, 3);
  Eigen::Index offset = 0;
  for (const auto& shell : system.shells) {
    const Vec3 d = point - system.atoms[shell.center].position;
    const double r2 = d.squaredNorm();
    const auto comps = cartesian_components(shell.l);
    for (const auto& prim : shell.primitives) {
      const double ar2 = prim.exponent * r2;
      if (ar2 > kScreen) continue;
      const double e = prim.coefficient * std::exp(-ar2);
      const double a2 = 2.0 * prim.exponent;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto [i, j, k] = comps[c];
        const double ne = e * primitive_norm(prim.exponent, i, j, k);
        const double px = ipow(d.x(), i), py = ipow(d.y(), j), pz = ipow(d.z(), k);
        const double dx = (i > 0 ? i * ipow(d.x(), i - 1) : 0.0) - a2 * px * d.x();
        const double dy = (j > 0 ? j * ipow(d.y(), j - 1) : 0.0) - a2 * py * d.y();
        const double dz = (k > 0 ? k * ipow(d.z(), k - 1) : 0.0) - a2 * pz * d.z();
        const Eigen::Index q = offset + static_cast<Eigen::Index>(c);
        out.values(q) += ne * px * py * pz;
        out.gradients(q, 0) += ne * dx * py * pz;
        out.gradients(q, 1) += ne * px * dy * pz;
        out.gradients(q, 2) += ne * px * py * dz;
      }
    }
    offset += static_cast<Eigen::Index>(shell.size());
  }
}

Eigen::MatrixXd overlap_matrix(const MolecularSystem& system) {
  const auto n = static_cast<Eigen::Index>(system.n_basis());
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  Eigen::Index oa = 0;
  for (const auto& sa : system.shells) {
    const auto ca = cartesian_components(sa.l);
    const Vec3& A = system.atoms[sa.center].position;
    Eigen::Index ob = 0;
    for (const auto& sb : system.shells) {
      const auto cb = cartesian_components(sb.l);
      const Vec3& B = system.atoms[sb.center].position;
      for (const auto& pa : sa.primitives) {
        for (const auto& pb : sb.primitives) {
          for (std::size_t u = 0; u < ca.size(); ++u) {
            for (std::size_t v = 0; v < cb.size(); ++v) {
              double val = pa.coefficient * pb.coefficient *
                           primitive_norm(pa.exponent, ca[u][0], ca[u][1], ca[u][2]) *
                           primitive_norm(pb.exponent, cb[v][0], cb[v][1], cb[v][2]);
              for (int x = 0; x < 3; ++x) {
                val *= overlap_1d(ca[u][x], cb[v][x], pa.exponent, pb.exponent, A(x), B(x));
              }
              s(oa + static_cast<Eigen::Index>(u), ob + static_cast<Eigen::Index>(v)) += val;
            }
          }
        }
      }
      ob += static_cast<Eigen::Index>(sb.size());
    }
    oa += static_cast<Eigen::Index>(sa.size());
  }
  return s;
}

}  // namespace pnmr
