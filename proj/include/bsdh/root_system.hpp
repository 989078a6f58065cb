#pragma once

// Generalized Cartan matrices and coroot-lattice arithmetic.
//
// Convention used throughout: for a root system with simple roots
// alpha_1..alpha_n, the stored matrix has
//
//     C[i][j] = <alpha_j, alpha_i^vee>
//
// so row i collects the pairings against the i-th simple coroot, and
// pairing(j, i) below returns C[i][j].  Coroots are integer vectors in the
// basis of simple coroots; no inner product is stored, all computations
// reduce to Cartan pairings.

#include <cstdint>
#include <span>
#include <vector>

namespace bsdh {

using CartanMatrix = std::vector<std::vector<std::int64_t>>;

class RootSystem {
 public:
  // Bourbaki family/rank constructor.  Accepts A (n>=1), B (n>=2), C (n>=2),
  // D (n>=3), E (n in {6,7,8}), F (n=4), G (n=2).
  static RootSystem named(char family, int rank);

  // Validates a generalized Cartan matrix: square, diagonal 2, off-diagonal
  // <= 0, C[i][j] = 0 iff C[j][i] = 0.  Any such matrix is accepted; the
  // finite_type flag records whether it is symmetrizable with positive
  // definite symmetrization (checked by exact leading principal minors).
  static RootSystem from_cartan(CartanMatrix cartan);

  int rank() const noexcept { return n_; }
  bool finite_type() const noexcept { return finite_; }
  const CartanMatrix& cartan() const noexcept { return cartan_; }

  // <alpha_j, alpha_i^vee>, 1-based indices.
  std::int64_t pairing(int j_root, int i_root) const;

  friend bool operator==(const RootSystem&, const RootSystem&) = default;

 private:
  RootSystem(CartanMatrix cartan, bool finite);

  CartanMatrix cartan_;
  int n_ = 0;
  bool finite_ = false;
};

// Element of the coroot lattice, coordinates over alpha_1^vee..alpha_n^vee.
struct Coroot {
  std::vector<std::int64_t> coeffs;

  // Signed coordinate sum.
  std::int64_t height() const;

  friend bool operator==(const Coroot&, const Coroot&) = default;
};

Coroot simple_coroot(const RootSystem& rs, int i_root);

// <g, alpha_j> extended linearly from <alpha_i^vee, alpha_j> = C[i][j].
std::int64_t coroot_pairing(const RootSystem& rs, const Coroot& g, int j_root);

// Dual simple reflection s_i(g) = g - <g, alpha_i> alpha_i^vee.
Coroot dual_reflect(const RootSystem& rs, const Coroot& g, int i_root);

// For roots (j_1,...,j_r), starts from alpha_{j_1}^vee and applies
// dual_reflect for j_2,...,j_r in that order.  Requires r >= 1.
Coroot iterated_coroot(const RootSystem& rs, std::span<const int> roots);

}  // namespace bsdh
