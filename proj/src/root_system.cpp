#include "bsdh/root_system.hpp"

#include <numeric>
#include <string>

#include "bsdh/checked.hpp"
#include "bsdh/errors.hpp"

namespace bsdh {
namespace {

std::string idx2(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Exact determinant by Bareiss fraction-free elimination, checked int64.
std::int64_t bareiss_det(CartanMatrix m) {
  const int n = static_cast<int>(m.size());
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        std::int64_t num = checked_sub(checked_mul(m[i][j], m[k][k]),
                                       checked_mul(m[i][k], m[k][j]));
        m[i][j] = num / prev;  // Bareiss guarantees exact division
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return checked_mul(sign, m[n - 1][n - 1]);
}

struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0
};

Frac reduce(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

// Finds positive d_i with d_i C[i][j] = d_j C[j][i] for all i, j, scaled to
// integers.  Empty result means not symmetrizable.
std::vector<std::int64_t> symmetrizer(const CartanMatrix& c) {
  const int n = static_cast<int>(c.size());
  std::vector<Frac> d(n, Frac{0, 1});
  // Propagate over each connected component of the nonzero pattern.
  for (int root = 0; root < n; ++root) {
    if (d[root].num != 0) continue;
    d[root] = {1, 1};
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || c[i][j] == 0 || d[j].num != 0) continue;
        // want d_j = d_i * C[i][j] / C[j][i]; both entries are negative here
        d[j] = reduce(checked_mul(d[i].num, c[i][j]),
                      checked_mul(d[i].den, c[j][i]));
        stack.push_back(j);
      }
    }
  }
  // Verify every pair, including cycle closure.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // d_i C[i][j] == d_j C[j][i] cross multiplied
      std::int64_t lhs = checked_mul(checked_mul(d[i].num, c[i][j]), d[j].den);
      std::int64_t rhs = checked_mul(checked_mul(d[j].num, c[j][i]), d[i].den);
      if (lhs != rhs) return {};
    }
  }
  std::int64_t scale = 1;
  for (const Frac& f : d) scale = checked_mul(scale / std::gcd(scale, f.den), f.den);
  std::vector<std::int64_t> out(n);
  for (int i = 0; i < n; ++i) out[i] = checked_mul(d[i].num, scale / d[i].den);
  return out;
}

bool positive_definite_symmetrization(const CartanMatrix& c) {
  const int n = static_cast<int>(c.size());
  std::vector<std::int64_t> d = symmetrizer(c);
  if (d.empty()) return false;
  CartanMatrix s(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = checked_mul(d[i], c[i][j]);
  // Sylvester: all leading principal minors positive.
  for (int k = 1; k <= n; ++k) {
    CartanMatrix lead(k, std::vector<std::int64_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead[i][j] = s[i][j];
    if (bareiss_det(std::move(lead)) <= 0) return false;
  }
  return true;
}

}  // namespace

RootSystem::RootSystem(CartanMatrix cartan, bool finite)
    : cartan_(std::move(cartan)), n_(static_cast<int>(cartan_.size())), finite_(finite) {}

RootSystem RootSystem::from_cartan(CartanMatrix cartan) {
  const int n = static_cast<int>(cartan.size());
  if (n == 0) throw validation_error("cartan matrix is empty");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cartan[i].size()) != n)
      throw validation_error("cartan matrix is not square: row " + std::to_string(i + 1) +
                             " has " + std::to_string(cartan[i].size()) + " entries, expected " +
                             std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (cartan[i][i] != 2)
      throw validation_error("cartan diagonal entry " + idx2(i + 1, i + 1) + " is " +
                             std::to_string(cartan[i][i]) + ", must be 2");
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (cartan[i][j] > 0)
        throw validation_error("cartan off-diagonal entry " + idx2(i + 1, j + 1) + " is " +
                               std::to_string(cartan[i][j]) + ", must be <= 0");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw validation_error("cartan zero pattern is asymmetric at " + idx2(i + 1, j + 1));
    }
  }
  bool finite = positive_definite_symmetrization(cartan);
  return RootSystem(std::move(cartan), finite);
}

RootSystem RootSystem::named(char family, int rank) {
  const int n = rank;
  auto bad = [&]() {
    throw validation_error(std::string("unknown root system ") + family + std::to_string(rank));
  };
  CartanMatrix c(std::max(n, 0), std::vector<std::int64_t>(std::max(n, 0), 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto edge = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
  switch (family) {
    case 'A':
      if (n < 1) bad();
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      break;
    case 'B':
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      if (n < 2) bad();
      for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
      c[n - 1][n - 2] = -2;
      c[n - 2][n - 1] = -1;
      break;
    case 'C':
      // alpha_n long: transpose of B_n
      if (n < 2) bad();
      for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
      c[n - 1][n - 2] = -1;
      c[n - 2][n - 1] = -2;
      break;
    case 'D':
      // chain 1..n-1 with node n attached to n-2; D_3 is A_3 relabeled
      if (n < 3) bad();
      for (int i = 1; i <= n - 2; ++i) edge(i, i + 1);
      edge(n - 2, n);
      break;
    case 'E':
      if (n < 6 || n > 8) bad();
      edge(1, 3);
      edge(3, 4);
      edge(2, 4);
      for (int i = 4; i < n; ++i) edge(i, i + 1);
      break;
    case 'F':
      // alpha_3, alpha_4 short: <alpha_2, alpha_3^vee> = -2
      if (n != 4) bad();
      edge(1, 2);
      edge(3, 4);
      c[2][1] = -2;
      c[1][2] = -1;
      break;
    case 'G':
      // alpha_1 short: <alpha_2, alpha_1^vee> = -3
      if (n != 2) bad();
      c[0][1] = -3;
      c[1][0] = -1;
      break;
    default:
      bad();
  }
  return from_cartan(std::move(c));
}

std::int64_t RootSystem::pairing(int j_root, int i_root) const {
  if (j_root < 1 || j_root > n_ || i_root < 1 || i_root > n_)
    throw validation_error("root index out of range in pairing" + idx2(j_root, i_root) +
                           ", rank is " + std::to_string(n_));
  return cartan_[i_root - 1][j_root - 1];
}

std::int64_t Coroot::height() const {
  std::int64_t h = 0;
  for (std::int64_t v : coeffs) h = checked_add(h, v);
  return h;
}

Coroot simple_coroot(const RootSystem& rs, int i_root) {
  if (i_root < 1 || i_root > rs.rank())
    throw validation_error("root index " + std::to_string(i_root) + " out of range, rank is " +
                           std::to_string(rs.rank()));
  Coroot g{std::vector<std::int64_t>(rs.rank(), 0)};
  g.coeffs[i_root - 1] = 1;
  return g;
}

std::int64_t coroot_pairing(const RootSystem& rs, const Coroot& g, int j_root) {
  if (static_cast<int>(g.coeffs.size()) != rs.rank())
    throw validation_error("coroot has " + std::to_string(g.coeffs.size()) +
                           " coordinates, rank is " + std::to_string(rs.rank()));
  if (j_root < 1 || j_root > rs.rank())
    throw validation_error("root index " + std::to_string(j_root) + " out of range, rank is " +
                           std::to_string(rs.rank()));
  std::int64_t acc = 0;
  for (int i = 1; i <= rs.rank(); ++i)
    acc = checked_add(acc, checked_mul(g.coeffs[i - 1], rs.pairing(j_root, i)));
  return acc;
}

Coroot dual_reflect(const RootSystem& rs, const Coroot& g, int i_root) {
  std::int64_t p = coroot_pairing(rs, g, i_root);
  Coroot out = g;
  out.coeffs[i_root - 1] = checked_sub(out.coeffs[i_root - 1], p);
  return out;
}

Coroot iterated_coroot(const RootSystem& rs, std::span<const int> roots) {
  if (roots.empty()) throw validation_error("iterated coroot of an empty root sequence");
  Coroot g = simple_coroot(rs, roots[0]);
  for (std::size_t k = 1; k < roots.size(); ++k) g = dual_reflect(rs, g, roots[k]);
  return g;
}

}  // namespace bsdh
