#pragma once

// Divisor/curve intersection numbers, canonical class, Mori rays, Fano test
// and the two ampleness tests.
//
// Divisors live in one of two bases:
//   LT        coefficients over the line bundles L_1..L_m of
//             Lauritzen-Thomsen type; L_j . L_r = 1 iff j >= r and
//             beta(j) = beta(r), else 0.
//   boundary  coefficients over the toric boundary divisors D_1..D_m
//             (Schubert-type) and D'_1..D'_m (non-Schubert-type);
//             D_i . L_r = 0 (i < r), 1 (i = r), (i, r) (i > r) and
//             D'_i . L_r = delta_{ir}.

#include <cstdint>
#include <vector>

#include "bsdh/curve.hpp"
#include "bsdh/word.hpp"

namespace bsdh {

class DivisorClass {
 public:
  enum class Basis { lt, boundary };

  static DivisorClass lauritzen_thomsen(std::vector<std::int64_t> coeffs);
  static DivisorClass boundary(std::vector<std::int64_t> schubert,
                               std::vector<std::int64_t> nonschubert);

  Basis basis() const noexcept { return basis_; }
  // LT coefficients; only valid when basis() == lt.
  const std::vector<std::int64_t>& lt_coeffs() const;
  // Boundary coefficients; only valid when basis() == boundary.
  const std::vector<std::int64_t>& schubert_coeffs() const;
  const std::vector<std::int64_t>& nonschubert_coeffs() const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  Basis basis_ = Basis::lt;
  std::vector<std::int64_t> lt_;
  std::vector<std::int64_t> schubert_;
  std::vector<std::int64_t> nonschubert_;
};

enum class BoundaryKind { schubert, nonschubert };

// L_j . L_r for the LT line bundle L_j against the Schubert line L_r.
std::int64_t lt_dot_schubert(const Word& w, int j, int r);

// D_i . L_r (schubert) or D'_i . L_r (nonschubert).
std::int64_t boundary_dot_schubert(const Word& w, int i, int r, BoundaryKind kind);

// Bilinear extension of the tables above; divisor length must match m.
std::int64_t divisor_dot_curve(const Word& w, const DivisorClass& d, const CurveClass& c);

// K = -(sum_i D_i + sum_i D'_i) in the boundary basis.
DivisorClass canonical_class(const Word& w);

// K . L_r = -2 - sum_{j > r} (j, r), closed form.
std::int64_t canonical_dot_schubert(const Word& w, int r);

// Coefficients a_{.j} with L_j = sum_r a_{rj} D_r in the Schubert-type
// boundary classes: a_{jj} = 1, zeros above j, and back substitution
// a_{rj} = L_j . L_r - sum_{i > r} a_{ij} (i, r) below.  Length-m vector.
std::vector<std::int64_t> lt_to_boundary(const Word& w, int j);

// L_r spans a Mori ray iff (j, r) <= 0 for every j > r and the multiset of
// negative values among them is empty or exactly {-1}.  Given the first
// condition this is equivalent to K . L_r < 0.
bool is_mori_ray(const Word& w, int r);

// Ascending positions r with is_mori_ray(w, r).
std::vector<int> mori_rays(const Word& w);

// Fano iff every position is a Mori ray.  Requires m >= 1.
bool is_fano(const Word& w);

// D . ray > 0 for every extremal ray of the toric variety (strict).
bool toric_ample(const Word& w, const DivisorClass& d);

// Ampleness test in the LT basis: every coefficient > 0.  Requires an
// LT-tagged divisor.  The toric ample cone is a subcone of this one,
// strictly in general.
bool bsdh_ample(const Word& w, const DivisorClass& d);

}  // namespace bsdh
