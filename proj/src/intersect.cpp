#include "bsdh/intersect.hpp"

#include <string>

#include "bsdh/checked.hpp"
#include "bsdh/errors.hpp"
#include "bsdh/extremal.hpp"

namespace bsdh {
namespace {

void check_position(const Word& w, int p, const char* what) {
  if (p < 1 || p > w.length())
    throw validation_error(std::string(what) + " " + std::to_string(p) +
                           " out of range, word length is " + std::to_string(w.length()));
}

void check_divisor_length(const Word& w, const DivisorClass& d) {
  std::size_t m = static_cast<std::size_t>(w.length());
  bool ok = d.basis() == DivisorClass::Basis::lt
                ? d.lt_coeffs().size() == m
                : d.schubert_coeffs().size() == m && d.nonschubert_coeffs().size() == m;
  if (!ok) throw validation_error("divisor length does not match word length " + std::to_string(m));
}

}  // namespace

DivisorClass DivisorClass::lauritzen_thomsen(std::vector<std::int64_t> coeffs) {
  DivisorClass d;
  d.basis_ = Basis::lt;
  d.lt_ = std::move(coeffs);
  return d;
}

DivisorClass DivisorClass::boundary(std::vector<std::int64_t> schubert,
                                    std::vector<std::int64_t> nonschubert) {
  if (schubert.size() != nonschubert.size())
    throw validation_error("boundary divisor parts have different lengths: " +
                           std::to_string(schubert.size()) + " and " +
                           std::to_string(nonschubert.size()));
  DivisorClass d;
  d.basis_ = Basis::boundary;
  d.schubert_ = std::move(schubert);
  d.nonschubert_ = std::move(nonschubert);
  return d;
}

const std::vector<std::int64_t>& DivisorClass::lt_coeffs() const {
  if (basis_ != Basis::lt) throw validation_error("divisor is not in the LT basis");
  return lt_;
}

const std::vector<std::int64_t>& DivisorClass::schubert_coeffs() const {
  if (basis_ != Basis::boundary) throw validation_error("divisor is not in the boundary basis");
  return schubert_;
}

const std::vector<std::int64_t>& DivisorClass::nonschubert_coeffs() const {
  if (basis_ != Basis::boundary) throw validation_error("divisor is not in the boundary basis");
  return nonschubert_;
}

std::int64_t lt_dot_schubert(const Word& w, int j, int r) {
  check_position(w, j, "LT bundle index");
  check_position(w, r, "schubert line index");
  return (j >= r && w.letter_at(j) == w.letter_at(r)) ? 1 : 0;
}

std::int64_t boundary_dot_schubert(const Word& w, int i, int r, BoundaryKind kind) {
  check_position(w, i, "boundary divisor index");
  check_position(w, r, "schubert line index");
  if (kind == BoundaryKind::nonschubert) return i == r ? 1 : 0;
  if (i < r) return 0;
  if (i == r) return 1;
  return w.pos_pairing(i, r);
}

std::int64_t divisor_dot_curve(const Word& w, const DivisorClass& d, const CurveClass& c) {
  check_divisor_length(w, d);
  if (static_cast<int>(c.coeffs.size()) != w.length())
    throw validation_error("curve class length does not match word length " +
                           std::to_string(w.length()));
  std::int64_t total = 0;
  for (int r = 1; r <= w.length(); ++r) {
    std::int64_t cr = c.coeffs[r - 1];
    if (cr == 0) continue;
    std::int64_t dr = 0;
    if (d.basis() == DivisorClass::Basis::lt) {
      for (int j = 1; j <= w.length(); ++j) {
        std::int64_t a = d.lt_coeffs()[j - 1];
        if (a == 0) continue;
        dr = checked_add(dr, checked_mul(a, lt_dot_schubert(w, j, r)));
      }
    } else {
      for (int i = 1; i <= w.length(); ++i) {
        std::int64_t a = d.schubert_coeffs()[i - 1];
        if (a != 0)
          dr = checked_add(dr, checked_mul(a, boundary_dot_schubert(w, i, r, BoundaryKind::schubert)));
        std::int64_t b = d.nonschubert_coeffs()[i - 1];
        if (b != 0)
          dr = checked_add(dr, checked_mul(b, boundary_dot_schubert(w, i, r, BoundaryKind::nonschubert)));
      }
    }
    total = checked_add(total, checked_mul(dr, cr));
  }
  return total;
}

DivisorClass canonical_class(const Word& w) {
  return DivisorClass::boundary(std::vector<std::int64_t>(w.length(), -1),
                                std::vector<std::int64_t>(w.length(), -1));
}

std::int64_t canonical_dot_schubert(const Word& w, int r) {
  check_position(w, r, "schubert line index");
  std::int64_t acc = -2;
  for (int j = r + 1; j <= w.length(); ++j) acc = checked_sub(acc, w.pos_pairing(j, r));
  return acc;
}

std::vector<std::int64_t> lt_to_boundary(const Word& w, int j) {
  check_position(w, j, "LT bundle index");
  std::vector<std::int64_t> a(w.length(), 0);
  a[j - 1] = 1;
  for (int r = j - 1; r >= 1; --r) {
    std::int64_t acc = lt_dot_schubert(w, j, r);
    for (int i = r + 1; i <= j; ++i)
      acc = checked_sub(acc, checked_mul(a[i - 1], w.pos_pairing(i, r)));
    a[r - 1] = acc;
  }
  return a;
}

bool is_mori_ray(const Word& w, int r) {
  check_position(w, r, "schubert line index");
  int negatives = 0;
  for (int j = r + 1; j <= w.length(); ++j) {
    std::int64_t v = w.pos_pairing(j, r);
    if (v > 0) return false;  // L_r is not even extremal
    if (v < 0) {
      if (v != -1 || ++negatives > 1) return false;
    }
  }
  return true;
}

std::vector<int> mori_rays(const Word& w) {
  if (w.length() < 1) throw validation_error("mori rays of an empty word");
  std::vector<int> out;
  for (int r = 1; r <= w.length(); ++r)
    if (is_mori_ray(w, r)) out.push_back(r);
  return out;
}

bool is_fano(const Word& w) {
  if (w.length() < 1) throw validation_error("fano test of an empty word");
  for (int r = 1; r <= w.length(); ++r)
    if (!is_mori_ray(w, r)) return false;
  return true;
}

bool toric_ample(const Word& w, const DivisorClass& d) {
  check_divisor_length(w, d);
  ExtremalBasis basis = extremal_basis(w);
  for (const CurveClass& ray : basis.rays)
    if (divisor_dot_curve(w, d, ray) <= 0) return false;
  return true;
}

bool bsdh_ample(const Word& w, const DivisorClass& d) {
  if (d.basis() != DivisorClass::Basis::lt)
    throw validation_error("bsdh_ample requires a divisor in the LT basis");
  check_divisor_length(w, d);
  for (std::int64_t a : d.lt_coeffs())
    if (a <= 0) return false;
  return true;
}

}  // namespace bsdh
