#include "bsdh/extremal.hpp"

#include <cassert>
#include <sstream>
#include <string>

#include "bsdh/checked.hpp"
#include "bsdh/errors.hpp"

namespace bsdh {
namespace {

std::string seq_to_string(const AdmissibleSeq& seq) {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < seq.size(); ++k) {
    if (k) os << ",";
    os << seq.positions()[k];
  }
  os << ")";
  return os.str();
}

// Positions picked inside the suffix word, local numbering from 1.
std::vector<int> pick_comp(const Word& tail, int i2) {
  std::vector<int> picked{1, i2};
  std::vector<int> tpos{i2};
  std::vector<std::int64_t> dtail{1};
  for (int p = i2 + 1; p <= tail.length(); ++p) {
    std::int64_t t = 0;
    for (std::size_t q = 0; q < tpos.size(); ++q)
      t = checked_sub(t, checked_mul(dtail[q], tail.pos_pairing(p, tpos[q])));
    // c_p = -t; membership requires c_p < 0
    if (t > 0) {
      picked.push_back(p);
      tpos.push_back(p);
      dtail.push_back(t);
    }
  }
  return picked;
}

std::vector<int> pick_weyl(const Word& tail, int i2) {
  std::vector<int> picked{1, i2};
  const RootSystem& rs = tail.root_system();
  Coroot g = simple_coroot(rs, tail.letter_at(i2));
  std::int64_t h = g.height();
  for (int p = i2 + 1; p <= tail.length(); ++p) {
    Coroot g2 = dual_reflect(rs, g, tail.letter_at(p));
    std::int64_t h2 = g2.height();
    if (h2 > h) {
      picked.push_back(p);
      g = std::move(g2);
      h = h2;
    }
  }
  return picked;
}

}  // namespace

AdmissibleSeq basis_subsequence(const Word& w, int start, BasisAlgorithm alg) {
  if (start < 1 || start > w.length())
    throw validation_error("basis subsequence start " + std::to_string(start) +
                           " out of range, word length is " + std::to_string(w.length()));
  Word tail = w.suffix(start - 1);
  int i2 = 0;
  for (int p = 2; p <= tail.length(); ++p) {
    if (tail.letter_at(p) == tail.letter_at(1)) {
      i2 = p;
      break;
    }
  }
  std::vector<int> local =
      i2 == 0 ? std::vector<int>{1}
              : (alg == BasisAlgorithm::comp ? pick_comp(tail, i2) : pick_weyl(tail, i2));
  for (int& p : local) p += start - 1;
  return AdmissibleSeq(std::move(local));
}

ExtremalBasis extremal_basis(const Word& w) {
  if (w.length() < 1) throw validation_error("extremal basis of an empty word");
  ExtremalBasis basis;
  basis.subsequences.reserve(w.length());
  basis.rays.reserve(w.length());
  for (int j = 1; j <= w.length(); ++j) {
    AdmissibleSeq c = basis_subsequence(w, j, BasisAlgorithm::comp);
    AdmissibleSeq y = basis_subsequence(w, j, BasisAlgorithm::weyl);
    if (!(c == y))
      throw consistency_error("extremal subsequence algorithms disagree at start " +
                              std::to_string(j) + ": comp=" + seq_to_string(c) +
                              " weyl=" + seq_to_string(y));
    basis.rays.push_back(expand(w, c));
    basis.subsequences.push_back(std::move(c));
  }
  return basis;
}

std::vector<std::int64_t> express_in_basis(const ExtremalBasis& basis, const CurveClass& c) {
  const int m = static_cast<int>(basis.rays.size());
  if (static_cast<int>(c.coeffs.size()) != m)
    throw validation_error("curve class has " + std::to_string(c.coeffs.size()) +
                           " coefficients, basis has " + std::to_string(m) + " rays");
  std::vector<std::int64_t> rem = c.coeffs;
  std::vector<std::int64_t> x(m, 0);
  for (int j = 0; j < m; ++j) {
    // ray j has 1 at position j and zeros below, so rem[j] is decided here
    x[j] = rem[j];
    if (x[j] == 0) continue;
    const auto& ray = basis.rays[j].coeffs;
    for (int k = j; k < m; ++k) rem[k] = checked_sub(rem[k], checked_mul(x[j], ray[k]));
  }
  for (int k = 0; k < m; ++k) assert(rem[k] == 0);
  return x;
}

}  // namespace bsdh
