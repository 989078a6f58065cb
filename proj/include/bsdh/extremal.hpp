#pragma once

// Extremal rays of the cone of curves, one ray L_j(w) lying over each
// Schubert line of the suffix variety, computed by two independent greedy
// algorithms over the suffix [start-1]w:
//
//   comp  pick i_2 = first position after start carrying the same letter;
//         then scan left to right keeping a running expansion d' of the tail
//         (i_2, i_3, ...): candidate p joins iff its recursion coefficient
//         t = - sum_q d'_q (p, q) is positive (equivalently the corollary
//         coefficient c_p = -t is negative).
//
//   weyl  same i_2; candidate p joins iff reflecting the running iterated
//         coroot by alpha_{beta(p)}^vee strictly increases its height.
//
// The two are provably identical; extremal_basis runs both and throws
// consistency_error on any mismatch.

#include <cstdint>
#include <vector>

#include "bsdh/curve.hpp"
#include "bsdh/word.hpp"

namespace bsdh {

enum class BasisAlgorithm { comp, weyl };

// Subsequence (start = i_1 < i_2 < ...) in the numbering of w itself.
// Requires 1 <= start <= m.  If the letter at start never recurs the result
// is just (start).
AdmissibleSeq basis_subsequence(const Word& w, int start,
                                BasisAlgorithm alg = BasisAlgorithm::comp);

struct ExtremalBasis {
  // subsequences[j-1] = I_j, rays[j-1] = expand(w, I_j) = class of L_j(w).
  std::vector<AdmissibleSeq> subsequences;
  std::vector<CurveClass> rays;
};

// All m rays.  Unitriangular: rays[j-1] has coefficient 1 at position j and
// 0 at positions below j.  Requires m >= 1.
ExtremalBasis extremal_basis(const Word& w);

// Coordinates x with sum_j x_j L_j(w) = c, by forward substitution against
// the unitriangular ray matrix.  Exact; a class lies in the cone spanned by
// the rays iff every coordinate is >= 0.
std::vector<std::int64_t> express_in_basis(const ExtremalBasis& basis,
                                           const CurveClass& c);

}  // namespace bsdh
