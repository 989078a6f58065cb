#pragma once

// Curve classes in the Chow group of the toric variety degenerated from a
// Bott-Samelson-Demazure-Hansen variety, written in the basis of Schubert
// lines L_1..L_m.  For an admissible sequence I = (i_1 < ... < i_r) the class
// L_I expands as sum_k d_{i_k} L_{i_k}; three routes compute the same vector:
//
//   expand         d_{i_1} = 1,  d_{i_k} = - sum_{j<k} d_{i_j} (i_k, i_j)
//   expand_oracle  the two-term recursion
//                  L_I = L_{i_1 I'} - (i_2, i_1) L_{i_2 I'},  I' = (i_3..i_r),
//                  applied literally (exponential; kept as an independent
//                  reference path)
//   expand_coroot  d_{i_j} = -< alpha^vee_{i_1...i_{j-1}}, alpha_{i_j} >
//
// with (j, r) = Word::pos_pairing.  All coefficients are exact int64 with
// overflow checking.

#include <cstdint>
#include <vector>

#include "bsdh/word.hpp"

namespace bsdh {

// Coefficient vector over L_1..L_m.
struct CurveClass {
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// The class of the Schubert line L_r, i.e. the r-th unit vector.
CurveClass schubert_line(const Word& w, int r);

// Linear-recursion expansion of L_I.  Requires I nonempty, max(I) <= m.
// coeffs[i_1] is always 1 and coefficients off I vanish.
CurveClass expand(const Word& w, const AdmissibleSeq& I);

// Literal two-term recursion, exponential in |I|.  Same contract as expand.
CurveClass expand_oracle(const Word& w, const AdmissibleSeq& I);

// Coroot-pairing route.  Same contract as expand.
CurveClass expand_coroot(const Word& w, const AdmissibleSeq& I);

// Repeated-letter special form.  Requires |I| >= 2 and
// beta(i_1) = beta(i_2); computes
//
//   c_{i_2} = -1,  c_{i_j} = < alpha^vee_{i_2...i_{j-1}}, alpha_{i_j} >  (j > 2)
//
// and leaves coeffs[i_1] = 0.  This reproduces a printed corollary exactly
// as stated; it does NOT agree with expand(w, I) (it equals the negated
// expansion of the tail (i_2,...,i_r) instead) and is kept out of every
// production path.  See the unit tests for the two pinned probe values.
CurveClass expand_repeated(const Word& w, const AdmissibleSeq& I);

}  // namespace bsdh
