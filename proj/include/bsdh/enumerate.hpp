#pragma once

// Brute-force model of the torus-fixed points and invariant curves of the
// degenerate toric variety, used as an independent check of the intersection
// theory.
//
// A fixed point is a choice of one of two sections at each of the m levels,
// stored as an m-bit mask (bit k-1 = level k).  An invariant curve joins the
// two points differing exactly at one level; it is (level k, bits at the
// other m-1 positions).  The curve's class depends only on its label
//
//   I = (k) followed by { j > k : bit j set },
//
// bits below the level never enter.  Counting facts that verify_report
// checks: 2^m fixed points, m 2^{m-1} curves, and each label I is the label
// of exactly 2^{min(I)-1} curves.

#include <cstdint>
#include <string>
#include <vector>

#include "bsdh/curve.hpp"
#include "bsdh/extremal.hpp"
#include "bsdh/word.hpp"

namespace bsdh {

struct FixedPoint {
  std::uint64_t bits = 0;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

struct InvariantCurve {
  int level = 0;            // 1-based
  std::uint64_t bits = 0;   // bit level-1 is always clear

  friend bool operator==(const InvariantCurve&, const InvariantCurve&) = default;
};

struct EnumerationOptions {
  // Enumeration refuses words longer than this; raise deliberately.
  int max_length = 20;
};

// All 2^m masks.  Requires 1 <= m <= opts.max_length (and m <= 62).
std::vector<FixedPoint> all_fixed_points(const Word& w, const EnumerationOptions& opts = {});

// All m * 2^{m-1} curves, ordered by (level, bits).
std::vector<InvariantCurve> all_invariant_curves(const Word& w,
                                                 const EnumerationOptions& opts = {});

// The label of a curve as an admissible sequence.
AdmissibleSeq curve_label(const Word& w, const InvariantCurve& c);

// expand(w, curve_label(w, c)).
CurveClass curve_class_of(const Word& w, const InvariantCurve& c);

struct ClauseResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when pass
};

struct VerifyReport {
  std::uint64_t fixed_points = 0;
  std::uint64_t curves = 0;
  std::vector<ClauseResult> clauses;

  bool all_pass() const;
};

// Runs the five clauses:
//   fixed_point_count        |fixed points| = 2^m
//   curve_count              |invariant curves| = m 2^{m-1}
//   label_multiplicity       each label I realized by exactly 2^{min(I)-1}
//   nonnegative_generation   every curve class has >= 0 coordinates in the
//                            extremal basis
//   fano_nakai_agreement     is_fano(w) iff -K . c > 0 for every enumerated
//                            curve class
VerifyReport verify_report(const Word& w, const EnumerationOptions& opts = {});

}  // namespace bsdh
