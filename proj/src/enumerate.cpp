#include "bsdh/enumerate.hpp"

#include <sstream>
#include <string>

#include "bsdh/checked.hpp"
#include "bsdh/errors.hpp"
#include "bsdh/intersect.hpp"

namespace bsdh {
namespace {

void check_enumerable(const Word& w, const EnumerationOptions& opts) {
  if (w.length() < 1) throw validation_error("enumeration of an empty word");
  if (w.length() > 62)
    throw validation_error("enumeration beyond 62 positions is unsupported");
  if (w.length() > opts.max_length)
    throw validation_error("word length " + std::to_string(w.length()) +
                           " exceeds the enumeration cap " + std::to_string(opts.max_length) +
                           "; raise the cap to enumerate anyway");
}

// Spreads the m-1 free bits of sub around the level slot (0-based bit k-1).
std::uint64_t insert_level_gap(std::uint64_t sub, int level) {
  std::uint64_t low = sub & ((std::uint64_t{1} << (level - 1)) - 1);
  std::uint64_t high = sub >> (level - 1);
  return low | (high << level);
}

std::string label_to_string(const AdmissibleSeq& label) {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < label.size(); ++k) {
    if (k) os << ",";
    os << label.positions()[k];
  }
  os << ")";
  return os.str();
}

AdmissibleSeq label_from_mask(std::uint64_t mask) {
  std::vector<int> positions;
  for (int p = 1; mask != 0; ++p, mask >>= 1)
    if (mask & 1) positions.push_back(p);
  return AdmissibleSeq(std::move(positions));
}

// Bits above the level survive, bits below it are forgotten.
std::uint64_t label_mask_of(const InvariantCurve& c) {
  std::uint64_t high = c.bits & ~((std::uint64_t{1} << c.level) - 1);
  return high | (std::uint64_t{1} << (c.level - 1));
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const ClauseResult& clause : clauses)
    if (!clause.pass) return false;
  return true;
}

std::vector<FixedPoint> all_fixed_points(const Word& w, const EnumerationOptions& opts) {
  check_enumerable(w, opts);
  const std::uint64_t total = std::uint64_t{1} << w.length();
  std::vector<FixedPoint> out;
  out.reserve(total);
  for (std::uint64_t bits = 0; bits < total; ++bits) out.push_back(FixedPoint{bits});
  return out;
}

std::vector<InvariantCurve> all_invariant_curves(const Word& w, const EnumerationOptions& opts) {
  check_enumerable(w, opts);
  const int m = w.length();
  const std::uint64_t per_level = std::uint64_t{1} << (m - 1);
  std::vector<InvariantCurve> out;
  out.reserve(per_level * static_cast<std::uint64_t>(m));
  for (int level = 1; level <= m; ++level)
    for (std::uint64_t sub = 0; sub < per_level; ++sub)
      out.push_back(InvariantCurve{level, insert_level_gap(sub, level)});
  return out;
}

AdmissibleSeq curve_label(const Word& w, const InvariantCurve& c) {
  if (c.level < 1 || c.level > w.length())
    throw validation_error("curve level " + std::to_string(c.level) +
                           " out of range, word length is " + std::to_string(w.length()));
  if (c.bits & (std::uint64_t{1} << (c.level - 1)))
    throw validation_error("curve bits have the level bit set");
  if ((c.bits >> w.length()) != 0)
    throw validation_error("curve bits exceed the word length");
  return label_from_mask(label_mask_of(c));
}

CurveClass curve_class_of(const Word& w, const InvariantCurve& c) {
  return expand(w, curve_label(w, c));
}

VerifyReport verify_report(const Word& w, const EnumerationOptions& opts) {
  check_enumerable(w, opts);
  const int m = w.length();
  VerifyReport report;

  // (a) fixed points
  report.fixed_points = static_cast<std::uint64_t>(all_fixed_points(w, opts).size());
  const std::uint64_t expected_points = std::uint64_t{1} << m;
  {
    ClauseResult clause{"fixed_point_count", report.fixed_points == expected_points, ""};
    if (!clause.pass)
      clause.witness = "enumerated " + std::to_string(report.fixed_points) +
                       " fixed points, expected " + std::to_string(expected_points);
    report.clauses.push_back(std::move(clause));
  }

  // (b) + (c): stream the curves, tallying per-label counts
  const std::uint64_t per_level = std::uint64_t{1} << (m - 1);
  std::vector<std::uint64_t> label_count(std::uint64_t{1} << m, 0);
  std::uint64_t curve_total = 0;
  for (int level = 1; level <= m; ++level) {
    for (std::uint64_t sub = 0; sub < per_level; ++sub) {
      InvariantCurve c{level, insert_level_gap(sub, level)};
      ++label_count[label_mask_of(c)];
      ++curve_total;
    }
  }
  report.curves = curve_total;
  const std::uint64_t expected_curves = static_cast<std::uint64_t>(m) << (m - 1);
  {
    ClauseResult clause{"curve_count", curve_total == expected_curves, ""};
    if (!clause.pass)
      clause.witness = "enumerated " + std::to_string(curve_total) + " curves, expected " +
                       std::to_string(expected_curves);
    report.clauses.push_back(std::move(clause));
  }
  {
    ClauseResult clause{"label_multiplicity", true, ""};
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      const std::uint64_t expected = std::uint64_t{1} << __builtin_ctzll(mask);
      if (label_count[mask] != expected) {
        clause.pass = false;
        clause.witness = "label " + label_to_string(label_from_mask(mask)) + " realized by " +
                         std::to_string(label_count[mask]) + " curves, expected " +
                         std::to_string(expected);
        break;
      }
    }
    report.clauses.push_back(std::move(clause));
  }

  // (d) + (e): walk the distinct curve classes once
  ExtremalBasis basis = extremal_basis(w);
  DivisorClass minus_k = DivisorClass::boundary(std::vector<std::int64_t>(m, 1),
                                                std::vector<std::int64_t>(m, 1));
  ClauseResult nonneg{"nonnegative_generation", true, ""};
  bool all_nakai_positive = true;
  std::uint64_t nakai_witness_mask = 0;
  std::int64_t nakai_witness_value = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    AdmissibleSeq label = label_from_mask(mask);
    CurveClass cls = expand(w, label);
    if (nonneg.pass) {
      std::vector<std::int64_t> x = express_in_basis(basis, cls);
      for (int j = 0; j < m; ++j) {
        if (x[j] < 0) {
          nonneg.pass = false;
          nonneg.witness = "label " + label_to_string(label) + " has coordinate " +
                           std::to_string(x[j]) + " on ray " + std::to_string(j + 1);
          break;
        }
      }
    }
    if (all_nakai_positive) {
      std::int64_t v = divisor_dot_curve(w, minus_k, cls);
      if (v <= 0) {
        all_nakai_positive = false;
        nakai_witness_mask = mask;
        nakai_witness_value = v;
      }
    }
  }
  report.clauses.push_back(std::move(nonneg));
  {
    bool fano = is_fano(w);
    ClauseResult clause{"fano_nakai_agreement", fano == all_nakai_positive, ""};
    if (!clause.pass) {
      clause.witness =
          fano ? "is_fano=true but label " + label_to_string(label_from_mask(nakai_witness_mask)) +
                     " meets -K in " + std::to_string(nakai_witness_value)
               : "is_fano=false but every enumerated class meets -K positively";
    }
    report.clauses.push_back(std::move(clause));
  }
  return report;
}

}  // namespace bsdh
