#include "bsdh/curve.hpp"

#include <string>

#include "bsdh/checked.hpp"
#include "bsdh/errors.hpp"

namespace bsdh {
namespace {

void check_sequence(const Word& w, const AdmissibleSeq& seq, const char* op) {
  if (seq.empty()) throw validation_error(std::string(op) + ": sequence is empty");
  if (seq.positions().back() > w.length())
    throw validation_error(std::string(op) + ": position " +
                           std::to_string(seq.positions().back()) + " exceeds word length " +
                           std::to_string(w.length()));
}

// expand_oracle work horse; both recursive branches keep the list strictly
// increasing because only one of i_1/i_2 survives in the head slot.
std::vector<std::int64_t> oracle_coeffs(const Word& w, std::vector<int> pos) {
  const std::size_t r = pos.size();
  std::vector<std::int64_t> out(w.length(), 0);
  if (r == 1) {
    out[pos[0] - 1] = 1;
    return out;
  }
  if (r == 2) {
    // L_{i_1 i_2} = L_{i_1} - (i_2, i_1) L_{i_2}
    out[pos[0] - 1] = 1;
    out[pos[1] - 1] = checked_neg(w.pos_pairing(pos[1], pos[0]));
    return out;
  }
  std::int64_t p = w.pos_pairing(pos[1], pos[0]);
  std::vector<int> head1(pos.size() - 1), head2(pos.size() - 1);
  head1[0] = pos[0];
  head2[0] = pos[1];
  for (std::size_t k = 2; k < r; ++k) head1[k - 1] = head2[k - 1] = pos[k];
  std::vector<std::int64_t> a = oracle_coeffs(w, std::move(head1));
  std::vector<std::int64_t> b = oracle_coeffs(w, std::move(head2));
  for (int k = 0; k < w.length(); ++k)
    a[k] = checked_sub(a[k], checked_mul(p, b[k]));
  return a;
}

}  // namespace

CurveClass schubert_line(const Word& w, int r) {
  if (r < 1 || r > w.length())
    throw validation_error("schubert line index " + std::to_string(r) +
                           " out of range, word length is " + std::to_string(w.length()));
  CurveClass c{std::vector<std::int64_t>(w.length(), 0)};
  c.coeffs[r - 1] = 1;
  return c;
}

CurveClass expand(const Word& w, const AdmissibleSeq& I) {
  check_sequence(w, I, "expand");
  const auto& pos = I.positions();
  const int r = I.size();
  std::vector<std::int64_t> d(r);
  d[0] = 1;
  for (int k = 1; k < r; ++k) {
    std::int64_t acc = 0;
    for (int j = 0; j < k; ++j)
      acc = checked_sub(acc, checked_mul(d[j], w.pos_pairing(pos[k], pos[j])));
    d[k] = acc;
  }
  CurveClass c{std::vector<std::int64_t>(w.length(), 0)};
  for (int k = 0; k < r; ++k) c.coeffs[pos[k] - 1] = d[k];
  return c;
}

CurveClass expand_oracle(const Word& w, const AdmissibleSeq& I) {
  check_sequence(w, I, "expand_oracle");
  return CurveClass{oracle_coeffs(w, I.positions())};
}

CurveClass expand_coroot(const Word& w, const AdmissibleSeq& I) {
  check_sequence(w, I, "expand_coroot");
  const auto& pos = I.positions();
  const RootSystem& rs = w.root_system();
  CurveClass c{std::vector<std::int64_t>(w.length(), 0)};
  c.coeffs[pos[0] - 1] = 1;
  // g tracks alpha^vee_{i_1...i_{j-1}} just before position i_j is handled.
  Coroot g = simple_coroot(rs, w.letter_at(pos[0]));
  for (int k = 1; k < I.size(); ++k) {
    int letter = w.letter_at(pos[k]);
    c.coeffs[pos[k] - 1] = checked_neg(coroot_pairing(rs, g, letter));
    g = dual_reflect(rs, g, letter);
  }
  return c;
}

CurveClass expand_repeated(const Word& w, const AdmissibleSeq& I) {
  check_sequence(w, I, "expand_repeated");
  const auto& pos = I.positions();
  if (I.size() < 2)
    throw validation_error("expand_repeated needs at least two positions");
  if (w.letter_at(pos[0]) != w.letter_at(pos[1]))
    throw validation_error("expand_repeated requires equal letters at the first two positions, got " +
                           std::to_string(w.letter_at(pos[0])) + " and " +
                           std::to_string(w.letter_at(pos[1])));
  const RootSystem& rs = w.root_system();
  CurveClass c{std::vector<std::int64_t>(w.length(), 0)};
  c.coeffs[pos[1] - 1] = -1;
  Coroot g = simple_coroot(rs, w.letter_at(pos[1]));
  for (int k = 2; k < I.size(); ++k) {
    int letter = w.letter_at(pos[k]);
    c.coeffs[pos[k] - 1] = coroot_pairing(rs, g, letter);
    g = dual_reflect(rs, g, letter);
  }
  return c;
}

}  // namespace bsdh
