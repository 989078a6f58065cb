#include "bsdh/word.hpp"

#include <string>

#include "bsdh/errors.hpp"

namespace bsdh {

Word::Word(RootSystem rs, std::vector<int> letters)
    : rs_(std::move(rs)), letters_(std::move(letters)) {
  for (std::size_t p = 0; p < letters_.size(); ++p) {
    if (letters_[p] < 1 || letters_[p] > rs_.rank())
      throw validation_error("word letter at position " + std::to_string(p + 1) + " is " +
                             std::to_string(letters_[p]) + ", must lie in 1.." +
                             std::to_string(rs_.rank()));
  }
}

int Word::letter_at(int pos) const {
  if (pos < 1 || pos > length())
    throw validation_error("word position " + std::to_string(pos) + " out of range, length is " +
                           std::to_string(length()));
  return letters_[pos - 1];
}

Word Word::prefix(int r) const {
  if (r < 0 || r > length())
    throw validation_error("prefix length " + std::to_string(r) + " out of range, word length is " +
                           std::to_string(length()));
  return Word(rs_, std::vector<int>(letters_.begin(), letters_.begin() + r));
}

Word Word::suffix(int r) const {
  if (r < 0 || r > length())
    throw validation_error("suffix cut " + std::to_string(r) + " out of range, word length is " +
                           std::to_string(length()));
  return Word(rs_, std::vector<int>(letters_.begin() + r, letters_.end()));
}

std::int64_t Word::pos_pairing(int j_pos, int r_pos) const {
  return rs_.pairing(letter_at(j_pos), letter_at(r_pos));
}

AdmissibleSeq::AdmissibleSeq(std::vector<int> positions) : positions_(std::move(positions)) {
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    if (positions_[k] < 1)
      throw validation_error("sequence position " + std::to_string(positions_[k]) +
                             " must be >= 1");
    if (k > 0 && positions_[k] <= positions_[k - 1])
      throw validation_error("sequence positions must be strictly increasing, got " +
                             std::to_string(positions_[k - 1]) + " then " +
                             std::to_string(positions_[k]));
  }
}

}  // namespace bsdh
