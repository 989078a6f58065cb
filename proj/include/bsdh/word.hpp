#pragma once

// Words of simple reflections and admissible position sequences.
//
// A word w = (s_{beta(1)},...,s_{beta(m)}) is stored as its letters
// beta(1..m), indices into the simple roots of a fixed root system.  Words
// need not be reduced.  Positions are 1-based everywhere.

#include <cstdint>
#include <vector>

#include "bsdh/root_system.hpp"

namespace bsdh {

class Word {
 public:
  // Letters must lie in 1..rs.rank().  Length 0 is permitted.
  Word(RootSystem rs, std::vector<int> letters);

  int length() const noexcept { return static_cast<int>(letters_.size()); }
  const RootSystem& root_system() const noexcept { return rs_; }
  const std::vector<int>& letters() const noexcept { return letters_; }

  // beta(pos), 1-based.
  int letter_at(int pos) const;

  // Prefix w[r] = (beta(1),...,beta(r)).  Requires 0 <= r <= m.
  Word prefix(int r) const;

  // Suffix [r]w = (beta(r+1),...,beta(m)), positions renumbered from 1.
  // Requires 0 <= r <= m.
  Word suffix(int r) const;

  // (j, r) := <alpha_{beta(j)}, alpha_{beta(r)}^vee>.  Depends only on the
  // letters at the two positions, so it is invariant under truncation as
  // long as both positions survive.
  std::int64_t pos_pairing(int j_pos, int r_pos) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  RootSystem rs_;
  std::vector<int> letters_;
};

// Strictly increasing sequence of positions (i_1 < ... < i_r), entries >= 1.
// Upper range is checked against a concrete word by the operations that
// consume the sequence.
class AdmissibleSeq {
 public:
  AdmissibleSeq() = default;  // the empty sequence
  explicit AdmissibleSeq(std::vector<int> positions);

  const std::vector<int>& positions() const noexcept { return positions_; }
  bool empty() const noexcept { return positions_.empty(); }
  int size() const noexcept { return static_cast<int>(positions_.size()); }

  friend bool operator==(const AdmissibleSeq&, const AdmissibleSeq&) = default;

 private:
  std::vector<int> positions_;
};

}  // namespace bsdh
