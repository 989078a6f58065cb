#pragma once

#include <stdexcept>
#include <string>

namespace bsdh {

// Input fails a documented precondition (bad Cartan matrix, bad word,
// out-of-range index, wrong divisor basis, enumeration cap exceeded).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked int64 operation left the representable range.  Every arithmetic
// step in the library goes through checked ops, so results are exact or this
// is thrown; values never wrap silently.
class overflow_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independently proven-equal computations disagreed (comp vs weyl).
// Reaching this means a bug, not bad input.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bsdh
