#pragma once

#include <string>
#include <vector>

#include "repflow/group.hpp"

namespace repflow {

// A reduced word in a free group. Letters are signed generator indices
// (1-based; negative means inverse); construction cancels adjacent inverse
// pairs. The empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters);  // reduces; rejects letter 0

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_index() const;

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& rhs) const;  // reduced concatenation

  // Generator syntax: 'a'..'z' by rank order, trailing apostrophe for the
  // inverse, juxtaposition for concatenation ("aba'b'" is the commutator).
  std::string to_string() const;                   // identity prints as "1"
  static FreeWord parse(const std::string& text);  // throws WordSyntaxError

  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<int> letters_;
};

// Normal form of a letter sequence (same as the FreeWord constructor).
FreeWord reduce_word(const std::vector<int>& letters);

// Image of w under the representation: the ordered product of the tuple's
// matrices and inverses. Throws IndexOutOfRange past the tuple's rank and
// SingularInput for an ill-conditioned component inverse.
GroupElement evaluate_word(const RepresentationTuple& rho, const FreeWord& w);

// Traces of a word list: the conjugation-invariant coordinates of the tuple.
struct TraceVector {
  std::vector<FreeWord> words;
  std::vector<Complex> values;
};

TraceVector trace_coordinates(const RepresentationTuple& rho, const std::vector<FreeWord>& words);

// The classical coordinates (tr A, tr B, tr AB) for a rank-2 tuple in
// SL(2); throws WrongSignature otherwise.
struct Sl2Triple {
  Complex x, y, z;
};

Sl2Triple sl2_triple(const RepresentationTuple& rho);

// All reduced words of length 1..max_length over `rank` generators,
// deduplicated up to cyclic rotation (traces are conjugation-invariant) and,
// when collapse_inversion is set, whole-word inversion (valid for trace
// purposes in SL(2), where tr M = tr M^-1). Representatives are the
// lexicographically least class members, listed by length then rank order.
std::vector<FreeWord> word_list(int max_length, int rank, bool collapse_inversion = true);

}  // namespace repflow
