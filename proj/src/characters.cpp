#include "repflow/characters.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace repflow {

namespace {

constexpr double kMaxCondition = 1e12;

// Order used for canonical forms and listing: by index, plain letter before
// its inverse ('a' < 'a'' < 'b' < ...).
bool letter_less(int a, int b) {
  const int ia = std::abs(a);
  const int ib = std::abs(b);
  if (ia != ib) return ia < ib;
  return a > 0 && b < 0;
}

bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_less(a[i], b[i]);
  }
  return false;
}

std::vector<int> invert_letters(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

// Strip matching first/last letters; a reduced word stays reduced and, being
// nonempty, never cancels completely.
std::vector<int> cyclic_reduction(std::vector<int> w) {
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

// Least representative of the trace-equivalence class: all rotations of the
// cyclic reduction, plus those of the inverse when requested.
std::vector<int> canonical_form(const std::vector<int>& word, bool collapse_inversion) {
  const std::vector<int> base = cyclic_reduction(word);
  if (base.empty()) return base;
  std::vector<int> best;
  auto consider = [&best](std::vector<int> w) {
    for (std::size_t r = 0; r < w.size(); ++r) {
      if (best.empty() || word_less(w, best)) best = w;
      std::rotate(w.begin(), w.begin() + 1, w.end());
    }
  };
  consider(base);
  if (collapse_inversion) consider(invert_letters(base));
  return best;
}

}  // namespace

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (const int l : letters) {
    if (l == 0) throw IndexOutOfRange("generator index 0 is invalid");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

int FreeWord::max_index() const {
  int m = 0;
  for (const int l : letters_) m = std::max(m, std::abs(l));
  return m;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_ = invert_letters(letters_);
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  std::vector<int> joined = letters_;
  joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
  return FreeWord(std::move(joined));
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const int l : letters_) {
    s += static_cast<char>('a' + std::abs(l) - 1);
    if (l < 0) s += '\'';
  }
  return s;
}

FreeWord FreeWord::parse(const std::string& text) {
  std::vector<int> letters;
  if (text == "1") return FreeWord();  // explicit identity
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < 'a' || c > 'z')
      throw WordSyntaxError("unexpected character '" + std::string(1, c) + "' in word: " + text);
    int letter = c - 'a' + 1;
    if (i + 1 < text.size() && text[i + 1] == '\'') {
      letter = -letter;
      ++i;
    }
    letters.push_back(letter);
  }
  return FreeWord(std::move(letters));
}

FreeWord reduce_word(const std::vector<int>& letters) { return FreeWord(letters); }

GroupElement evaluate_word(const RepresentationTuple& rho, const FreeWord& w) {
  if (w.max_index() > rho.rank())
    throw IndexOutOfRange("word uses generator " + std::to_string(w.max_index()) +
                          " but the tuple has rank " + std::to_string(rho.rank()));

  std::map<int, ComplexMatrix> inverses;
  ComplexMatrix product = ComplexMatrix::identity(rho.descriptor().n);
  for (const int l : w.letters()) {
    const int idx = std::abs(l) - 1;
    if (l > 0) {
      product = product * rho.element(idx).matrix();
    } else {
      auto it = inverses.find(idx);
      if (it == inverses.end()) {
        const ComplexMatrix& m = rho.element(idx).matrix();
        if (!(condition_number(m) <= kMaxCondition))
          throw SingularInput("component too ill-conditioned to invert");
        it = inverses.emplace(idx, inverse(m)).first;
      }
      product = product * it->second;
    }
  }
  return GroupElement(rho.descriptor(), std::move(product));
}

TraceVector trace_coordinates(const RepresentationTuple& rho, const std::vector<FreeWord>& words) {
  TraceVector tv;
  tv.words = words;
  tv.values.reserve(words.size());
  for (const FreeWord& w : words) tv.values.push_back(evaluate_word(rho, w).matrix().trace());
  return tv;
}

Sl2Triple sl2_triple(const RepresentationTuple& rho) {
  const GroupDescriptor& d = rho.descriptor();
  if (!d.is_sl() || d.n != 2 || rho.rank() != 2)
    throw WrongSignature("sl2_triple needs a rank-2 tuple in SL(2)");
  const ComplexMatrix& a = rho.element(0).matrix();
  const ComplexMatrix& b = rho.element(1).matrix();
  return {a.trace(), b.trace(), (a * b).trace()};
}

std::vector<FreeWord> word_list(int max_length, int rank, bool collapse_inversion) {
  if (max_length < 1) throw ParameterOutOfRange("max_length must be at least 1");
  if (rank < 1) throw ParameterOutOfRange("rank must be at least 1");

  std::set<std::vector<int>, decltype(&word_less)> canon(&word_less);
  std::vector<int> current;

  auto visit = [&](auto&& self, int remaining) -> void {
    if (!current.empty()) canon.insert(canonical_form(current, collapse_inversion));
    if (remaining == 0) return;
    for (int idx = 1; idx <= rank; ++idx) {
      for (const int letter : {idx, -idx}) {
        if (!current.empty() && current.back() == -letter) continue;  // stay reduced
        current.push_back(letter);
        self(self, remaining - 1);
        current.pop_back();
      }
    }
  };
  visit(visit, max_length);

  std::vector<FreeWord> out;
  out.reserve(canon.size());
  for (const std::vector<int>& w : canon) out.push_back(FreeWord(w));
  return out;
}

}  // namespace repflow
