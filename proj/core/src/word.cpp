#include "chevpres/word.hpp"

#include <stdexcept>

namespace chevpres {

Word::Word(std::initializer_list<Letter> ls) {
  for (const Letter& l : ls) append(l.gen, l.exp);
}

void Word::append(int gen, int exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({gen, exp});
}

void Word::append(const Word& w) {
  for (const Letter& l : w.letters_) append(l.gen, l.exp);
}

void Word::append_inverse(const Word& w) {
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it)
    append(it->gen, -it->exp);
}

Word Word::inverse() const {
  Word out;
  out.append_inverse(*this);
  return out;
}

Word Word::pow(int e) const {
  Word out;
  if (e >= 0) {
    for (int i = 0; i < e; ++i) out.append(*this);
  } else {
    for (int i = 0; i < -e; ++i) out.append_inverse(*this);
  }
  return out;
}

long long Word::length() const {
  long long n = 0;
  for (const Letter& l : letters_) n += l.exp > 0 ? l.exp : -l.exp;
  return n;
}

Word operator*(const Word& x, const Word& y) {
  Word out = x;
  out.append(y);
  return out;
}

Word commutator(const Word& x, const Word& y) {
  Word out = x;
  out.append(y);
  out.append_inverse(x);
  out.append_inverse(y);
  return out;
}

Word conjugate(const Word& x, const Word& y) {
  Word out = y;
  out.append(x);
  out.append_inverse(y);
  return out;
}

}  // namespace chevpres
