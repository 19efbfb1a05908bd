#pragma once

#include <cstdint>
#include <vector>

namespace chevpres {

struct Letter {
  std::int32_t gen;  // index into the owning presentation's generator list
  std::int32_t exp;  // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word over abstract generators: adjacent letters carry
/// distinct generators and all exponents are nonzero.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> ls);

  void append(int gen, int exp);
  void append(const Word& w);
  void append_inverse(const Word& w);

  Word inverse() const;
  Word pow(int e) const;

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Total letter count with exponents expanded.
  long long length() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word operator*(const Word& x, const Word& y);
/// [x, y] = x y x^-1 y^-1
Word commutator(const Word& x, const Word& y);
/// x^y = y x y^-1
Word conjugate(const Word& x, const Word& y);

inline Word single(int gen, int exp = 1) {
  Word w;
  w.append(gen, exp);
  return w;
}

}  // namespace chevpres
