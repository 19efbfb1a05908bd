#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace chevpres {

/// Element of F_{p^a}, stored as an index in [0, q).  The base-p digits of
/// the index are the coordinates of the element in the power basis
/// 1, x, ..., x^{a-1} of F_p[x]/(modulus), lowest power first.
struct FFElement {
  std::uint16_t v = 0;
  friend constexpr bool operator==(FFElement, FFElement) = default;
  friend constexpr auto operator<=>(FFElement, FFElement) = default;
};

/// F_q = F_{p^a} with the distinguished generating basis v_1 = 1, v_2 = x,
/// ..., v_a = x^{a-1}.  The modulus is the lexicographically least monic
/// irreducible polynomial of degree a over F_p, where candidates are ordered
/// by their coefficient vector (c_0, ..., c_{a-1}) read as a base-p integer.
/// All element operations go through q x q lookup tables.
class FiniteField {
 public:
  FiniteField(int p, int a);

  int p() const { return p_; }
  int a() const { return a_; }
  int q() const { return q_; }

  /// Modulus coefficients, lowest power first, length a+1, leading 1.
  const std::vector<int>& modulus() const { return modulus_; }

  FFElement zero() const { return {0}; }
  FFElement one() const { return {1}; }
  /// v_k for 1 <= k <= a (v_1 = 1).
  FFElement basis(int k) const;
  /// Image of an integer in the prime subfield.
  FFElement from_int(long long n) const;
  /// Element with the given power-basis coordinates (length a, values any ints).
  FFElement from_coeffs(std::span<const int> coeffs) const;

  FFElement add(FFElement x, FFElement y) const { return {add_[idx(x, y)]}; }
  FFElement sub(FFElement x, FFElement y) const { return add(x, neg(y)); }
  FFElement mul(FFElement x, FFElement y) const { return {mul_[idx(x, y)]}; }
  FFElement neg(FFElement x) const { return {neg_[x.v]}; }
  FFElement inv(FFElement x) const;  // throws on zero
  FFElement pow(FFElement x, long long e) const;
  FFElement square(FFElement x) const { return mul(x, x); }
  /// The element 1/2; requires p odd.
  FFElement half() const;

  /// Coordinates of u in the basis (v_1, ..., v_a), lifted to {0, ..., p-1}.
  std::vector<int> express_in_basis(FFElement u) const;

  std::string describe() const;  // e.g. "F_9 = F_3[x]/(x^2+1)"

  friend bool operator==(const FiniteField& lhs, const FiniteField& rhs) {
    return lhs.p_ == rhs.p_ && lhs.a_ == rhs.a_;
  }

 private:
  std::size_t idx(FFElement x, FFElement y) const {
    return static_cast<std::size_t>(x.v) * q_ + y.v;
  }

  int p_, a_, q_;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint16_t> neg_, inv_;
};

/// Integer coefficient tables appearing in the relator families, all entries
/// lifted to {0, ..., p-1}:
///   c(k,k',r):  sum_r c(k,k',r) v_r = v_k v_k'
///   m(j,i):     sum_j m(j,i) v_j = (1/2) v_i          (p odd only)
///   r_neg(k,i): sum_k r_neg(k,i) v_k = -v_i^2
///   d(i,j,k):   sum_k d(i,j,k) v_k = v_i v_j
///   f(i,j,k):   sum_k f(i,j,k) v_k = v_i v_j^2
/// The sign convention in c is calibrated so that relator (A4) evaluates to
/// the identity in the SL3 matrix model; see the verify module tests.
class CoefficientTables {
 public:
  explicit CoefficientTables(const FiniteField& F);

  int a() const { return a_; }
  int p() const { return p_; }
  bool has_m() const { return has_m_; }

  int c(int k, int k2, int r) const { return c_[cube(k, k2, r)]; }
  int m(int j, int i) const;  // throws if p = 2
  int r_neg(int k, int i) const { return r_[sq(k, i)]; }
  int d(int i, int j, int k) const { return d_[cube(i, j, k)]; }
  int f(int i, int j, int k) const { return f_[cube(i, j, k)]; }

 private:
  std::size_t sq(int x, int y) const {
    return static_cast<std::size_t>(x - 1) * a_ + (y - 1);
  }
  std::size_t cube(int x, int y, int z) const {
    return (static_cast<std::size_t>(x - 1) * a_ + (y - 1)) * a_ + (z - 1);
  }

  int p_, a_;
  bool has_m_;
  std::vector<int> c_, m_, r_, d_, f_;
};

CoefficientTables build_coefficient_tables(const FiniteField& F);

bool is_prime(long long n);
/// Factors q as p^a; throws if q is not a prime power.
std::pair<int, int> factor_prime_power(long long q);

}  // namespace chevpres
