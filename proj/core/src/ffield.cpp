#include "chevpres/ffield.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevpres {
namespace {

// Dense polynomials over F_p, lowest power first, no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  trim(h);
  return h;
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  while (f.size() >= g.size()) {
    int lead = f.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      int& c = f[shift + i];
      c = ((c - lead * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

bool poly_is_zero(const Poly& f) { return f.empty(); }

// Trial division by all monic polynomials of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long m = 0; m < count; ++m) {
      Poly g(d + 1, 0);
      long long t = m;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

Poly least_irreducible(int p, int a) {
  long long count = 1;
  for (int i = 0; i < a; ++i) count *= p;
  for (long long m = 0; m < count; ++m) {
    Poly f(a + 1, 0);
    long long t = m;
    for (int i = 0; i < a; ++i) {
      f[i] = static_cast<int>(t % p);
      t /= p;
    }
    f[a] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> factor_prime_power(long long q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  long long p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) {
      p = q;
      break;
    }
  }
  int a = 0;
  long long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++a;
  }
  if (rest != 1)
    throw std::invalid_argument("q = " + std::to_string(q) +
                                " is not a prime power");
  return {static_cast<int>(p), a};
}

FiniteField::FiniteField(int p, int a) : p_(p), a_(a) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (a < 1) throw std::invalid_argument("a must be at least 1");
  long long q = 1;
  for (int i = 0; i < a; ++i) {
    q *= p;
    if (q > 4096) throw std::invalid_argument("field too large");
  }
  q_ = static_cast<int>(q);

  modulus_ = least_irreducible(p, a);

  // index <-> coefficient vector: base-p digits, lowest power first
  auto coeffs_of = [&](int v) {
    Poly f;
    f.reserve(a_);
    for (int i = 0; i < a_; ++i) {
      f.push_back(v % p_);
      v /= p_;
    }
    trim(f);
    return f;
  };
  auto index_of = [&](const Poly& f) {
    int v = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) v = v * p_ + f[i];
    return static_cast<std::uint16_t>(v);
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int x = 0; x < q_; ++x) {
    Poly fx = coeffs_of(x);
    Poly nx = fx;
    for (int& c : nx) c = (p_ - c) % p_;
    trim(nx);
    neg_[x] = index_of(nx);
    for (int y = 0; y < q_; ++y) {
      Poly fy = coeffs_of(y);
      Poly s(std::max(fx.size(), fy.size()), 0);
      for (std::size_t i = 0; i < fx.size(); ++i) s[i] = fx[i];
      for (std::size_t i = 0; i < fy.size(); ++i) s[i] = (s[i] + fy[i]) % p_;
      trim(s);
      add_[static_cast<std::size_t>(x) * q_ + y] = index_of(s);
      mul_[static_cast<std::size_t>(x) * q_ + y] =
          index_of(poly_mod(poly_mul(fx, fy, p_), modulus_, p_));
    }
  }
  for (int x = 1; x < q_; ++x)
    for (int y = 1; y < q_; ++y)
      if (mul_[static_cast<std::size_t>(x) * q_ + y] == 1) inv_[x] = y;
}

FFElement FiniteField::basis(int k) const {
  if (k < 1 || k > a_) throw std::out_of_range("basis index");
  int v = 1;
  for (int i = 1; i < k; ++i) v *= p_;
  return {static_cast<std::uint16_t>(v)};
}

FFElement FiniteField::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return {static_cast<std::uint16_t>(r)};
}

FFElement FiniteField::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > a_)
    throw std::invalid_argument("too many coordinates");
  int v = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    int c = ((coeffs[i] % p_) + p_) % p_;
    v = v * p_ + c;
  }
  return {static_cast<std::uint16_t>(v)};
}

FFElement FiniteField::inv(FFElement x) const {
  if (x.v == 0) throw std::domain_error("inversion of zero");
  return {inv_[x.v]};
}

FFElement FiniteField::pow(FFElement x, long long e) const {
  if (e < 0) return pow(inv(x), -e);
  FFElement r = one();
  FFElement b = x;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FFElement FiniteField::half() const {
  if (p_ == 2) throw std::domain_error("1/2 does not exist in characteristic 2");
  return inv(from_int(2));
}

std::vector<int> FiniteField::express_in_basis(FFElement u) const {
  std::vector<int> out(a_);
  int v = u.v;
  for (int i = 0; i < a_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

std::string FiniteField::describe() const {
  std::string s = "F_" + std::to_string(q_) + " = F_" + std::to_string(p_) +
                  "[x]/(";
  bool first = true;
  for (int i = a_; i >= 0; --i) {
    if (modulus_[i] == 0) continue;
    if (!first) s += "+";
    first = false;
    if (i == 0 || modulus_[i] != 1) s += std::to_string(modulus_[i]);
    if (i >= 1) s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  s += ")";
  return s;
}

CoefficientTables::CoefficientTables(const FiniteField& F)
    : p_(F.p()), a_(F.a()), has_m_(F.p() != 2) {
  const int a = a_;
  c_.resize(static_cast<std::size_t>(a) * a * a);
  d_.resize(c_.size());
  f_.resize(c_.size());
  r_.resize(static_cast<std::size_t>(a) * a);
  if (has_m_) m_.resize(static_cast<std::size_t>(a) * a);

  for (int i = 1; i <= a; ++i) {
    FFElement vi = F.basis(i);
    std::vector<int> neg_sq = F.express_in_basis(F.neg(F.square(vi)));
    for (int k = 1; k <= a; ++k) r_[sq(k, i)] = neg_sq[k - 1];
    if (has_m_) {
      std::vector<int> h = F.express_in_basis(F.mul(F.half(), vi));
      for (int j = 1; j <= a; ++j) m_[sq(j, i)] = h[j - 1];
    }
    for (int j = 1; j <= a; ++j) {
      FFElement vj = F.basis(j);
      std::vector<int> prod = F.express_in_basis(F.mul(vi, vj));
      std::vector<int> prod2 = F.express_in_basis(F.mul(vi, F.square(vj)));
      for (int k = 1; k <= a; ++k) {
        c_[cube(i, j, k)] = prod[k - 1];
        d_[cube(i, j, k)] = prod[k - 1];
        f_[cube(i, j, k)] = prod2[k - 1];
      }
    }
  }
}

int CoefficientTables::m(int j, int i) const {
  if (!has_m_) throw std::domain_error("m table requires p odd");
  return m_[sq(j, i)];
}

CoefficientTables build_coefficient_tables(const FiniteField& F) {
  return CoefficientTables(F);
}

}  // namespace chevpres
