#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "chevpres/ffield.hpp"

using namespace chevpres;

namespace {

// Independent polynomial oracle: reduce f*g mod m over F_p by schoolbook
// arithmetic, no shared code with the library.
std::vector<int> oracle_mulmod(std::vector<int> f, std::vector<int> g,
                               const std::vector<int>& m, int p) {
  std::vector<int> h(f.size() + g.size(), 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  int deg_m = static_cast<int>(m.size()) - 1;
  for (int d = static_cast<int>(h.size()) - 1; d >= deg_m; --d) {
    int lead = h[d];
    if (lead == 0) continue;
    for (int i = 0; i <= deg_m; ++i)
      h[d - deg_m + i] = ((h[d - deg_m + i] - lead * m[i]) % p + p) % p;
  }
  h.resize(deg_m);
  return h;
}

bool oracle_irreducible(const std::vector<int>& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  // divisibility by every monic divisor of degree <= deg/2
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long mask = 0; mask < count; ++mask) {
      std::vector<int> g(d + 1, 0);
      long long t = mask;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      g[d] = 1;
      std::vector<int> r = f;
      for (int k = static_cast<int>(r.size()) - 1; k >= d; --k) {
        int lead = r[k];
        if (lead == 0) continue;
        for (int i = 0; i <= d; ++i)
          r[k - d + i] = ((r[k - d + i] - lead * g[i]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::vector<int> oracle_least_modulus(int p, int a) {
  long long count = 1;
  for (int i = 0; i < a; ++i) count *= p;
  for (long long mask = 0; mask < count; ++mask) {
    std::vector<int> f(a + 1, 0);
    long long t = mask;
    for (int i = 0; i < a; ++i) {
      f[i] = static_cast<int>(t % p);
      t /= p;
    }
    f[a] = 1;
    if (oracle_irreducible(f, p)) return f;
  }
  return {};
}

}  // namespace

TEST_CASE("modulus is the lexicographically least irreducible polynomial") {
  // frozen values from the trial-division oracle
  CHECK(FiniteField(2, 2).modulus() == std::vector<int>{1, 1, 1});   // x^2+x+1
  CHECK(FiniteField(3, 1).modulus() == std::vector<int>{0, 1});      // x
  CHECK(FiniteField(5, 2).modulus() == std::vector<int>{2, 0, 1});   // x^2+2
  CHECK(FiniteField(3, 2).modulus() == std::vector<int>{1, 0, 1});   // x^2+1
  CHECK(FiniteField(3, 3).modulus() == std::vector<int>{1, 2, 0, 1});
  CHECK(FiniteField(2, 4).modulus() == std::vector<int>{1, 1, 0, 0, 1});

  for (auto [p, a] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3},
                      {5, 2}, {7, 1}, {17, 1}}) {
    CAPTURE(p);
    CAPTURE(a);
    FiniteField F(p, a);
    CHECK(F.modulus() == oracle_least_modulus(p, a));
    CHECK(oracle_irreducible(F.modulus(), p));
  }
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(FiniteField(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(2, 0), std::invalid_argument);
}

TEST_CASE("F4 arithmetic: x*x = x+1") {
  FiniteField F(2, 2);
  FFElement x = F.basis(2);
  FFElement sq = F.mul(x, x);
  CHECK(F.express_in_basis(sq) == std::vector<int>{1, 1});
}

TEST_CASE("field ops agree with the polynomial oracle") {
  for (auto [p, a] : {std::pair{2, 2}, {3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
    FiniteField F(p, a);
    for (int x = 0; x < F.q(); ++x)
      for (int y = 0; y < F.q(); ++y) {
        FFElement ex{static_cast<uint16_t>(x)}, ey{static_cast<uint16_t>(y)};
        std::vector<int> fx = F.express_in_basis(ex);
        std::vector<int> fy = F.express_in_basis(ey);
        std::vector<int> prod = oracle_mulmod(fx, fy, F.modulus(), p);
        CHECK(F.mul(ex, ey) == F.from_coeffs(prod));
      }
  }
}

TEST_CASE("field axioms and inverses") {
  FiniteField F(3, 2);
  for (int x = 0; x < F.q(); ++x) {
    FFElement e{static_cast<uint16_t>(x)};
    CHECK(F.add(e, F.zero()) == e);
    CHECK(F.mul(e, F.one()) == e);
    CHECK(F.add(e, F.neg(e)) == F.zero());
    if (x != 0) CHECK(F.mul(e, F.inv(e)) == F.one());
  }
  CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);
}

TEST_CASE("one half") {
  FiniteField F3(3, 1);
  CHECK(F3.half() == F3.from_int(2));  // 2*2 = 4 = 1 mod 3
  FiniteField F9(3, 2);
  CHECK(F9.mul(F9.half(), F9.from_int(2)) == F9.one());
  CHECK_THROWS_AS(FiniteField(2, 2).half(), std::domain_error);
}

TEST_CASE("express_in_basis round trip") {
  FiniteField F(3, 3);
  CHECK(F.express_in_basis(F.basis(2)) == std::vector<int>{0, 1, 0});
  CHECK(F.express_in_basis(F.zero()) == std::vector<int>{0, 0, 0});
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> coeffs(F.a());
    for (int& c : coeffs) c = static_cast<int>(rng() % F.p());
    CHECK(F.express_in_basis(F.from_coeffs(coeffs)) == coeffs);
  }
}

TEST_CASE("Frobenius: (u+w)^p = u^p + w^p") {
  for (auto [p, a] : {std::pair{3, 2}, {2, 4}, {5, 2}}) {
    FiniteField F(p, a);
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
      FFElement u{static_cast<uint16_t>(rng() % F.q())};
      FFElement w{static_cast<uint16_t>(rng() % F.q())};
      CHECK(F.pow(F.add(u, w), p) == F.add(F.pow(u, p), F.pow(w, p)));
    }
  }
}

TEST_CASE("coefficient tables satisfy their defining identities") {
  for (auto [p, a] : {std::pair{3, 2}, {5, 2}, {3, 3}, {2, 4}, {17, 1}}) {
    FiniteField F(p, a);
    CoefficientTables T = build_coefficient_tables(F);
    for (int i = 1; i <= a; ++i) {
      FFElement vi = F.basis(i);
      // sum_k r_neg(k,i) v_k = -v_i^2
      FFElement acc = F.zero();
      for (int k = 1; k <= a; ++k)
        acc = F.add(acc, F.mul(F.from_int(T.r_neg(k, i)), F.basis(k)));
      CHECK(acc == F.neg(F.square(vi)));
      if (p != 2) {
        // sum_j m(j,i) v_j = (1/2) v_i
        acc = F.zero();
        for (int j = 1; j <= a; ++j)
          acc = F.add(acc, F.mul(F.from_int(T.m(j, i)), F.basis(j)));
        CHECK(acc == F.mul(F.half(), vi));
      }
      for (int j = 1; j <= a; ++j) {
        FFElement vj = F.basis(j);
        FFElement c_sum = F.zero(), d_sum = F.zero(), f_sum = F.zero();
        for (int k = 1; k <= a; ++k) {
          c_sum = F.add(c_sum, F.mul(F.from_int(T.c(i, j, k)), F.basis(k)));
          d_sum = F.add(d_sum, F.mul(F.from_int(T.d(i, j, k)), F.basis(k)));
          f_sum = F.add(f_sum, F.mul(F.from_int(T.f(i, j, k)), F.basis(k)));
        }
        CHECK(c_sum == F.mul(vi, vj));
        CHECK(d_sum == F.mul(vi, vj));
        CHECK(f_sum == F.mul(vi, F.square(vj)));
      }
    }
  }
}

TEST_CASE("m table is rejected for p = 2") {
  FiniteField F(2, 2);
  CoefficientTables T = build_coefficient_tables(F);
  CHECK_FALSE(T.has_m());
  CHECK_THROWS_AS(T.m(1, 1), std::domain_error);
  CHECK(build_coefficient_tables(FiniteField(3, 1)).m(1, 1) == 2);
}

TEST_CASE("prime power factorization") {
  CHECK(factor_prime_power(16) == std::pair{2, 4});
  CHECK(factor_prime_power(27) == std::pair{3, 3});
  CHECK(factor_prime_power(17) == std::pair{17, 1});
  CHECK_THROWS_AS(factor_prime_power(12), std::invalid_argument);
  CHECK_THROWS_AS(factor_prime_power(1), std::invalid_argument);
}
