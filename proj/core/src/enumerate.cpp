#include "chevpres/enumerate.hpp"

#include <stdexcept>

namespace chevpres {

GroupEnumeration closure(const FiniteField& F,
                         const std::vector<MatrixGF>& generators,
                         long long cap) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const int n = generators.front().n;
  for (const MatrixGF& g : generators)
    if (g.n != n) throw std::invalid_argument("generator dimension mismatch");

  GroupEnumeration out;
  out.generators = generators;
  MatrixGF id = mat_identity(n);
  out.elements.push_back(id);
  out.seen.insert(id);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    MatrixGF cur = out.elements[head];
    for (const MatrixGF& g : generators) {
      MatrixGF next = mat_mul(F, g, cur);
      if (out.seen.insert(next).second) {
        if (static_cast<long long>(out.elements.size()) >= cap)
          throw std::runtime_error("closure cap exceeded");
        out.elements.push_back(next);
      }
    }
  }
  return out;
}

namespace {

// subgroup generated by `gens` inside the ambient enumeration
GroupEnumeration subgroup_closure(const FiniteField& F,
                                  const std::vector<MatrixGF>& gens, int n,
                                  long long cap) {
  GroupEnumeration out;
  MatrixGF id = mat_identity(n);
  out.elements.push_back(id);
  out.seen.insert(id);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    MatrixGF cur = out.elements[head];
    for (const MatrixGF& g : gens) {
      MatrixGF next = mat_mul(F, g, cur);
      if (out.seen.insert(next).second) {
        if (static_cast<long long>(out.elements.size()) >= cap)
          throw std::runtime_error("subgroup closure cap exceeded");
        out.elements.push_back(next);
      }
    }
  }
  return out;
}

}  // namespace

int frattini_generator_count(const FiniteField& F, const GroupEnumeration& G,
                             int p) {
  long long order = G.order();
  int log_order = 0;
  {
    long long t = order;
    while (t % p == 0) {
      t /= p;
      ++log_order;
    }
    if (t != 1)
      throw std::invalid_argument("group order is not a power of p");
  }

  const int n = G.elements.front().n;
  // seeds: generator commutators and generator p-th powers
  std::vector<MatrixGF> seeds;
  for (std::size_t i = 0; i < G.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < G.generators.size(); ++j)
      seeds.push_back(mat_commutator(F, G.generators[i], G.generators[j]));
    seeds.push_back(mat_pow(F, G.generators[i], p));
  }

  // normal closure: alternate subgroup closure and conjugation by generators
  std::vector<MatrixGF> gens_m;
  std::unordered_set<MatrixGF, MatrixHash> gen_set;
  for (const MatrixGF& s : seeds)
    if (!mat_is_identity(s) && gen_set.insert(s).second) gens_m.push_back(s);

  GroupEnumeration M;
  while (true) {
    if (gens_m.empty()) {
      M.elements = {mat_identity(n)};
      M.seen.insert(M.elements.front());
      break;
    }
    M = subgroup_closure(F, gens_m, n, order + 1);
    bool grew = false;
    for (const MatrixGF& g : G.generators) {
      MatrixGF ginv = mat_inverse(F, g);
      for (const MatrixGF& m : M.elements) {
        MatrixGF c = mat_mul(F, mat_mul(F, g, m), ginv);
        if (!M.seen.count(c) && gen_set.insert(c).second) {
          gens_m.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) break;
  }

  long long phi_order = M.order();
  if (order % phi_order != 0)
    throw std::logic_error("Frattini subgroup order does not divide |G|");
  long long quotient = order / phi_order;
  int d = 0;
  while (quotient % p == 0) {
    quotient /= p;
    ++d;
  }
  if (quotient != 1)
    throw std::logic_error("Frattini quotient is not a p-power");
  return d;
}

}  // namespace chevpres
