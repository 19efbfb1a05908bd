#pragma once

#include <unordered_set>
#include <vector>

#include "chevpres/matrix_model.hpp"

namespace chevpres {

struct GroupEnumeration {
  std::vector<MatrixGF> elements;  // BFS order, identity first
  std::vector<MatrixGF> generators;
  long long order() const { return static_cast<long long>(elements.size()); }
  bool contains(const MatrixGF& m) const { return seen.count(m) != 0; }
  std::unordered_set<MatrixGF, MatrixHash> seen;
};

/// Breadth-first closure of the generated matrix group under left
/// multiplication by the generators.  Throws when the order would exceed cap.
GroupEnumeration closure(const FiniteField& F,
                         const std::vector<MatrixGF>& generators,
                         long long cap);

/// log_p of [G : Phi(G)] where Phi(G) = [G,G] G^p is computed inside the
/// enumerated group as the normal closure of the generator commutators and
/// generator p-th powers.  Requires |G| to be a power of p.
int frattini_generator_count(const FiniteField& F, const GroupEnumeration& G,
                             int p);

}  // namespace chevpres
