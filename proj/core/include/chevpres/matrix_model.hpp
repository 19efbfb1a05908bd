#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "chevpres/ffield.hpp"
#include "chevpres/presentation.hpp"
#include "chevpres/rootsys.hpp"
#include "chevpres/word.hpp"

namespace chevpres {

/// Square matrix over F_q, n <= 4, row-major.
struct MatrixGF {
  int n = 0;
  std::array<FFElement, 16> e{};

  FFElement& at(int r, int c) { return e[r * n + c]; }
  FFElement at(int r, int c) const { return e[r * n + c]; }

  friend bool operator==(const MatrixGF&, const MatrixGF&) = default;
};

struct MatrixHash {
  std::size_t operator()(const MatrixGF& m) const {
    std::size_t h = static_cast<std::size_t>(m.n);
    for (int i = 0; i < m.n * m.n; ++i)
      h = h * 1099511628211ull + m.e[i].v;  // FNV-style over row-major entries
    return h;
  }
};

MatrixGF mat_identity(int n);
MatrixGF mat_mul(const FiniteField& F, const MatrixGF& x, const MatrixGF& y);
MatrixGF mat_inverse(const FiniteField& F, const MatrixGF& x);
MatrixGF mat_pow(const FiniteField& F, const MatrixGF& x, long long e);
MatrixGF mat_commutator(const FiniteField& F, const MatrixGF& x,
                        const MatrixGF& y);
MatrixGF mat_conjugate(const FiniteField& F, const MatrixGF& x,
                       const MatrixGF& y);  // y x y^-1
bool mat_is_identity(const MatrixGF& m);

enum class ModelKind : std::uint8_t { A1xA1, A2, C2 };
enum class Root : std::uint8_t { alpha, beta, alpha_beta, two_alpha_beta };

/// Explicit matrix realization of a rank-2 unipotent group:
///   A2    3x3 upper unitriangular,   x_a(u) = I + u E12, x_b(u) = I + u E23
///   C2    4x4 Sp4 with the antidiagonal form diag-reading (+1,+1,-1,-1),
///         x_a(u) = I + u(E12 - E34), x_b(u) = I + u E23,
///         x_{a+b}(u) = I - u(E13 + E24), x_{2a+b}(u) = I - u E14
///   A1xA1 two 2x2 unitriangular blocks
/// With these parametrizations [x_b(t), x_a(s)] = x_{a+b}(st) x_{2a+b}(s^2 t)
/// in the C2 model, matching the relator families' sign convention.
class MatrixModel {
 public:
  MatrixModel(ModelKind kind, std::shared_ptr<const FiniteField> F);

  ModelKind kind() const { return kind_; }
  const FiniteField& field() const { return *F_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return F_; }
  int dim() const { return dim_; }

  bool has_root(Root r) const;
  MatrixGF root_element(Root r, FFElement u) const;

  /// Images of x_alpha(v_k), x_beta(v_k) for k = 1..a — the generators of
  /// the model group.
  std::vector<MatrixGF> generator_matrices() const;

  /// The fixed symplectic form (C2 only).
  MatrixGF symplectic_form() const;

 private:
  ModelKind kind_;
  std::shared_ptr<const FiniteField> F_;
  int dim_;
};

MatrixModel build_model(ModelKind kind, std::shared_ptr<const FiniteField> F);
ModelKind model_kind_for(Rank2Type t);

/// Generator index -> model root and basis index.
struct RoleMap {
  std::vector<std::pair<Root, int>> roles;  // one per generator
};

/// Role map for the rank-2 families: node 0 -> alpha, node 1 -> beta.
RoleMap standard_role_map(const Presentation& pres);

/// Left-to-right product of root-element matrices with integer exponents.
MatrixGF eval_word(const MatrixModel& model, const RoleMap& roles,
                   const Word& w);

}  // namespace chevpres
