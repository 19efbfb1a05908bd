#include "chevpres/matrix_model.hpp"

#include <stdexcept>

namespace chevpres {

MatrixGF mat_identity(int n) {
  MatrixGF m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = {1};
  return m;
}

MatrixGF mat_mul(const FiniteField& F, const MatrixGF& x, const MatrixGF& y) {
  MatrixGF z;
  z.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      FFElement s = F.zero();
      for (int k = 0; k < x.n; ++k)
        s = F.add(s, F.mul(x.at(i, k), y.at(k, j)));
      z.at(i, j) = s;
    }
  return z;
}

MatrixGF mat_inverse(const FiniteField& F, const MatrixGF& x) {
  const int n = x.n;
  MatrixGF a = x;
  MatrixGF inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != F.zero()) {
        pivot = r;
        break;
      }
    if (pivot == -1) throw std::domain_error("singular matrix");
    for (int c = 0; c < n; ++c) {
      std::swap(a.e[pivot * n + c], a.e[col * n + c]);
      std::swap(inv.e[pivot * n + c], inv.e[col * n + c]);
    }
    FFElement piv_inv = F.inv(a.at(col, col));
    for (int c = 0; c < n; ++c) {
      a.at(col, c) = F.mul(a.at(col, c), piv_inv);
      inv.at(col, c) = F.mul(inv.at(col, c), piv_inv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == F.zero()) continue;
      FFElement factor = a.at(r, col);
      for (int c = 0; c < n; ++c) {
        a.at(r, c) = F.sub(a.at(r, c), F.mul(factor, a.at(col, c)));
        inv.at(r, c) = F.sub(inv.at(r, c), F.mul(factor, inv.at(col, c)));
      }
    }
  }
  return inv;
}

MatrixGF mat_pow(const FiniteField& F, const MatrixGF& x, long long e) {
  if (e < 0) return mat_pow(F, mat_inverse(F, x), -e);
  MatrixGF r = mat_identity(x.n);
  MatrixGF b = x;
  while (e > 0) {
    if (e & 1) r = mat_mul(F, r, b);
    b = mat_mul(F, b, b);
    e >>= 1;
  }
  return r;
}

MatrixGF mat_commutator(const FiniteField& F, const MatrixGF& x,
                        const MatrixGF& y) {
  return mat_mul(F, mat_mul(F, x, y),
                 mat_mul(F, mat_inverse(F, x), mat_inverse(F, y)));
}

MatrixGF mat_conjugate(const FiniteField& F, const MatrixGF& x,
                       const MatrixGF& y) {
  return mat_mul(F, mat_mul(F, y, x), mat_inverse(F, y));
}

bool mat_is_identity(const MatrixGF& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j).v != (i == j ? 1 : 0)) return false;
  return true;
}

MatrixModel::MatrixModel(ModelKind kind, std::shared_ptr<const FiniteField> F)
    : kind_(kind), F_(std::move(F)) {
  dim_ = kind_ == ModelKind::A2 ? 3 : 4;
}

bool MatrixModel::has_root(Root r) const {
  switch (kind_) {
    case ModelKind::A1xA1: return r == Root::alpha || r == Root::beta;
    case ModelKind::A2: return r != Root::two_alpha_beta;
    case ModelKind::C2: return true;
  }
  return false;
}

MatrixGF MatrixModel::root_element(Root r, FFElement u) const {
  const FiniteField& F = *F_;
  MatrixGF m = mat_identity(dim_);
  switch (kind_) {
    case ModelKind::A1xA1:
      if (r == Root::alpha) m.at(0, 1) = u;
      else if (r == Root::beta) m.at(2, 3) = u;
      else throw std::invalid_argument("A1xA1 model has roots alpha, beta only");
      return m;
    case ModelKind::A2:
      switch (r) {
        case Root::alpha: m.at(0, 1) = u; return m;
        case Root::beta: m.at(1, 2) = u; return m;
        case Root::alpha_beta: m.at(0, 2) = u; return m;
        case Root::two_alpha_beta:
          throw std::invalid_argument("A2 model has no root 2a+b");
      }
      break;
    case ModelKind::C2:
      switch (r) {
        case Root::alpha:
          m.at(0, 1) = u;
          m.at(2, 3) = F.neg(u);
          return m;
        case Root::beta: m.at(1, 2) = u; return m;
        case Root::alpha_beta:
          m.at(0, 2) = F.neg(u);
          m.at(1, 3) = F.neg(u);
          return m;
        case Root::two_alpha_beta: m.at(0, 3) = F.neg(u); return m;
      }
      break;
  }
  throw std::logic_error("bad model/root");
}

std::vector<MatrixGF> MatrixModel::generator_matrices() const {
  std::vector<MatrixGF> out;
  for (Root r : {Root::alpha, Root::beta})
    for (int k = 1; k <= F_->a(); ++k)
      out.push_back(root_element(r, F_->basis(k)));
  return out;
}

MatrixGF MatrixModel::symplectic_form() const {
  if (kind_ != ModelKind::C2)
    throw std::logic_error("symplectic form only fixed for the C2 model");
  MatrixGF J;
  J.n = 4;
  J.at(0, 3) = {1};
  J.at(1, 2) = {1};
  J.at(2, 1) = F_->neg({1});
  J.at(3, 0) = F_->neg({1});
  return J;
}

MatrixModel build_model(ModelKind kind, std::shared_ptr<const FiniteField> F) {
  return MatrixModel(kind, std::move(F));
}

ModelKind model_kind_for(Rank2Type t) {
  switch (t) {
    case Rank2Type::A1xA1: return ModelKind::A1xA1;
    case Rank2Type::A2: return ModelKind::A2;
    case Rank2Type::C2: return ModelKind::C2;
    case Rank2Type::G2: break;
  }
  throw std::invalid_argument("no matrix model for G2 pairs");
}

RoleMap standard_role_map(const Presentation& pres) {
  RoleMap map;
  map.roles.reserve(pres.generators.size());
  for (const GeneratorSymbol& g : pres.generators) {
    if (g.node == 0) map.roles.emplace_back(Root::alpha, g.k);
    else if (g.node == 1) map.roles.emplace_back(Root::beta, g.k);
    else
      throw std::invalid_argument(
          "standard_role_map needs a rank-2 family presentation");
  }
  return map;
}

MatrixGF eval_word(const MatrixModel& model, const RoleMap& roles,
                   const Word& w) {
  const FiniteField& F = model.field();
  MatrixGF acc = mat_identity(model.dim());
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= roles.roles.size())
      throw std::invalid_argument("word letter outside role map");
    auto [root, k] = roles.roles[l.gen];
    MatrixGF g = model.root_element(root, F.basis(k));
    acc = mat_mul(F, acc, mat_pow(F, g, l.exp));
  }
  return acc;
}

}  // namespace chevpres
