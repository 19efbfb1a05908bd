#include "chevpres/presentation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chevpres {

std::string to_string(Family f) {
  switch (f) {
    case Family::abelian_rootgroup: return "abelian-rootgroup";
    case Family::sl3_sylow: return "sl3-sylow";
    case Family::sp4_sylow: return "sp4-sylow";
    case Family::sp4_sylow_even: return "sp4-sylow-even";
    case Family::affine_uplus: return "affine-uplus";
    case Family::hall_glue: return "hall-glue";
    case Family::custom: return "custom";
  }
  throw std::logic_error("bad family");
}

Family family_from_string(const std::string& s) {
  if (s == "abelian-rootgroup") return Family::abelian_rootgroup;
  if (s == "sl3-sylow") return Family::sl3_sylow;
  if (s == "sp4-sylow") return Family::sp4_sylow;
  if (s == "sp4-sylow-even") return Family::sp4_sylow_even;
  if (s == "affine-uplus") return Family::affine_uplus;
  if (s == "hall-glue") return Family::hall_glue;
  if (s == "custom") return Family::custom;
  throw std::invalid_argument("unknown presentation family '" + s + "'");
}

int Presentation::find_gen(int node, int k) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].node == node && generators[i].k == k)
      return static_cast<int>(i);
  return -1;
}

long long Presentation::block_count(const std::string& name) const {
  long long n = 0;
  for (const auto& [label, count] : meta.blocks)
    if (label == name) n += count;
  return n;
}

namespace {

class PresBuilder {
 public:
  PresBuilder(Family family, const FiniteField& F) {
    pres_.meta.family = family;
    pres_.meta.field = FieldDesc::of(F);
  }

  int add_gen(int node, int k) {
    int idx = static_cast<int>(pres_.generators.size());
    pres_.generators.push_back({node, k});
    index_[{node, k}] = idx;
    return idx;
  }

  int gen(int node, int k) const {
    auto it = index_.find({node, k});
    if (it == index_.end()) throw std::logic_error("unknown generator");
    return it->second;
  }

  void begin_block(const std::string& label) {
    pres_.meta.blocks.emplace_back(label, 0);
  }

  void add_relator(Word w) {
    pres_.relators.push_back(std::move(w));
    ++pres_.meta.blocks.back().second;
  }

  Presentation take() { return std::move(pres_); }

 private:
  Presentation pres_;
  std::map<std::pair<int, int>, int> index_;
};

// x_node(v_k)^p relators and same-node commutators for one node.
void emit_node_powers(PresBuilder& b, const FiniteField& F, int node) {
  for (int k = 1; k <= F.a(); ++k)
    b.add_relator(single(b.gen(node, k), F.p()));
}

void emit_node_commutators(PresBuilder& b, const FiniteField& F, int node) {
  for (int k = 1; k <= F.a(); ++k)
    for (int k2 = k + 1; k2 <= F.a(); ++k2)
      b.add_relator(
          commutator(single(b.gen(node, k)), single(b.gen(node, k2))));
}

// Macro words for the rank-2 families over the generators x_na(v_k) ("alpha",
// the first root) and x_nb(v_k) ("beta", the second root).
struct Rank2Words {
  const FiniteField& F;
  const CoefficientTables& T;
  const PresBuilder& b;
  int na, nb;

  // prod_j x_na(v_j)^{e_j} where e = coordinates of w
  Word A(FFElement w) const { return span_word(na, w); }
  Word B(FFElement w) const { return span_word(nb, w); }

  Word span_word(int node, FFElement w) const {
    Word out;
    std::vector<int> e = F.express_in_basis(w);
    for (int j = 1; j <= F.a(); ++j)
      if (e[j - 1] != 0) out.append(b.gen(node, j), e[j - 1]);
    return out;
  }

  // ---- words of the odd Sp4 family (require p odd) ----

  // x_{alpha+beta}(v_i) = [x_b(v_1), x_a(v_i)] prod_k T_k^{r_neg(k,i)}
  Word w_ab(int i) const {
    Word out = commutator(B(F.one()), A(F.basis(i)));
    for (int k = 1; k <= F.a(); ++k)
      out.append(t_k(k).pow(T.r_neg(k, i)));
    return out;
  }

  // [x_a((1/2) v_k), [x_b(v_1), x_a(v_1)]]
  Word t_k(int k) const {
    return commutator(A(F.mul(F.half(), F.basis(k))),
                      commutator(B(F.one()), A(F.one())));
  }

  // prod_k x_{alpha+beta}(v_k)^{e_k}, e = coordinates of w
  Word w_ab_lin(FFElement w) const {
    Word out;
    std::vector<int> e = F.express_in_basis(w);
    for (int k = 1; k <= F.a(); ++k)
      if (e[k - 1] != 0) out.append(w_ab(k).pow(e[k - 1]));
    return out;
  }

  // x_{2alpha+beta}(w) = [x_a((1/2) w), x_{alpha+beta}(v_1)]
  Word w_2ab(FFElement w) const {
    return commutator(A(F.mul(F.half(), w)), w_ab(1));
  }

  Word w_2ab_lin(FFElement w) const {
    Word out;
    std::vector<int> e = F.express_in_basis(w);
    for (int k = 1; k <= F.a(); ++k)
      if (e[k - 1] != 0) out.append(w_2ab(F.basis(k)).pow(e[k - 1]));
    return out;
  }
};

// Relations (A3) and (A4) of the SL3-Sylow presentation for the node pair
// (n1, n2) = (s_1, s_2); the (A1)/(A2) blocks are the per-node relators.
void emit_a2_pair(PresBuilder& b, const FiniteField& F,
                  const CoefficientTables& T, int n1, int n2,
                  const std::string& label_a3, const std::string& label_a4) {
  const int a = F.a();
  Rank2Words W{F, T, b, n1, n2};

  b.begin_block(label_a3);
  for (int k = 1; k <= a; ++k) {
    Word inner = commutator(W.A(F.basis(k)), W.B(F.one()));
    b.add_relator(commutator(W.A(F.one()), inner));
    b.add_relator(commutator(W.B(F.one()), inner));
  }

  b.begin_block(label_a4);
  for (int k = 1; k <= a; ++k)
    for (int k2 = 2; k2 <= a; ++k2) {
      Word w = commutator(single(b.gen(n1, k), -1), single(b.gen(n2, k2), -1));
      Word rhs;
      for (int r = 1; r <= a; ++r)
        rhs.append(commutator(W.A(F.basis(r)), W.B(F.one())).pow(T.c(k, k2, r)));
      w.append_inverse(rhs);
      b.add_relator(w);
    }
}

void emit_wab_powers(PresBuilder& b, const FiniteField& F,
                     const CoefficientTables& T, int na, int nb) {
  Rank2Words W{F, T, b, na, nb};
  for (int k = 1; k <= F.a(); ++k) b.add_relator(W.w_ab(k).pow(F.p()));
}

// Relations (C4)-(C11) for the C2 pair with short root node `na` and long
// root node `nb`; p odd.  The absorbed (C1) p-powers of x_{alpha+beta} are
// emitted separately.
void emit_c2_core(PresBuilder& b, const FiniteField& F,
                  const CoefficientTables& T, int na, int nb,
                  const std::string& prefix) {
  const int a = F.a();
  Rank2Words W{F, T, b, na, nb};

  std::vector<Word> wab(a + 1);
  for (int i = 1; i <= a; ++i) wab[i] = W.w_ab(i);

  b.begin_block(prefix + "C4");
  for (int k = 1; k <= a; ++k)
    for (int k2 = k + 1; k2 <= a; ++k2)
      b.add_relator(commutator(wab[k], wab[k2]));

  b.begin_block(prefix + "C5");
  for (int k = 1; k <= a; ++k) {
    Word inner = commutator(W.A(F.basis(k)), wab[1]);
    b.add_relator(commutator(W.A(F.one()), inner));
    b.add_relator(commutator(wab[1], inner));
  }

  b.begin_block(prefix + "C6");
  for (int k = 1; k <= a; ++k)
    for (int k2 = 2; k2 <= a; ++k2) {
      Word w = commutator(single(b.gen(na, k), -1), wab[k2].inverse());
      Word rhs;
      for (int r = 1; r <= a; ++r)
        rhs.append(commutator(W.A(F.basis(r)), wab[1]).pow(T.c(k, k2, r)));
      w.append_inverse(rhs);
      b.add_relator(w);
    }

  b.begin_block(prefix + "C7");
  for (int i = 1; i <= a; ++i)
    b.add_relator(commutator(wab[1], W.B(F.basis(i))));

  b.begin_block(prefix + "C8");
  for (int i = 1; i <= a; ++i)
    b.add_relator(commutator(wab[i], W.B(F.one())));

  b.begin_block(prefix + "C9");
  for (int i = 1; i <= a; ++i) {
    Word w = W.w_2ab(F.square(F.basis(i))).inverse();
    Word rhs;
    for (int k = 1; k <= a; ++k)
      rhs.append(W.w_2ab(F.basis(k)).pow(T.r_neg(k, i)));
    w.append_inverse(rhs);
    b.add_relator(w);
  }

  b.begin_block(prefix + "C10");
  for (int i = 1; i <= a; ++i) {
    Word w = commutator(W.B(F.one()), W.A(F.basis(i)));
    Word rhs = wab[i];
    rhs.append(W.w_2ab_lin(F.square(F.basis(i))));
    w.append_inverse(rhs);
    b.add_relator(w);
  }

  // (C11): with the derived symbols pinned by their defining words above
  // (which fix [x_b(t), x_a(s)] = x_{a+b}(st) x_{2a+b}(s^2 t)), the
  // conjugation relations take the form
  //   [x_a(v_j)^-1, x_b(v_i)^-1] = x_{a+b}(v_i v_j)^-1 x_{2a+b}(v_i v_j^2).
  b.begin_block(prefix + "C11");
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= a; ++j) {
      Word w = commutator(single(b.gen(na, j), -1), single(b.gen(nb, i), -1));
      Word rhs = W.w_ab_lin(F.mul(F.basis(i), F.basis(j))).inverse();
      rhs.append(W.w_2ab_lin(F.mul(F.basis(i), F.square(F.basis(j)))));
      w.append_inverse(rhs);
      b.add_relator(w);
    }
}

// Characteristic-2 C2 pair block: 8a^2 relators describing the central
// extension structure.  The derived symbols enter through the macros
//   Z(w) = [x_a(L), x_b(w/M)] [x_a(1), x_b(L w/M)],   M = L^2 + L,
//   Y(w) = [x_a(1+L), x_b(w/(1+L))] Z((1+L) w)^-1,
// with L the second basis element; Z(w), Y(w) realize x_{2a+b}(w), x_{a+b}(w).
// Anchoring Y at the non-basis unit 1+L keeps every emitted relator freely
// nonempty.
void emit_c2_even_pair(PresBuilder& b, const FiniteField& F,
                       const CoefficientTables& T, int na, int nb,
                       const std::string& prefix) {
  const int a = F.a();
  if (a < 2)
    throw std::invalid_argument("the p = 2 C2 block needs q >= 4");
  Rank2Words W{F, T, b, na, nb};
  const FFElement lam = F.basis(2);
  const FFElement mu_inv = F.inv(F.add(F.square(lam), lam));
  const FFElement lam1 = F.add(F.one(), lam);
  const FFElement lam1_inv = F.inv(lam1);

  auto Z = [&](FFElement w) {
    Word out = commutator(W.A(lam), W.B(F.mul(w, mu_inv)));
    out.append(commutator(W.A(F.one()), W.B(F.mul(lam, F.mul(w, mu_inv)))));
    return out;
  };
  auto Y = [&](FFElement w) {
    Word out = commutator(W.A(lam1), W.B(F.mul(w, lam1_inv)));
    out.append_inverse(Z(F.mul(lam1, w)));
    return out;
  };
  auto yz = [&](int i, int j) {
    FFElement vi = F.basis(i), vj = F.basis(j);
    Word rhs = Y(F.mul(vi, vj));
    rhs.append(Z(F.mul(vi, F.square(vj))));
    return rhs;
  };

  b.begin_block(prefix + "E1");  // Chevalley commutator of the generators
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= a; ++j) {
      Word w = commutator(W.A(F.basis(j)), W.B(F.basis(i)));
      w.append_inverse(yz(i, j));
      b.add_relator(w);
    }
  b.begin_block(prefix + "E2");  // x_{a+b} commutes with x_a
  for (int k = 1; k <= a; ++k)
    for (int l = 1; l <= a; ++l)
      b.add_relator(commutator(Y(F.basis(k)), W.A(F.basis(l))));
  b.begin_block(prefix + "E3");  // ... and with x_b
  for (int k = 1; k <= a; ++k)
    for (int l = 1; l <= a; ++l)
      b.add_relator(commutator(Y(F.basis(k)), W.B(F.basis(l))));
  b.begin_block(prefix + "E4");  // x_{2a+b} is central
  for (int k = 1; k <= a; ++k)
    for (int l = 1; l <= a; ++l)
      b.add_relator(commutator(Z(F.basis(k)), W.A(F.basis(l))));
  b.begin_block(prefix + "E5");
  for (int k = 1; k <= a; ++k)
    for (int l = 1; l <= a; ++l)
      b.add_relator(commutator(Z(F.basis(k)), W.B(F.basis(l))));
  b.begin_block(prefix + "E6");
  for (int k = 1; k <= a; ++k)
    for (int l = 1; l <= a; ++l)
      b.add_relator(commutator(Y(F.basis(k)), Z(F.basis(l))));
  b.begin_block(prefix + "E7");  // opposite orientation of E1
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= a; ++j) {
      Word w = commutator(W.B(F.basis(i)), W.A(F.basis(j)));
      Word rhs = Z(F.mul(F.basis(i), F.square(F.basis(j))));
      rhs.append(Y(F.mul(F.basis(i), F.basis(j))));
      w.append_inverse(rhs);
      b.add_relator(w);
    }
  b.begin_block(prefix + "E8");  // squares of mixed products land in E
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= a; ++j) {
      Word w = W.B(F.basis(i));
      w.append(W.A(F.basis(j)));
      Word sq = w * w;
      sq.append_inverse(yz(i, j));
      b.add_relator(sq);
    }
}

void emit_a1xa1_pair(PresBuilder& b, const FiniteField& F, int ni, int nj) {
  for (int k = 1; k <= F.a(); ++k)
    for (int k2 = 1; k2 <= F.a(); ++k2)
      b.add_relator(
          commutator(single(b.gen(ni, k)), single(b.gen(nj, k2))));
}

}  // namespace

Presentation present_abelian_rootgroup(const FiniteField& F) {
  PresBuilder b(Family::abelian_rootgroup, F);
  for (int k = 1; k <= F.a(); ++k) b.add_gen(0, k);
  b.begin_block("p-powers");
  emit_node_powers(b, F, 0);
  b.begin_block("commutators");
  emit_node_commutators(b, F, 0);
  return b.take();
}

Presentation present_sl3_sylow(const FiniteField& F) {
  PresBuilder b(Family::sl3_sylow, F);
  for (int node : {0, 1})
    for (int k = 1; k <= F.a(); ++k) b.add_gen(node, k);
  CoefficientTables T(F);

  b.begin_block("A1");
  emit_node_powers(b, F, 0);
  emit_node_powers(b, F, 1);
  b.begin_block("A2");
  emit_node_commutators(b, F, 0);
  emit_node_commutators(b, F, 1);
  emit_a2_pair(b, F, T, 0, 1, "A3", "A4");
  return b.take();
}

Presentation present_sp4_sylow(const FiniteField& F) {
  if (F.p() == 2)
    throw std::invalid_argument(
        "present_sp4_sylow needs p odd; use present_sp4_sylow_even");
  PresBuilder b(Family::sp4_sylow, F);
  for (int node : {0, 1})
    for (int k = 1; k <= F.a(); ++k) b.add_gen(node, k);
  CoefficientTables T(F);

  b.begin_block("C1");
  emit_node_powers(b, F, 0);
  emit_node_powers(b, F, 1);
  emit_wab_powers(b, F, T, 0, 1);
  b.begin_block("C2");
  emit_node_commutators(b, F, 0);
  b.begin_block("C3");
  emit_node_commutators(b, F, 1);
  emit_c2_core(b, F, T, 0, 1, "");
  return b.take();
}

Presentation present_sp4_sylow_even(const FiniteField& F) {
  if (F.p() != 2)
    throw std::invalid_argument("present_sp4_sylow_even needs p = 2");
  if (F.a() < 2)
    throw std::invalid_argument("present_sp4_sylow_even needs q >= 4");
  PresBuilder b(Family::sp4_sylow_even, F);
  for (int node : {0, 1})
    for (int k = 1; k <= F.a(); ++k) b.add_gen(node, k);
  CoefficientTables T(F);

  b.begin_block("base-p-powers");
  emit_node_powers(b, F, 0);
  emit_node_powers(b, F, 1);
  b.begin_block("base-commutators");
  emit_node_commutators(b, F, 0);
  emit_node_commutators(b, F, 1);
  emit_c2_even_pair(b, F, T, 0, 1, "");
  return b.take();
}

Presentation hall_glue(const ExtensionData& ext) {
  const Presentation& N = ext.pres_N;
  const Presentation& H = ext.pres_H;
  const std::size_t r = N.generators.size();
  const std::size_t s = H.generators.size();

  if (ext.V.size() != s || ext.U.size() != s)
    throw std::invalid_argument("hall_glue: action tables need one row per "
                                "H-generator");
  for (const auto& row : ext.V)
    if (row.size() != r)
      throw std::invalid_argument("hall_glue: V row has wrong length");
  for (const auto& row : ext.U)
    if (row.size() != r)
      throw std::invalid_argument("hall_glue: U row has wrong length");
  if (ext.lifts.size() != H.relators.size())
    throw std::invalid_argument("hall_glue: one lift per H-relator required");
  auto check_n_word = [&](const Word& w) {
    for (const Letter& l : w.letters())
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= r)
        throw std::invalid_argument(
            "hall_glue: action word mentions a non-N generator");
  };
  for (const auto& row : ext.V)
    for (const Word& w : row) check_n_word(w);
  for (const auto& row : ext.U)
    for (const Word& w : row) check_n_word(w);
  for (const Word& w : ext.lifts) check_n_word(w);

  if (s == 0 && H.relators.empty()) return N;

  Presentation out;
  out.meta.family = Family::hall_glue;
  out.meta.field = N.meta.field;
  out.generators = N.generators;
  int max_node = 0;
  for (const auto& g : N.generators) max_node = std::max(max_node, g.node);
  int min_h_node = 0;
  for (const auto& g : H.generators) min_h_node = std::min(min_h_node, g.node);
  const int shift = max_node + 1 - min_h_node;
  for (const auto& g : H.generators)
    out.generators.push_back({g.node + shift, g.k});

  auto lift_h = [&](const Word& w) {
    Word out_w;
    for (const Letter& l : w.letters())
      out_w.append(l.gen + static_cast<int>(r), l.exp);
    return out_w;
  };

  out.meta.blocks.emplace_back("N-relators",
                               static_cast<long long>(N.relators.size()));
  out.relators = N.relators;

  out.meta.blocks.emplace_back("V-conjugation", static_cast<long long>(s * r));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Word w;
      w.append(static_cast<int>(r + i), 1);
      w.append(static_cast<int>(j), 1);
      w.append(static_cast<int>(r + i), -1);
      w.append_inverse(ext.V[i][j]);
      out.relators.push_back(std::move(w));
    }
  out.meta.blocks.emplace_back("U-conjugation", static_cast<long long>(s * r));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Word w;
      w.append(static_cast<int>(r + i), -1);
      w.append(static_cast<int>(j), 1);
      w.append(static_cast<int>(r + i), 1);
      w.append_inverse(ext.U[i][j]);
      out.relators.push_back(std::move(w));
    }
  out.meta.blocks.emplace_back("lifted-H-relators",
                               static_cast<long long>(H.relators.size()));
  for (std::size_t i = 0; i < H.relators.size(); ++i) {
    Word w = lift_h(H.relators[i]);
    w.append_inverse(ext.lifts[i]);
    out.relators.push_back(std::move(w));
  }
  return out;
}

Presentation present_affine_uplus(const DynkinDiagram& diag,
                                  const FiniteField& F,
                                  const AffineOptions& opts) {
  if (diag.kind != DiagramKind::affine)
    throw std::invalid_argument("present_affine_uplus needs an affine diagram");
  if (diag.rank < 3)
    throw std::invalid_argument("present_affine_uplus needs base rank >= 3");
  if (!opts.allow_small_q && F.q() < 16)
    throw std::invalid_argument(
        "present_affine_uplus needs q >= 16 (amalgamation hypothesis)");

  // bucket the node pairs by rank-2 type up front; G2 pairs are rejected
  std::vector<std::pair<int, int>> a1xa1, a2, c2;
  for (std::size_t x = 0; x < diag.nodes.size(); ++x)
    for (std::size_t y = x + 1; y < diag.nodes.size(); ++y) {
      int i = diag.nodes[x], j = diag.nodes[y];
      switch (classify_pair(diag, i, j)) {
        case Rank2Type::A1xA1: a1xa1.emplace_back(i, j); break;
        case Rank2Type::A2: a2.emplace_back(i, j); break;
        case Rank2Type::C2: c2.emplace_back(i, j); break;
        case Rank2Type::G2:
          throw std::invalid_argument("G2 pairs are not supported");
      }
    }

  PresBuilder b(Family::affine_uplus, F);
  for (int node : diag.nodes)
    for (int k = 1; k <= F.a(); ++k) b.add_gen(node, k);
  CoefficientTables T(F);

  b.begin_block("node-p-powers");
  for (int node : diag.nodes) emit_node_powers(b, F, node);
  b.begin_block("node-commutators");
  for (int node : diag.nodes) emit_node_commutators(b, F, node);

  b.begin_block("A1xA1");
  for (auto [i, j] : a1xa1) emit_a1xa1_pair(b, F, i, j);

  for (auto [i, j] : a2) {
    std::string tag = "A2{" + std::to_string(i) + "," + std::to_string(j) + "}";
    emit_a2_pair(b, F, T, i, j, tag + "A3", tag + "A4");
  }

  for (auto [i, j] : c2) {
    const DiagramEdge* e = diag.edge_between(i, j);
    int short_node = e->bond == Bond::double_to_i ? e->i : e->j;
    int long_node = short_node == i ? j : i;
    std::string tag = "C2{" + std::to_string(i) + "," + std::to_string(j) + "}";
    if (F.p() == 2) {
      emit_c2_even_pair(b, F, T, short_node, long_node, tag);
    } else {
      emit_c2_core(b, F, T, short_node, long_node, tag);
      b.begin_block(tag + "C1");
      emit_wab_powers(b, F, T, short_node, long_node);
    }
  }

  Presentation pres = b.take();
  pres.meta.diagram = DiagramDesc{diag.base, diag.rank, true};
  return pres;
}

AbelianizationRank mod_p_abelianization_rank(const Presentation& pres, int p) {
  const int n = static_cast<int>(pres.generators.size());
  std::vector<std::vector<int>> rows;
  rows.reserve(pres.relators.size());
  for (const Word& w : pres.relators) {
    std::vector<int> row(n, 0);
    for (const Letter& l : w.letters())
      row[l.gen] = ((row[l.gen] + l.exp) % p + p) % p;
    rows.push_back(std::move(row));
  }

  // Gaussian elimination over F_p
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    std::swap(rows[rank], rows[pivot]);
    // normalize pivot row
    int inv = 1;
    for (int t = 1; t < p; ++t)
      if (rows[rank][col] * t % p == 1) inv = t;
    for (int c = col; c < n; ++c) rows[rank][c] = rows[rank][c] * inv % p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      int factor = rows[r][col];
      for (int c = col; c < n; ++c)
        rows[r][c] = ((rows[r][c] - factor * rows[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return {rank, n - rank};
}

}  // namespace chevpres
