#include "chevpres/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace chevpres {

VerifyReport verify_presentation(const MatrixModel& model, const RoleMap& roles,
                                 const Presentation& pres) {
  VerifyReport report;
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    ++report.checked;
    if (!mat_is_identity(eval_word(model, roles, pres.relators[i])))
      report.failures.push_back(static_cast<int>(i));
  }
  return report;
}

VerifyReport verify_presentation(const MatrixModel& model,
                                 const Presentation& pres) {
  return verify_presentation(model, standard_role_map(pres), pres);
}

VerifyReport verify_affine_presentation(const DynkinDiagram& diag,
                                        const Presentation& pres) {
  auto F = std::make_shared<FiniteField>(pres.meta.field.p, pres.meta.field.a);
  std::map<ModelKind, MatrixModel> models;
  auto model_for = [&](ModelKind kind) -> const MatrixModel& {
    auto it = models.find(kind);
    if (it == models.end())
      it = models.emplace(kind, build_model(kind, F)).first;
    return it->second;
  };

  VerifyReport report;
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    const Word& w = pres.relators[i];
    std::set<int> support;
    for (const Letter& l : w.letters())
      support.insert(pres.generators[l.gen].node);
    if (support.empty()) {
      ++report.checked;
      continue;
    }
    if (support.size() > 2)
      throw std::invalid_argument(
          "affine relator touches more than one node pair");

    Root root_of_node[2] = {Root::alpha, Root::beta};
    ModelKind kind;
    int node_a, node_b;
    if (support.size() == 1) {
      kind = ModelKind::A1xA1;
      node_a = *support.begin();
      node_b = -1;
    } else {
      int i0 = *support.begin();
      int j0 = *std::next(support.begin());
      Rank2Type t = classify_pair(diag, i0, j0);
      kind = model_kind_for(t);
      if (t == Rank2Type::C2) {
        const DiagramEdge* e = diag.edge_between(i0, j0);
        node_a = e->bond == Bond::double_to_i ? e->i : e->j;  // short root
        node_b = node_a == i0 ? j0 : i0;
      } else {
        node_a = i0;
        node_b = j0;
      }
    }

    const MatrixModel& model = model_for(kind);
    RoleMap roles;
    roles.roles.assign(pres.generators.size(), {Root::alpha, 1});
    for (std::size_t g = 0; g < pres.generators.size(); ++g) {
      const GeneratorSymbol& sym = pres.generators[g];
      if (sym.node == node_a) roles.roles[g] = {root_of_node[0], sym.k};
      else if (sym.node == node_b) roles.roles[g] = {root_of_node[1], sym.k};
    }
    ++report.checked;
    if (!mat_is_identity(eval_word(model, roles, w)))
      report.failures.push_back(static_cast<int>(i));
  }
  return report;
}

Presentation corrupt_relator(const Presentation& pres, int relator_index) {
  if (relator_index < 0 ||
      static_cast<std::size_t>(relator_index) >= pres.relators.size())
    throw std::out_of_range("relator index");
  Presentation out = pres;
  const Word& w = out.relators[relator_index];
  if (w.empty()) throw std::invalid_argument("cannot corrupt an empty relator");
  // appending one generator letter bumps the trailing exponent, so the
  // corrupted product evaluates to that generator instead of the identity
  Word bad = w;
  bad.append(w.letters().front().gen, 1);
  out.relators[relator_index] = std::move(bad);
  return out;
}

namespace {

MatrixGF random_element(const MatrixModel& model, std::mt19937_64& rng) {
  const FiniteField& F = model.field();
  std::vector<MatrixGF> gens = model.generator_matrices();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  std::uniform_int_distribution<int> len(3, 10);
  std::uniform_int_distribution<int> flip(0, 1);
  MatrixGF m = mat_identity(model.dim());
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    MatrixGF g = gens[pick(rng)];
    if (flip(rng)) g = mat_inverse(F, g);
    m = mat_mul(F, m, g);
  }
  return m;
}

}  // namespace

LawReport commutator_identity_suite(const MatrixModel& model,
                                    long long samples, std::uint64_t seed) {
  const FiniteField& F = model.field();
  std::mt19937_64 rng(seed);
  LawReport report;
  for (long long t = 0; t < samples; ++t) {
    MatrixGF x = random_element(model, rng);
    MatrixGF y = random_element(model, rng);
    MatrixGF z = random_element(model, rng);
    ++report.triples;

    // [a, bc] = [a,b] [a,c]^b with a = x, b = y, c = z
    MatrixGF lhs = mat_commutator(F, x, mat_mul(F, y, z));
    MatrixGF rhs =
        mat_mul(F, mat_commutator(F, x, y),
                mat_conjugate(F, mat_commutator(F, x, z), y));
    bool ok = lhs == rhs;

    // Hall-Witt, stated for the [a,b] = a b a^-1 b^-1 convention
    auto term = [&](const MatrixGF& u, const MatrixGF& v, const MatrixGF& w) {
      MatrixGF c = mat_commutator(F, mat_commutator(F, u, mat_inverse(F, v)),
                                  mat_inverse(F, w));
      return mat_conjugate(F, c, mat_inverse(F, u));
    };
    MatrixGF hw = mat_mul(F, mat_mul(F, term(y, x, z), term(z, y, x)),
                          term(x, z, y));
    ok = ok && mat_is_identity(hw);

    if (!ok) ++report.failures;
  }
  return report;
}

LawReport claim_21_instances(const MatrixModel& m) {
  if (m.kind() != ModelKind::C2)
    throw std::invalid_argument("claim 2.1 instances live in the C2 model");
  const FiniteField& F = m.field();
  LawReport report;
  for (int s = 0; s < F.q(); ++s)
    for (int t = 0; t < F.q(); ++t) {
      FFElement u{static_cast<std::uint16_t>(s)};
      FFElement v{static_cast<std::uint16_t>(t)};
      ++report.triples;
      bool ok = mat_is_identity(
          mat_commutator(F, m.root_element(Root::beta, v),
                         m.root_element(Root::two_alpha_beta, u)));
      ok = ok && mat_is_identity(mat_commutator(
                     F,
                     mat_commutator(F, m.root_element(Root::alpha, u),
                                    m.root_element(Root::beta, F.one())),
                     m.root_element(Root::beta, v)));
      ok = ok && mat_is_identity(
                     mat_commutator(F, m.root_element(Root::alpha_beta, u),
                                    m.root_element(Root::beta, v)));
      if (!ok) ++report.failures;
    }
  return report;
}

CertificationResult certify(const Presentation& pres,
                            const CertificationOptions& opts) {
  CertificationResult res;
  res.family = to_string(pres.meta.family);
  auto F = std::make_shared<FiniteField>(pres.meta.field.p, pres.meta.field.a);
  res.q = F->q();

  ModelKind kind;
  switch (pres.meta.family) {
    case Family::abelian_rootgroup: kind = ModelKind::A1xA1; break;
    case Family::sl3_sylow: kind = ModelKind::A2; break;
    case Family::sp4_sylow:
    case Family::sp4_sylow_even: kind = ModelKind::C2; break;
    default:
      throw std::invalid_argument(
          "certify handles the rank-2 families; affine presentations are "
          "verified pair-locally");
  }
  MatrixModel model = build_model(kind, F);

  VerifyReport ver = verify_presentation(model, pres);
  res.relators_checked = ver.checked;
  res.failures = ver.failures;
  res.ok = ver.ok();

  long long expected = 1;
  int exponent = kind == ModelKind::C2 ? 4 : kind == ModelKind::A2 ? 3 : 1;
  for (int i = 0; i < exponent; ++i) expected *= F->q();

  if (opts.run_closure || opts.run_frattini) {
    long long q4 = res.q * res.q * res.q * res.q;
    long long cap = opts.closure_cap > 0 ? opts.closure_cap : 2 * q4;
    GroupEnumeration G = closure(*F, model.generator_matrices(), cap);
    res.order_closure = G.order();
    if (opts.run_closure && G.order() != expected) res.ok = false;
    if (opts.run_frattini) {
      res.d_frattini = frattini_generator_count(*F, G, F->p());
    }
  }
  if (opts.run_todd_coxeter) {
    // HLT scans of the long macro-expanded relators define far more cosets
    // than survive; the working set runs to ~60x the final count
    long long cap = opts.max_cosets > 0
                        ? opts.max_cosets
                        : std::max<long long>(64 * expected + 1024, 1 << 22);
    CosetTable ct = todd_coxeter(pres, cap);
    if (ct.status == CosetStatus::closed) {
      res.order_tc = ct.cosets;
      if (ct.cosets != expected) res.ok = false;
    } else {
      res.order_tc = -1;  // overflow signal
      res.ok = false;
    }
  }
  return res;
}

}  // namespace chevpres
