#include "chevpres/serialize.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace chevpres {

using json = nlohmann::ordered_json;

namespace {

std::string bond_string(const DiagramEdge& e) {
  switch (e.bond) {
    case Bond::single: return "single";
    case Bond::double_to_i: return "double>" + std::to_string(e.i);
    case Bond::double_to_j: return "double>" + std::to_string(e.j);
    case Bond::triple_to_i: return "triple>" + std::to_string(e.i);
    case Bond::triple_to_j: return "triple>" + std::to_string(e.j);
    case Bond::quadruple: return "quadruple";
  }
  throw std::logic_error("bad bond");
}

json field_json(const FieldDesc& f) {
  return json{{"p", f.p}, {"a", f.a}, {"modulus", f.modulus}};
}

// JSON node labels of the rank-2 families
json node_label(Family family, int node) {
  switch (family) {
    case Family::abelian_rootgroup: return "x";
    case Family::sl3_sylow: return node == 0 ? "s1" : "s2";
    case Family::sp4_sylow:
    case Family::sp4_sylow_even: return node == 0 ? "alpha" : "beta";
    default: return node;
  }
}

int node_from_label(const json& label) {
  if (label.is_number_integer()) return label.get<int>();
  std::string s = label.get<std::string>();
  if (s == "x" || s == "s1" || s == "alpha") return 0;
  if (s == "s2" || s == "beta") return 1;
  throw std::invalid_argument("unknown generator node label '" + s + "'");
}

json conventions_json() {
  return json{
      {"commutator", "[a,b] = a b a^-1 b^-1; a^b = b a b^-1"},
      {"chevalley_c2", "[x_b(t), x_a(s)] = x_{a+b}(s t) x_{2a+b}(s^2 t)"},
      {"c_table", "sum_r c(k,k',r) v_r = v_k v_k'"},
      {"symplectic_form", "antidiagonal (+1,+1,-1,-1)"},
      {"c2_residual_c1", "x_{a+b}(v_k)^p absorbed into each C2 pair block"},
      {"basis", "power basis v_i = x^{i-1} of F_p[x]/(modulus)"}};
}

}  // namespace

std::string diagram_to_json(const DynkinDiagram& diag) {
  json edges = json::array();
  for (const DiagramEdge& e : diag.edges)
    edges.push_back(json::array({e.i, e.j, bond_string(e)}));
  json out{{"base", to_string(diag.base)},
           {"rank", diag.rank},
           {"affine", diag.kind == DiagramKind::affine},
           {"nodes", diag.nodes},
           {"edges", edges}};
  return out.dump(2) + "\n";
}

std::string field_to_json(const FieldDesc& field) {
  return field_json(field).dump(2) + "\n";
}

std::string coefficient_tables_to_json(const FiniteField& F,
                                       const CoefficientTables& T) {
  const int a = T.a();
  auto cube = [&](auto&& entry) {
    json out = json::array();
    for (int i = 1; i <= a; ++i) {
      json plane = json::array();
      for (int j = 1; j <= a; ++j) {
        json line = json::array();
        for (int k = 1; k <= a; ++k) line.push_back(entry(i, j, k));
        plane.push_back(std::move(line));
      }
      out.push_back(std::move(plane));
    }
    return out;
  };
  json out;
  out["field"] = field_json(FieldDesc::of(F));
  out["c"] = cube([&](int k, int k2, int r) { return T.c(k, k2, r); });
  if (T.has_m()) {
    json m = json::array();
    for (int j = 1; j <= a; ++j) {
      json line = json::array();
      for (int i = 1; i <= a; ++i) line.push_back(T.m(j, i));
      m.push_back(std::move(line));
    }
    out["m"] = std::move(m);
  }
  json r = json::array();
  for (int k = 1; k <= a; ++k) {
    json line = json::array();
    for (int i = 1; i <= a; ++i) line.push_back(T.r_neg(k, i));
    r.push_back(std::move(line));
  }
  out["r_neg"] = std::move(r);
  out["d"] = cube([&](int i, int j, int k) { return T.d(i, j, k); });
  out["f"] = cube([&](int i, int j, int k) { return T.f(i, j, k); });
  return out.dump(2) + "\n";
}

std::string presentation_to_json(const Presentation& pres) {
  json gens = json::array();
  for (const GeneratorSymbol& g : pres.generators)
    gens.push_back(json{{"node", node_label(pres.meta.family, g.node)},
                        {"k", g.k}});
  json rels = json::array();
  for (const Word& w : pres.relators) {
    json rel = json::array();
    for (const Letter& l : w.letters())
      rel.push_back(json::array({"g" + std::to_string(l.gen + 1), l.exp}));
    rels.push_back(std::move(rel));
  }
  json blocks = json::array();
  for (const auto& [label, count] : pres.meta.blocks)
    blocks.push_back(json::array({label, count}));

  json out;
  out["family"] = to_string(pres.meta.family);
  out["field"] = field_json(pres.meta.field);
  if (pres.meta.diagram) {
    out["diagram"] = json{{"base", to_string(pres.meta.diagram->base)},
                          {"rank", pres.meta.diagram->rank},
                          {"affine", pres.meta.diagram->affine}};
  }
  out["d_count"] = pres.d_count();
  out["r_count"] = pres.r_count();
  out["generators"] = std::move(gens);
  out["relators"] = std::move(rels);
  out["meta"] = json{{"blocks", std::move(blocks)},
                     {"conventions", conventions_json()}};
  return out.dump(2) + "\n";
}

Presentation presentation_from_json(const std::string& text) {
  json in = json::parse(text);
  Presentation pres;
  pres.meta.family = family_from_string(in.at("family").get<std::string>());
  const json& jf = in.at("field");
  pres.meta.field.p = jf.at("p").get<int>();
  pres.meta.field.a = jf.at("a").get<int>();
  pres.meta.field.modulus = jf.at("modulus").get<std::vector<int>>();
  {
    FiniteField F(pres.meta.field.p, pres.meta.field.a);
    if (F.modulus() != pres.meta.field.modulus)
      throw std::invalid_argument(
          "presentation file uses a non-canonical field modulus");
  }
  if (in.contains("diagram")) {
    const json& jd = in.at("diagram");
    pres.meta.diagram =
        DiagramDesc{base_type_from_string(jd.at("base").get<std::string>()),
                    jd.at("rank").get<int>(), jd.at("affine").get<bool>()};
  }
  for (const json& jg : in.at("generators"))
    pres.generators.push_back(
        {node_from_label(jg.at("node")), jg.at("k").get<int>()});
  const auto ngens = static_cast<long long>(pres.generators.size());
  for (const json& jr : in.at("relators")) {
    Word w;
    for (const json& jl : jr) {
      std::string ref = jl.at(0).get<std::string>();
      if (ref.empty() || ref[0] != 'g')
        throw std::invalid_argument("bad generator reference '" + ref + "'");
      long long idx = std::stoll(ref.substr(1)) - 1;
      if (idx < 0 || idx >= ngens)
        throw std::invalid_argument("generator reference out of range");
      w.append(static_cast<int>(idx), jl.at(1).get<int>());
    }
    pres.relators.push_back(std::move(w));
  }
  if (in.contains("meta") && in.at("meta").contains("blocks"))
    for (const json& jb : in.at("meta").at("blocks"))
      pres.meta.blocks.emplace_back(jb.at(0).get<std::string>(),
                                    jb.at(1).get<long long>());
  return pres;
}

std::string presentation_to_text(const Presentation& pres) {
  std::ostringstream out;
  out << "presentation " << to_string(pres.meta.family) << "\n";
  out << "field p " << pres.meta.field.p << " a " << pres.meta.field.a
      << " modulus";
  for (int c : pres.meta.field.modulus) out << " " << c;
  out << "\n";
  if (pres.meta.diagram)
    out << "diagram " << to_string(pres.meta.diagram->base) << " "
        << pres.meta.diagram->rank
        << (pres.meta.diagram->affine ? " affine" : " finite") << "\n";
  out << "generators";
  for (const GeneratorSymbol& g : pres.generators)
    out << " x" << g.node << "_" << g.k;
  out << "\n";
  out << "relators " << pres.relators.size() << "\n";
  for (const Word& w : pres.relators) {
    bool first = true;
    for (const Letter& l : w.letters()) {
      const GeneratorSymbol& g = pres.generators[l.gen];
      if (!first) out << " ";
      first = false;
      out << "x" << g.node << "_" << g.k << "^" << l.exp;
    }
    out << "\n";
  }
  return out.str();
}

std::string certification_to_json(const CertificationResult& res) {
  json out;
  out["family"] = res.family;
  out["q"] = res.q;
  out["relators_checked"] = res.relators_checked;
  out["failures"] = res.failures;
  if (res.order_closure) out["order_closure"] = *res.order_closure;
  if (res.order_tc) {
    if (*res.order_tc < 0) out["order_tc"] = "overflow";
    else out["order_tc"] = *res.order_tc;
  }
  if (res.d_frattini) out["d_frattini"] = *res.d_frattini;
  out["ok"] = res.ok;
  return out.dump(2) + "\n";
}

std::string cover_to_json(const CoverSpec& spec, const CoverReport& report) {
  json out;
  out["type"] = to_string(spec.diagram.base);
  out["rank"] = spec.diagram.rank;
  out["parts"] = json::array(
      {spec.parts[0], spec.parts[1], spec.parts[2]});
  out["check"] = json{
      {"P1", report.p1}, {"P2", report.p2}, {"P3", report.p3}};
  if (report.p2_witness)
    out["p2_witness"] =
        json::array({report.p2_witness->first, report.p2_witness->second});
  if (!report.a1_components.empty()) {
    json flagged = json::array();
    for (auto [part, node] : report.a1_components)
      flagged.push_back(json::array({part, node}));
    out["a1_components"] = flagged;
  }
  return out.dump(2) + "\n";
}

}  // namespace chevpres
