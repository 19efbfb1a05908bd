#include "chevpres/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace chevpres {

std::string to_string(BaseType t) {
  switch (t) {
    case BaseType::A: return "A";
    case BaseType::B: return "B";
    case BaseType::C: return "C";
    case BaseType::D: return "D";
    case BaseType::E: return "E";
    case BaseType::F4: return "F4";
    case BaseType::G2: return "G2";
  }
  throw std::logic_error("bad base type");
}

BaseType base_type_from_string(const std::string& s) {
  if (s == "A") return BaseType::A;
  if (s == "B") return BaseType::B;
  if (s == "C") return BaseType::C;
  if (s == "D") return BaseType::D;
  if (s == "E") return BaseType::E;
  if (s == "F" || s == "F4") return BaseType::F4;
  if (s == "G" || s == "G2") return BaseType::G2;
  throw std::invalid_argument("unknown diagram type '" + s + "'");
}

std::string to_string(Rank2Type t) {
  switch (t) {
    case Rank2Type::A1xA1: return "A1xA1";
    case Rank2Type::A2: return "A2";
    case Rank2Type::C2: return "C2";
    case Rank2Type::G2: return "G2";
  }
  throw std::logic_error("bad rank-2 type");
}

bool DynkinDiagram::has_node(int v) const {
  return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

const DiagramEdge* DynkinDiagram::edge_between(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : edges)
    if (e.i == i && e.j == j) return &e;
  return nullptr;
}

std::vector<int> DynkinDiagram::neighbours(int v) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.i == v) out.push_back(e.j);
    if (e.j == v) out.push_back(e.i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Adds the edge with endpoints in canonical order, flipping the arrow if the
// endpoints swap.
void add_edge(DynkinDiagram& d, int i, int j, Bond b) {
  if (i > j) {
    std::swap(i, j);
    if (b == Bond::double_to_i) b = Bond::double_to_j;
    else if (b == Bond::double_to_j) b = Bond::double_to_i;
    else if (b == Bond::triple_to_i) b = Bond::triple_to_j;
    else if (b == Bond::triple_to_j) b = Bond::triple_to_i;
  }
  d.edges.push_back({i, j, b});
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

DynkinDiagram build_finite_diagram(BaseType type, int l) {
  DynkinDiagram d;
  d.base = type;
  d.rank = l;
  d.kind = DiagramKind::finite;
  for (int v = 1; v <= l; ++v) d.nodes.push_back(v);
  switch (type) {
    case BaseType::A:
      require(l >= 1, "A_l needs l >= 1");
      for (int v = 1; v < l; ++v) add_edge(d, v, v + 1, Bond::single);
      break;
    case BaseType::B:
      require(l >= 2, "B_l needs l >= 2");
      for (int v = 1; v < l - 1; ++v) add_edge(d, v, v + 1, Bond::single);
      add_edge(d, l - 1, l, Bond::double_to_j);  // alpha_l short
      break;
    case BaseType::C:
      require(l >= 2, "C_l needs l >= 2");
      for (int v = 1; v < l - 1; ++v) add_edge(d, v, v + 1, Bond::single);
      add_edge(d, l - 1, l, Bond::double_to_i);  // alpha_l long
      break;
    case BaseType::D:
      require(l >= 4, "D_l needs l >= 4");
      for (int v = 1; v < l - 2; ++v) add_edge(d, v, v + 1, Bond::single);
      add_edge(d, l - 2, l - 1, Bond::single);
      add_edge(d, l - 2, l, Bond::single);
      break;
    case BaseType::E:
      require(l >= 6 && l <= 8, "E_l needs l in {6,7,8}");
      add_edge(d, 1, 3, Bond::single);
      add_edge(d, 2, 4, Bond::single);
      for (int v = 3; v < l; ++v) add_edge(d, v, v + 1, Bond::single);
      break;
    case BaseType::F4:
      require(l == 4, "F4 has rank 4");
      add_edge(d, 1, 2, Bond::single);
      add_edge(d, 2, 3, Bond::double_to_j);  // alpha_3, alpha_4 short
      add_edge(d, 3, 4, Bond::single);
      break;
    case BaseType::G2:
      require(l == 2, "G2 has rank 2");
      add_edge(d, 1, 2, Bond::triple_to_i);  // alpha_1 short
      break;
  }
  return d;
}

DynkinDiagram build_affine_diagram(BaseType type, int l) {
  DynkinDiagram d = build_finite_diagram(type, l);
  // finite B_2 exists but its completed diagram coincides with affine C_2
  if (type == BaseType::B) require(l >= 3, "affine B_l needs l >= 3");
  d.kind = DiagramKind::affine;
  d.nodes.insert(d.nodes.begin(), 0);
  switch (type) {
    case BaseType::A:
      if (l == 1) {
        add_edge(d, 0, 1, Bond::quadruple);
      } else {
        add_edge(d, 0, 1, Bond::single);
        add_edge(d, 0, l, Bond::single);
      }
      break;
    case BaseType::B:
      add_edge(d, 0, 2, Bond::single);
      break;
    case BaseType::C:
      add_edge(d, 0, 1, Bond::double_to_j);  // alpha_0 long
      break;
    case BaseType::D:
      add_edge(d, 0, 2, Bond::single);
      break;
    case BaseType::E:
      add_edge(d, 0, l == 6 ? 2 : l == 7 ? 1 : 8, Bond::single);
      break;
    case BaseType::F4:
      add_edge(d, 0, 1, Bond::single);
      break;
    case BaseType::G2:
      add_edge(d, 0, 2, Bond::single);
      break;
  }
  std::sort(d.edges.begin(), d.edges.end(),
            [](const DiagramEdge& x, const DiagramEdge& y) {
              return std::pair(x.i, x.j) < std::pair(y.i, y.j);
            });
  return d;
}

Rank2Type classify_pair(const DynkinDiagram& diag, int i, int j) {
  if (i == j) throw std::invalid_argument("classify_pair needs i != j");
  if (!diag.has_node(i) || !diag.has_node(j))
    throw std::invalid_argument("node not in diagram");
  const DiagramEdge* e = diag.edge_between(i, j);
  if (e == nullptr) return Rank2Type::A1xA1;
  switch (e->bond) {
    case Bond::single: return Rank2Type::A2;
    case Bond::double_to_i:
    case Bond::double_to_j: return Rank2Type::C2;
    case Bond::triple_to_i:
    case Bond::triple_to_j: return Rank2Type::G2;
    case Bond::quadruple:
      throw std::invalid_argument("affine A1 bond has no rank-2 type");
  }
  throw std::logic_error("bad bond");
}

PairCounts count_pairs_by_type(const DynkinDiagram& diag) {
  if (diag.kind != DiagramKind::affine)
    throw std::invalid_argument("count_pairs_by_type needs an affine diagram");
  if (diag.rank < 3)
    throw std::invalid_argument("count_pairs_by_type needs base rank >= 3");
  PairCounts counts;
  for (std::size_t x = 0; x < diag.nodes.size(); ++x)
    for (std::size_t y = x + 1; y < diag.nodes.size(); ++y) {
      switch (classify_pair(diag, diag.nodes[x], diag.nodes[y])) {
        case Rank2Type::A1xA1: ++counts.a1xa1; break;
        case Rank2Type::A2: ++counts.a2; break;
        case Rank2Type::C2: ++counts.c2; break;
        case Rank2Type::G2:
          throw std::invalid_argument("G2 pairs are not supported");
      }
    }
  return counts;
}

RootSystem positive_roots(BaseType type, int rank) {
  RootSystem rs;
  rs.rank = rank;
  if (type == BaseType::A && rank == 1) {
    rs.cartan = {{2}};
    rs.positive_roots = {{1}};
    return rs;
  }
  if (type == BaseType::A && rank == 2) {
    rs.cartan = {{2, -1}, {-1, 2}};
    rs.positive_roots = {{1, 0}, {0, 1}, {1, 1}};
    return rs;
  }
  if ((type == BaseType::C || type == BaseType::B) && rank == 2) {
    // C2 with alpha = node 1 short, beta = node 2 long
    rs.cartan = {{2, -1}, {-2, 2}};
    rs.positive_roots = {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    return rs;
  }
  throw std::invalid_argument("positive_roots: unsupported type/rank");
}

RootSystem positive_roots(Rank2Type type) {
  switch (type) {
    case Rank2Type::A1xA1: {
      RootSystem rs;
      rs.rank = 2;
      rs.cartan = {{2, 0}, {0, 2}};
      rs.positive_roots = {{1, 0}, {0, 1}};
      return rs;
    }
    case Rank2Type::A2: return positive_roots(BaseType::A, 2);
    case Rank2Type::C2: return positive_roots(BaseType::C, 2);
    case Rank2Type::G2:
      throw std::invalid_argument("positive_roots: G2 unsupported");
  }
  throw std::logic_error("bad rank-2 type");
}

std::vector<std::vector<int>> induced_components(
    const DynkinDiagram& host, const std::vector<int>& nodes) {
  std::set<int> in(nodes.begin(), nodes.end());
  std::set<int> seen;
  std::vector<std::vector<int>> comps;
  for (int start : std::set<int>(in)) {
    if (seen.count(start)) continue;
    std::vector<int> comp, stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : host.neighbours(v))
        if (in.count(w) && !seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<ComponentType> classify_component(const DynkinDiagram& host,
                                                const std::vector<int>& comp) {
  const int n = static_cast<int>(comp.size());
  if (n == 0) return std::nullopt;
  if (n == 1) return ComponentType{BaseType::A, 1};

  std::set<int> in(comp.begin(), comp.end());
  std::vector<const DiagramEdge*> inner;
  for (const auto& e : host.edges)
    if (in.count(e.i) && in.count(e.j)) inner.push_back(&e);

  // a connected finite diagram is a tree
  if (static_cast<int>(inner.size()) != n - 1) return std::nullopt;

  std::map<int, int> degree;
  int doubles = 0, triples = 0;
  const DiagramEdge* double_edge = nullptr;
  for (const auto* e : inner) {
    ++degree[e->i];
    ++degree[e->j];
    switch (e->bond) {
      case Bond::single: break;
      case Bond::double_to_i:
      case Bond::double_to_j:
        ++doubles;
        double_edge = e;
        break;
      case Bond::triple_to_i:
      case Bond::triple_to_j: ++triples; break;
      case Bond::quadruple: return std::nullopt;
    }
  }
  int deg3 = 0, deg_more = 0;
  for (auto [v, deg] : degree) {
    if (deg == 3) ++deg3;
    if (deg > 3) ++deg_more;
  }
  if (deg_more > 0 || deg3 > 1) return std::nullopt;

  if (triples > 0)
    return (n == 2 && triples == 1 && doubles == 0)
               ? std::optional(ComponentType{BaseType::G2, 2})
               : std::nullopt;

  if (doubles > 1) return std::nullopt;

  if (doubles == 1) {
    if (deg3 != 0) return std::nullopt;  // chain required
    if (n == 2) return ComponentType{BaseType::C, 2};  // B2 = C2 tie -> C2
    // walk the chain from its smallest endpoint to locate the double bond
    int end = -1;
    for (int v : comp)
      if (degree[v] == 1 && (end == -1 || v < end)) end = v;
    std::vector<int> chain{end};
    std::set<int> visited{end};
    while (static_cast<int>(chain.size()) < n) {
      for (int w : host.neighbours(chain.back())) {
        if (in.count(w) && !visited.count(w)) {
          chain.push_back(w);
          visited.insert(w);
          break;
        }
      }
    }
    int pos = -1;  // edge index along the chain, 0-based
    for (int i = 0; i + 1 < n; ++i) {
      if ((chain[i] == double_edge->i && chain[i + 1] == double_edge->j) ||
          (chain[i] == double_edge->j && chain[i + 1] == double_edge->i))
        pos = i;
    }
    if (n == 4 && pos == 1) return ComponentType{BaseType::F4, 4};
    if (pos == 0 || pos == n - 2) {
      // double bond at a chain end; the arrow decides B vs C
      int terminal = pos == 0 ? chain[0] : chain[n - 1];
      bool toward_terminal =
          (double_edge->bond == Bond::double_to_i && double_edge->i == terminal) ||
          (double_edge->bond == Bond::double_to_j && double_edge->j == terminal);
      return ComponentType{toward_terminal ? BaseType::B : BaseType::C, n};
    }
    return std::nullopt;
  }

  // simply laced tree
  if (deg3 == 0) return ComponentType{BaseType::A, n};
  int fork = -1;
  for (auto [v, deg] : degree)
    if (deg == 3) fork = v;
  std::vector<int> arms;
  for (int w : host.neighbours(fork)) {
    if (!in.count(w)) continue;
    int len = 1, prev = fork, cur = w;
    while (true) {
      int next = -1;
      for (int z : host.neighbours(cur))
        if (in.count(z) && z != prev) next = z;
      if (next == -1) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) return std::nullopt;
  if (arms[0] == 1 && arms[1] == 1) return ComponentType{BaseType::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return ComponentType{BaseType::E, n};
  return std::nullopt;
}

}  // namespace chevpres
