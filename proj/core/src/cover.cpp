#include "chevpres/cover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chevpres {

CoverSpec standard_cover(BaseType type, int l) {
  CoverSpec spec;
  auto range = [](int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
  };
  switch (type) {
    case BaseType::B:
    case BaseType::C: {
      if (l < 6) throw std::invalid_argument("cover needs rank >= 6");
      spec.diagram = build_finite_diagram(type, l);
      spec.parts[0] = range(1, l - 1);
      spec.parts[1] = range(1, l - 4);
      for (int v : {l - 2, l - 1, l}) spec.parts[1].push_back(v);
      spec.parts[2] = range(l - 3, l);
      break;
    }
    case BaseType::D: {
      if (l < 6) throw std::invalid_argument("cover needs rank >= 6");
      spec.diagram = build_finite_diagram(type, l);
      spec.parts[0] = range(1, l - 1);
      spec.parts[1] = range(1, l - 2);
      spec.parts[1].push_back(l);
      spec.parts[2] = {l - 2, l - 1, l};
      break;
    }
    case BaseType::E: {
      if (l < 6 || l > 8) throw std::invalid_argument("E rank must be 6, 7, 8");
      spec.diagram = build_finite_diagram(type, l);
      spec.parts[0] = {1};
      for (int v = 3; v <= l; ++v) spec.parts[0].push_back(v);
      spec.parts[1] = {1, 2, 3, 4};
      spec.parts[2] = {2};
      for (int v = 4; v <= l; ++v) spec.parts[2].push_back(v);
      break;
    }
    default:
      throw std::invalid_argument(
          "standard_cover supports types B, C, D, E of rank >= 6");
  }
  for (auto& part : spec.parts) std::sort(part.begin(), part.end());
  return spec;
}

namespace {

bool part_component_ok(const DynkinDiagram& host, const std::vector<int>& comp,
                       bool& is_a1) {
  is_a1 = comp.size() == 1;
  auto type = classify_component(host, comp);
  if (!type) return false;
  if (type->base == BaseType::A && type->rank >= 2) return true;
  return type->rank <= 5;
}

bool intersection_component_ok(const DynkinDiagram& host,
                               const std::vector<int>& comp) {
  auto type = classify_component(host, comp);
  if (!type) return false;
  if (type->base == BaseType::A && type->rank >= 2) return true;
  if ((type->base == BaseType::B || type->base == BaseType::C) &&
      type->rank == 3)
    return true;
  // the condition names A_m (m>=2), B3 and C3 only; anything else fails
  return false;
}

}  // namespace

CoverReport check_cover(const CoverSpec& spec) {
  const DynkinDiagram& diag = spec.diagram;
  CoverReport report;

  report.p1 = true;
  for (int pi = 0; pi < 3; ++pi) {
    const auto& part = spec.parts[pi];
    if (part.empty()) continue;
    auto comps = induced_components(diag, part);
    if (comps.size() > 2) report.p1 = false;
    for (const auto& comp : comps) {
      bool is_a1 = false;
      if (!part_component_ok(diag, comp, is_a1)) report.p1 = false;
      if (is_a1) report.a1_components.emplace_back(pi, comp.front());
    }
  }

  report.p2 = true;
  for (std::size_t x = 0; x < diag.nodes.size() && report.p2; ++x)
    for (std::size_t y = x + 1; y < diag.nodes.size(); ++y) {
      int i = diag.nodes[x], j = diag.nodes[y];
      bool covered = false;
      for (const auto& part : spec.parts) {
        bool has_i = std::binary_search(part.begin(), part.end(), i);
        bool has_j = std::binary_search(part.begin(), part.end(), j);
        if (has_i && has_j) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        report.p2 = false;
        report.p2_witness = {i, j};
        break;
      }
    }

  report.p3 = true;
  for (int pi = 0; pi < 3; ++pi)
    for (int pj = pi + 1; pj < 3; ++pj) {
      std::vector<int> inter;
      std::set_intersection(spec.parts[pi].begin(), spec.parts[pi].end(),
                            spec.parts[pj].begin(), spec.parts[pj].end(),
                            std::back_inserter(inter));
      if (inter.empty()) continue;
      auto comps = induced_components(diag, inter);
      if (comps.size() > 2) report.p3 = false;
      for (const auto& comp : comps)
        if (!intersection_component_ok(diag, comp)) report.p3 = false;
    }

  return report;
}

}  // namespace chevpres
