#pragma once

#include <string>

#include "chevpres/cover.hpp"
#include "chevpres/presentation.hpp"
#include "chevpres/rootsys.hpp"
#include "chevpres/verify.hpp"

namespace chevpres {

/// {"base":"B","rank":6,"affine":true,"nodes":[...],"edges":[[i,j,"single"],...]}
/// Bond strings: "single", "double>node", "triple>node", "quadruple".
std::string diagram_to_json(const DynkinDiagram& diag);

/// {"p":3,"a":2,"modulus":[1,0,1]} — modulus low-to-high including leading 1.
std::string field_to_json(const FieldDesc& field);

/// Audit export of the integer coefficient tables as nested JSON arrays
/// (c[k][k'][r], m[j][i] for p odd, r_neg[k][i], d[i][j][k], f[i][j][k]),
/// all indices 1-based in the arrays' nesting order.
std::string coefficient_tables_to_json(const FiniteField& F,
                                       const CoefficientTables& T);

/// Full presentation with generators, relators, block counts and the fixed
/// sign/normalization conventions.  Rank-2 families name their nodes
/// ("s1"/"s2", "alpha"/"beta"); affine presentations use integer node ids.
std::string presentation_to_json(const Presentation& pres);
Presentation presentation_from_json(const std::string& text);

/// Plain-text format: header lines, then one relator per line made of
/// space-separated letters x<node>_<k>^<exp>.  The exact grammar is
/// documented in the README.
std::string presentation_to_text(const Presentation& pres);

std::string certification_to_json(const CertificationResult& res);

std::string cover_to_json(const CoverSpec& spec, const CoverReport& report);

}  // namespace chevpres
