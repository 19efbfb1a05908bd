#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chevpres/ffield.hpp"
#include "chevpres/rootsys.hpp"
#include "chevpres/word.hpp"

namespace chevpres {

/// Generator x_node(v_k).  For the rank-2 families node 0 is the first root
/// (s_1 resp. alpha) and node 1 the second (s_2 resp. beta); for affine
/// presentations node ids are the diagram's node ids.
struct GeneratorSymbol {
  int node;
  int k;  // basis index, 1..a
  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

enum class Family : std::uint8_t {
  abelian_rootgroup,
  sl3_sylow,
  sp4_sylow,
  sp4_sylow_even,
  affine_uplus,
  hall_glue,
  custom
};

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct FieldDesc {
  int p = 0;
  int a = 0;
  std::vector<int> modulus;  // low-to-high, monic

  static FieldDesc of(const FiniteField& F) {
    return {F.p(), F.a(), F.modulus()};
  }
};

struct DiagramDesc {
  BaseType base;
  int rank;
  bool affine;
};

struct PresentationMeta {
  Family family = Family::custom;
  FieldDesc field;
  std::optional<DiagramDesc> diagram;
  /// Relator counts per family block, in emission order.
  std::vector<std::pair<std::string, long long>> blocks;
};

struct Presentation {
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators;
  PresentationMeta meta;

  long long d_count() const { return static_cast<long long>(generators.size()); }
  long long r_count() const { return static_cast<long long>(relators.size()); }
  /// Index of x_node(v_k); -1 if absent.
  int find_gen(int node, int k) const;
  long long block_count(const std::string& name) const;
};

/// <{x(v_k)} | x(v_k)^p, [x(v_k), x(v_k')]> — one root subgroup, F_q as
/// an abelian p-group.  a generators, a(a+1)/2 relators.
Presentation present_abelian_rootgroup(const FiniteField& F);

/// Sylow p-subgroup of SL_3(F_q) on 2a generators with 2a(a+1) relators,
/// families (A1)-(A4).  Valid for every p.
Presentation present_sl3_sylow(const FiniteField& F);

/// Sylow p-subgroup of Sp_4(F_q), p odd, on 2a generators with
/// (7a^2+13a)/2 relators, families (C1)-(C11).  The derived symbols
/// x_{alpha+beta} and x_{2alpha+beta} are macro-expanded into words over the
/// 2a generators.
Presentation present_sp4_sylow(const FiniteField& F);

/// p = 2 counterpart: 2a generators, a(a+1) base relators plus an
/// 8a^2-relator commutator block for the positive-root C2 group.  Requires
/// q >= 4 (the expansion needs a basis element outside F_2).
Presentation present_sp4_sylow_even(const FiniteField& F);

struct ExtensionData {
  Presentation pres_N;
  Presentation pres_H;
  /// conj[i][j] = words over N-generators with g_i n_j g_i^-1 = V[i][j] and
  /// g_i^-1 n_j g_i = U[i][j], indices 0-based over H- resp. N-generators.
  std::vector<std::vector<Word>> V, U;
  /// One word over N-generators per H-relator W_i, with W_i(g) = lift_i(n).
  std::vector<Word> lifts;
};

/// P. Hall's gluing: a presentation of the extension of H by N, with
/// r(N) + 2 d(H) d(N) + r(H) relators.  H-generators keep their k and get
/// node ids shifted past N's largest node id.
Presentation hall_glue(const ExtensionData& ext);

struct AffineOptions {
  /// The amalgamation hypothesis behind the construction needs q >= 16; allow
  /// smaller fields when only relator counts are of interest.
  bool allow_small_q = false;
};

/// Presentation of U_+ of the affine Kac-Moody group over F_q attached to
/// the completed diagram: a(l+1) generators, per-node blocks plus per-pair
/// blocks by rank-2 type.  C2 pairs take the odd (C-family) block for p odd
/// and the 8a^2 commutator block for p = 2.
Presentation present_affine_uplus(const DynkinDiagram& diag,
                                  const FiniteField& F,
                                  const AffineOptions& opts = {});

struct AbelianizationRank {
  int rank;     // rank of the exponent-sum matrix mod p
  int d_lower;  // #generators - rank
};

/// Rank over F_p of the relator-by-generator exponent-sum matrix, and the
/// resulting minimal generator count of the mod-p abelianization.
AbelianizationRank mod_p_abelianization_rank(const Presentation& pres, int p);

}  // namespace chevpres
