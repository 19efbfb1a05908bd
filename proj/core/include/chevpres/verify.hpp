#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chevpres/enumerate.hpp"
#include "chevpres/matrix_model.hpp"
#include "chevpres/presentation.hpp"
#include "chevpres/todd_coxeter.hpp"

namespace chevpres {

struct VerifyReport {
  long long checked = 0;
  std::vector<int> failures;  // relator indices
  bool ok() const { return failures.empty(); }
};

/// Evaluates every relator in the model under the given role map; a relator
/// fails when its product is not the identity matrix.
VerifyReport verify_presentation(const MatrixModel& model, const RoleMap& roles,
                                 const Presentation& pres);

/// Role-map convention for the rank-2 families (node 0 -> alpha, 1 -> beta).
VerifyReport verify_presentation(const MatrixModel& model,
                                 const Presentation& pres);

/// Pair-local verification of an affine U_+ presentation: each relator's
/// support lies in a single node pair {i, j} and is evaluated in the rank-2
/// model of classify_pair(i, j) (C2 pairs map the short root to alpha).
VerifyReport verify_affine_presentation(const DynkinDiagram& diag,
                                        const Presentation& pres);

/// Corruption that provably breaks a valid relator: one generator letter is
/// appended (equivalently, the trailing exponent shifts by one), so the
/// corrupted relator evaluates to a root element instead of the identity.
Presentation corrupt_relator(const Presentation& pres, int relator_index);

struct LawReport {
  long long triples = 0;
  long long failures = 0;
  bool ok() const { return failures == 0; }
};

/// Checks [a,bc] = [a,b][a,c]^b and the Hall-Witt identity
/// [[y,x^-1],z^-1]^{y^-1} [[z,y^-1],x^-1]^{z^-1} [[x,z^-1],y^-1]^{x^-1} = 1
/// on `samples` seeded random triples from the model group.
LawReport commutator_identity_suite(const MatrixModel& model,
                                    long long samples, std::uint64_t seed);

/// Exhaustive instances of Claim 2.1 in the C2 model over all field pairs:
///   1. [x_b(t), x_{2a+b}(u)] = 1
///   2. [[x_a(s), x_b(t)], x_b(u)] = 1
///   3. [x_{a+b}(s), x_b(t)] = 1
LawReport claim_21_instances(const MatrixModel& c2_model);

/// Aggregate certification data for the report files.
struct CertificationResult {
  std::string family;
  long long q = 0;
  long long relators_checked = 0;
  std::vector<int> failures;
  std::optional<long long> order_closure;
  std::optional<long long> order_tc;  // nullopt = not run; -1 = overflow
  std::optional<int> d_frattini;
  bool ok = true;
};

struct CertificationOptions {
  bool run_closure = false;
  bool run_todd_coxeter = false;
  bool run_frattini = false;
  long long closure_cap = 0;   // 0: derive 2 q^4 default
  long long max_cosets = 0;    // 0: derive from expected order
};

/// Runs relator verification plus the requested order/generator-count
/// certificates for a rank-2 family presentation.
CertificationResult certify(const Presentation& pres,
                            const CertificationOptions& opts);

}  // namespace chevpres
