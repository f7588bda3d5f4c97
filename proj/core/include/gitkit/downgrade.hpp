#pragma once

// Restriction of the big-torus action to a subtorus T' ⊂ T. With N' ⊆ N the
// cocharacter lattice of T', the character lattices fit into
// 0 -> M'' -> M -> M' -> 0 with i : M -> M' the transpose of the embedding
// and p : N -> N'' = N/N' the dual of M'' -> M.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gitkit/arith.hpp"
#include "gitkit/cone.hpp"
#include "gitkit/toric_git.hpp"

namespace gitkit {

struct SubtorusData {
  IntMatrix embedding;      // n x n', columns = images of a basis of N'
  IntMatrix character_map;  // i, n' x n
  IntMatrix kernel;         // n x n'', columns = basis of M''
  IntMatrix projection;     // p, n'' x n

  std::size_t rank() const { return embedding.rows(); }
  std::size_t sub_rank() const { return character_map.rows(); }
  std::size_t quotient_rank() const { return projection.rows(); }
};

/// Throws NotInjective for rank-deficient embeddings and NotSaturated (naming
/// the first invariant factor > 1) when N/N' has torsion.
SubtorusData analyze_subtorus(const IntMatrix& embedding);
SubtorusData analyze_subtorus(std::span<const IntVector> columns, std::size_t rank);

/// Toric data together with a subtorus and the images i(F) of all orbit cones.
class Downgrade {
 public:
  Downgrade(AffineToricData toric, SubtorusData subtorus);

  const AffineToricData& toric() const noexcept { return toric_; }
  const SubtorusData& subtorus() const noexcept { return subtorus_; }
  /// i(F) for every orbit cone F, indexed by orbit cone id.
  const std::vector<Cone>& image_cones() const noexcept { return images_; }

 private:
  AffineToricData toric_;
  SubtorusData subtorus_;
  std::vector<Cone> images_;
};

Cone downgraded_weight_cone(const Downgrade& d);

/// {F : v ∈ i(F)}; empty when v lies outside i(ω).
SemistableLocus downgraded_semistable(const Downgrade& d, std::span<const Integer> v);

/// Union of X^ss(u) over u = Σ α_j u_j with 0 <= α_j <= bound and
/// i(u) ∈ Z_{>0} v (u = 0 included when v = 0).
struct PropUnion {
  SemistableLocus locus;
  std::vector<IntVector> representatives;  // contributing u, sorted
};
PropUnion prop_union(const Downgrade& d, std::span<const Integer> v, unsigned bound);

struct UnionTerm {
  IntVector degree;             // sum of the generators on a minimal face
  SemistableLocus locus;
  bool degree_on_ray = false;   // i(degree) ∈ Z_{>0} v
};

/// Writes locus'(v) as a union of T-loci: one term per minimal face of locus'(v).
std::vector<UnionTerm> union_decomposition(const Downgrade& d, std::span<const Integer> v);

/// ∩ {i(F) : v ∈ i(F)}. Throws EmptyClass outside i(ω).
Cone downgraded_git_cone(const Downgrade& d, std::span<const Integer> v);

/// ∩ i(λ_T(u)) over the same bounded set of u as prop_union. Throws EmptyClass
/// when that set is empty.
Cone prop_git_cone(const Downgrade& d, std::span<const Integer> v, unsigned bound);

struct DowngradedRow {
  IntVector representative;
  Cone cone;
  SemistableLocus locus;
  std::vector<UnionTerm> decomposition;
};

struct DowngradedGITData {
  Cone weight_cone;
  std::vector<Cone> orbit_cones;  // distinct images i(F), in table order
  std::vector<DowngradedRow> table;
  bool bijective = false;
  bool order_reversing = false;
  bool quasi_fan = false;
  std::vector<Cone> cones() const;
};

DowngradedGITData downgraded_git_fan(const Downgrade& d);

struct EffectivenessCertificate {
  bool effective = false;
  std::size_t quotient_rank = 0;          // rank of M''
  std::size_t spanned_rank = 0;           // rank reached by the differences
  std::vector<IntVector> differences;     // independent u - u' with i(u) = i(u')
  std::vector<IntVector> unspanned;       // basis of M''_Q modulo the span, when not effective
};

EffectivenessCertificate check_effective_quotient_action(const Downgrade& d);

/// A claimed row "X^ss(v) = ∪ X^ss(u_j) <-> Cone(generators)".
struct DowngradeClaim {
  IntVector degree;
  std::vector<IntVector> union_degrees;
  std::vector<IntVector> cone_generators;
};

ClaimCheck check_downgrade_claims(const Downgrade& d, std::span<const DowngradeClaim> claims);

}  // namespace gitkit
