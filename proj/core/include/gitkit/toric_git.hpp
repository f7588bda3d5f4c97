#pragma once

// GIT data of an affine toric variety X = Spec C[σ^v ∩ M] under its big
// torus. Points of X are never materialized: a point is classified by its
// orbit cone, and the orbit cones are exactly the faces of σ^v. Semistable
// loci are therefore sets of faces.

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gitkit/arith.hpp"
#include "gitkit/cone.hpp"
#include "gitkit/semigroup.hpp"

namespace gitkit {

struct OrbitCone {
  std::size_t id = 0;
  Face face;                                   // face of σ^v
  std::vector<std::size_t> generator_indices;  // generators lying on the face
};

/// σ, its dual and the monoid generators of σ^v ∩ M. The face lattice of σ^v
/// is computed once, at construction.
class AffineToricData {
 public:
  static AffineToricData from_rays(std::span<const IntVector> rays, std::size_t rank);
  static AffineToricData from_cone(const Cone& sigma);

  std::size_t rank() const noexcept { return sigma_.rank(); }
  const Cone& sigma() const noexcept { return sigma_; }
  const Cone& sigma_dual() const noexcept { return sigma_dual_; }
  /// Hilbert basis of σ^v ∩ M when σ is full-dimensional; otherwise the
  /// minimal monoid generators (which include ± a basis of σ^⊥).
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  const std::vector<OrbitCone>& orbit_cones() const noexcept { return orbit_cones_; }

 private:
  Cone sigma_;
  Cone sigma_dual_;
  std::vector<IntVector> generators_;
  std::vector<OrbitCone> orbit_cones_;
};

class SemistableLocus {
 public:
  SemistableLocus() = default;
  explicit SemistableLocus(std::size_t universe) : members_(universe) {}

  void insert(std::size_t id) { members_.set(id); }
  bool contains(std::size_t id) const { return members_.test(id); }
  std::size_t size() const { return members_.count(); }
  bool empty() const { return members_.none(); }
  std::size_t universe() const { return members_.size(); }
  bool is_subset_of(const SemistableLocus& other) const { return members_.is_subset_of(other.members_); }
  std::vector<std::size_t> ids() const;

  SemistableLocus& operator|=(const SemistableLocus& other) {
    members_ |= other.members_;
    return *this;
  }
  friend bool operator==(const SemistableLocus& a, const SemistableLocus& b) { return a.members_ == b.members_; }
  friend bool operator<(const SemistableLocus& a, const SemistableLocus& b) { return a.members_ < b.members_; }

 private:
  boost::dynamic_bitset<> members_;
};

const std::vector<OrbitCone>& orbit_cones(const AffineToricData& t);
std::vector<IntVector> orbit_monoid(const AffineToricData& t, const OrbitCone& o);
/// Rows: HNF basis of the lattice generated by the orbit monoid.
IntMatrix orbit_lattice(const AffineToricData& t, const OrbitCone& o);
Cone weight_cone(const AffineToricData& t);

/// Orbit cones containing u; empty outside the weight cone.
SemistableLocus semistable_locus(const AffineToricData& t, std::span<const Integer> u);
/// Intersection of the orbit cones containing u. Throws EmptyClass outside
/// the weight cone.
Cone git_cone(const AffineToricData& t, std::span<const Integer> u);

/// True when the locus is upward closed in the face lattice of σ^v.
bool is_upward_closed(const AffineToricData& t, const SemistableLocus& locus);

/// Sum of the generators lying on an orbit cone; a lattice point of its
/// relative interior.
IntVector orbit_cone_representative(const AffineToricData& t, const OrbitCone& o);

struct GitRow {
  IntVector representative;
  std::vector<std::size_t> representative_subset;  // generator indices summed
  Cone cone;
  SemistableLocus locus;
};

struct GITData {
  std::vector<GitRow> table;  // one row per GIT cone, in table order
  bool bijective = false;
  bool order_reversing = false;
  bool quasi_fan = false;
  std::vector<Cone> cones() const;
};

GITData git_fan(const AffineToricData& t);

/// Checks that GIT cone -> locus is injective and that cone inclusion
/// reverses locus inclusion on every pair. Returns {bijective, order_reversing}.
std::pair<bool, bool> check_correspondence(std::span<const Cone> cones, std::span<const SemistableLocus> loci);

inline constexpr std::size_t kMaxPosetGenerators = 16;

/// The 2^k formal subsets of the generators with their sums, ordered by
/// v >= w iff X^ss(v) ⊆ X^ss(w). Loci are shared between elements through
/// classes; `classes_geq` is the relation between distinct loci.
struct SubsetSumPoset {
  std::size_t generator_count = 0;
  std::vector<IntVector> sums;                 // indexed by subset mask
  std::vector<std::size_t> class_of;           // mask -> locus class
  std::vector<SemistableLocus> classes;
  std::vector<std::vector<bool>> classes_geq;  // [a][b]: class a >= class b

  std::size_t size() const { return sums.size(); }
  bool geq(std::uint32_t a, std::uint32_t b) const { return classes_geq[class_of[a]][class_of[b]]; }
  const SemistableLocus& locus(std::uint32_t mask) const { return classes[class_of[mask]]; }
};

SubsetSumPoset subset_sum_poset(const AffineToricData& t);

/// Cone generated by {u_i : v >= u_i} for v the sum of the subset.
Cone git_cone_via_poset(const AffineToricData& t, const SubsetSumPoset& poset, std::uint32_t mask);

struct PosetLemmaEntry {
  std::uint32_t mask = 0;
  IntVector sum;
  Cone lemma_cone;
  Cone definitional_cone;
  bool agrees = false;
};

struct PosetLemmaReport {
  std::vector<PosetLemmaEntry> entries;
  std::size_t agreements = 0;
  std::size_t mismatches = 0;
};

PosetLemmaReport git_equivalence_report(const AffineToricData& t);

/// A claimed row "X^ss(d_0) = X^ss(d_1) = ... <-> Cone(generators)".
struct GitClaim {
  std::vector<IntVector> degrees;
  std::vector<IntVector> cone_generators;
};

struct Discrepancy {
  std::size_t row = 0;
  std::string kind;
  IntVector degree;
  std::string detail;
  std::vector<IntVector> claimed;   // claimed cone generators or degrees
  std::vector<IntVector> computed;  // computed cone rays or degrees
};

struct ClaimCheck {
  std::size_t rows = 0;
  std::size_t matching_rows = 0;
  std::vector<Discrepancy> discrepancies;
};

ClaimCheck check_git_claims(const AffineToricData& t, std::span<const GitClaim> claims);

}  // namespace gitkit
