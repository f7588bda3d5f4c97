#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gitkit/arith.hpp"
#include "gitkit/cone.hpp"
#include "gitkit/downgrade.hpp"
#include "gitkit/polyhedron.hpp"

namespace gitkit {

struct BaseRay {
  std::string label;  // rho_0, rho_1, ... in lexicographic order of generators
  IntVector generator;
};

/// Toric variety given by a fan in N''_Q with labeled torus-invariant prime
/// divisors.
struct ToricBase {
  std::size_t rank = 0;
  std::vector<BaseRay> rays;
  std::vector<Cone> fan;  // every cone of the fan, in table order
  bool complete = false;

  std::vector<Cone> maximal_cones() const;
  std::optional<std::size_t> ray_index(std::span<const Integer> generator) const;
};

/// Coefficients of a divisor, parallel to the rays of its base.
using RationalDivisor = std::vector<Rational>;

/// Σ Δ_ρ ⊗ D_ρ over the rays of a toric base; coefficients are parallel to
/// base.rays and all share `tail`.
struct PolyhedralDivisor {
  ToricBase base;
  Cone tail;
  std::vector<TailedPolyhedron> coefficients;

  std::size_t coefficient_rank() const { return tail.rank(); }
};

/// Fan of Y': the common refinement of the projections p(F) of the faces of σ.
ToricBase quotient_fan(const Cone& sigma, const SubtorusData& s);

/// Integral right inverse of p, each column reduced modulo ker p.
IntMatrix choose_section(const SubtorusData& s);

/// N = E(N') ⊕ S(N''): x = E π(x) + S p(x).
struct Splitting {
  IntMatrix section;     // S, n x n''
  IntMatrix projection;  // π, n' x n
};

/// Throws InvalidInput unless p S = I.
Splitting make_splitting(const SubtorusData& s, const IntMatrix& section);
Splitting make_splitting(const SubtorusData& s);

/// Δ_ρ = π(σ ∩ p^{-1}(v_ρ)), tail = π(σ ∩ ker p). Throws NotEffective when the
/// quotient torus does not act effectively.
PolyhedralDivisor downgrade_ppdivisor(const Downgrade& d);
PolyhedralDivisor downgrade_ppdivisor(const Downgrade& d, const Splitting& splitting);

/// 𝔇(u)_ρ = min over Δ_ρ of <u, .>; throws Unbounded outside the dual of the tail.
RationalDivisor evaluate(const PolyhedralDivisor& pp, std::span<const Integer> u);

/// (1/k) 𝔇(kv) for k the saturation factor of v. Throws BoundExhausted when
/// no k is found within the certified bound.
RationalDivisor homogenized_evaluate(const PolyhedralDivisor& pp, const Downgrade& d, std::span<const Integer> v);

bool tail_matches_weight_cone(const PolyhedralDivisor& pp, const Downgrade& d);

struct FiberCheck {
  IntVector degree;
  std::size_t fiber_count = 0;    // #{u in σ^v ∩ M : i(u) = v}
  std::size_t section_count = 0;  // lattice points of the section polyhedron of 𝔇(v)
  bool truncated = false;
  bool agrees = false;
};

struct ReconstructionReport {
  unsigned box = 0;
  std::vector<FiberCheck> fibers;  // degrees in lexicographic order
  std::size_t mismatches = 0;
  bool passed() const { return mismatches == 0; }
};

/// Compares graded dimensions of the original ring and of the ring of the
/// pp-divisor for all v in i(ω) ∩ [-box, box]^n'. Unbounded fibers are counted
/// with |w_j| <= box in the coordinates w = S^T u.
ReconstructionReport verify_reconstruction(const Downgrade& d, const PolyhedralDivisor& pp, unsigned box);
ReconstructionReport verify_reconstruction(const Downgrade& d, const PolyhedralDivisor& pp,
                                           const Splitting& splitting, unsigned box);

enum class Verdict { Yes, No, Undecided };
const char* to_string(Verdict v);

struct ProperSample {
  IntVector degree;
  bool interior = false;
  Verdict cartier = Verdict::Undecided;
  Verdict semiample = Verdict::Undecided;
  Verdict big = Verdict::Undecided;  // decided only for interior samples
};

struct ProperReport {
  Verdict verdict = Verdict::Undecided;
  std::vector<ProperSample> samples;
};

/// Samples the relative interior of every face of the dual of the tail.
ProperReport check_proper(const PolyhedralDivisor& pp);

}  // namespace gitkit
