#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "modrep/group.hpp"

namespace modrep {

// ------------------------------------------------------ finite-level search

/// Result of scanning G for a conjugator that defeats the pair (H, H').
struct WitnessReport {
  enum class Outcome { witness_found, exhausted };
  Outcome outcome = Outcome::exhausted;
  std::optional<GroupElement> g;
  Subgroup ambient, k, h, h_prime;
  /// K ∩ gHg^{-1} (= K ∩ gH'g^{-1}) at the witness.
  std::optional<Subgroup> intersection;

  bool found() const { return outcome == Outcome::witness_found; }
};

/// First g (ascending index) in `ambient` with K ∩ gH'g^{-1} = K ∩ gHg^{-1}.
/// "exhausted" means the inclusion is strict for every g. Requires
/// H' <= H <= K <= ambient.
WitnessReport fairness_witness_search(const Subgroup& ambient, const Subgroup& k, const Subgroup& h,
                                      const Subgroup& h_prime);

struct CentralRefinement {
  GroupElement z = 0;  ///< first nontrivial element of Z(G) ∩ H
  Subgroup h_prime;    ///< largest subgroup of H avoiding z
};

/// H' for groups with nontrivial central part in H. Throws
/// PreconditionError when Z(G) ∩ H is trivial or H is not inside K.
CentralRefinement central_refinement(const GroupPtr& g, const Subgroup& k, const Subgroup& h);

// -------------------------------------------------------------- SL_2 depths

/// Congruence depths (exponents of p) of the upper unipotent, torus and
/// lower unipotent parts of an Iwahori-factorized subgroup of SL_2(Z_p).
struct DepthTriple {
  unsigned upper = 0;
  unsigned torus = 0;
  unsigned lower = 0;

  friend constexpr bool operator==(const DepthTriple&, const DepthTriple&) = default;
  /// Componentwise >=.
  bool dominates(const DepthTriple& o) const {
    return upper >= o.upper && torus >= o.torus && lower >= o.lower;
  }
  /// Componentwise >= with at least one strict component.
  bool strictly_deeper(const DepthTriple& o) const { return dominates(o) && !(*this == o); }
};

/// K_m ∩ z K_n z^{-1} for z = diag(p^a, p^{-a}):
/// (max(m, n + 2a), max(m, n), max(m, n - 2a)). Throws for m or n < 1.
DepthTriple sl2_depth_intersect(unsigned m, unsigned n, unsigned a);

/// max(floor, base + slope * a) as a function of an integer a >= 0.
struct DepthExpr {
  long floor = 0;
  long base = 0;
  long slope = 0;

  long at(long a) const { return std::max(floor, base + slope * a); }
  /// e.g. "max(1, 2 + 2a)"
  std::string str() const;
};

/// lhs(a) > rhs(a) for every integer a >= 0, decided exactly: values are
/// checked up to the last breakpoint, past which both sides are affine.
bool strictly_greater_for_all_a(const DepthExpr& lhs, const DepthExpr& rhs);
bool greater_equal_for_all_a(const DepthExpr& lhs, const DepthExpr& rhs);

struct CertificateComponent {
  std::string name;
  DepthExpr lhs;  ///< depth at n'
  DepthExpr rhs;  ///< depth at n
  bool strict_for_all_a = false;
  bool weak_for_all_a = false;
  bool a_independent = false;
};

/// Proof record that K_m ∩ z K_{n'} z^{-1} is strictly inside
/// K_m ∩ z K_n z^{-1} for every z in Z+.
struct FairnessCertificate {
  std::optional<unsigned> p;
  unsigned m = 0, n = 0, n_prime = 0;
  std::vector<CertificateComponent> components;
  std::string strict_component;
  std::string reduction_note;

  /// n' > n, every component weakly deeper, one strict for all a.
  bool valid() const;
};

/// n' = max(m, n) + 1, the least n' whose torus depth beats the old one.
FairnessCertificate sl2_fair_refine(unsigned m, unsigned n);

inline constexpr std::size_t kSl2BruteforceCap = std::size_t{1} << 20;

/// Enumerates K_n <= SL_2(Z/p^N), conjugates by diag(p^a, p^{-a}) (upper
/// entry times p^{2a}; lower entry must be divisible by p^{2a} and is then
/// divided, leaving it known mod p^{N-2a}), keeps those in K_m and returns
/// the minimal valuations. Requires n + 2a <= N, m < N and m + 2a <= N,
/// so every true depth is at most its reading precision (a zero entry
/// reads as the precision); throws PreconditionError naming the violated
/// inequality.
DepthTriple sl2_depth_bruteforce(unsigned p, unsigned level, unsigned m, unsigned n, unsigned a,
                                 std::size_t cap = kSl2BruteforceCap);

/// Empty when (level, m, n, a) satisfy the oracle's precision bounds,
/// otherwise the violated inequality.
std::optional<std::string> sl2_precision_violation(unsigned level, unsigned m, unsigned n, unsigned a);

}  // namespace modrep
