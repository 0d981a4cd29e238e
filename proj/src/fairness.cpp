#include "modrep/fairness.hpp"

#include <algorithm>
#include <sstream>

#include "modrep/error.hpp"
#include "modrep/field.hpp"

namespace modrep {

WitnessReport fairness_witness_search(const Subgroup& ambient, const Subgroup& k, const Subgroup& h,
                                      const Subgroup& h_prime) {
  if (!h_prime.is_subgroup_of(h)) throw PreconditionError("fairness_witness_search: H' is not contained in H");
  if (!h.is_subgroup_of(k)) throw PreconditionError("fairness_witness_search: H is not contained in K");
  if (!k.is_subgroup_of(ambient)) throw PreconditionError("fairness_witness_search: K is not contained in G");
  WitnessReport report{WitnessReport::Outcome::exhausted, std::nullopt, ambient, k, h, h_prime, std::nullopt};
  for (GroupElement g : ambient.members()) {
    Subgroup big = conjugate_intersect(k, h, g);
    if (big == conjugate_intersect(k, h_prime, g)) {
      report.outcome = WitnessReport::Outcome::witness_found;
      report.g = g;
      report.intersection = std::move(big);
      break;
    }
  }
  return report;
}

CentralRefinement central_refinement(const GroupPtr& g, const Subgroup& k, const Subgroup& h) {
  if (!h.is_subgroup_of(k)) throw PreconditionError("central_refinement: H is not contained in K");
  const Subgroup zh = intersect(center(g), h);
  if (zh.order() == 1) throw PreconditionError("central_refinement: Z(G) ∩ H is trivial");
  CentralRefinement out;
  for (GroupElement x : zh.members()) {
    if (x != g->identity()) {
      out.z = x;
      break;
    }
  }
  // all_subgroups is sorted by (order, members); take the first of the
  // largest order that avoids z.
  std::optional<Subgroup> best;
  for (Subgroup& s : all_subgroups(h)) {
    if (s.contains(out.z)) continue;
    if (!best || s.order() > best->order()) best = std::move(s);
  }
  out.h_prime = std::move(*best);
  return out;
}

DepthTriple sl2_depth_intersect(unsigned m, unsigned n, unsigned a) {
  if (m < 1 || n < 1) throw PreconditionError("sl2_depth_intersect: depths must be at least 1");
  const long lm = m, ln = n, la = a;
  return DepthTriple{static_cast<unsigned>(std::max(lm, ln + 2 * la)), static_cast<unsigned>(std::max(lm, ln)),
                     static_cast<unsigned>(std::max(lm, ln - 2 * la))};
}

std::string DepthExpr::str() const {
  std::ostringstream os;
  os << "max(" << floor << ", " << base;
  if (slope > 0) os << " + " << slope << "a";
  if (slope < 0) os << " - " << -slope << "a";
  os << ")";
  return os.str();
}

namespace {

long ceil_div(long num, long den) { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }

// First a >= 0 from which the expression is affine in a.
long affine_from(const DepthExpr& e) {
  if (e.slope > 0) return std::max(0L, ceil_div(e.floor - e.base, e.slope));
  if (e.slope < 0) return std::max(0L, ceil_div(e.base - e.floor, -e.slope));
  return 0;
}

// Affine form (intercept, slope) valid for a >= affine_from(e).
std::pair<long, long> tail(const DepthExpr& e) {
  if (e.slope > 0) return {e.base, e.slope};
  if (e.slope < 0) return {e.floor, 0};
  return {std::max(e.floor, e.base), 0};
}

bool compare_for_all(const DepthExpr& lhs, const DepthExpr& rhs, bool strict) {
  const long t = std::max(affine_from(lhs), affine_from(rhs));
  for (long a = 0; a <= t; ++a) {
    const long d = lhs.at(a) - rhs.at(a);
    if (strict ? d <= 0 : d < 0) return false;
  }
  const auto [li, ls] = tail(lhs);
  const auto [ri, rs] = tail(rhs);
  // Past t the difference is affine with slope ls - rs; its value at t was
  // checked above, so it stays on the right side iff it does not decrease.
  (void)li;
  (void)ri;
  return ls - rs >= 0;
}

}  // namespace

bool strictly_greater_for_all_a(const DepthExpr& lhs, const DepthExpr& rhs) { return compare_for_all(lhs, rhs, true); }
bool greater_equal_for_all_a(const DepthExpr& lhs, const DepthExpr& rhs) { return compare_for_all(lhs, rhs, false); }

bool FairnessCertificate::valid() const {
  if (n_prime <= n) return false;
  bool strict = false;
  for (const auto& c : components) {
    if (!c.weak_for_all_a) return false;
    strict = strict || c.strict_for_all_a;
  }
  return strict;
}

FairnessCertificate sl2_fair_refine(unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw PreconditionError("sl2_fair_refine: depths must be at least 1");
  FairnessCertificate cert;
  cert.m = m;
  cert.n = n;
  cert.n_prime = std::max(m, n) + 1;
  const long lm = m, ln = n, lnp = cert.n_prime;
  const struct {
    const char* name;
    long slope;
  } parts[] = {{"upper", 2}, {"torus", 0}, {"lower", -2}};
  for (const auto& part : parts) {
    CertificateComponent c;
    c.name = part.name;
    c.lhs = DepthExpr{lm, lnp, part.slope};
    c.rhs = DepthExpr{lm, ln, part.slope};
    c.strict_for_all_a = strictly_greater_for_all_a(c.lhs, c.rhs);
    c.weak_for_all_a = greater_equal_for_all_a(c.lhs, c.rhs);
    c.a_independent = part.slope == 0;
    cert.components.push_back(std::move(c));
  }
  for (const auto& c : cert.components) {
    if (c.strict_for_all_a && c.a_independent) {
      cert.strict_component = c.name;
      break;
    }
  }
  cert.reduction_note =
      "G = K_0 Z+ K_0 with K_m, K_n normal in K_0, so K_m ∩ g K_n g^-1 is K_0-conjugate to "
      "K_m ∩ z K_n z^-1 for z = diag(p^a, p^-a), a >= 0; depths compared componentwise "
      "(upper, torus, lower)";
  return cert;
}

std::optional<std::string> sl2_precision_violation(unsigned level, unsigned m, unsigned n, unsigned a) {
  if (m < 1 || n < 1) return "m >= 1 and n >= 1";
  if (n + 2 * a > level) {
    return "n + 2a <= N (n + 2a = " + std::to_string(n + 2 * a) + ", N = " + std::to_string(level) + ")";
  }
  if (m >= level) return "m < N (m = " + std::to_string(m) + ", N = " + std::to_string(level) + ")";
  if (m + 2 * a > level) {
    return "m + 2a <= N (m + 2a = " + std::to_string(m + 2 * a) + ", N = " + std::to_string(level) + ")";
  }
  return std::nullopt;
}

namespace {

std::uint64_t mod_inverse(std::uint64_t x, std::uint64_t mod) {
  // x is a unit mod p^N; extended Euclid on signed values.
  long long t = 0, new_t = 1, r = static_cast<long long>(mod), new_r = static_cast<long long>(x % mod);
  while (new_r != 0) {
    const long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<long long>(mod);
  return static_cast<std::uint64_t>(t);
}

unsigned valuation(std::uint64_t x, unsigned p, unsigned precision) {
  if (x == 0) return precision;
  unsigned v = 0;
  while (x % p == 0 && v < precision) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace

DepthTriple sl2_depth_bruteforce(unsigned p, unsigned level, unsigned m, unsigned n, unsigned a, std::size_t cap) {
  if (!is_prime(p)) throw PreconditionError("sl2_depth_bruteforce: p must be prime");
  if (auto v = sl2_precision_violation(level, m, n, a)) {
    throw PreconditionError("sl2_depth_bruteforce: precision requires " + *v);
  }
  std::uint64_t mod = 1, pn = 1, pm = 1, p2a = 1, free = 1;
  for (unsigned i = 0; i < level; ++i) mod *= p;
  for (unsigned i = 0; i < n; ++i) pn *= p;
  for (unsigned i = 0; i < m; ++i) pm *= p;
  for (unsigned i = 0; i < 2 * a; ++i) p2a *= p;
  for (unsigned i = n; i < level; ++i) free *= p;
  if (free * free * free > cap) {
    throw CapExceeded("sl2_depth_bruteforce: |K_n| = " + std::to_string(free * free * free) + " exceeds cap");
  }
  const unsigned lower_precision = level - 2 * a;
  DepthTriple out{level, level, lower_precision};
  for (std::uint64_t x = 0; x < free; ++x) {
    const std::uint64_t ea = (1 + pn * x) % mod;
    const std::uint64_t ea_inv = mod_inverse(ea, mod);
    for (std::uint64_t y = 0; y < free; ++y) {
      const std::uint64_t eb = (pn * y) % mod;
      for (std::uint64_t z = 0; z < free; ++z) {
        const std::uint64_t ec = (pn * z) % mod;
        const std::uint64_t ed = ((1 + eb * ec % mod) % mod) * ea_inv % mod;
        if (ec % p2a != 0) continue;
        const std::uint64_t upper = eb * p2a % mod;
        const std::uint64_t lower = ec / p2a;
        const std::uint64_t am1 = (ea + mod - 1) % mod, dm1 = (ed + mod - 1) % mod;
        if (am1 % pm != 0 || dm1 % pm != 0 || upper % pm != 0 || lower % pm != 0) continue;
        out.upper = std::min(out.upper, valuation(upper, p, level));
        out.torus = std::min({out.torus, valuation(am1, p, level), valuation(dm1, p, level)});
        out.lower = std::min(out.lower, valuation(lower, p, lower_precision));
      }
    }
  }
  return out;
}

}  // namespace modrep
