#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace modrep {

/// An element of a finite field, stored as its base-p code
/// c = sum_i coeff_i * p^i over the polynomial basis 1, x, ..., x^{k-1}.
struct Scalar {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

/// Polynomial over Z/p, coefficients from the constant term upward.
using Poly = std::vector<unsigned>;

bool is_prime(unsigned n);

/// F_{p^k} = (Z/p)[x] / (modulus). Immutable once built; share through
/// FieldPtr.
class FiniteField {
 public:
  /// Builds F_{p^k}. Without a modulus the smallest monic irreducible of
  /// degree k is used, ordering candidates by their coefficients from
  /// x^{k-1} down to x^0. Throws InputError for non-prime p or a
  /// reducible / malformed modulus.
  static std::shared_ptr<const FiniteField> create(
      unsigned p, unsigned k = 1, std::optional<Poly> modulus = std::nullopt);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  /// Monic modulus including the leading 1; length k + 1.
  const Poly& modulus() const { return modulus_; }
  std::string name() const;

  Scalar zero() const { return Scalar{0}; }
  Scalar one() const { return Scalar{1}; }
  /// Image of an integer under Z -> F_p -> F.
  Scalar from_int(long long v) const;
  Scalar from_coeffs(std::span<const unsigned> coeffs) const;
  Poly coeffs(Scalar a) const;
  /// The element with the given code; codes enumerate the field 0..q-1.
  Scalar element(std::uint32_t code) const { return Scalar{code}; }

  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const;
  Scalar mul(Scalar a, Scalar b) const;
  /// Throws PreconditionError on zero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t e) const;
  /// Multiplicative order of a nonzero element.
  std::uint32_t mult_order(Scalar a) const;

  bool operator==(const FiniteField& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

 private:
  FiniteField(unsigned p, unsigned k, Poly modulus);
  Scalar poly_mul(Scalar a, Scalar b) const;

  unsigned p_;
  unsigned k_;
  std::uint32_t q_;
  Poly modulus_;
  // Tables for small extension fields; prime fields compute directly.
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> neg_table_;
  std::vector<std::uint16_t> inv_table_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// True when both pointers describe the same field.
inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Monic irreducibility over Z/p by trial division with every monic
/// polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& monic, unsigned p);

}  // namespace modrep
