#include "modrep/field.hpp"

#include <algorithm>
#include <sstream>

#include "modrep/error.hpp"

namespace modrep {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kTableOrder = 1024;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m, over Z/p.
Poly poly_rem(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly monic_from_code(std::uint64_t code, unsigned p, unsigned deg) {
  Poly poly(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    poly[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  poly[deg] = 1;
  return poly;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const Poly& monic, unsigned p) {
  const unsigned deg = static_cast<unsigned>(monic.size()) - 1;
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t c = 0; c < count; ++c) {
      if (poly_rem(monic, monic_from_code(c, p, d), p).empty()) return false;
    }
  }
  return true;
}

FieldPtr FiniteField::create(unsigned p, unsigned k, std::optional<Poly> modulus) {
  if (!is_prime(p)) {
    throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (k < 1) throw InputError("field degree must be at least 1");
  if (ipow(p, k) > kMaxOrder) {
    throw InputError("field order " + std::to_string(p) + "^" + std::to_string(k) +
                     " exceeds supported maximum");
  }
  Poly mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != k + 1 || mod.back() != 1) {
      throw InputError("modulus must be monic of degree " + std::to_string(k));
    }
    for (unsigned c : mod) {
      if (c >= p) throw InputError("modulus coefficient out of range");
    }
    if (!is_irreducible(mod, p)) throw InputError("modulus is reducible");
  } else if (k == 1) {
    mod = {0, 1};
  } else {
    // Scan codes so that the x^{k-1} coefficient is the most significant digit.
    const std::uint64_t count = ipow(p, k);
    bool found = false;
    for (std::uint64_t c = 0; c < count && !found; ++c) {
      Poly cand = monic_from_code(c, p, k);
      if (cand[0] != 0 && is_irreducible(cand, p)) {
        mod = std::move(cand);
        found = true;
      }
    }
    if (!found) throw Error("no irreducible polynomial found");
  }
  return FieldPtr(new FiniteField(p, k, std::move(mod)));
}

FiniteField::FiniteField(unsigned p, unsigned k, Poly modulus)
    : p_(p), k_(k), q_(static_cast<std::uint32_t>(ipow(p, k))), modulus_(std::move(modulus)) {
  if (k_ > 1 && q_ <= kTableOrder) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    neg_table_.resize(q_);
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t sum = 0, scale = 1, x = a, y = b;
        for (unsigned i = 0; i < k_; ++i) {
          sum += ((x % p_ + y % p_) % p_) * scale;
          x /= p_;
          y /= p_;
          scale *= p_;
        }
        add_table_[a * q_ + b] = static_cast<std::uint16_t>(sum);
        const std::uint32_t prod = poly_mul(Scalar{a}, Scalar{b}).code;
        mul_table_[a * q_ + b] = static_cast<std::uint16_t>(prod);
        if (sum == 0) neg_table_[a] = static_cast<std::uint16_t>(b);
        if (prod == 1) inv_table_[a] = static_cast<std::uint16_t>(b);
      }
    }
  }
}

std::string FiniteField::name() const {
  std::ostringstream os;
  os << "F_" << q_;
  return os.str();
}

Scalar FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar{static_cast<std::uint32_t>(r)};
}

Scalar FiniteField::from_coeffs(std::span<const unsigned> coeffs) const {
  if (coeffs.size() != k_) throw InputError("scalar must have " + std::to_string(k_) + " residues");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw InputError("residue out of range");
    code = code * p_ + coeffs[i];
  }
  return Scalar{code};
}

Poly FiniteField::coeffs(Scalar a) const {
  Poly out(k_);
  std::uint32_t c = a.code;
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

Scalar FiniteField::add(Scalar a, Scalar b) const {
  if (k_ == 1) return Scalar{(a.code + b.code) % p_};
  if (!add_table_.empty()) return Scalar{add_table_[a.code * q_ + b.code]};
  std::uint32_t sum = 0, scale = 1, x = a.code, y = b.code;
  for (unsigned i = 0; i < k_; ++i) {
    sum += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Scalar{sum};
}

Scalar FiniteField::neg(Scalar a) const {
  if (k_ == 1) return Scalar{(p_ - a.code) % p_};
  if (!neg_table_.empty()) return Scalar{neg_table_[a.code]};
  std::uint32_t out = 0, scale = 1, x = a.code;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return Scalar{out};
}

Scalar FiniteField::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar FiniteField::mul(Scalar a, Scalar b) const {
  if (k_ == 1) {
    return Scalar{static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.code) * b.code) % p_)};
  }
  if (!mul_table_.empty()) return Scalar{mul_table_[a.code * q_ + b.code]};
  return poly_mul(a, b);
}

Scalar FiniteField::poly_mul(Scalar a, Scalar b) const {
  const Poly x = coeffs(a), y = coeffs(b);
  Poly prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  }
  Poly r = poly_rem(std::move(prod), modulus_, p_);
  r.resize(k_, 0);
  return from_coeffs(r);
}

Scalar FiniteField::inv(Scalar a) const {
  if (a.code == 0) throw PreconditionError("inverse of zero");
  if (!inv_table_.empty()) return Scalar{inv_table_[a.code]};
  // a^{q-2} = a^{-1} in F_q.
  return pow(a, q_ - 2);
}

Scalar FiniteField::pow(Scalar a, std::uint64_t e) const {
  Scalar result = one();
  Scalar base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t FiniteField::mult_order(Scalar a) const {
  if (a.code == 0) throw PreconditionError("zero has no multiplicative order");
  std::uint32_t n = 1;
  Scalar x = a;
  while (x != one()) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

}  // namespace modrep
