#pragma once

/// Finite fields GF(p^e) with a bit-exact element encoding.
///
/// An element of a degree-d extension of a base field B is stored as the
/// integer c_0 + c_1*|B| + ... + c_{d-1}*|B|^{d-1}, where c_i are the codes of
/// its polynomial coordinates (constant term first). Because codes nest, the
/// encoding of any element is also its base-p digit expansion, so addition is
/// digit-wise arithmetic mod p at every level of a tower.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "flagforge/error.hpp"

namespace flagforge {

using Element = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Largest order accepted by make_field.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 16;
/// Largest order accepted for internal extensions (GF(q^m) used by Gabidulin codes).
inline constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 20;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

class Field {
 public:
  static FieldPtr prime(std::uint32_t p);
  /// Extension of `base` by the monic polynomial `modulus` (coefficients in
  /// `base`, constant term first). Irreducibility is checked.
  static FieldPtr extension(FieldPtr base, std::vector<Element> modulus,
                            std::uint64_t max_order = kMaxExtensionOrder);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Degree over the immediate base field (1 for a prime field).
  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(modulus_.size() - 1); }
  /// Degree over the prime field.
  std::uint32_t prime_degree() const noexcept {
    return base_ ? degree() * base_->prime_degree() : 1;
  }
  /// Null for prime fields.
  const FieldPtr& base() const noexcept { return base_; }
  std::span<const Element> modulus() const noexcept { return modulus_; }

  bool contains(Element a) const noexcept { return a < q_; }
  static constexpr Element zero() noexcept { return 0; }
  static constexpr Element one() noexcept { return 1; }

  Element add(Element a, Element b) const noexcept {
    if (p_ == 2) return a ^ b;
    Element out = 0;
    Element scale = 1;
    while (a != 0 || b != 0) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  Element neg(Element a) const noexcept {
    if (p_ == 2) return a;
    Element out = 0;
    Element scale = 1;
    while (a != 0) {
      out += ((p_ - a % p_) % p_) * scale;
      a /= p_;
      scale *= p_;
    }
    return out;
  }

  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Element inv(Element a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element pow(Element a, std::uint64_t exponent) const noexcept {
    if (exponent == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t reduced = exponent % (q_ - 1);
    return exp_[(std::uint64_t{log_[a]} * reduced) % (q_ - 1)];
  }

  /// Coordinates over the immediate base field, constant term first.
  std::vector<Element> coordinates(Element a) const {
    std::vector<Element> out(degree());
    const Element bq = base_order();
    for (auto& c : out) {
      c = a % bq;
      a /= bq;
    }
    return out;
  }

  Element from_coordinates(std::span<const Element> coords) const {
    Element out = 0;
    Element scale = 1;
    const Element bq = base_order();
    for (Element c : coords) {
      out += c * scale;
      scale *= bq;
    }
    return out;
  }

  /// Schoolbook polynomial product reduced mod the modulus. Used to build the
  /// log tables; mul() must agree with it.
  Element mul_reference(Element a, Element b) const;

  friend bool operator==(const Field& lhs, const Field& rhs) {
    if (&lhs == &rhs) return true;
    if (lhs.p_ != rhs.p_ || lhs.q_ != rhs.q_ || lhs.modulus_ != rhs.modulus_) return false;
    if (!lhs.base_ || !rhs.base_) return !lhs.base_ && !rhs.base_;
    return *lhs.base_ == *rhs.base_;
  }

 private:
  Field() = default;

  Element base_order() const noexcept { return base_ ? base_->order() : q_; }
  void build_tables();

  std::uint32_t p_ = 0;
  std::uint32_t q_ = 0;
  FieldPtr base_;
  std::vector<Element> modulus_;
  std::vector<Element> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace poly {

/// Polynomials over a field as coefficient vectors, constant term first.
using Poly = std::vector<Element>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly mul(const Field& k, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
    }
  }
  trim(out);
  return out;
}

/// Remainder of `a` modulo the monic polynomial `m`.
inline Poly mod_monic(const Field& k, Poly a, std::span<const Element> m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm && !a.empty()) {
    const Element lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = k.sub(a[shift + i], k.mul(lead, m[i]));
    }
    trim(a);
  }
  return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Field& k, std::span<const Element> f) {
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= k.order();
    Poly g(d + 1);
    g[d] = 1;
    for (std::uint64_t low = 0; low < count; ++low) {
      std::uint64_t rest = low;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<Element>(rest % k.order());
        rest /= k.order();
      }
      if (mod_monic(k, Poly(f.begin(), f.end()), g).empty()) return false;
    }
  }
  return true;
}

/// The monic irreducible of degree `deg` over `k` whose coefficients, read as
/// base-|k| digits constant term first, form the smallest integer.
inline Poly smallest_irreducible(const Field& k, std::size_t deg) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < deg; ++i) count *= k.order();
  Poly f(deg + 1);
  f[deg] = 1;
  for (std::uint64_t low = 0; low < count; ++low) {
    std::uint64_t rest = low;
    for (std::size_t i = 0; i < deg; ++i) {
      f[i] = static_cast<Element>(rest % k.order());
      rest /= k.order();
    }
    if (is_irreducible(k, f)) return f;
  }
  throw Error(ErrorKind::InternalAssert, "no irreducible polynomial found");
}

}  // namespace poly

inline FieldPtr Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxExtensionOrder) throw Error(ErrorKind::TooLarge, "prime too large");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->q_ = p;
  f->modulus_ = {0, 1};
  f->build_tables();
  return f;
}

inline FieldPtr Field::extension(FieldPtr base, std::vector<Element> modulus,
                                 std::uint64_t max_order) {
  if (!base) throw Error(ErrorKind::BadParams, "extension needs a base field");
  if (modulus.size() < 2) throw Error(ErrorKind::BadParams, "modulus degree must be >= 1");
  for (Element c : modulus) {
    if (!base->contains(c)) throw Error(ErrorKind::FieldMismatch, "modulus coefficient out of range");
  }
  if (!poly::is_irreducible(*base, modulus)) {
    throw Error(ErrorKind::BadParams, "modulus is not monic irreducible");
  }
  std::uint64_t q = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) {
    q *= base->order();
    if (q > max_order) throw Error(ErrorKind::TooLarge, "field order exceeds cap");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = base->characteristic();
  f->q_ = static_cast<std::uint32_t>(q);
  f->base_ = std::move(base);
  f->modulus_ = std::move(modulus);
  f->build_tables();
  return f;
}

inline Element Field::mul_reference(Element a, Element b) const {
  if (!base_) return static_cast<Element>((std::uint64_t{a} * b) % p_);
  auto prod = poly::mul(*base_, coordinates(a), coordinates(b));
  auto rem = poly::mod_monic(*base_, std::move(prod), modulus_);
  rem.resize(degree(), 0);
  return from_coordinates(rem);
}

inline void Field::build_tables() {
  exp_.assign(2 * std::size_t{q_ - 1}, 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_ = {1, 1};
    return;
  }
  // Smallest primitive element by brute-force order computation.
  for (Element g = 2; g < q_; ++g) {
    Element x = 1;
    std::uint32_t period = 0;
    do {
      exp_[period] = x;
      x = mul_reference(x, g);
      ++period;
    } while (x != 1 && period < q_ - 1);
    if (x == 1 && period == q_ - 1) break;
    if (g + 1 == q_) throw Error(ErrorKind::InternalAssert, "no primitive element");
  }
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i + q_ - 1] = exp_[i];
    log_[exp_[i]] = i;
  }
}

/// GF(p^e) with the smallest-encoding monic irreducible modulus over GF(p).
inline FieldPtr make_field(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::BadParams, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error(ErrorKind::TooLarge, "q exceeds 2^16");
  }
  auto prime = Field::prime(p);
  if (e == 1) return prime;
  auto modulus = poly::smallest_irreducible(*prime, e);
  return Field::extension(prime, std::move(modulus), kMaxFieldOrder);
}

/// Splits a prime power q into (p, e); throws BadParams when q is not one.
inline std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::BadParams, "q must be a prime power >= 2");
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw Error(ErrorKind::BadParams, std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), e};
}

inline FieldPtr make_field_of_order(std::uint64_t q) {
  const auto [p, e] = factor_prime_power(q);
  return make_field(p, e);
}

}  // namespace flagforge
