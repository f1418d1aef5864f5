// Copyright 2026 The ppol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Galois field arithmetic for small prime powers, plus extensions of such
// fields by an irreducible (optionally primitive) modulus. Element codes are
// the base-p digit encoding of the coefficient vector, low-order digit least
// significant, so code 0 is the zero element and code 1 the one element.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ppol {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct PrimePowerFactorization {
  std::uint64_t n = 0;
  std::uint64_t base = 0;  // prime
  unsigned exponent = 0;   // base^exponent == n
};

/// The unique (base, exponent) with base prime and base^exponent == n,
/// or nullopt when n is not a prime power.
inline std::optional<PrimePowerFactorization> factor_prime_power(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("factor_prime_power: n must be >= 2");
  std::uint64_t base = n;  // smallest prime divisor; n itself when prime
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      base = d;
      break;
    }
  }
  std::uint64_t rest = n;
  unsigned exponent = 0;
  while (rest % base == 0) {
    rest /= base;
    ++exponent;
  }
  if (rest != 1) return std::nullopt;
  return PrimePowerFactorization{n, base, exponent};
}

inline std::uint64_t smallest_prime_power_geq(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_power_geq: n must be >= 2");
  for (std::uint64_t q = n;; ++q)
    if (factor_prime_power(q)) return q;
}

namespace detail {

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Reduce a multiplicative order candidate: start from the full group order and
// strip prime factors while the power stays at the identity.
template <typename PowFn, typename IsOneFn>
std::uint64_t reduced_order(std::uint64_t group_order, PowFn&& pow, IsOneFn&& is_one) {
  std::uint64_t order = group_order;
  for (std::uint64_t r : distinct_prime_factors(group_order)) {
    while (order % r == 0 && is_one(pow(order / r))) order /= r;
  }
  return order;
}

}  // namespace detail

class FieldElement;

/// GF(p^k) in the polynomial basis over GF(p). For k == 1 the modulus is the
/// placeholder x and arithmetic is plain arithmetic mod p.
class Field {
 public:
  static constexpr unsigned kMaxDegree = 8;

  /// GF(q) with the smallest monic irreducible modulus of the required
  /// degree, candidates ordered by their integer encoding.
  static Field make(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  /// Modulus coefficients, low-order first, monic (k + 1 entries).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool operator==(const Field& other) const {
    return q_ == other.q_ && modulus_ == other.modulus_;
  }
  bool operator!=(const Field& other) const { return !(*this == other); }

  // Arithmetic on element codes in [0, q).
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return (a + b) % p_;
    std::uint32_t out = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      out += ((a % p_) + (b % p_)) % p_ * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (k_ == 1) return (p_ - a % p_) % p_;
    std::uint32_t out = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      out += (p_ - a % p_) % p_ * place;
      a /= p_;
      place *= p_;
    }
    return out;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint64_t>(a) * b % p_;
    std::array<std::uint32_t, kMaxDegree> da{}, db{};
    for (unsigned i = 0; i < k_; ++i) {
      da[i] = a % p_;
      db[i] = b % p_;
      a /= p_;
      b /= p_;
    }
    std::array<std::uint32_t, 2 * kMaxDegree> prod{};
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j)
        prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
    // fold degrees >= k back down; the modulus is monic
    for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
      const std::uint32_t c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (unsigned j = 0; j < k_; ++j) {
        const std::uint32_t borrow = static_cast<std::uint64_t>(c) * modulus_[j] % p_;
        prod[i - k_ + j] = (prod[i - k_ + j] + p_ - borrow) % p_;
      }
    }
    std::uint32_t out = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      out += prod[i] * place;
      place *= p_;
    }
    return out;
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1, square = a;
    while (e > 0) {
      if (e & 1) result = mul(result, square);
      square = mul(square, square);
      e >>= 1;
    }
    return result;
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
    return pow(a, q_ - 2);
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("Field::element_order: zero element");
    return detail::reduced_order(
        q_ - 1, [&](std::uint64_t e) { return pow(a, e); },
        [](std::uint32_t v) { return v == 1; });
  }

  std::vector<std::uint32_t> coefficients_of(std::uint32_t code) const {
    std::vector<std::uint32_t> out(k_);
    for (unsigned i = 0; i < k_; ++i) {
      out[i] = code % p_;
      code /= p_;
    }
    return out;
  }

  std::uint32_t encode(const std::vector<std::uint32_t>& coefficients) const {
    if (coefficients.size() != k_)
      throw std::invalid_argument("Field::encode: wrong coefficient count");
    std::uint32_t code = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      if (coefficients[i] >= p_)
        throw std::invalid_argument("Field::encode: coefficient out of range");
      code += coefficients[i] * place;
      place *= p_;
    }
    return code;
  }

  FieldElement zero() const;
  FieldElement one() const;
  /// The class of the indeterminate; only meaningful for degree >= 2.
  FieldElement x() const;
  FieldElement element(std::uint32_t code) const;
  FieldElement from_coefficients(const std::vector<std::uint32_t>& coefficients) const;

 private:
  Field() = default;

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  unsigned k_ = 0;
  std::vector<std::uint32_t> modulus_;
};

/// Value handle into a Field. The Field must outlive its elements; elements
/// of distinct fields must not be mixed.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field* field, std::uint32_t code) : field_(field), code_(code) {}

  std::uint32_t code() const { return code_; }
  const Field& field() const {
    if (field_ == nullptr) throw std::logic_error("FieldElement: default-constructed");
    return *field_;
  }
  std::vector<std::uint32_t> coefficients() const { return field().coefficients_of(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement pow(std::uint64_t e) const { return {field_, field().pow(code_, e)}; }
  FieldElement inverse() const { return {field_, field().inv(code_)}; }
  std::uint64_t order() const { return field().element_order(code_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.field().add(a.code_, b.code_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.field().sub(a.code_, b.code_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.field().mul(a.code_, b.code_)};
  }
  FieldElement operator-() const { return {field_, field().neg(code_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.code_ == b.code_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  static void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field())
      throw std::invalid_argument("FieldElement: operands belong to different fields");
  }

  const Field* field_ = nullptr;
  std::uint32_t code_ = 0;
};

inline FieldElement Field::zero() const { return {this, 0}; }
inline FieldElement Field::one() const { return {this, 1}; }
inline FieldElement Field::x() const {
  if (k_ < 2) throw std::logic_error("Field::x: degree-1 field has no indeterminate");
  return {this, p_};
}
inline FieldElement Field::element(std::uint32_t code) const {
  if (code >= q_) throw std::invalid_argument("Field::element: code out of range");
  return {this, code};
}
inline FieldElement Field::from_coefficients(const std::vector<std::uint32_t>& c) const {
  return {this, encode(c)};
}

namespace detail {

// Polynomials over a Field: coefficient codes, low-order first, no implied
// normalization. Used for modulus search only.

inline std::uint32_t poly_eval(const Field& f, const std::vector<std::uint32_t>& poly,
                               std::uint32_t at) {
  std::uint32_t acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, at), poly[i]);
  return acc;
}

// Remainder of a by monic b.
inline std::vector<std::uint32_t> poly_rem(const Field& f, std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0)
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = f.sub(a[shift + j], f.mul(lead, b[j]));
    a.pop_back();
  }
  return a;
}

inline bool poly_is_zero(const std::vector<std::uint32_t>& a) {
  for (std::uint32_t c : a)
    if (c != 0) return false;
  return true;
}

inline bool poly_is_irreducible(const Field& f, const std::vector<std::uint32_t>& poly) {
  const std::size_t deg = poly.size() - 1;
  for (std::uint32_t r = 0; r < f.order(); ++r)
    if (poly_eval(f, poly, r) == 0) return false;
  if (deg <= 3) return true;  // rootless quadratics and cubics are irreducible
  // scan monic divisors of degree 2..deg/2
  for (std::size_t d = 2; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= f.order();
    for (std::uint64_t v = 0; v < count; ++v) {
      std::vector<std::uint32_t> divisor(d + 1, 0);
      std::uint64_t rest = v;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(rest % f.order());
        rest /= f.order();
      }
      divisor[d] = 1;
      if (poly_is_zero(poly_rem(f, poly, divisor))) return false;
    }
  }
  return true;
}

}  // namespace detail

/// GF(q^d) built over a base Field by a monic irreducible modulus of degree d.
/// Elements are coefficient vectors of base-field codes, low-order first.
class ExtensionField {
 public:
  using Element = std::vector<std::uint32_t>;

  ExtensionField(Field base, std::vector<std::uint32_t> modulus)
      : base_(std::move(base)), modulus_(std::move(modulus)) {
    if (modulus_.size() < 3 || modulus_.back() != 1)
      throw std::invalid_argument("ExtensionField: modulus must be monic of degree >= 2");
    for (std::uint32_t c : modulus_)
      if (c >= base_.order())
        throw std::invalid_argument("ExtensionField: modulus coefficient out of range");
    if (!detail::poly_is_irreducible(base_, modulus_))
      throw std::invalid_argument("ExtensionField: modulus is reducible");
    degree_ = static_cast<unsigned>(modulus_.size() - 1);
    order_ = 1;
    for (unsigned i = 0; i < degree_; ++i) order_ *= base_.order();
  }

  /// Extension whose indeterminate generates the full multiplicative group;
  /// the modulus is the smallest such polynomial by integer encoding.
  static ExtensionField with_primitive_modulus(Field base, unsigned degree);

  const Field& base() const { return base_; }
  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element zero() const { return Element(degree_, 0); }
  Element one() const {
    Element e(degree_, 0);
    e[0] = 1;
    return e;
  }
  Element x() const {
    Element e(degree_, 0);
    e[1] = 1;
    return e;
  }

  bool is_zero(const Element& a) const { return detail::poly_is_zero(a); }
  bool is_one(const Element& a) const {
    if (a[0] != 1) return false;
    for (unsigned i = 1; i < degree_; ++i)
      if (a[i] != 0) return false;
    return true;
  }

  Element add(const Element& a, const Element& b) const {
    Element out(degree_);
    for (unsigned i = 0; i < degree_; ++i) out[i] = base_.add(a[i], b[i]);
    return out;
  }

  Element mul(const Element& a, const Element& b) const {
    std::vector<std::uint32_t> prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i)
      for (unsigned j = 0; j < degree_; ++j)
        prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    for (unsigned i = 2 * degree_ - 2; i >= degree_; --i) {
      const std::uint32_t c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (unsigned j = 0; j < degree_; ++j)
        prod[i - degree_ + j] = base_.sub(prod[i - degree_ + j], base_.mul(c, modulus_[j]));
    }
    prod.resize(degree_);
    return prod;
  }

  /// One step of the x-shift: cheaper than a general multiply.
  Element mul_by_x(const Element& a) const {
    Element out(degree_);
    const std::uint32_t top = a[degree_ - 1];
    out[0] = base_.sub(0, base_.mul(top, modulus_[0]));
    for (unsigned i = 1; i < degree_; ++i)
      out[i] = base_.sub(a[i - 1], base_.mul(top, modulus_[i]));
    return out;
  }

  Element pow(Element a, std::uint64_t e) const {
    Element result = one();
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  std::uint64_t element_order(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("ExtensionField::element_order: zero element");
    return detail::reduced_order(
        order_ - 1, [&](std::uint64_t e) { return pow(a, e); },
        [&](const Element& v) { return is_one(v); });
  }

 private:
  Field base_;
  std::vector<std::uint32_t> modulus_;
  unsigned degree_ = 0;
  std::uint64_t order_ = 0;
};

namespace detail {

// First monic irreducible polynomial of the given degree over `base`, in
// increasing integer-encoding order; optionally further require that the
// class of x generates the multiplicative group of the quotient.
inline std::vector<std::uint32_t> find_modulus(const Field& base, unsigned degree,
                                               bool primitive) {
  if (degree < 2) throw std::invalid_argument("find_modulus: degree must be >= 2");
  const std::uint64_t q = base.order();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) {
    count *= q;
    if (count > (1ull << 32)) throw std::invalid_argument("find_modulus: field too large");
  }
  const std::uint64_t group = count - 1;
  const auto primes = primitive ? distinct_prime_factors(group) : std::vector<std::uint64_t>{};
  for (std::uint64_t v = 0; v < count; ++v) {
    std::vector<std::uint32_t> poly(degree + 1, 0);
    std::uint64_t rest = v;
    for (unsigned i = 0; i < degree; ++i) {
      poly[i] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    poly[degree] = 1;
    if (!poly_is_irreducible(base, poly)) continue;
    if (primitive) {
      ExtensionField ext(base, poly);
      bool generates = true;
      for (std::uint64_t r : primes) {
        if (ext.is_one(ext.pow(ext.x(), group / r))) {
          generates = false;
          break;
        }
      }
      if (!generates) continue;
    }
    return poly;
  }
  throw std::logic_error("find_modulus: exhausted candidates");
}

}  // namespace detail

inline Field Field::make(std::uint32_t q) {
  const auto fac = factor_prime_power(q);
  if (!fac) throw std::invalid_argument("Field::make: order must be a prime power");
  Field f;
  f.q_ = q;
  f.p_ = static_cast<std::uint32_t>(fac->base);
  f.k_ = fac->exponent;
  if (f.k_ == 1) {
    f.modulus_ = {0, 1};  // placeholder: arithmetic is plain mod p
    return f;
  }
  if (f.k_ > kMaxDegree) throw std::invalid_argument("Field::make: degree too large");
  f.modulus_ = detail::find_modulus(Field::make(f.p_), f.k_, /*primitive=*/false);
  return f;
}

inline ExtensionField ExtensionField::with_primitive_modulus(Field base, unsigned degree) {
  auto modulus = detail::find_modulus(base, degree, /*primitive=*/true);
  return ExtensionField(std::move(base), std::move(modulus));
}

/// Smallest (by integer encoding) monic irreducible polynomial of the given
/// degree over GF(p0) whose root x generates the multiplicative group of the
/// quotient field. Coefficients low-order first.
inline std::vector<std::uint32_t> find_primitive_polynomial(std::uint32_t p0, unsigned degree) {
  if (!is_prime(p0)) throw std::invalid_argument("find_primitive_polynomial: base not prime");
  if (degree < 2) throw std::invalid_argument("find_primitive_polynomial: degree must be >= 2");
  return detail::find_modulus(Field::make(p0), degree, /*primitive=*/true);
}

}  // namespace ppol
