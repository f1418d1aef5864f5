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

#include <random>
#include <vector>

#include <catch2/catch.hpp>

#include "ppol/finite_field.hpp"

using namespace ppol;

namespace {

// Oracle-side polynomial arithmetic over Z_p, written against plain ints and
// naive loops so it shares nothing with the library implementation.

std::vector<int> oracle_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                                const std::vector<int>& modulus, int p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  const std::size_t deg = modulus.size() - 1;
  for (std::size_t i = prod.size(); i-- > deg;) {
    const int lead = prod[i];
    if (!lead) continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      const std::size_t pos = i - deg + j;
      prod[pos] = ((prod[pos] - lead * modulus[j]) % p + p) % p;
    }
  }
  prod.resize(deg);
  return prod;
}

bool oracle_has_root(const std::vector<int>& poly, int p) {
  for (int r = 0; r < p; ++r) {
    int acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * r + poly[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

// Multiplicative order of x in Z_p[x]/(modulus), counted by naive repeated
// multiplication.
long oracle_order_of_x(const std::vector<int>& modulus, int p) {
  const std::size_t deg = modulus.size() - 1;
  std::vector<int> x(deg, 0), one(deg, 0);
  x[1 % deg] = 1;
  one[0] = 1;
  std::vector<int> acc = x;
  long order = 1;
  while (acc != one) {
    acc = oracle_mul_mod(acc, x, modulus, p);
    ++order;
    REQUIRE(order < 1 << 20);
  }
  return order;
}

// Smallest monic degree-k polynomial over Z_p, by integer encoding, whose
// root x generates the whole multiplicative group. Valid for k <= 3 where
// rootlessness implies irreducibility.
std::vector<int> oracle_first_primitive(int p, int k) {
  REQUIRE(k <= 3);
  long count = 1, group = 1;
  for (int i = 0; i < k; ++i) count *= p;
  group = count - 1;
  for (long v = 0; v < count; ++v) {
    std::vector<int> poly(k + 1, 0);
    long rest = v;
    for (int i = 0; i < k; ++i) {
      poly[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    poly[k] = 1;
    if (oracle_has_root(poly, p)) continue;
    if (oracle_order_of_x(poly, p) == group) return poly;
  }
  FAIL("oracle found no primitive polynomial");
  return {};
}

std::vector<int> as_int(const std::vector<std::uint32_t>& v) {
  return std::vector<int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("factor_prime_power identifies prime powers") {
  auto f9 = factor_prime_power(9);
  REQUIRE(f9);
  CHECK(f9->base == 3);
  CHECK(f9->exponent == 2);

  CHECK_FALSE(factor_prime_power(12));

  auto f13 = factor_prime_power(13);
  REQUIRE(f13);
  CHECK(f13->base == 13);
  CHECK(f13->exponent == 1);

  auto f16 = factor_prime_power(16);
  REQUIRE(f16);
  CHECK(f16->base == 2);
  CHECK(f16->exponent == 4);

  CHECK_THROWS_AS(factor_prime_power(1), std::invalid_argument);
}

TEST_CASE("smallest_prime_power_geq scans upward") {
  CHECK(smallest_prime_power_geq(5) == 5);
  CHECK(smallest_prime_power_geq(6) == 7);
  CHECK(smallest_prime_power_geq(10) == 11);

  // scan oracle over a small range
  for (std::uint64_t n = 2; n <= 40; ++n) {
    std::uint64_t expect = n;
    while (!factor_prime_power(expect)) ++expect;
    CHECK(smallest_prime_power_geq(n) == expect);
  }
}

TEST_CASE("field_make picks the expected modulus") {
  const Field f4 = Field::make(4);
  CHECK(f4.characteristic() == 2);
  CHECK(f4.degree() == 2);
  CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2+x+1

  const Field f3 = Field::make(3);
  CHECK(f3.degree() == 1);
  CHECK(f3.order() == 3);

  // oracle: first rootless monic quadratic over GF(3) by integer encoding
  const Field f9 = Field::make(9);
  std::vector<int> expect9;
  for (long v = 0; v < 9 && expect9.empty(); ++v) {
    std::vector<int> poly{static_cast<int>(v % 3), static_cast<int>(v / 3), 1};
    if (!oracle_has_root(poly, 3)) expect9 = poly;
  }
  CHECK(as_int(f9.modulus()) == expect9);
  CHECK(expect9 == std::vector<int>{1, 0, 1});  // x^2+1

  CHECK_THROWS_AS(Field::make(12), std::invalid_argument);
}

TEST_CASE("field arithmetic matches hand results") {
  const Field f4 = Field::make(4);
  const FieldElement x = f4.x();
  CHECK((x * x).code() == 3);  // x^2 = x+1 mod x^2+x+1
  CHECK((x * f4.one()) == x);

  const Field f3 = Field::make(3);
  CHECK((f3.element(2) + f3.element(2)).code() == 1);

  const Field f5 = Field::make(5);
  CHECK_THROWS_AS(f3.element(1) + f5.element(1), std::invalid_argument);
}

TEST_CASE("field axioms hold on random triples") {
  std::mt19937 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    const Field f = Field::make(q);
    for (int trial = 0; trial < 50; ++trial) {
      const FieldElement a = f.element(rng() % q);
      const FieldElement b = f.element(rng() % q);
      const FieldElement c = f.element(rng() % q);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + (-a)).is_zero());
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == f.one());
        CHECK(a.pow(q - 1) == f.one());
      }
    }
  }
}

TEST_CASE("find_primitive_polynomial matches the oracle") {
  CHECK(as_int(find_primitive_polynomial(2, 3)) == std::vector<int>{1, 1, 0, 1});  // x^3+x+1
  CHECK(as_int(find_primitive_polynomial(2, 2)) == std::vector<int>{1, 1, 1});     // x^2+x+1
  CHECK(as_int(find_primitive_polynomial(3, 3)) == std::vector<int>{1, 2, 0, 1});  // x^3+2x+1

  for (auto [p, k] : {std::pair{2, 3}, {2, 2}, {3, 3}, {3, 2}, {5, 2}, {7, 2}}) {
    CAPTURE(p, k);
    CHECK(as_int(find_primitive_polynomial(p, k)) == oracle_first_primitive(p, k));
  }

  CHECK_THROWS_AS(find_primitive_polynomial(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(find_primitive_polynomial(2, 1), std::invalid_argument);
}

TEST_CASE("primitive modulus root generates the whole group") {
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}, {5u, 2u}}) {
    CAPTURE(p, k);
    const auto modulus = find_primitive_polynomial(p, k);
    const ExtensionField ext(Field::make(p), modulus);
    std::uint64_t group = 1;
    for (unsigned i = 0; i < k; ++i) group *= p;
    group -= 1;
    // naive order count, independent of the divisor-based method
    auto acc = ext.x();
    std::uint64_t order = 1;
    while (!ext.is_one(acc)) {
      acc = ext.mul(acc, ext.x());
      ++order;
    }
    CHECK(order == group);
    CHECK(ext.element_order(ext.x()) == group);
  }
}

TEST_CASE("extension field over a non-prime base") {
  const ExtensionField ext = ExtensionField::with_primitive_modulus(Field::make(4), 3);
  CHECK(ext.order() == 64);
  CHECK(ext.element_order(ext.x()) == 63);
  // mul_by_x agrees with the general product
  auto e = ext.one();
  for (int i = 0; i < 62; ++i) {
    CHECK(ext.mul_by_x(e) == ext.mul(e, ext.x()));
    e = ext.mul_by_x(e);
  }
  CHECK_THROWS_AS(ExtensionField(Field::make(2), {1, 0, 1}), std::invalid_argument);  // x^2+1 reducible
}
