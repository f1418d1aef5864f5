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
// (m^2+m+1, m+1, 1) perfect difference sets: construction through the cubic
// extension of GF(m), exhaustive search at small orders, canonical
// normalization, time-shifted lines and the pencil-of-lines partition of Z_p.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ppol/finite_field.hpp"

namespace ppol {

/// Sorted residues a_0 < a_1 < ... < a_m in Z_p, p = m^2 + m + 1, whose
/// ordered differences hit every nonzero residue exactly once.
struct PerfectDifferenceSet {
  std::uint32_t m = 0;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> elements;

  bool normalized() const {
    return elements.size() >= 2 && elements[0] == 0 && elements[1] == 1;
  }
};

struct DifferenceCheckReport {
  bool perfect = false;
  std::vector<std::uint32_t> duplicated;  // residues hit more than once
  std::vector<std::uint32_t> missing;     // residues never hit
};

/// Raised when an exhaustive search would exceed its budget; distinct from a
/// search that completes without finding anything.
struct SearchBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Count every ordered difference of the set; perfect iff each nonzero
/// residue of Z_p appears exactly once.
inline DifferenceCheckReport verify_perfect(const std::vector<std::uint32_t>& elements,
                                            std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("verify_perfect: modulus must be >= 2");
  std::vector<std::uint32_t> hits(p, 0);
  for (std::uint32_t a : elements) {
    if (a >= p) throw std::invalid_argument("verify_perfect: element out of range");
    for (std::uint32_t b : elements) {
      if (a == b) continue;
      hits[(a + p - b) % p] += 1;
    }
  }
  // duplicated set elements would show up as zero-difference pairs; forbid
  // them outright instead
  std::vector<std::uint32_t> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("verify_perfect: duplicate elements");
  DifferenceCheckReport report;
  report.perfect = true;
  for (std::uint32_t r = 1; r < p; ++r) {
    if (hits[r] == 0) {
      report.missing.push_back(r);
      report.perfect = false;
    } else if (hits[r] > 1) {
      report.duplicated.push_back(r);
      report.perfect = false;
    }
  }
  return report;
}

/// Canonical representative of the scale-and-shift orbit: the smallest sorted
/// image u*D + s (u coprime to p) that contains both 0 and 1, compared
/// lexicographically. Idempotent, and constant across the whole orbit.
inline PerfectDifferenceSet normalize_difference_set(const std::vector<std::uint32_t>& raw,
                                                     std::uint32_t p) {
  if (!verify_perfect(raw, p).perfect)
    throw std::invalid_argument("normalize_difference_set: not a perfect difference set");
  const std::size_t k = raw.size();
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> scaled(k), image(k);
  for (std::uint32_t u = 1; u < p; ++u) {
    if (std::gcd<std::uint64_t>(u, p) != 1) continue;
    for (std::size_t i = 0; i < k; ++i)
      scaled[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(u) * raw[i] % p);
    for (std::uint32_t anchor : scaled) {
      const std::uint32_t s = (p - anchor) % p;
      for (std::size_t i = 0; i < k; ++i) image[i] = (scaled[i] + s) % p;
      std::sort(image.begin(), image.end());
      if (image[1] != 1) continue;  // image[0] == 0 by choice of shift
      if (best.empty() || image < best) best = image;
    }
  }
  PerfectDifferenceSet out;
  out.m = static_cast<std::uint32_t>(k - 1);
  out.p = p;
  out.elements = best;
  return out;
}

/// Perfect difference set of order m from the cubic extension of GF(m): the
/// residues i mod p for which the x^2 coordinate of x^i vanishes, with x a
/// generator of GF(m^3)*. Result is normalized.
inline PerfectDifferenceSet singer_difference_set(std::uint32_t m) {
  if (m < 2 || !factor_prime_power(m))
    throw std::invalid_argument("singer_difference_set: order must be a prime power >= 2");
  const std::uint32_t p = m * m + m + 1;
  const ExtensionField cubic = ExtensionField::with_primitive_modulus(Field::make(m), 3);
  std::vector<char> member(p, 0);
  ExtensionField::Element e = cubic.one();
  const std::uint64_t group = cubic.order() - 1;  // (m - 1) * p
  for (std::uint64_t i = 0; i < group; ++i) {
    if (e[2] == 0) member[i % p] = 1;
    e = cubic.mul_by_x(e);
  }
  std::vector<std::uint32_t> raw;
  for (std::uint32_t r = 0; r < p; ++r)
    if (member[r]) raw.push_back(r);
  if (raw.size() != m + 1)
    throw std::logic_error("singer_difference_set: unexpected subspace size");
  return normalize_difference_set(raw, p);
}

namespace detail {

inline bool difference_set_dfs(std::uint32_t p, std::uint32_t target,
                               std::vector<std::uint32_t>& chosen, std::vector<char>& used) {
  if (chosen.size() == target) return true;
  const std::uint32_t remaining = target - static_cast<std::uint32_t>(chosen.size());
  std::vector<std::uint32_t> diffs(2 * chosen.size());
  for (std::uint32_t e = chosen.back() + 1; e + remaining <= p; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
      const std::uint32_t fwd = (e + p - chosen[i]) % p;
      const std::uint32_t bwd = p - fwd;
      if (used[fwd] || used[bwd]) ok = false;
      diffs[2 * i] = fwd;
      diffs[2 * i + 1] = bwd;
    }
    // differences contributed by e must also be distinct among themselves
    for (std::size_t i = 0; i < diffs.size() && ok; ++i)
      for (std::size_t j = i + 1; j < diffs.size() && ok; ++j)
        if (diffs[i] == diffs[j]) ok = false;
    if (!ok) continue;
    for (std::uint32_t d : diffs) used[d] = 1;
    chosen.push_back(e);
    if (difference_set_dfs(p, target, chosen, used)) return true;
    chosen.pop_back();
    for (std::uint32_t d : diffs) used[d] = 0;
  }
  return false;
}

}  // namespace detail

/// Backtracking search for the smallest normalized perfect difference set of
/// order m (sets containing {0, 1}, explored in lexicographic order).
/// Independent of the field-based construction. Orders above 9 are refused.
inline std::optional<PerfectDifferenceSet> brute_force_difference_set(std::uint32_t m) {
  if (m < 1) throw std::invalid_argument("brute_force_difference_set: order must be >= 1");
  constexpr std::uint32_t kMaxOrder = 9;
  if (m > kMaxOrder)
    throw SearchBudgetExceeded("brute_force_difference_set: order exceeds search budget");
  const std::uint32_t p = m * m + m + 1;
  std::vector<std::uint32_t> chosen = {0, 1};
  std::vector<char> used(p, 0);
  used[1] = 1;
  used[p - 1] = 1;
  if (!detail::difference_set_dfs(p, m + 1, chosen, used)) return std::nullopt;
  PerfectDifferenceSet out;
  out.m = m;
  out.p = p;
  out.elements = std::move(chosen);
  return out;
}

/// A line of the cyclic plane: the set D + shift (mod p), or a punctured
/// variant of it.
struct Line {
  std::uint32_t shift = 0;
  std::vector<std::uint32_t> points;  // sorted
};

inline Line shift_line(const PerfectDifferenceSet& d, std::uint32_t shift) {
  if (shift >= d.p) throw std::invalid_argument("shift_line: shift out of range");
  Line line;
  line.shift = shift;
  line.points.reserve(d.elements.size());
  for (std::uint32_t a : d.elements) line.points.push_back((a + shift) % d.p);
  std::sort(line.points.begin(), line.points.end());
  return line;
}

/// The m+1 lines through point 0, punctured at 0 except for D itself:
/// [D_0, D_{p-a_1} \ {0}, ..., D_{p-a_m} \ {0}]. The blocks partition Z_p.
struct PencilPartition {
  PerfectDifferenceSet base;
  std::vector<Line> blocks;
};

inline PencilPartition pencil_partition(const PerfectDifferenceSet& d) {
  if (!d.normalized())
    throw std::invalid_argument("pencil_partition: set must be normalized");
  PencilPartition pencil;
  pencil.base = d;
  pencil.blocks.push_back(Line{0, d.elements});
  for (std::size_t i = 1; i < d.elements.size(); ++i) {
    Line line = shift_line(d, d.p - d.elements[i]);
    auto zero = std::find(line.points.begin(), line.points.end(), 0u);
    if (zero == line.points.end())
      throw std::logic_error("pencil_partition: pencil line misses point 0");
    line.points.erase(zero);
    pencil.blocks.push_back(std::move(line));
  }
  std::vector<char> covered(d.p, 0);
  for (const Line& block : pencil.blocks)
    for (std::uint32_t t : block.points) {
      if (covered[t]) throw std::logic_error("pencil_partition: blocks overlap");
      covered[t] = 1;
    }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw std::logic_error("pencil_partition: blocks do not cover Z_p");
  return pencil;
}

/// The unique ordered index pair (j, k) with (a_j - a_k) mod p == ell.
inline std::pair<std::uint32_t, std::uint32_t> unique_difference_pair(
    const PerfectDifferenceSet& d, std::uint32_t ell) {
  if (ell == 0 || ell >= d.p)
    throw std::invalid_argument("unique_difference_pair: need 0 < ell < p");
  std::optional<std::pair<std::uint32_t, std::uint32_t>> found;
  for (std::uint32_t j = 0; j < d.elements.size(); ++j)
    for (std::uint32_t k = 0; k < d.elements.size(); ++k) {
      if (j == k) continue;
      if ((d.elements[j] + d.p - d.elements[k]) % d.p == ell) {
        if (found) throw std::logic_error("unique_difference_pair: duplicate representation");
        found = {j, k};
      }
    }
  if (!found) throw std::logic_error("unique_difference_pair: no representation");
  return *found;
}

}  // namespace ppol
