// Copyright 2026 The veblen Authors
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

#include "veblen/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "veblen/errors.hpp"

namespace veblen {

namespace {

// k^l + (-1)^{l+1}
Integer cycle_factor(unsigned k, unsigned l) {
  Integer out = power(k, l);
  if (l % 2) return out + 1;
  return out - 1;
}

void partitions_into(unsigned left, unsigned cap, std::vector<unsigned>& prefix,
                     std::vector<PartitionMin2>& out) {
  if (left == 0) {
    out.push_back({prefix});
    return;
  }
  for (unsigned p = std::min(left, cap); p >= 2; --p) {
    if (left - p == 1) continue;
    prefix.push_back(p);
    partitions_into(left - p, p, prefix, out);
    prefix.pop_back();
  }
}

Natural derangement_count(unsigned m) {
  Natural a = 1, b = 0;  // D_0, D_1
  if (m == 0) return a;
  for (unsigned i = 2; i <= m; ++i) {
    Natural next = (i - 1) * (a + b);
    a = b;
    b = next;
  }
  return b;
}

}  // namespace

unsigned PartitionMin2::total() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

std::map<unsigned, unsigned> PartitionMin2::multiplicities() const {
  std::map<unsigned, unsigned> out;
  for (unsigned p : parts) ++out[p];
  return out;
}

std::vector<PartitionMin2> partitions_min2(unsigned m) {
  std::vector<PartitionMin2> out;
  std::vector<unsigned> prefix;
  if (m == 0) return {PartitionMin2{}};
  partitions_into(m, m, prefix, out);
  return out;
}

Natural derangements_by_type(const PartitionMin2& p) {
  Natural out = factorial(p.total());
  for (unsigned part : p.parts) out /= part;
  for (const auto& [part, count] : p.multiplicities()) out /= factorial(count);
  return out;
}

Natural simplex_derangement_sum(unsigned k) {
  const unsigned m = k + 1;
  std::vector<Integer> g(m + 1, 0);
  for (unsigned j = 2; j <= m; ++j) g[j] = cycle_factor(k, j);
  std::vector<Natural> a(m + 1, 0);
  a[0] = 1;
  for (unsigned n = 2; n <= m; ++n) {
    Natural s = 0;
    Natural falling = 1;  // (n-1)!/(n-j)!
    for (unsigned j = 1; j <= n; ++j) {
      if (j >= 2) {
        falling *= n - j + 1;
        s += falling * g[j] * a[n - j];
      }
    }
    a[n] = s;
  }
  return a[m];
}

Natural simplex_partition_sum(unsigned k) {
  Natural s = 0;
  for (const auto& p : partitions_min2(k + 1)) {
    Natural term = derangements_by_type(p);
    for (unsigned part : p.parts) term *= cycle_factor(k, part);
    s += term;
  }
  return s;
}

SimplexCoefficientReport simplex_Ck(unsigned k) {
  if (k < 2 || k > 1000) throw DomainError("simplex_Ck supports 2 <= k <= 1000");
  SimplexCoefficientReport report;
  report.k = k;
  Natural sum = simplex_derangement_sum(k);
  if (k <= kPartitionRouteMaxK) {
    Natural check = 0;
    for (const auto& p : partitions_min2(k + 1)) {
      Natural term = derangements_by_type(p);
      for (unsigned part : p.parts) term *= cycle_factor(k, part);
      check += term;
      report.contributions.emplace_back(p, term);
    }
    if (check != sum) {
      throw ConsistencyFailure(k, "simplex sum for k=" + std::to_string(k) +
                                      ": recurrence gives " + sum.get_str() +
                                      ", cycle types give " + check.get_str());
    }
  }
  Natural normalizer = Natural(k - 1) * (k + 1) * (k + 1);
  if (sum % normalizer != 0) {
    throw NormalizationFailure("simplex sum for k=" + std::to_string(k) +
                               " is not divisible by (k-1)(k+1)^2");
  }
  report.Ck = sum / normalizer;
  report.CH = Rational(report.Ck, power(k - 1, k));
  report.CH.canonicalize();
  Rational ratio(report.Ck, factorial(k + 1) * power(k, k + 1));
  ratio.canonicalize();
  report.asymptotic_ratio = decimal(ratio, 12);
  Rational fraction(derangement_count(k + 1), factorial(k + 1));
  fraction.canonicalize();
  report.derangement_fraction = decimal(fraction, 12);
  return report;
}

IntPolynomial PredictedSpectrum::characteristic_polynomial() const {
  std::map<unsigned, unsigned> by_order;
  for (const auto& r : roots) ++by_order[r.order];
  IntPolynomial out({Integer(-extra), Integer(1)});
  for (const auto& [order, count] : by_order) {
    // Primitive roots of each order come in complete Galois orbits.
    IntPolynomial phi = cyclotomic(order);
    unsigned orbit = static_cast<unsigned>(phi.degree());
    if (count % orbit) throw DomainError("spectrum is not closed under conjugation");
    for (unsigned i = 0; i < count / orbit; ++i) out = out * phi;
  }
  return out;
}

PredictedSpectrum predicted_spectrum_MJ(const std::vector<unsigned>& sigma) {
  const std::size_t size = sigma.size();
  if (size == 0) throw DomainError("permutation must act on at least one point");
  {
    std::vector<unsigned> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < size; ++i) {
      if (sorted[i] != i) throw DomainError("not a permutation of {0, ..., n}");
    }
  }
  PredictedSpectrum out;
  std::vector<char> seen(size, 0);
  for (std::size_t start = 0; start < size; ++start) {
    if (seen[start]) continue;
    unsigned length = 0;
    for (std::size_t i = start; !seen[i]; i = sigma[i]) {
      seen[i] = 1;
      ++length;
    }
    for (unsigned j = 0; j < length; ++j) {
      unsigned g = std::gcd(j, length);
      out.roots.push_back({length / g, j / g});
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::find(out.roots.begin(), out.roots.end(), RootOfUnity{1, 0}));
  out.extra = -Integer(static_cast<unsigned long>(size - 1));
  return out;
}

std::string decimal(const Rational& value, unsigned places) {
  Integer scale = power(10, places);
  Integer num = value.get_num() * scale;
  Integer den = value.get_den();
  bool negative = num < 0;
  num = abs(num);
  Integer q = (2 * num + den) / (2 * den);
  std::string digits = q.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places);
  if (places) out += "." + digits.substr(digits.size() - places);
  return (negative && q != 0 ? "-" : "") + out;
}

std::string asymptotic_report(unsigned k) { return simplex_Ck(k).asymptotic_ratio; }

}  // namespace veblen
