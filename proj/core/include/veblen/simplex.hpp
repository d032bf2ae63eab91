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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "veblen/exact.hpp"
#include "veblen/polynomial.hpp"

namespace veblen {

/// Parts p_1 >= p_2 >= ... >= p_t >= 2.
struct PartitionMin2 {
  std::vector<unsigned> parts;

  unsigned total() const;
  /// V_p(i): how many parts equal i.
  std::map<unsigned, unsigned> multiplicities() const;
  friend bool operator==(const PartitionMin2&, const PartitionMin2&) = default;
};

/// Partitions of m into parts of size at least 2, in decreasing
/// lexicographic order: m = 7 gives (7), (5,2), (4,3), (3,2,2).
std::vector<PartitionMin2> partitions_min2(unsigned m);

/// Permutations of [sum p] with cycle type p: (sum p)! / (prod p_i prod V_p(i)!).
Natural derangements_by_type(const PartitionMin2& p);

/// Largest k for which simplex_Ck also runs the partition-sum route.
inline constexpr unsigned kPartitionRouteMaxK = 30;

struct SimplexCoefficientReport {
  unsigned k = 0;
  Natural Ck;
  /// Associated coefficient of K_{k+1}^{(k)}: Ck / (k-1)^k.
  Rational CH;
  /// Per cycle type: |D(p)| * prod (k^{p_i} + (-1)^{p_i+1}). Empty when k
  /// exceeds kPartitionRouteMaxK.
  std::vector<std::pair<PartitionMin2, Natural>> contributions;
  /// Ck / ((k+1)! k^{k+1}) to 12 decimal places.
  std::string asymptotic_ratio;
  /// |D_{k+1}| / (k+1)!, the derangement fraction, to 12 decimal places.
  std::string derangement_fraction;
};

/// C_k = sum over derangements s of [k+1] of prod over cycles of length l
/// of (k^l + (-1)^{l+1}), divided by (k-1)(k+1)^2. The sum comes from the
/// exponential-formula recurrence; for small k the cycle-type sum must agree
/// (else ConsistencyFailure). Throws NormalizationFailure if the division is
/// inexact, DomainError outside 2 <= k <= 1000.
SimplexCoefficientReport simplex_Ck(unsigned k);

/// Derangement sum via a_n = sum_{j=2}^n (n-1)!/(n-j)! g(j) a_{n-j}.
Natural simplex_derangement_sum(unsigned k);

/// The same sum over cycle types.
Natural simplex_partition_sum(unsigned k);

/// The root of unity exp(2 pi i exponent / order) in lowest terms.
struct RootOfUnity {
  unsigned order = 1;
  unsigned exponent = 0;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Spectrum of M_s - J for a permutation s of [n+1], where M_s is the
/// permutation matrix: the cycle roots of unity with one eigenvalue 1
/// removed, plus -n.
struct PredictedSpectrum {
  std::vector<RootOfUnity> roots;  // sorted
  Integer extra;                   // -n
  IntPolynomial characteristic_polynomial() const;
};

/// `sigma` maps i to sigma[i] on {0, ..., n}.
PredictedSpectrum predicted_spectrum_MJ(const std::vector<unsigned>& sigma);

/// Decimal rendering of `value` rounded half up to `places` digits.
std::string decimal(const Rational& value, unsigned places);

/// The ratio Ck / ((k+1)! k^{k+1}) to 12 decimal places.
std::string asymptotic_report(unsigned k);

}  // namespace veblen
