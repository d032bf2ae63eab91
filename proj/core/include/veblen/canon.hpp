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

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "veblen/exact.hpp"
#include "veblen/hypergraph.hpp"

namespace veblen {

inline constexpr std::size_t kDefaultCanonVertexBound = 16;

/// Isomorphism-class key of a multi-hypergraph. Isolated vertices are not
/// part of the code. Ordered lexicographically by bytes.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes_.compare(b.bytes_) <=> 0;
  }

 private:
  std::string bytes_;
};

struct AutReport {
  Natural aut_count;       // |Aut(H)|, multiplicity preserving
  Natural flat_aut_count;  // |Aut(flatten(H))|
  /// Product over components G_i of |Aut(flatten(G_i))| / |Aut(G_i)|.
  Natural ratio;
};

struct CanonicalLabeling {
  CanonicalCode code;
  /// Canonical relabeling of the support onto 1..s; components are laid out
  /// consecutively in code order.
  MultiHypergraph representative;
  /// image[v] for v in 1..n (0 for isolated vertices).
  std::vector<Vertex> image;
  Natural aut_count;
};

/// Throws SizeExceeded if a component has more than `vertex_bound`
/// non-isolated vertices.
CanonicalLabeling canonical_labeling(const MultiHypergraph& h,
                                     std::size_t vertex_bound = kDefaultCanonVertexBound);
CanonicalCode canonical_form(const MultiHypergraph& h,
                             std::size_t vertex_bound = kDefaultCanonVertexBound);

/// Memoized by canonical code.
AutReport automorphisms(const MultiHypergraph& h,
                        std::size_t vertex_bound = kDefaultCanonVertexBound);

}  // namespace veblen
