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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "veblen/canon.hpp"
#include "veblen/errors.hpp"

using namespace veblen;
using oracle::H;

namespace {

MultiHypergraph random_multi(std::mt19937_64& rng, unsigned k, Vertex n, unsigned edges,
                             unsigned max_mult) {
  std::vector<std::pair<Edge, Multiplicity>> list;
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{1});
  std::uniform_int_distribution<unsigned> mult(1, max_mult);
  for (unsigned i = 0; i < edges; ++i) {
    std::shuffle(pool.begin(), pool.end(), rng);
    list.push_back({Edge(pool.begin(), pool.begin() + k), mult(rng)});
  }
  return H(k, n, list);
}

const MultiHypergraph kFano = H(3, 7, {{{1, 2, 3}, 1}, {{1, 4, 5}, 1}, {{1, 6, 7}, 1}, {{2, 4, 7}, 1},
                                       {{2, 5, 6}, 1}, {{3, 4, 6}, 1}, {{3, 5, 7}, 1}});

}  // namespace

TEST_SUITE("canon") {
  TEST_CASE("code is invariant under random relabeling") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 1000; ++trial) {
      unsigned k = 2 + trial % 2;
      auto h = random_multi(rng, k, 3 + trial % 6, 1 + trial % 8, 3);
      auto code = canonical_form(h);
      CHECK(canonical_form(oracle::shuffle(rng, h)) == code);
    }
  }

  TEST_CASE("codes separate exactly the brute-force classes") {
    std::mt19937_64 rng(22);
    std::vector<MultiHypergraph> pool;
    for (int i = 0; i < 120; ++i) pool.push_back(random_multi(rng, 3, 5, 2 + i % 3, 2));
    for (std::size_t i = 0; i < pool.size(); ++i) {
      auto bi = oracle::brute_canon(pool[i]);
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        bool same = bi == oracle::brute_canon(pool[j]);
        CHECK((canonical_form(pool[i]) == canonical_form(pool[j])) == same);
      }
    }
  }

  TEST_CASE("automorphism counts match brute force and divide s!") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
      auto h = random_multi(rng, 2 + trial % 2, 6, 2 + trial % 6, 2);
      auto report = automorphisms(h);
      CHECK(report.aut_count == oracle::brute_aut(h));
      CHECK(report.flat_aut_count == oracle::brute_aut(flatten(h).multi()));
      Natural s_fact = factorial(h.support().size());
      CHECK(s_fact % report.aut_count == 0);
      CHECK(report.ratio >= 1);
    }
  }

  TEST_CASE("frozen automorphism counts") {
    auto e3 = H(3, 3, {{{1, 2, 3}, 3}});
    auto k4 = H(3, 4, {{{1, 2, 3}, 1}, {{1, 2, 4}, 1}, {{1, 3, 4}, 1}, {{2, 3, 4}, 1}});
    auto g94 = H(3, 7, {{{1, 2, 3}, 3}, {{1, 4, 5}, 3}, {{1, 6, 7}, 3}});
    auto g63 = H(3, 5, {{{1, 2, 3}, 2}, {{1, 2, 4}, 1}, {{1, 3, 5}, 1}, {{1, 4, 5}, 2}});
    CHECK(automorphisms(e3).aut_count == 6);
    CHECK(automorphisms(k4).aut_count == 24);
    CHECK(automorphisms(kFano).aut_count == 168);
    CHECK(automorphisms(g94).aut_count == 48);
    CHECK(oracle::brute_aut(kFano) == 168);
    CHECK(oracle::brute_aut(g94) == 48);
    // Flattening forgets the multiplicities, doubling the symmetry.
    CHECK(automorphisms(g63).ratio == 2);
  }

  TEST_CASE("disconnected inputs") {
    auto two = H(3, 6, {{{1, 2, 3}, 1}, {{4, 5, 6}, 1}});
    CHECK(automorphisms(two).aut_count == 72);
    auto mixed = H(3, 6, {{{1, 2, 3}, 1}, {{4, 5, 6}, 2}});
    CHECK(automorphisms(mixed).aut_count == 36);
    CHECK(canonical_form(two) != canonical_form(mixed));
    // Isolated vertices do not change the code.
    CHECK(canonical_form(two.with_vertex_count(9)) == canonical_form(two));
    CHECK(canonical_form(MultiHypergraph(3, 4)) == canonical_form(MultiHypergraph(3, 0)));
  }

  TEST_CASE("labeling maps onto the representative") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 100; ++trial) {
      auto h = random_multi(rng, 3, 7, 1 + trial % 6, 2);
      auto lab = canonical_labeling(h);
      CHECK(relabel(h, lab.image, lab.representative.n()) == lab.representative);
      CHECK(canonical_form(lab.representative) == lab.code);
    }
  }

  TEST_CASE("vertex bound") {
    std::vector<std::pair<Edge, Multiplicity>> path;
    for (Vertex v = 1; v < 20; ++v) path.push_back({{v, v + 1}, 1});
    auto long_path = H(2, 20, path);
    CHECK_THROWS_AS(canonical_form(long_path), SizeExceeded);
    CHECK_NOTHROW(canonical_form(long_path, 32));
  }
}
