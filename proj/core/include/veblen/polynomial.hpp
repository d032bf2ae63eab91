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

#include <string>
#include <vector>

#include "veblen/digraph.hpp"
#include "veblen/exact.hpp"

namespace veblen {

/// Dense polynomial with integer coefficients, lowest degree first. The
/// zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  /// Coefficient of x^i (0 beyond the degree).
  Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const std::vector<Integer>& coefficients() const noexcept { return c_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  /// Exact division by a monic divisor; throws DomainError on a remainder.
  IntPolynomial divide_exact(const IntPolynomial& monic) const;
  /// p(x + shift).
  IntPolynomial shifted(const Integer& shift) const;

  std::string to_string() const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// det(xI - M) by the Faddeev-LeVerrier recurrence; every division is
/// exact over the integers.
IntPolynomial charpoly_integer_matrix(const IntegerMatrix& m);

/// The m-th cyclotomic polynomial.
IntPolynomial cyclotomic(unsigned m);

}  // namespace veblen
