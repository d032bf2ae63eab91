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

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace veblen {

/// Arbitrary-precision integers and rationals. Rationals are always kept in
/// lowest terms with a positive denominator.
using Integer = mpz_class;
using Natural = mpz_class;  // non-negative by convention
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

Natural factorial(std::uint64_t n);
Natural binomial(std::uint64_t n, std::uint64_t k);
Integer power(const Integer& base, std::uint64_t exponent);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace veblen
