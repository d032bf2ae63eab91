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

#include "veblen/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "veblen/errors.hpp"

namespace veblen {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> out(degree + 1, 0);
  out[degree] = c;
  return IntPolynomial(std::move(out));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Integer> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] + o[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Integer> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] - o[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<Integer> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& monic) const {
  if (monic.c_.empty() || monic.c_.back() != 1) throw DomainError("divisor is not monic");
  if (c_.size() < monic.c_.size()) {
    if (c_.empty()) return {};
    throw DomainError("polynomial division leaves a remainder");
  }
  std::vector<Integer> rem = c_;
  std::size_t dm = monic.c_.size() - 1;
  std::vector<Integer> quotient(c_.size() - dm, 0);
  for (std::size_t i = quotient.size(); i-- > 0;) {
    Integer q = rem[i + dm];
    quotient[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) rem[i + j] -= q * monic.c_[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& x) { return x != 0; })) {
    throw DomainError("polynomial division leaves a remainder");
  }
  return IntPolynomial(std::move(quotient));
}

IntPolynomial IntPolynomial::shifted(const Integer& shift) const {
  // Horner in the ring: p(x + s) = (...(c_n (x+s) + c_{n-1})(x+s) + ...).
  IntPolynomial base(std::vector<Integer>{shift, 1});
  IntPolynomial out;
  for (std::size_t i = c_.size(); i-- > 0;) out = out * base + IntPolynomial({c_[i]});
  return out;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial charpoly_integer_matrix(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  IntegerMatrix mk(n, std::vector<Integer>(n, 0));
  for (std::size_t step = 1; step <= n; ++step) {
    IntegerMatrix next(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m[i][l] * mk[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - step + 1];
    }
    mk = std::move(next);
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += m[i][l] * mk[l][i];
    }
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), step);
    c[n - step] = -q;
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial cyclotomic(unsigned m) {
  if (m == 0) throw DomainError("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<unsigned, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPolynomial p = IntPolynomial::monomial(1, m) - IntPolynomial({Integer(1)});
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) p = p.divide_exact(cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(m, p);
  return p;
}

}  // namespace veblen
