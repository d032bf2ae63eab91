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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace veblen {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An instance is larger than an algorithm's configured bound.
class SizeExceeded : public Error {
 public:
  using Error::Error;
};

class NotVeblen : public Error {
 public:
  using Error::Error;
};

class NotConnected : public Error {
 public:
  using Error::Error;
};

class NotEulerian : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed. Always an
/// implementation bug, never a user error.
class ConsistencyFailure : public Error {
 public:
  ConsistencyFailure(std::size_t codegree, const std::string& what)
      : Error(what), codegree_(codegree) {}
  std::size_t codegree() const noexcept { return codegree_; }

 private:
  std::size_t codegree_;
};

/// The simplex coefficient sum was not divisible by its normalizer.
class NormalizationFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  /// line 0 means a location inside a structured document; `field` is then
  /// the path to the offending value.
  ParseError(std::size_t line, std::string field, const std::string& what)
      : Error((line ? "line " + std::to_string(line) : std::string("document")) + " (" + field +
              "): " + what),
        line_(line),
        field_(std::move(field)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

class ArityError : public ParseError {
 public:
  using ParseError::ParseError;
};

class VertexRangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace veblen
