//  Copyright 2026 The soberkit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef SOBERKIT_ERROR_HPP_
#define SOBERKIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace soberkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input to a constructor (order axioms, index range, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// An operation was asked of a space kind that cannot answer it.
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace soberkit

#endif  // SOBERKIT_ERROR_HPP_
