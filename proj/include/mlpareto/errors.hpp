// Copyright 2026 The mlpareto Authors
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

#ifndef MLPARETO_ERRORS_HPP
#define MLPARETO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlpareto {

// Root of every error thrown by the library. Out-of-range node indices are
// reported with std::out_of_range instead, matching the standard containers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Mismatched lengths, e.g. a partition that does not cover the graph.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A bisection with an empty part was handed to an objective.
class DegeneratePartitionError : public Error {
 public:
  using Error::Error;
};

// Too few nodes for the requested operation.
class SizeError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InsufficientHistoryError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Carries the 1-based line numbers that failed to parse.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::vector<std::size_t> lines = {})
      : Error(what), lines_(std::move(lines)) {}

  const std::vector<std::size_t>& lines() const noexcept { return lines_; }

 private:
  std::vector<std::size_t> lines_;
};

}  // namespace mlpareto

#endif  // MLPARETO_ERRORS_HPP
