// Copyright 2026 The ontolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOLAB_ERRORS_HPP
#define ONTOLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ontolab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("cannot normalize a zero vector") {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, int expected, int actual)
      : Error(what + ": expected dimension " + std::to_string(expected) + ", got " +
              std::to_string(actual)) {}
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(int index, int size)
      : Error("outcome index " + std::to_string(index) + " out of range for a context of size " +
              std::to_string(size)) {}
};

class InvalidDimension : public Error {
 public:
  explicit InvalidDimension(int dim)
      : Error("dimension " + std::to_string(dim) + " outside the supported range 2..8") {}
};

class NotUnitary : public Error {
 public:
  using Error::Error;
};

class NonOrthogonalContext : public Error {
 public:
  using Error::Error;
};

class InvalidModel : public Error {
 public:
  using Error::Error;
};

class EmptySupport : public Error {
 public:
  EmptySupport() : Error("epistemic density has empty support") {}
};

class ZeroProbabilityOutcome : public Error {
 public:
  ZeroProbabilityOutcome(int outcome, long long attempts)
      : Error("outcome " + std::to_string(outcome) + " never observed in " +
              std::to_string(attempts) + " posterior proposals") {}
};

}  // namespace ontolab

#endif  // ONTOLAB_ERRORS_HPP
