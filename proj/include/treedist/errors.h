// Copyright 2026 The treedist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TREEDIST_ERRORS_H_
#define TREEDIST_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace treedist {

// Base class for every domain error raised by the library. `kind()` is a
// short stable tag ("NotBinary", "SizeCap", ...) used by the CLI diagnostic
// line "<kind>: <message>".
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message);

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset);

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class NotBinaryError : public Error {
 public:
  explicit NotBinaryError(const std::string& message)
      : Error("NotBinary", message) {}
};

class SizeCapError : public Error {
 public:
  explicit SizeCapError(const std::string& message)
      : Error("SizeCap", message) {}
};

class UnknownSymbolError : public Error {
 public:
  explicit UnknownSymbolError(const std::string& symbol);
};

// Raised when a relabel table is not a metric, or gap parameters are out of
// range. `kind()` names the violated property.
class CostModelError : public Error {
 public:
  CostModelError(std::string kind, const std::string& message)
      : Error(std::move(kind), message) {}
};

class TerrainError : public Error {
 public:
  explicit TerrainError(const std::string& message)
      : Error("Terrain", message) {}
};

}  // namespace treedist

#endif  // TREEDIST_ERRORS_H_
