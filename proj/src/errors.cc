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

#include "treedist/errors.h"

#include <utility>

namespace treedist {

Error::Error(std::string kind, const std::string& message)
    : std::runtime_error(message), kind_(std::move(kind)) {}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : Error("ParseError",
            message + " at byte offset " + std::to_string(offset)),
      offset_(offset) {}

UnknownSymbolError::UnknownSymbolError(const std::string& symbol)
    : Error("UnknownSymbol",
            "symbol '" + symbol + "' is not in the cost table alphabet") {}

}  // namespace treedist
