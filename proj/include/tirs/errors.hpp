// Copyright 2026 The tirs Authors
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

#ifndef TIRS_ERRORS_HPP_
#define TIRS_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tirs {

enum class ErrorKind {
  InvalidInput,
  NotAPartialOrder,
  NotALattice,
  NoBounds,
  DegenerateLattice,
  MismatchedCarrier,
  NotPerfect,
  NotTiRS,
  NotRS,
  InvalidMorphism,
  IsoVerificationFailed,
  NotWellDefined,
  HNotPreserved,
  PostconditionFailed,
  IrreducibleMismatch,
  EmbeddingNotOnto,
  SizeUnreachable,
  UnsupportedKind,
};

std::string_view to_string(ErrorKind kind);

/// Error carrying a kind tag and the names of the elements that witness it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::string> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

}  // namespace tirs

#endif  // TIRS_ERRORS_HPP_
