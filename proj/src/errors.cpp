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

#include "tirs/errors.hpp"

namespace tirs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::DegenerateLattice: return "DegenerateLattice";
    case ErrorKind::MismatchedCarrier: return "MismatchedCarrier";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::NotTiRS: return "NotTiRS";
    case ErrorKind::NotRS: return "NotRS";
    case ErrorKind::InvalidMorphism: return "InvalidMorphism";
    case ErrorKind::IsoVerificationFailed: return "IsoVerificationFailed";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::HNotPreserved: return "HNotPreserved";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::IrreducibleMismatch: return "IrreducibleMismatch";
    case ErrorKind::EmbeddingNotOnto: return "EmbeddingNotOnto";
    case ErrorKind::SizeUnreachable: return "SizeUnreachable";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::string> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace tirs
