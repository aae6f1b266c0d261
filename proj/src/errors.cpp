// Copyright 2026 The squarepack Authors
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

#include "squarepack/errors.hpp"

namespace squarepack {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kPreconditionViolated:
      return "precondition-violated";
    case ErrorKind::kPackFailure:
      return "pack-failure";
    case ErrorKind::kEmptyRegion:
      return "empty-region";
    case ErrorKind::kDomainError:
      return "domain-error";
    case ErrorKind::kFloorUncertified:
      return "floor-uncertified";
    case ErrorKind::kDisagreement:
      return "disagreement";
    case ErrorKind::kCertificateFailed:
      return "certificate-failed";
    case ErrorKind::kParseError:
      return "parse-error";
    case ErrorKind::kIoError:
      return "io-error";
  }
  return "unknown";
}

}  // namespace squarepack
