// Copyright 2026 The qtopo Authors
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

#ifndef QTOPO_ERROR_HPP_
#define QTOPO_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qtopo {

enum class ErrorCode {
  kDuplicateLabel,
  kEmptyLabel,
  kTooManyElements,
  kUnknownLabel,
  kOutOfGround,
  kAxiomViolation,
  kSizeLimit,
  kLabelMismatch,
  kMalformedDocument,
};

const char* to_string(ErrorCode code);

// All library failures are reported with this exception type; the code lets
// the C layer map failures onto status values without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qtopo

#endif  // QTOPO_ERROR_HPP_
