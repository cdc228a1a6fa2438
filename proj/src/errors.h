// Copyright 2026 The privpart Authors.
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

#ifndef PRIVPART_ERRORS_H_
#define PRIVPART_ERRORS_H_

#include <stdexcept>
#include <string>

namespace privpart {

// Numeric values match the C API status codes and the CLI exit codes.
enum class ErrorCode {
  kInvalidArgument = 1,
  kInfeasible = 2,
  kSizeGuard = 3,
  kIo = 4,
  kParse = 5,
  kInternal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace privpart

#endif  // PRIVPART_ERRORS_H_
