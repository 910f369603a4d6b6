// Copyright 2026 The lpdm Authors.
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

#ifndef LPDM_ERROR_HPP_
#define LPDM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lpdm {

// Every failure raised by the library carries a stable machine-readable
// reason code; the CLI forwards it verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string reason, const std::string& message)
      : std::runtime_error(message), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

// Malformed or mismatched arguments (wrong ground size, bad labels, ...).
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& message)
      : Error("argument_error", message) {}
};

// A pair of subsets that was required to satisfy S <= T in the Gale order
// does not.
class OrderError : public Error {
 public:
  explicit OrderError(const std::string& message)
      : Error("order_error", message) {}
};

// A well-formed input outside the operation's domain (deleting a coloop,
// triangulating a non-toric interval, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error("domain_error", message) {}
};

}  // namespace lpdm

#endif  // LPDM_ERROR_HPP_
