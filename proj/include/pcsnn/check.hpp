// Copyright 2026 The pcsnn Authors
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

#ifndef PCSNN_CHECK_HPP_
#define PCSNN_CHECK_HPP_

#include <sstream>
#include <stdexcept>
#include <string>

namespace pcsnn {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape or size disagreement between arguments.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed byte payload or text (IDX, AER, CSV, checkpoint, config).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Value outside its documented domain.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure.
class IoError : public Error {
 public:
  using Error::Error;
};

namespace internal {
template <typename E, typename... Args>
[[noreturn]] void throw_error(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  throw E(os.str());
}
}  // namespace internal

}  // namespace pcsnn

#define PCSNN_CHECK(cond, ...)                                         \
  do {                                                                 \
    if (!(cond))                                                       \
      ::pcsnn::internal::throw_error<::pcsnn::Error>(__VA_ARGS__);     \
  } while (0)

#define PCSNN_CHECK_DIM(cond, ...)                                         \
  do {                                                                     \
    if (!(cond))                                                           \
      ::pcsnn::internal::throw_error<::pcsnn::DimensionError>(__VA_ARGS__); \
  } while (0)

#define PCSNN_CHECK_FORMAT(cond, ...)                                    \
  do {                                                                   \
    if (!(cond))                                                         \
      ::pcsnn::internal::throw_error<::pcsnn::FormatError>(__VA_ARGS__); \
  } while (0)

#define PCSNN_CHECK_RANGE(cond, ...)                                    \
  do {                                                                  \
    if (!(cond))                                                        \
      ::pcsnn::internal::throw_error<::pcsnn::RangeError>(__VA_ARGS__); \
  } while (0)

#endif  // PCSNN_CHECK_HPP_
