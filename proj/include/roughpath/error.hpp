/* Copyright 2026 The roughpath Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#ifndef ROUGHPATH_ERROR_HPP
#define ROUGHPATH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace roughpath {

// Malformed or out-of-contract arguments (dimension mismatch, s > t, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A control that fails to be strictly monotone on the interval being split.
class NonMonotoneControl : public std::runtime_error {
 public:
  NonMonotoneControl(const std::string& what, double s, double t)
      : std::runtime_error(what), s_(s), t_(t) {}
  double s() const noexcept { return s_; }
  double t() const noexcept { return t_; }

 private:
  double s_;
  double t_;
};

// The dyadic limit did not settle before the maximal partition order.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_increment)
      : std::runtime_error(what), last_increment_(last_increment) {}
  double last_increment() const noexcept { return last_increment_; }

 private:
  double last_increment_;
};

// (p, delta) combination for which no estimate exists.
class InvalidCase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An input file that cannot be opened or parsed.
class UnreadableInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A well-formed document whose fields do not match what the reader expects.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace roughpath

#endif  // ROUGHPATH_ERROR_HPP
