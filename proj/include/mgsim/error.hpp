// Copyright 2026 The mgsim Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace mgsim {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands with incompatible line counts or matrix sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A matrix logarithm could not be placed inside the required Lie algebra.
class LogError : public Error {
 public:
  LogError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Malformed circuit text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A gate violates the constraints of its class (wrong lines, determinant
/// mismatch, not a matchgate, ...). `rule` names the violated constraint.
class GateClassError : public Error {
 public:
  GateClassError(const std::string& rule, const std::string& detail)
      : Error(rule + ": " + detail), rule_(rule) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

/// Compilation of gate `index` (0-based, circuit order) failed.
class CompileError : public Error {
 public:
  CompileError(int index, const std::string& msg)
      : Error("gate " + std::to_string(index) + ": " + msg), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// Inconsistent engine output, e.g. a complex expectation for a unitary
/// circuit.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mgsim
