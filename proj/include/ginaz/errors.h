// Copyright 2026 The Ginaz Authors.
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

#ifndef GINAZ_ERRORS_H_
#define GINAZ_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ginaz {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input bytes are not valid UTF-8.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// Token offsets do not describe a consistent view of the raw text.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A data file (corpus, rule table) is malformed. `line()` is 1-based, 0 when
// the problem is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Training input cannot produce a model (e.g. empty corpus).
class ModelError : public Error {
 public:
  using Error::Error;
};

class BundleError : public Error {
 public:
  enum class Kind { kMissingComponent, kVersionMismatch, kChecksum, kFormat };

  BundleError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A caller broke an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The external translation backend could not be reached or timed out.
class TransportError : public Error {
 public:
  using Error::Error;
};

// The translation backend has no translation for the input.
class UntranslatableError : public Error {
 public:
  using Error::Error;
};

}  // namespace ginaz

#endif  // GINAZ_ERRORS_H_
