// Copyright 2026 The nsrte Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsrte {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed PENMAN input. `position` is a byte offset into the source text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& reason)
      : Error("parse error at " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(reason) {}

  std::size_t position() const { return position_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

class CyclicGraph : public Error {
 public:
  using Error::Error;
};

/// Raised by the logic lowering when negation scope is ambiguous.
class UnsupportedGraph : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class MissingEmbedding : public Error {
 public:
  explicit MissingEmbedding(const std::string& text)
      : Error("no embedding for '" + text + "'"), text_(text) {}
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

class UnmappedAtom : public Error {
 public:
  using Error::Error;
};

class TooManyLetters : public Error {
 public:
  using Error::Error;
};

class SolverBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Unreadable or malformed dataset / embedding / stub files.
class DatasetError : public Error {
 public:
  using Error::Error;
};

}  // namespace nsrte
