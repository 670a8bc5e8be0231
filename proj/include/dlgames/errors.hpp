// Copyright 2026 The dlgames Authors
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

#ifndef DLGAMES_ERRORS_HPP_
#define DLGAMES_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dlgames {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A name (concept, role, individual) is not part of the vocabulary in use.
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

// An element identifier is not part of the domain.
class UnknownElementError : public Error {
 public:
  using Error::Error;
};

// A nominal was evaluated while its individual name is unmapped.
class UndefinedIndividualError : public Error {
 public:
  using Error::Error;
};

// The interpretation violates its structural invariants.
class InvalidInterpretationError : public Error {
 public:
  using Error::Error;
};

// Two structures handed to one game do not share a vocabulary.
class VocabularyMismatchError : public Error {
 public:
  using Error::Error;
};

// Concrete-syntax error with a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A reduction would generate a name that already exists in its input.
class NameCollisionError : public Error {
 public:
  using Error::Error;
};

// A named element cannot be reached from the point.
class UnreachableNominalError : public Error {
 public:
  using Error::Error;
};

// A caller violated an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A move that the game rules do not license. `index` is the position of the
// offending move in a scripted sequence, when there is one.
class IllegalMoveError : public Error {
 public:
  IllegalMoveError(const std::string& what, std::size_t index = 0)
      : Error(what), index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Nothing atomic can be built from the vocabulary at hand.
class EmptyVocabularyError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A map handed to the comonad machinery is not a (pointed) homomorphism.
class InvalidMorphismError : public Error {
 public:
  using Error::Error;
};

// Malformed interpretation file; `field` names the offending key.
class FormatError : public Error {
 public:
  FormatError(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field_(field) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace dlgames

#endif  // DLGAMES_ERRORS_HPP_
