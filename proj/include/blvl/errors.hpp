// Copyright 2026 The blvl Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace blvl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text, bad rational literal, duplicate or missing field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Dimensionally inconsistent data or an argument outside its domain.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A polyhedron that must be bounded has a nonzero recession direction,
/// or a system has too few independent rows to have vertices.
class UnboundedPolyhedronError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class UnboundedError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Always a bug, never expected.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// A configured size or iteration limit was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace blvl
