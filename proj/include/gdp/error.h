// Copyright 2026 The gdp Authors
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

#ifndef GDP_ERROR_H_
#define GDP_ERROR_H_

#include <stdexcept>
#include <string>

namespace gdp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments that violate an operation's preconditions.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Enumeration exceeded its configured exploration cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Distributed state that cannot be reassembled into a consistent whole.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Operation requested for a configuration it does not support.
class UnsupportedMode : public Error {
 public:
  using Error::Error;
};

}  // namespace gdp

#endif  // GDP_ERROR_H_
