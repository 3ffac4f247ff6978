// Copyright 2026 The datalab Authors.
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

#include <stdexcept>
#include <string>

namespace datalab {

// Base of every error the toolkit throws on purpose. Anything else escaping
// the library is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data or a request broke a documented contract (bad record, schema
// violation, out-of-range parameter).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Filesystem / persistence failure, including corrupted store files and
// partition lock conflicts.
class StorageError : public Error {
 public:
  using Error::Error;
};

// Misconfiguration: missing or empty resource lists, unknown operation ids,
// bad parameter values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace datalab
