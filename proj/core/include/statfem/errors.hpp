// Copyright 2026 The statfem-lab Authors.
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

namespace statfem {

// Bad input to a public operation (sizes, ranges, preconditions).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation could not be carried out to the required accuracy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EllipticityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularSystemError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class AccuracyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConditioningError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class OutOfDomainError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class LocationError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class IncompatibleFieldsError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FilesystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace statfem
