// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qscat {

/// Base class for every numeric/domain error thrown by this library.
/// `name()` is the stable machine-readable identifier (also used by the CLI
/// when reporting failures on the diagnostic stream).
class Error : public std::runtime_error {
  public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

  private:
    std::string name_;
};

#define QSCAT_DEFINE_ERROR(TYPE)                                               \
    class TYPE : public Error {                                                \
      public:                                                                  \
        explicit TYPE(const std::string& what) : Error(#TYPE, what) {}         \
    };

QSCAT_DEFINE_ERROR(InvalidDimension)
QSCAT_DEFINE_ERROR(IndexOutOfRange)
QSCAT_DEFINE_ERROR(OutOfRange)
QSCAT_DEFINE_ERROR(OutOfDomain)
QSCAT_DEFINE_ERROR(NonPhysicalInput)
QSCAT_DEFINE_ERROR(NegativeDiscriminant)
QSCAT_DEFINE_ERROR(DivergentCorrelation)

#undef QSCAT_DEFINE_ERROR

} // namespace qscat
