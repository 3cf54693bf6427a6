// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cubemap {

/// Base of every domain error raised by the library. The CLI maps these to
/// exit status 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (METIS, partition/mapping files, topology strings).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A label or dimension would exceed the fixed 64-bit budget.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// Internal state no longer satisfies its invariants (duplicate labels,
/// labels that decode to no PE, ...).
class IntegrityError : public Error {
public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
public:
  using Error::Error;
};

/// Arguments are well formed but inconsistent with each other, e.g. a
/// partition whose block count differs from the number of PEs.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

} // namespace cubemap
