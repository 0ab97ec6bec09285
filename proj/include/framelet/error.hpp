// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#pragma once

#include <stdexcept>
#include <string>

namespace framelet {

/// Base class of every error raised by the library. The CLI maps any of
/// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A product of two coefficients whose radicand product is not a rational square.
class NonSquareProduct : public Error {
 public:
  using Error::Error;
};

/// Two coefficients that cannot be added exactly as a single signed root.
class IncommensurableTaps : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

class NotTwoTap : public Error {
 public:
  using Error::Error;
};

class InvalidDirectionMatrix : public Error {
 public:
  using Error::Error;
};

class BadDims : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Exact transform requested for a bank whose scaled taps are irrational.
class InexactCoefficient : public Error {
 public:
  using Error::Error;
};

class MaskNotNormalized : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace framelet
