// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace crv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wrong length / count for a fixed-size contract (blocks, keys, rc sets).
class SizeError : public Error {
 public:
  using Error::Error;
};

// Address or index range outside DM / buffer / host image.
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Operation issued to a busy DMA channel or engine.
class BusyError : public Error {
 public:
  using Error::Error;
};

// Algorithm/engine mismatch or invalid mode combination.
class ModeError : public Error {
 public:
  using Error::Error;
};

// Instruction field out of range at encode time.
class EncodingError : public Error {
 public:
  using Error::Error;
};

// Word does not decode to a known instruction.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// Assembly failure; carries the 1-based source line.
class AsmError : public Error {
 public:
  AsmError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Workload does not fit the DM / buffer layout.
class LayoutError : public Error {
 public:
  using Error::Error;
};

// Cycle limit exceeded before halt.
class RunawayError : public Error {
 public:
  using Error::Error;
};

}  // namespace crv
