// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bridges {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (bad dimensions, bad parameters, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A cryptographic operation rejected its input (non-unit ciphertext,
// modulus mismatch, malformed key material).
class CryptoError : public Error {
 public:
  using Error::Error;
};

// A bounded sampling loop ran out of attempts.
class GenerationFailed : public CryptoError {
 public:
  GenerationFailed(const std::string& what, std::size_t attempts)
      : CryptoError(what + " (gave up after " + std::to_string(attempts) +
                    " attempts)"),
        attempts_(attempts) {}

  std::size_t attempts() const noexcept { return attempts_; }

 private:
  std::size_t attempts_;
};

// A somewhat-homomorphic ciphertext exceeded the depth its key supports.
class DepthExceeded : public CryptoError {
 public:
  DepthExceeded(std::size_t depth, std::size_t capacity)
      : CryptoError("multiplicative depth " + std::to_string(depth) +
                    " exceeds capacity " + std::to_string(capacity)),
        depth_(depth),
        capacity_(capacity) {}

  std::size_t depth() const noexcept { return depth_; }
  std::size_t capacity() const noexcept { return capacity_; }

 private:
  std::size_t depth_;
  std::size_t capacity_;
};

}  // namespace bridges
