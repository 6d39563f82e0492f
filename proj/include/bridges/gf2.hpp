// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bridges/error.hpp"
#include "bridges/rng.hpp"

namespace bridges {

// Bits are stored one per byte, each 0 or 1.
using Bit = std::uint8_t;
using BitVector = std::vector<Bit>;

inline bool is_zero(const BitVector& v) {
  for (Bit b : v) {
    if (b) return false;
  }
  return true;
}

/// Square matrix over GF(2), row-major.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  explicit GF2Matrix(std::size_t dim) : dim_(dim), bits_(dim * dim, 0) {}

  static GF2Matrix identity(std::size_t dim) {
    GF2Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
  }

  static GF2Matrix from_rows(const std::vector<BitVector>& rows) {
    GF2Matrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != rows.size()) {
        throw InvalidArgument("GF2Matrix: rows must form a square matrix");
      }
      for (std::size_t c = 0; c < rows.size(); ++c) m.set(r, c, rows[r][c] & 1);
    }
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  Bit get(std::size_t r, std::size_t c) const { return bits_[r * dim_ + c]; }
  void set(std::size_t r, std::size_t c, Bit v) { bits_[r * dim_ + c] = v & 1; }

  std::size_t row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (std::size_t c = 0; c < dim_; ++c) w += get(r, c);
    return w;
  }

  /// M·v over GF(2).
  BitVector apply(const BitVector& v) const {
    if (v.size() != dim_) throw InvalidArgument("gf2_mat_vec: dimension mismatch");
    BitVector out(dim_, 0);
    for (std::size_t r = 0; r < dim_; ++r) {
      Bit acc = 0;
      for (std::size_t c = 0; c < dim_; ++c) acc ^= get(r, c) & v[c];
      out[r] = acc;
    }
    return out;
  }

  GF2Matrix operator*(const GF2Matrix& o) const {
    if (o.dim_ != dim_) throw InvalidArgument("GF2Matrix: dimension mismatch");
    GF2Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!get(r, k)) continue;
        for (std::size_t c = 0; c < dim_; ++c) {
          out.bits_[r * dim_ + c] ^= o.get(k, c);
        }
      }
    }
    return out;
  }

  bool operator==(const GF2Matrix&) const = default;

  std::size_t rank() const {
    GF2Matrix work = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim_ && rank < dim_; ++col) {
      std::size_t pivot = rank;
      while (pivot < dim_ && !work.get(pivot, col)) ++pivot;
      if (pivot == dim_) continue;
      work.swap_rows(pivot, rank);
      for (std::size_t r = 0; r < dim_; ++r) {
        if (r != rank && work.get(r, col)) work.add_row(rank, r);
      }
      ++rank;
    }
    return rank;
  }

  bool nonsingular() const { return rank() == dim_; }

  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<GF2Matrix> inverse() const {
    GF2Matrix work = *this;
    GF2Matrix inv = identity(dim_);
    for (std::size_t col = 0; col < dim_; ++col) {
      std::size_t pivot = col;
      while (pivot < dim_ && !work.get(pivot, col)) ++pivot;
      if (pivot == dim_) return std::nullopt;
      work.swap_rows(pivot, col);
      inv.swap_rows(pivot, col);
      for (std::size_t r = 0; r < dim_; ++r) {
        if (r != col && work.get(r, col)) {
          work.add_row(col, r);
          inv.add_row(col, r);
        }
      }
    }
    return inv;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < dim_; ++c) {
      std::swap(bits_[a * dim_ + c], bits_[b * dim_ + c]);
    }
  }
  // row[dst] ^= row[src]
  void add_row(std::size_t src, std::size_t dst) {
    for (std::size_t c = 0; c < dim_; ++c) bits_[dst * dim_ + c] ^= bits_[src * dim_ + c];
  }

  std::size_t dim_ = 0;
  std::vector<Bit> bits_;
};

inline BitVector gf2_mat_vec(const GF2Matrix& m, const BitVector& v) {
  return m.apply(v);
}

inline GF2Matrix random_gf2(std::size_t dim, Rng& rng) {
  GF2Matrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) m.set(r, c, rng.coin() ? 1 : 0);
  }
  return m;
}

/// Uniform element of GL_dim(F_2) by rejection sampling uniform matrices.
/// Retries are capped at 64·dim; the number used is written to *attempts.
inline GF2Matrix random_nonsingular_gf2(std::size_t dim, Rng& rng,
                                        std::size_t* attempts = nullptr) {
  if (dim == 0) throw InvalidArgument("random_nonsingular_gf2: dimension must be >= 1");
  const std::size_t cap = 64 * dim;
  for (std::size_t attempt = 1; attempt <= cap; ++attempt) {
    GF2Matrix m = random_gf2(dim, rng);
    if (m.nonsingular()) {
      if (attempts) *attempts = attempt;
      return m;
    }
  }
  throw GenerationFailed("random_nonsingular_gf2: no invertible matrix", cap);
}

inline BitVector random_bits_vector(std::size_t len, Rng& rng) {
  BitVector v(len);
  for (auto& b : v) b = rng.coin() ? 1 : 0;
  return v;
}

/// Uniform nonzero vector in F_2^len.
inline BitVector random_nonzero_bits(std::size_t len, Rng& rng) {
  if (len == 0) throw InvalidArgument("random_nonzero_bits: length must be >= 1");
  BitVector v(len);
  do {
    for (auto& b : v) b = rng.coin() ? 1 : 0;
  } while (is_zero(v));
  return v;
}

}  // namespace bridges
