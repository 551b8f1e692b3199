// Copyright 2026 The tdprep Authors
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

#ifndef TDPREP_GF2_HPP
#define TDPREP_GF2_HPP

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tdprep/errors.hpp"

// Bit-packed linear algebra over GF(2). Vectors and matrix rows are stored as
// little-endian arrays of 64-bit words; bit j of a row is entry j.

namespace tdprep::gf2 {

class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    std::size_t word_count() const { return w_.size(); }
    uint64_t word(std::size_t i) const { return w_[i]; }
    uint64_t& word(std::size_t i) { return w_[i]; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) {
            w_[i >> 6] |= m;
        } else {
            w_[i >> 6] &= ~m;
        }
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void xor_in(const BitVec& o);
    bool none() const;
    std::size_t popcount() const;
    // Index of the lowest set bit, or size() if none.
    std::size_t lowest_set() const;

    bool operator==(const BitVec& o) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Parity of the AND of two equal-length vectors; the GF(2) dot product.
bool dot(const BitVec& a, const BitVec& b);

class BitMat {
  public:
    BitMat() = default;
    BitMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    const uint64_t* row_ptr(std::size_t r) const { return data_.data() + r * wpr_; }
    uint64_t* row_ptr(std::size_t r) { return data_.data() + r * wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (row_ptr(r)[c >> 6] >> (c & 63)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        uint64_t m = uint64_t{1} << (c & 63);
        if (v) {
            row_ptr(r)[c >> 6] |= m;
        } else {
            row_ptr(r)[c >> 6] &= ~m;
        }
    }

    void xor_rows(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    bool row_none(std::size_t r) const;

    BitVec row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);

    bool operator==(const BitMat& o) const = default;

    static BitMat identity(std::size_t n);
    // Rows of `rows` must share one length; empty input gives a 0x0 matrix.
    static BitMat from_rows(const std::vector<BitVec>& rows);

  private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> data_;
};

BitMat mul(const BitMat& a, const BitMat& b);
BitMat transpose(const BitMat& m);
// Vertical stack; both operands must have equal column counts.
BitMat vstack(const BitMat& top, const BitMat& bottom);

std::size_t rank(const BitMat& m);

struct RrefResult {
    BitMat r;                    // reduced matrix, R = T * M
    std::vector<std::size_t> pivots;  // pivot columns in elimination order
    BitMat t;                    // invertible row transform
};

// Gauss-Jordan elimination. Columns are processed in ascending order, so
// `pivots` comes out sorted. The overload takes a list of columns to try
// first (then the remaining columns ascending); its `pivots` follows that
// processing order.
RrefResult rref(const BitMat& m);
RrefResult rref(const BitMat& m, const std::vector<std::size_t>& preferred_cols);

// Coefficients c with c * M = v, if v lies in the row space of M.
std::optional<BitVec> solve_membership(const BitMat& m, const BitVec& v);

// Rows x with x * M = 0 (basis), and rows y with M * y^T = 0 (basis).
BitMat left_kernel_basis(const BitMat& m);
BitMat right_kernel_basis(const BitMat& m);

// Text form: one row per line of '0'/'1' characters, trailing newline.
// The parser skips blank lines and lines starting with '#'.
std::string to_text(const BitMat& m);
BitMat parse_matrix(const std::string& text);

}  // namespace tdprep::gf2

#endif
