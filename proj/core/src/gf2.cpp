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

#include "tdprep/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace tdprep::gf2 {

void BitVec::xor_in(const BitVec& o) {
    if (o.n_ != n_) {
        throw DimensionMismatch("BitVec::xor_in: size " + std::to_string(o.n_) +
                                " vs " + std::to_string(n_));
    }
    for (std::size_t i = 0; i < w_.size(); ++i) {
        w_[i] ^= o.w_[i];
    }
}

bool BitVec::none() const {
    for (uint64_t w : w_) {
        if (w) {
            return false;
        }
    }
    return true;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (uint64_t w : w_) {
        c += std::popcount(w);
    }
    return c;
}

std::size_t BitVec::lowest_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i]) {
            return i * 64 + std::countr_zero(w_[i]);
        }
    }
    return n_;
}

bool dot(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("gf2::dot: size " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
    }
    uint64_t acc = 0;
    for (std::size_t i = 0; i < a.word_count(); ++i) {
        acc ^= a.word(i) & b.word(i);
    }
    return std::popcount(acc) & 1;
}

void BitMat::xor_rows(std::size_t dst, std::size_t src) {
    uint64_t* d = row_ptr(dst);
    const uint64_t* s = row_ptr(src);
    for (std::size_t i = 0; i < wpr_; ++i) {
        d[i] ^= s[i];
    }
}

void BitMat::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    uint64_t* pa = row_ptr(a);
    uint64_t* pb = row_ptr(b);
    for (std::size_t i = 0; i < wpr_; ++i) {
        std::swap(pa[i], pb[i]);
    }
}

bool BitMat::row_none(std::size_t r) const {
    const uint64_t* p = row_ptr(r);
    for (std::size_t i = 0; i < wpr_; ++i) {
        if (p[i]) {
            return false;
        }
    }
    return true;
}

BitVec BitMat::row(std::size_t r) const {
    BitVec v(cols_);
    const uint64_t* p = row_ptr(r);
    for (std::size_t i = 0; i < wpr_; ++i) {
        v.word(i) = p[i];
    }
    return v;
}

void BitMat::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) {
        throw DimensionMismatch("BitMat::set_row: vector size " +
                                std::to_string(v.size()) + " vs cols " +
                                std::to_string(cols_));
    }
    uint64_t* p = row_ptr(r);
    for (std::size_t i = 0; i < wpr_; ++i) {
        p[i] = v.word(i);
    }
}

BitMat BitMat::identity(std::size_t n) {
    BitMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

BitMat BitMat::from_rows(const std::vector<BitVec>& rows) {
    if (rows.empty()) {
        return BitMat();
    }
    BitMat m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        m.set_row(r, rows[r]);
    }
    return m;
}

BitMat mul(const BitMat& a, const BitMat& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("gf2::mul: " + std::to_string(a.cols()) +
                                " cols vs " + std::to_string(b.rows()) + " rows");
    }
    BitMat out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        uint64_t* dst = out.row_ptr(r);
        const uint64_t* ar = a.row_ptr(r);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if ((ar[k >> 6] >> (k & 63)) & 1) {
                const uint64_t* bk = b.row_ptr(k);
                for (std::size_t i = 0; i < b.words_per_row(); ++i) {
                    dst[i] ^= bk[i];
                }
            }
        }
    }
    return out;
}

BitMat transpose(const BitMat& m) {
    BitMat out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const uint64_t* p = m.row_ptr(r);
        for (std::size_t wi = 0; wi < m.words_per_row(); ++wi) {
            uint64_t w = p[wi];
            while (w) {
                std::size_t c = wi * 64 + std::countr_zero(w);
                out.set(c, r, true);
                w &= w - 1;
            }
        }
    }
    return out;
}

BitMat vstack(const BitMat& top, const BitMat& bottom) {
    if (top.rows() == 0) {
        return bottom;
    }
    if (bottom.rows() == 0) {
        return top;
    }
    if (top.cols() != bottom.cols()) {
        throw DimensionMismatch("gf2::vstack: " + std::to_string(top.cols()) +
                                " vs " + std::to_string(bottom.cols()) + " cols");
    }
    BitMat out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r) {
        out.set_row(r, top.row(r));
    }
    for (std::size_t r = 0; r < bottom.rows(); ++r) {
        out.set_row(top.rows() + r, bottom.row(r));
    }
    return out;
}

std::size_t rank(const BitMat& m) {
    BitMat w = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        std::size_t piv = r;
        while (piv < w.rows() && !w.get(piv, c)) {
            ++piv;
        }
        if (piv == w.rows()) {
            continue;
        }
        w.swap_rows(r, piv);
        for (std::size_t i = piv + 1; i < w.rows(); ++i) {
            if (w.get(i, c)) {
                w.xor_rows(i, r);
            }
        }
        ++r;
    }
    return r;
}

namespace {

RrefResult rref_with_order(const BitMat& m, const std::vector<std::size_t>& order) {
    RrefResult res;
    res.r = m;
    res.t = BitMat::identity(m.rows());
    std::size_t cur = 0;
    for (std::size_t c : order) {
        if (cur >= m.rows()) {
            break;
        }
        std::size_t piv = cur;
        while (piv < m.rows() && !res.r.get(piv, c)) {
            ++piv;
        }
        if (piv == m.rows()) {
            continue;
        }
        res.r.swap_rows(cur, piv);
        res.t.swap_rows(cur, piv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != cur && res.r.get(i, c)) {
                res.r.xor_rows(i, cur);
                res.t.xor_rows(i, cur);
            }
        }
        res.pivots.push_back(c);
        ++cur;
    }
    return res;
}

}  // namespace

RrefResult rref(const BitMat& m) {
    std::vector<std::size_t> order(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        order[c] = c;
    }
    return rref_with_order(m, order);
}

RrefResult rref(const BitMat& m, const std::vector<std::size_t>& preferred_cols) {
    std::vector<bool> seen(m.cols(), false);
    std::vector<std::size_t> order;
    order.reserve(m.cols());
    for (std::size_t c : preferred_cols) {
        if (c >= m.cols()) {
            throw DimensionMismatch("gf2::rref: preferred column " +
                                    std::to_string(c) + " out of range");
        }
        if (!seen[c]) {
            seen[c] = true;
            order.push_back(c);
        }
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!seen[c]) {
            order.push_back(c);
        }
    }
    return rref_with_order(m, order);
}

std::optional<BitVec> solve_membership(const BitMat& m, const BitVec& v) {
    if (v.size() != m.cols()) {
        throw DimensionMismatch("gf2::solve_membership: vector size " +
                                std::to_string(v.size()) + " vs cols " +
                                std::to_string(m.cols()));
    }
    RrefResult rr = rref(m);
    BitVec rem = v;
    BitVec comb(m.rows());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rem.get(rr.pivots[i])) {
            rem.xor_in(rr.r.row(i));
            comb.xor_in(rr.t.row(i));
        }
    }
    if (!rem.none()) {
        return std::nullopt;
    }
    return comb;
}

BitMat left_kernel_basis(const BitMat& m) {
    RrefResult rr = rref(m);
    std::size_t rk = rr.pivots.size();
    BitMat out(m.rows() - rk, m.rows());
    for (std::size_t i = rk; i < m.rows(); ++i) {
        out.set_row(i - rk, rr.t.row(i));
    }
    return out;
}

BitMat right_kernel_basis(const BitMat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) {
        is_pivot[c] = true;
    }
    BitMat out(m.cols() - rr.pivots.size(), m.cols());
    std::size_t k = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        out.set(k, f, true);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            if (rr.r.get(i, f)) {
                out.set(k, rr.pivots[i], true);
            }
        }
        ++k;
    }
    return out;
}

std::string to_text(const BitMat& m) {
    std::string s;
    s.reserve(m.rows() * (m.cols() + 1));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            s += m.get(r, c) ? '1' : '0';
        }
        s += '\n';
    }
    return s;
}

BitMat parse_matrix(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        std::size_t end = line.find_last_not_of(" \t");
        rows.push_back(line.substr(start, end - start + 1));
    }
    if (rows.empty()) {
        return BitMat();
    }
    BitMat m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) {
            throw FormatError("matrix row " + std::to_string(r) + " has length " +
                              std::to_string(rows[r].size()) + ", expected " +
                              std::to_string(rows[0].size()));
        }
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            char ch = rows[r][c];
            if (ch == '1') {
                m.set(r, c, true);
            } else if (ch != '0') {
                throw FormatError(std::string("invalid matrix character '") + ch +
                                  "'");
            }
        }
    }
    return m;
}

}  // namespace tdprep::gf2
