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

#include "tdprep/pauli.hpp"

#include <bit>

namespace tdprep {

namespace {

std::size_t and_popcount(const gf2::BitVec& a, const gf2::BitVec& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.word_count(); ++i) {
        c += std::popcount(a.word(i) & b.word(i));
    }
    return c;
}

}  // namespace

std::size_t PauliOp::weight() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < x.word_count(); ++i) {
        c += std::popcount(x.word(i) | z.word(i));
    }
    return c;
}

PauliOp pure_x(std::size_t n, const gf2::BitVec& support) {
    PauliOp p(n);
    p.x = support;
    return p;
}

PauliOp pure_z(std::size_t n, const gf2::BitVec& support) {
    PauliOp p(n);
    p.z = support;
    return p;
}

bool commutes(const PauliOp& a, const PauliOp& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("Pauli sizes " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
    }
    return ((and_popcount(a.x, b.z) ^ and_popcount(a.z, b.x)) & 1) == 0;
}

PauliOp mul(const PauliOp& a, const PauliOp& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("Pauli sizes " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
    }
    // Writing each factor as i^{|x&z|} X^x Z^z and commuting Z^za past X^xb
    // gives the i exponent of the product.
    PauliOp r(a.size());
    r.x = a.x;
    r.x.xor_in(b.x);
    r.z = a.z;
    r.z.xor_in(b.z);
    std::size_t e = and_popcount(a.x, a.z) + and_popcount(b.x, b.z) +
                    2 * and_popcount(a.z, b.x) + 3 * and_popcount(r.x, r.z);
    if (e % 2 != 0) {
        throw InternalConsistencyError("non-Hermitian Pauli product");
    }
    int sign = (e % 4 == 0) ? +1 : -1;
    r.sign = a.sign * b.sign * sign;
    return r;
}

std::string to_string(const PauliOp& p) {
    std::string s = p.sign >= 0 ? "+" : "-";
    bool any = false;
    for (std::size_t q = 0; q < p.size(); ++q) {
        bool xb = p.x.get(q);
        bool zb = p.z.get(q);
        if (!xb && !zb) {
            continue;
        }
        if (any) {
            s += ' ';
        }
        s += xb ? (zb ? 'Y' : 'X') : 'Z';
        s += '_';
        s += std::to_string(q);
        any = true;
    }
    if (!any) {
        s += 'I';
    }
    return s;
}

}  // namespace tdprep
