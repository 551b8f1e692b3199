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

#ifndef TDPREP_PAULI_HPP
#define TDPREP_PAULI_HPP

#include <cstddef>
#include <string>

#include "tdprep/gf2.hpp"

namespace tdprep {

// A signed Pauli operator sign * P_0 x ... x P_{n-1}, with P_q determined by
// the bit pair (x_q, z_q): 00 -> I, 10 -> X, 01 -> Z, 11 -> Y.
struct PauliOp {
    gf2::BitVec x, z;
    int sign = +1;  // +1 or -1

    explicit PauliOp(std::size_t n = 0) : x(n), z(n) {}

    std::size_t size() const { return x.size(); }
    bool is_identity() const { return sign == +1 && x.none() && z.none(); }
    std::size_t weight() const;

    bool operator==(const PauliOp& o) const = default;
};

PauliOp pure_x(std::size_t n, const gf2::BitVec& support);
PauliOp pure_z(std::size_t n, const gf2::BitVec& support);

bool commutes(const PauliOp& a, const PauliOp& b);

// Operator product a * b. Throws InternalConsistencyError if the product is
// not Hermitian (carries a stray factor of i); products of commuting
// operators and of same-type operators are always safe.
PauliOp mul(const PauliOp& a, const PauliOp& b);

// Rendering like "-X_3 Z_7 Y_12"; identity renders as "+I".
std::string to_string(const PauliOp& p);

}  // namespace tdprep

#endif
