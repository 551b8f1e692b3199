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

#ifndef TDPREP_LATTICE_HPP
#define TDPREP_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tdprep/errors.hpp"

// Cell complex of a D-dimensional hypercubic lattice.
//
// Cells are addressed by doubled coordinates: entry i is twice the i-th
// geometric center coordinate, so vertices have all entries even and an
// n-cube has exactly n odd entries. Along a periodic direction of extent L
// the doubled coordinate lives in [0, 2L); along an open direction it lives
// in [0, 2L], i.e. vertices 0..L and top-dimensional centers 1/2..L-1/2.

namespace tdprep {

enum class Boundary : uint8_t { periodic, open };

struct LatticeSpec {
    std::vector<int> extents;        // cells per direction, L_1..L_D
    std::vector<Boundary> boundary;  // one entry per direction

    int dim() const { return static_cast<int>(extents.size()); }

    static LatticeSpec periodic(std::vector<int> extents);
};

struct Cube {
    std::vector<int> c;  // doubled coordinates

    int dim() const;
    bool operator==(const Cube& o) const = default;
    bool operator<(const Cube& o) const { return c < o.c; }
    // Directions with odd doubled coordinate, ascending.
    std::vector<int> span() const;
};

// Axis-aligned sub-lattice: all cells spanned by `axes` through an anchor.
// The anchor stores the doubled coordinates away from `axes`; its entries on
// `axes` are zeroed so equal leaves compare equal.
struct Leaf {
    std::vector<int> axes;  // sorted, 0-based directions
    Cube anchor;

    bool operator==(const Leaf& o) const = default;
    bool operator<(const Leaf& o) const;
};

class Lattice {
  public:
    const LatticeSpec& spec() const { return spec_; }
    int dim() const { return spec_.dim(); }
    int extent(int i) const { return spec_.extents[i]; }
    bool periodic(int i) const { return spec_.boundary[i] == Boundary::periodic; }

    // Canonical form of a cube given with arbitrary integer doubled
    // coordinates: reduced modulo 2L along periodic directions, range-checked
    // along open ones (nullopt when the cell does not exist).
    std::optional<Cube> normalize(Cube cube) const;
    bool contains(const Cube& cube) const;

    // All n-cubes in lexicographic doubled-coordinate order. This order
    // defines the canonical cell index used for qubit numbering.
    const std::vector<Cube>& cells(int n) const;
    std::size_t cell_count(int n) const { return cells(n).size(); }
    int index_of(const Cube& cube) const;

  private:
    friend Lattice make_lattice(const LatticeSpec& spec);

    LatticeSpec spec_;
    std::vector<std::vector<Cube>> cells_;
    std::vector<std::unordered_map<uint64_t, int>> index_;

    uint64_t key_of(const Cube& cube) const;
};

Lattice make_lattice(const LatticeSpec& spec);

inline const std::vector<Cube>& enumerate_cubes(const Lattice& lat, int n) {
    return lat.cells(n);
}

// Closure cells of `cube` of dimension d, canonically ordered. The closure of
// an existing cell never leaves the lattice, so no cells are dropped.
std::vector<Cube> faces(const Lattice& lat, const Cube& cube, int d);

// All dim-d_l leaves containing `node`, i.e. one leaf per choice of d_l axes
// covering the node's span.
std::vector<Leaf> leaves_through(const Lattice& lat, const Cube& node, int d_l);

// The d_s-cubes of `leaf` whose closure contains `node`. Cells falling off an
// open boundary are omitted.
std::vector<Cube> cofaces_in_leaf(const Lattice& lat, const Cube& node, int d_s,
                                  const Leaf& leaf);

// Cells matching a coordinate pattern; nullopt entries range over every valid
// doubled coordinate of their direction. With `dim_filter` set, only cells of
// that dimension are returned.
std::vector<Cube> star_expand(const Lattice& lat,
                              const std::vector<std::optional<int>>& pattern,
                              std::optional<int> dim_filter = std::nullopt);

// The leaf spanned by `axes` through `node`; validates containment.
Leaf leaf_through(const Lattice& lat, const Cube& node, std::vector<int> axes);

}  // namespace tdprep

#endif
