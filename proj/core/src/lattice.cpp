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

#include "tdprep/lattice.hpp"

#include <algorithm>
#include <string>

namespace tdprep {

LatticeSpec LatticeSpec::periodic(std::vector<int> extents) {
    LatticeSpec s;
    s.boundary.assign(extents.size(), Boundary::periodic);
    s.extents = std::move(extents);
    return s;
}

int Cube::dim() const {
    int n = 0;
    for (int x : c) {
        n += x & 1;
    }
    return n;
}

std::vector<int> Cube::span() const {
    std::vector<int> dirs;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] & 1) {
            dirs.push_back(static_cast<int>(i));
        }
    }
    return dirs;
}

bool Leaf::operator<(const Leaf& o) const {
    if (axes != o.axes) {
        return axes < o.axes;
    }
    return anchor < o.anchor;
}

std::optional<Cube> Lattice::normalize(Cube cube) const {
    if (static_cast<int>(cube.c.size()) != dim()) {
        throw InvalidDimension("cube has " + std::to_string(cube.c.size()) +
                               " coordinates, lattice dimension is " +
                               std::to_string(dim()));
    }
    for (int i = 0; i < dim(); ++i) {
        int m = 2 * spec_.extents[i];
        if (periodic(i)) {
            cube.c[i] = ((cube.c[i] % m) + m) % m;
        } else if (cube.c[i] < 0 || cube.c[i] > m) {
            return std::nullopt;
        }
    }
    return cube;
}

bool Lattice::contains(const Cube& cube) const {
    return normalize(cube).has_value();
}

const std::vector<Cube>& Lattice::cells(int n) const {
    if (n < 0 || n > dim()) {
        throw InvalidDimension("no cells of dimension " + std::to_string(n) +
                               " in a " + std::to_string(dim()) + "d lattice");
    }
    return cells_[n];
}

uint64_t Lattice::key_of(const Cube& cube) const {
    uint64_t key = 0;
    for (int i = 0; i < dim(); ++i) {
        key = key * static_cast<uint64_t>(2 * spec_.extents[i] + 2) +
              static_cast<uint64_t>(cube.c[i]);
    }
    return key;
}

int Lattice::index_of(const Cube& cube) const {
    std::optional<Cube> norm = normalize(cube);
    if (!norm) {
        throw InvalidDimension("cell is outside the lattice");
    }
    const auto& map = index_[norm->dim()];
    auto it = map.find(key_of(*norm));
    if (it == map.end()) {
        throw InvalidDimension("cell is outside the lattice");
    }
    return it->second;
}

Lattice make_lattice(const LatticeSpec& spec) {
    if (spec.extents.empty()) {
        throw InvalidLattice("lattice dimension must be at least 1");
    }
    if (spec.boundary.size() != spec.extents.size()) {
        throw InvalidLattice("boundary list has " +
                             std::to_string(spec.boundary.size()) +
                             " entries for " + std::to_string(spec.extents.size()) +
                             " directions");
    }
    for (std::size_t i = 0; i < spec.extents.size(); ++i) {
        int min_extent = spec.boundary[i] == Boundary::periodic ? 2 : 1;
        if (spec.extents[i] < min_extent) {
            throw InvalidLattice("extent " + std::to_string(spec.extents[i]) +
                                 " in direction " + std::to_string(i + 1) +
                                 " is below the minimum " +
                                 std::to_string(min_extent));
        }
    }

    Lattice lat;
    lat.spec_ = spec;
    int d = lat.dim();
    lat.cells_.resize(d + 1);
    lat.index_.resize(d + 1);

    Cube cur;
    cur.c.assign(d, 0);
    // Depth-first sweep in lexicographic coordinate order.
    auto sweep = [&](auto&& self, int i) -> void {
        if (i == d) {
            int n = cur.dim();
            lat.index_[n].emplace(lat.key_of(cur),
                                  static_cast<int>(lat.cells_[n].size()));
            lat.cells_[n].push_back(cur);
            return;
        }
        int hi = 2 * spec.extents[i] - (spec.boundary[i] == Boundary::periodic);
        for (int x = 0; x <= hi; ++x) {
            cur.c[i] = x;
            self(self, i + 1);
        }
    };
    sweep(sweep, 0);
    return lat;
}

std::vector<Cube> faces(const Lattice& lat, const Cube& cube, int d) {
    std::optional<Cube> norm = lat.normalize(cube);
    if (!norm) {
        throw InvalidDimension("cell is outside the lattice");
    }
    std::vector<int> span = norm->span();
    int n = static_cast<int>(span.size());
    if (d < 0 || d > n) {
        throw InvalidDimension("no dimension-" + std::to_string(d) +
                               " faces of a " + std::to_string(n) + "-cube");
    }

    std::vector<Cube> out;
    // Keep d of the spanned directions odd; round the rest up or down.
    std::vector<int> mask(n);
    std::fill(mask.begin(), mask.begin() + d, 1);
    std::sort(mask.begin(), mask.end(), std::greater<int>());
    do {
        std::vector<int> rounded;
        for (int i = 0; i < n; ++i) {
            if (!mask[i]) {
                rounded.push_back(span[i]);
            }
        }
        int m = static_cast<int>(rounded.size());
        for (int bits = 0; bits < (1 << m); ++bits) {
            Cube f = *norm;
            for (int j = 0; j < m; ++j) {
                f.c[rounded[j]] += (bits >> j & 1) ? 1 : -1;
            }
            std::optional<Cube> nf = lat.normalize(std::move(f));
            if (nf) {
                out.push_back(std::move(*nf));
            }
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Leaf leaf_through(const Lattice& lat, const Cube& node, std::vector<int> axes) {
    std::optional<Cube> norm = lat.normalize(node);
    if (!norm) {
        throw InvalidDimension("cell is outside the lattice");
    }
    std::sort(axes.begin(), axes.end());
    for (std::size_t i = 0; i + 1 < axes.size(); ++i) {
        if (axes[i] == axes[i + 1]) {
            throw InvalidLeafDim("repeated leaf axis " + std::to_string(axes[i] + 1));
        }
    }
    for (int a : axes) {
        if (a < 0 || a >= lat.dim()) {
            throw InvalidLeafDim("leaf axis " + std::to_string(a + 1) +
                                 " out of range");
        }
    }
    std::vector<int> span = norm->span();
    for (int s : span) {
        if (!std::binary_search(axes.begin(), axes.end(), s)) {
            throw NodeNotInLeaf("node spans direction " + std::to_string(s + 1) +
                                " outside the leaf axes");
        }
    }
    Leaf leaf;
    leaf.anchor = *norm;
    for (int a : axes) {
        leaf.anchor.c[a] = 0;
    }
    leaf.axes = std::move(axes);
    return leaf;
}

std::vector<Leaf> leaves_through(const Lattice& lat, const Cube& node, int d_l) {
    std::optional<Cube> norm = lat.normalize(node);
    if (!norm) {
        throw InvalidDimension("cell is outside the lattice");
    }
    std::vector<int> span = norm->span();
    int d_n = static_cast<int>(span.size());
    if (d_l < d_n || d_l > lat.dim()) {
        throw InvalidLeafDim("no dimension-" + std::to_string(d_l) +
                             " leaves through a " + std::to_string(d_n) + "-cube");
    }

    // All d_l-subsets of directions containing the node's span, in
    // lexicographic order.
    std::vector<int> rest;
    for (int i = 0; i < lat.dim(); ++i) {
        if (!std::binary_search(span.begin(), span.end(), i)) {
            rest.push_back(i);
        }
    }
    int extra = d_l - d_n;
    std::vector<Leaf> out;
    std::vector<int> pick(rest.size(), 0);
    std::fill(pick.begin(), pick.begin() + extra, 1);
    std::sort(pick.begin(), pick.end(), std::greater<int>());
    do {
        std::vector<int> axes = span;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (pick[i]) {
                axes.push_back(rest[i]);
            }
        }
        out.push_back(leaf_through(lat, *norm, std::move(axes)));
    } while (std::prev_permutation(pick.begin(), pick.end()));

    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cube> cofaces_in_leaf(const Lattice& lat, const Cube& node, int d_s,
                                  const Leaf& leaf) {
    std::optional<Cube> norm = lat.normalize(node);
    if (!norm) {
        throw InvalidDimension("cell is outside the lattice");
    }
    std::vector<int> span = norm->span();
    int d_n = static_cast<int>(span.size());
    if (d_s < d_n || d_s > static_cast<int>(leaf.axes.size())) {
        throw InvalidDimension("no dimension-" + std::to_string(d_s) +
                               " cofaces of a " + std::to_string(d_n) +
                               "-cube in a " + std::to_string(leaf.axes.size()) +
                               "d leaf");
    }
    for (int s : span) {
        if (!std::binary_search(leaf.axes.begin(), leaf.axes.end(), s)) {
            throw NodeNotInLeaf("node spans direction " + std::to_string(s + 1) +
                                " outside the leaf axes");
        }
    }
    for (int i = 0; i < lat.dim(); ++i) {
        if (!std::binary_search(leaf.axes.begin(), leaf.axes.end(), i) &&
            norm->c[i] != leaf.anchor.c[i]) {
            throw NodeNotInLeaf("node lies outside the leaf");
        }
    }

    // A coface spans the node's directions plus d_s - d_n further leaf axes;
    // along each added axis its center sits half a step off the node.
    std::vector<int> rest;
    for (int a : leaf.axes) {
        if (!std::binary_search(span.begin(), span.end(), a)) {
            rest.push_back(a);
        }
    }
    int extra = d_s - d_n;
    std::vector<Cube> out;
    std::vector<int> pick(rest.size(), 0);
    std::fill(pick.begin(), pick.begin() + extra, 1);
    std::sort(pick.begin(), pick.end(), std::greater<int>());
    do {
        std::vector<int> added;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (pick[i]) {
                added.push_back(rest[i]);
            }
        }
        for (int bits = 0; bits < (1 << extra); ++bits) {
            Cube g = *norm;
            for (int j = 0; j < extra; ++j) {
                g.c[added[j]] += (bits >> j & 1) ? 1 : -1;
            }
            std::optional<Cube> ng = lat.normalize(std::move(g));
            if (ng) {
                out.push_back(std::move(*ng));
            }
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Cube> star_expand(const Lattice& lat,
                              const std::vector<std::optional<int>>& pattern,
                              std::optional<int> dim_filter) {
    if (static_cast<int>(pattern.size()) != lat.dim()) {
        throw InvalidDimension("pattern has " + std::to_string(pattern.size()) +
                               " entries, lattice dimension is " +
                               std::to_string(lat.dim()));
    }
    for (int i = 0; i < lat.dim(); ++i) {
        if (!pattern[i]) {
            continue;
        }
        int hi = 2 * lat.extent(i) - (lat.periodic(i) ? 1 : 0);
        if (*pattern[i] < 0 || *pattern[i] > hi) {
            throw InvalidLattice("pattern coordinate " + std::to_string(*pattern[i]) +
                                 " out of range in direction " + std::to_string(i + 1));
        }
    }

    std::vector<Cube> out;
    Cube cur;
    cur.c.assign(lat.dim(), 0);
    auto sweep = [&](auto&& self, int i) -> void {
        if (i == lat.dim()) {
            if (!dim_filter || cur.dim() == *dim_filter) {
                out.push_back(cur);
            }
            return;
        }
        if (pattern[i]) {
            cur.c[i] = *pattern[i];
            self(self, i + 1);
            return;
        }
        int hi = 2 * lat.extent(i) - (lat.periodic(i) ? 1 : 0);
        for (int x = 0; x <= hi; ++x) {
            cur.c[i] = x;
            self(self, i + 1);
        }
    };
    sweep(sweep, 0);
    return out;
}

}  // namespace tdprep
