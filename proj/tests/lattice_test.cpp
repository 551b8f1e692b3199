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

#include <gtest/gtest.h>

#include <algorithm>

namespace tdprep {
namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

TEST(LatticeTest, PeriodicCellCounts) {
    // C(D, n) * prod L_i cells of each dimension on a torus.
    Lattice lat = make_lattice(LatticeSpec::periodic({3, 4, 5}));
    for (int n = 0; n <= 3; ++n) {
        EXPECT_EQ(lat.cell_count(n),
                  static_cast<std::size_t>(binom(3, n) * 3 * 4 * 5))
            << "dimension " << n;
    }
}

TEST(LatticeTest, OpenCellCounts) {
    // Open direction of extent L: L centers, L+1 walls.
    LatticeSpec spec;
    spec.extents = {3, 4};
    spec.boundary = {Boundary::open, Boundary::periodic};
    Lattice lat = make_lattice(spec);
    EXPECT_EQ(lat.cell_count(0), static_cast<std::size_t>(4 * 4));
    EXPECT_EQ(lat.cell_count(1), static_cast<std::size_t>(3 * 4 + 4 * 4));
    EXPECT_EQ(lat.cell_count(2), static_cast<std::size_t>(3 * 4));
}

TEST(LatticeTest, NormalizeWrapsPeriodicOnly) {
    Lattice torus = make_lattice(LatticeSpec::periodic({3, 3}));
    auto wrapped = torus.normalize(Cube{{-1, 7}});
    ASSERT_TRUE(wrapped.has_value());
    EXPECT_EQ(wrapped->c, (std::vector<int>{5, 1}));

    LatticeSpec spec;
    spec.extents = {3};
    spec.boundary = {Boundary::open};
    Lattice line = make_lattice(spec);
    EXPECT_TRUE(line.normalize(Cube{{6}}).has_value());   // far wall
    EXPECT_FALSE(line.normalize(Cube{{7}}).has_value());  // outside
    EXPECT_FALSE(line.normalize(Cube{{-1}}).has_value());
    EXPECT_THROW(line.normalize(Cube{{0, 0}}), InvalidDimension);
}

TEST(LatticeTest, LexicographicIndexing) {
    Lattice lat = make_lattice(LatticeSpec::periodic({2, 3}));
    const std::vector<Cube>& edges = lat.cells(1);
    EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        EXPECT_EQ(lat.index_of(edges[i]), static_cast<int>(i));
    }
    // Wrapped coordinates hit the same index.
    Cube shifted = edges[0];
    shifted.c[0] += 4;
    EXPECT_EQ(lat.index_of(shifted), 0);
    EXPECT_THROW(lat.index_of(Cube{{0, 0, 0}}), InvalidDimension);
}

TEST(LatticeTest, BadSpecsThrow) {
    EXPECT_THROW(make_lattice(LatticeSpec::periodic({})), InvalidLattice);
    EXPECT_THROW(make_lattice(LatticeSpec::periodic({1, 3})), InvalidLattice);
    LatticeSpec short_boundary;
    short_boundary.extents = {3, 3};
    short_boundary.boundary = {Boundary::open};
    EXPECT_THROW(make_lattice(short_boundary), InvalidLattice);
    LatticeSpec open_one;
    open_one.extents = {1};
    open_one.boundary = {Boundary::open};
    EXPECT_NO_THROW(make_lattice(open_one));  // a single open cell is fine
}

TEST(FacesTest, SquareFaceLattice) {
    Lattice lat = make_lattice(LatticeSpec::periodic({3, 3}));
    Cube plaquette{{1, 1}};
    std::vector<Cube> edges = faces(lat, plaquette, 1);
    ASSERT_EQ(edges.size(), 4u);
    EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
    std::vector<Cube> expected = {
        Cube{{0, 1}}, Cube{{1, 0}}, Cube{{1, 2}}, Cube{{2, 1}}};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(edges, expected);
    EXPECT_EQ(faces(lat, plaquette, 0).size(), 4u);
    EXPECT_EQ(faces(lat, plaquette, 2), std::vector<Cube>{plaquette});
    EXPECT_THROW(faces(lat, plaquette, 3), InvalidDimension);
}

TEST(FacesTest, CountsMatchBinomialTimesPower) {
    // An n-cube has C(n, d) 2^(n-d) d-faces.
    Lattice lat = make_lattice(LatticeSpec::periodic({3, 3, 3}));
    Cube cube{{1, 1, 1}};
    for (int d = 0; d <= 3; ++d) {
        EXPECT_EQ(faces(lat, cube, d).size(),
                  static_cast<std::size_t>(binom(3, d) << (3 - d)))
            << "d = " << d;
    }
}

TEST(FacesTest, OpenBoundaryLosesNothingInside) {
    LatticeSpec spec;
    spec.extents = {2, 2};
    spec.boundary = {Boundary::open, Boundary::open};
    Lattice lat = make_lattice(spec);
    EXPECT_EQ(faces(lat, Cube{{1, 1}}, 1).size(), 4u);
}

TEST(LeafTest, LeavesThroughNode) {
    Lattice lat = make_lattice(LatticeSpec::periodic({3, 3, 3}));
    Cube node{{1, 0, 0}};  // an edge along direction 0
    // d_l = 2 leaves containing the edge: axes {0,1} and {0,2}.
    std::vector<Leaf> leaves = leaves_through(lat, node, 2);
    ASSERT_EQ(leaves.size(), 2u);
    EXPECT_EQ(leaves[0].axes, (std::vector<int>{0, 1}));
    EXPECT_EQ(leaves[1].axes, (std::vector<int>{0, 2}));
    EXPECT_THROW(leaves_through(lat, node, 0), InvalidLeafDim);
    EXPECT_THROW(leaves_through(lat, node, 4), InvalidLeafDim);
}

TEST(LeafTest, CofacesInsideLeaf) {
    Lattice lat = make_lattice(LatticeSpec::periodic({3, 3, 3}));
    Cube vertex{{0, 0, 0}};
    Leaf plane = leaf_through(lat, vertex, {0, 1});
    std::vector<Cube> star = cofaces_in_leaf(lat, vertex, 1, plane);
    ASSERT_EQ(star.size(), 4u);  // 4 edges of the plane meet the vertex
    for (const Cube& c : star) {
        EXPECT_EQ(c.dim(), 1);
        EXPECT_EQ(c.c[2], 0);  // never leaves the plane
    }
    Leaf other = leaf_through(lat, Cube{{0, 0, 2}}, {0, 1});
    EXPECT_THROW(cofaces_in_leaf(lat, vertex, 1, other), NodeNotInLeaf);
}

TEST(StarExpandTest, PatternSweep) {
    Lattice lat = make_lattice(LatticeSpec::periodic({3, 3}));
    // All edges along direction 1 with first coordinate fixed at 0.
    std::vector<std::optional<int>> pattern = {0, std::nullopt};
    std::vector<Cube> hits = star_expand(lat, pattern, 1);
    ASSERT_EQ(hits.size(), 3u);
    for (const Cube& c : hits) {
        EXPECT_EQ(c.c[0], 0);
        EXPECT_EQ(c.c[1] % 2, 1);
    }
    EXPECT_THROW(star_expand(lat, {0}, 1), InvalidDimension);
}

TEST(RepresentativeHelpersTest, SpanAndDim) {
    Cube c{{3, 2, 5}};
    EXPECT_EQ(c.dim(), 2);
    EXPECT_EQ(c.span(), (std::vector<int>{0, 2}));
}

}  // namespace
}  // namespace tdprep
