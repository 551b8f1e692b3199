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

#ifndef TDPREP_ERRORS_HPP
#define TDPREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tdprep {

// Base class for every exception thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TDPREP_DEFINE_ERROR(NAME)                                  \
    struct NAME : Error {                                          \
        explicit NAME(const std::string& msg) : Error(msg) {}      \
    }

// Lattice construction and queries.
TDPREP_DEFINE_ERROR(InvalidLattice);
TDPREP_DEFINE_ERROR(InvalidDimension);
TDPREP_DEFINE_ERROR(InvalidLeafDim);
TDPREP_DEFINE_ERROR(NodeNotInLeaf);

// Linear algebra.
TDPREP_DEFINE_ERROR(DimensionMismatch);

// Model queries.
TDPREP_DEFINE_ERROR(NotAStabilizerCode);
TDPREP_DEFINE_ERROR(InternalConsistencyError);
TDPREP_DEFINE_ERROR(RedundancyCheckFailed);
TDPREP_DEFINE_ERROR(UnsupportedModel);

// Circuit synthesis and serialization.
TDPREP_DEFINE_ERROR(NotRepresentable);
TDPREP_DEFINE_ERROR(MissingTags);
TDPREP_DEFINE_ERROR(InvalidSeeds);
TDPREP_DEFINE_ERROR(SeedSetViolation);
TDPREP_DEFINE_ERROR(FormatError);

// Tableau simulation.
TDPREP_DEFINE_ERROR(InvalidSize);
TDPREP_DEFINE_ERROR(IndexError);

// Dense-state oracle.
TDPREP_DEFINE_ERROR(TooManyQubits);

// Generic CSS front end.
TDPREP_DEFINE_ERROR(NotCss);
TDPREP_DEFINE_ERROR(DependentGenerators);
TDPREP_DEFINE_ERROR(InvalidPlan);

#undef TDPREP_DEFINE_ERROR

}  // namespace tdprep

#endif
