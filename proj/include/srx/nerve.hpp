#pragma once

#include <vector>

#include "srx/complex.hpp"

namespace srx {

/// Higher nerves N_1..N_d of the facet cover: N_i lives on the facet index
/// set (1-based labels following the canonical facet order) and its faces
/// are the index sets whose facets share at least i vertices.
struct NerveFamily {
    std::size_t facet_count = 0;
    std::vector<SimplicialComplex> members;  // members[i-1] = N_i

    const SimplicialComplex& nerve(int i) const { return members.at(static_cast<std::size_t>(i) - 1); }
};

/// N_i for 1 <= i <= dim+1. Requires a complex with at least one vertex.
SimplicialComplex higher_nerve(const SimplicialComplex& dx, int i);

/// All of N_1..N_d, sharing one intersection table.
NerveFamily nerve_family(const SimplicialComplex& dx);

}  // namespace srx
