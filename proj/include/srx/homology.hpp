#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srx/complex.hpp"
#include "srx/exact_rank.hpp"
#include "srx/field.hpp"

namespace srx {

/// Reduced homology ranks b̃_i for i = -1 .. dim. Dimensions outside the
/// stored window read as zero.
struct BettiVector {
    std::vector<std::int64_t> ranks;  // ranks[i] = b̃_{i-1}

    std::int64_t at(int i) const {
        const int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(ranks.size())) return 0;
        return ranks[static_cast<std::size_t>(idx)];
    }
    int max_dim() const { return static_cast<int>(ranks.size()) - 2; }
    bool all_zero() const;
    std::int64_t euler() const;  // Σ (-1)^i b̃_i
    std::string to_string() const;

    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Signed incidence matrix of the reduced chain complex in degree k:
/// rows are the (k-1)-faces, columns the k-faces. Degree 0 maps vertices to
/// the empty face (one all-ones row).
struct BoundaryMatrix {
    int degree = 0;
    std::vector<Face> row_faces;
    std::vector<Face> col_faces;
    SparseIntMatrix matrix;
};

/// Valid for 0 <= k <= dim + 1 (degree dim+1 is the zero map from nothing).
BoundaryMatrix boundary_matrix(const SimplicialComplex& dx, int k);

/// Reduced Betti numbers over the chosen field, exact. Requires nonvoid.
BettiVector reduced_betti(const SimplicialComplex& dx, FieldSpec field,
                          const RankOptions& opts = {});

}  // namespace srx
