#pragma once

#include <cstdint>
#include <vector>

#include "srx/field.hpp"

namespace srx {

/// Integer matrix in triplet form. Boundary matrices only ever hold -1/0/+1
/// but the rank routines accept any int entries.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    struct Triplet {
        std::uint32_t row;
        std::uint32_t col;
        std::int32_t value;
    };
    std::vector<Triplet> entries;

    void add(std::size_t r, std::size_t c, std::int32_t v) {
        entries.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), v});
    }
};

struct RankOptions {
    // Densify below this side length; larger matrices go through the sparse
    // elimination path.
    std::size_t dense_limit = 4096;
};

/// Exact rank over ℚ. Dense path is fraction-free (Bareiss) on int64 with
/// automatic promotion to arbitrary precision integers on overflow.
std::size_t rank_over_rationals(const SparseIntMatrix& m, const RankOptions& opts = {});

/// Exact rank over GF(p).
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p, const RankOptions& opts = {});

std::size_t rank_over_field(const SparseIntMatrix& m, FieldSpec field, const RankOptions& opts = {});

// Exposed for tests: force a particular implementation.
std::size_t rank_bareiss_int64(const SparseIntMatrix& m, bool* overflowed);
std::size_t rank_bareiss_bigint(const SparseIntMatrix& m);
std::size_t rank_sparse_rational(const SparseIntMatrix& m);
std::size_t rank_sparse_mod_p(const SparseIntMatrix& m, std::uint32_t p);

}  // namespace srx
