#include "srx/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace srx {

bool BettiVector::all_zero() const {
    return std::all_of(ranks.begin(), ranks.end(), [](std::int64_t r) { return r == 0; });
}

std::int64_t BettiVector::euler() const {
    std::int64_t out = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i)
        out += (i % 2 == 0 ? -1 : 1) * ranks[i];  // index 0 is dimension -1
    return out;
}

std::string BettiVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(ranks[i]);
    }
    return out + ")";
}

namespace {

std::vector<std::vector<Face>> faces_by_dim(const SimplicialComplex& dx) {
    std::vector<std::vector<Face>> out(static_cast<std::size_t>(dx.dim()) + 2);
    for (Face& f : dx.all_faces()) out[f.size()].push_back(std::move(f));
    return out;  // out[k] holds the (k-1)-dimensional faces, sorted
}

SparseIntMatrix incidence(const std::vector<Face>& rows, const std::vector<Face>& cols) {
    SparseIntMatrix m;
    m.rows = rows.size();
    m.cols = cols.size();
    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& vs = cols[j].vertices();
        for (std::size_t k = 0; k < vs.size(); ++k) {
            const Face sub = cols[j].without(vs[k]);
            m.add(row_index.at(sub), j, k % 2 == 0 ? 1 : -1);
        }
    }
    return m;
}

}  // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& dx, int k) {
    if (dx.is_void()) throw std::domain_error("boundary matrix of the void complex");
    if (k < 0 || k > dx.dim() + 1) throw std::domain_error("boundary degree out of range");
    auto by_dim = faces_by_dim(dx);
    BoundaryMatrix bm;
    bm.degree = k;
    bm.row_faces = by_dim[static_cast<std::size_t>(k)];
    bm.col_faces = k + 1 < static_cast<int>(by_dim.size()) ? by_dim[static_cast<std::size_t>(k) + 1]
                                                           : std::vector<Face>{};
    bm.matrix = incidence(bm.row_faces, bm.col_faces);
    return bm;
}

BettiVector reduced_betti(const SimplicialComplex& dx, FieldSpec field, const RankOptions& opts) {
    if (dx.is_void()) throw std::domain_error("homology of the void complex");
    const auto by_dim = faces_by_dim(dx);
    const int top = dx.dim();

    // rank of ∂_k: k-chains -> (k-1)-chains, for k = 0..top.
    std::vector<std::size_t> bd_rank(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 0; k <= top; ++k) {
        const auto m = incidence(by_dim[static_cast<std::size_t>(k)],
                                 by_dim[static_cast<std::size_t>(k) + 1]);
        bd_rank[static_cast<std::size_t>(k)] = rank_over_field(m, field, opts);
    }

    BettiVector b;
    b.ranks.assign(static_cast<std::size_t>(top) + 2, 0);
    for (int i = -1; i <= top; ++i) {
        const std::int64_t chains = static_cast<std::int64_t>(by_dim[static_cast<std::size_t>(i) + 1].size());
        const std::int64_t r_in = i >= 0 ? static_cast<std::int64_t>(bd_rank[static_cast<std::size_t>(i)]) : 0;
        const std::int64_t r_out =
            i + 1 <= top ? static_cast<std::int64_t>(bd_rank[static_cast<std::size_t>(i) + 1]) : 0;
        b.ranks[static_cast<std::size_t>(i) + 1] = chains - r_in - r_out;
    }
    return b;
}

}  // namespace srx
