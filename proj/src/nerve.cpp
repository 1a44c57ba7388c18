#include "srx/nerve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace srx {

namespace {

// Closed sets of the facet-intersection semilattice. Every intersection of
// facets is a face of the complex, so this is bounded by the face count.
// For each closed vertex set W, the largest index set realizing it is
// F_W = { j : A_j ⊇ W }; the facets of N_i are the maximal F_W with |W| >= i.
struct IntersectionTable {
    std::vector<Face> closed;             // distinct intersections, nonincreasing use
    std::vector<std::vector<VertexId>> realizers;  // F_W as sorted facet indices
};

IntersectionTable build_table(const std::vector<Face>& facets) {
    std::map<Face, bool> seen;
    std::vector<Face> queue;
    for (const Face& f : facets)
        if (seen.emplace(f, true).second) queue.push_back(f);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Face w = queue[head];
        for (const Face& f : facets) {
            Face x = w.intersect(f);
            if (seen.emplace(x, true).second) queue.push_back(x);
        }
    }
    IntersectionTable table;
    table.closed = std::move(queue);
    table.realizers.reserve(table.closed.size());
    for (const Face& w : table.closed) {
        std::vector<VertexId> idx;
        for (std::size_t j = 0; j < facets.size(); ++j)
            if (w.subset_of(facets[j])) idx.push_back(static_cast<VertexId>(j));
        table.realizers.push_back(std::move(idx));
    }
    return table;
}

SimplicialComplex nerve_from_table(const IntersectionTable& table, std::size_t r,
                                   std::size_t min_card) {
    std::vector<Face> gens;
    for (std::size_t k = 0; k < table.closed.size(); ++k)
        if (table.closed[k].size() >= min_card) gens.push_back(Face(table.realizers[k]));
    std::vector<std::string> labels(r);
    for (std::size_t j = 0; j < r; ++j) labels[j] = std::to_string(j + 1);
    return SimplicialComplex::from_faces(std::move(gens), labels);
}

}  // namespace

SimplicialComplex higher_nerve(const SimplicialComplex& dx, int i) {
    if (dx.is_void() || !dx.has_vertices())
        throw std::domain_error("nerve requires a complex with vertices");
    if (i < 1 || i > dx.dim() + 1) throw std::domain_error("nerve index out of range");
    const auto table = build_table(dx.facets());
    return nerve_from_table(table, dx.facets().size(), static_cast<std::size_t>(i));
}

NerveFamily nerve_family(const SimplicialComplex& dx) {
    if (dx.is_void() || !dx.has_vertices())
        throw std::domain_error("nerve requires a complex with vertices");
    const auto table = build_table(dx.facets());
    NerveFamily fam;
    fam.facet_count = dx.facets().size();
    const int d = dx.dim() + 1;
    fam.members.reserve(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i)
        fam.members.push_back(nerve_from_table(table, fam.facet_count, static_cast<std::size_t>(i)));
    return fam;
}

}  // namespace srx
