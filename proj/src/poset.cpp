#include "srx/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace srx {

Poset::Poset(std::vector<Element> elements, std::vector<std::vector<bool>> strictly_less)
    : elements_(std::move(elements)), less_(std::move(strictly_less)) {
    if (less_.size() != elements_.size())
        throw std::invalid_argument("order relation size mismatch");
    for (const auto& row : less_)
        if (row.size() != elements_.size())
            throw std::invalid_argument("order relation size mismatch");
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (less_[i][i]) throw std::invalid_argument("order relation is not irreflexive");
    recompute_heights();
}

void Poset::recompute_heights() {
    const std::size_t n = elements_.size();
    // Longest-chain DP over a linear extension (sorted by below-count).
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> below(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (less_[j][i]) ++below[i];
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    for (std::size_t idx : order) {
        int h = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (less_[j][idx]) h = std::max(h, elements_[j].height + 1);
        elements_[idx].height = h;
    }
}

int Poset::max_height() const {
    int h = 0;
    for (const auto& e : elements_) h = std::max(h, e.height);
    return h;
}

std::vector<std::vector<std::size_t>> Poset::covers() const {
    const std::size_t n = elements_.size();
    std::vector<std::vector<std::size_t>> up(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!less_[a][b]) continue;
            bool covered = true;
            for (std::size_t c = 0; c < n && covered; ++c)
                if (less_[a][c] && less_[c][b]) covered = false;
            if (covered) up[a].push_back(b);
        }
    return up;
}

std::vector<std::vector<std::size_t>> Poset::maximal_chains() const {
    const std::size_t n = elements_.size();
    const auto up = covers();
    std::vector<bool> is_minimal(n, true);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b : up[a]) is_minimal[b] = false;

    std::vector<std::vector<std::size_t>> chains;
    std::vector<std::size_t> path;
    auto dfs = [&](auto&& self, std::size_t v) -> void {
        path.push_back(v);
        if (up[v].empty())
            chains.push_back(path);
        else
            for (std::size_t w : up[v]) self(self, w);
        path.pop_back();
    };
    for (std::size_t v = 0; v < n; ++v)
        if (is_minimal[v]) dfs(dfs, v);
    return chains;
}

Poset Poset::restrict(const std::vector<std::size_t>& keep_indices) const {
    std::vector<Element> elems;
    elems.reserve(keep_indices.size());
    for (std::size_t i : keep_indices) {
        Element e = elements_[i];
        e.orig_height = elements_[i].orig_height;
        elems.push_back(std::move(e));
    }
    std::vector<std::vector<bool>> rel(keep_indices.size(),
                                       std::vector<bool>(keep_indices.size(), false));
    for (std::size_t a = 0; a < keep_indices.size(); ++a)
        for (std::size_t b = 0; b < keep_indices.size(); ++b)
            rel[a][b] = less_[keep_indices[a]][keep_indices[b]];
    return Poset(std::move(elems), std::move(rel));
}

Poset face_poset(const SimplicialComplex& dx) {
    if (dx.is_void() || dx.is_irrelevant())
        throw std::domain_error("face poset requires a nonempty face");
    std::vector<Face> faces = dx.all_faces();
    faces.erase(std::remove_if(faces.begin(), faces.end(), [](const Face& f) { return f.empty(); }),
                faces.end());

    std::vector<Poset::Element> elems;
    elems.reserve(faces.size());
    for (const Face& f : faces) {
        Poset::Element e;
        e.key = f;
        e.name = dx.face_label(f);
        e.height = e.orig_height = static_cast<int>(f.size());
        elems.push_back(std::move(e));
    }
    std::vector<std::vector<bool>> rel(faces.size(), std::vector<bool>(faces.size(), false));
    for (std::size_t a = 0; a < faces.size(); ++a)
        for (std::size_t b = 0; b < faces.size(); ++b)
            rel[a][b] = a != b && faces[a].subset_of(faces[b]);

    Poset p(std::move(elems), std::move(rel));
    // In a face poset the recomputed height is the cardinality.
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.element(i).height != static_cast<int>(faces[i].size()))
            throw std::logic_error("face poset height mismatch");
    return p;
}

Poset truncate_above(const Poset& p, int j) {
    if (j < 0) throw std::domain_error("truncation level must be nonnegative");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.element(i).height > j) keep.push_back(i);
    Poset out = p.restrict(keep);
    return out;
}

Poset restrict_heights(const Poset& p, const std::set<int>& s) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!s.count(p.element(i).height)) keep.push_back(i);
    return p.restrict(keep);
}

BalancedComplex order_complex(const Poset& p) {
    if (p.empty()) throw std::domain_error("order complex of the empty poset");
    std::vector<std::string> labels;
    labels.reserve(p.size());
    for (const auto& e : p.elements()) labels.push_back(e.name);

    std::vector<Face> facets;
    for (const auto& chain : p.maximal_chains()) {
        std::vector<VertexId> ids;
        ids.reserve(chain.size());
        for (std::size_t i : chain) ids.push_back(static_cast<VertexId>(i));
        facets.emplace_back(std::move(ids));
    }
    SimplicialComplex dx = SimplicialComplex::from_maximal(std::move(labels), std::move(facets));

    std::vector<std::vector<VertexId>> classes(static_cast<std::size_t>(p.max_height()));
    for (std::size_t i = 0; i < p.size(); ++i)
        classes[static_cast<std::size_t>(p.element(i).height) - 1].push_back(
            static_cast<VertexId>(i));
    return BalancedComplex(std::move(dx), std::move(classes));
}

BalancedComplex truncated_subdivision(const SimplicialComplex& dx, int j) {
    if (dx.is_void() || dx.is_irrelevant())
        throw std::domain_error("subdivision requires a nonempty face");
    if (j < 0 || j > dx.dim()) throw std::domain_error("truncation level out of range");
    return order_complex(truncate_above(face_poset(dx), j));
}

}  // namespace srx
