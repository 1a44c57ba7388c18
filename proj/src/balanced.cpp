#include "srx/balanced.hpp"

#include <algorithm>

namespace srx {

namespace {

// Coloring conditions shared by the constructor and the strict checker:
// classes are disjoint, cover the vertex set, and color faces injectively.
std::optional<BalancedViolation> check_coloring(const SimplicialComplex& dx,
                                                const std::vector<std::vector<VertexId>>& classes) {
    const std::size_t n = dx.vertex_count();
    std::vector<int> owner(n, -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (VertexId v : classes[c]) {
            if (v >= n)
                return BalancedViolation{"class contains an unknown vertex id",
                                         std::to_string(v)};
            if (owner[v] != -1)
                return BalancedViolation{"classes overlap", dx.label(v)};
            owner[v] = static_cast<int>(c);
        }
    for (std::size_t v = 0; v < n; ++v)
        if (owner[v] == -1)
            return BalancedViolation{"vertex missing from the partition",
                                     dx.label(static_cast<VertexId>(v))};
    for (const Face& f : dx.facets()) {
        std::vector<int> seen;
        for (VertexId v : f.vertices()) {
            const int c = owner[v];
            if (std::find(seen.begin(), seen.end(), c) != seen.end())
                return BalancedViolation{"face meets one class twice", dx.face_label(f)};
            seen.push_back(c);
        }
    }
    return std::nullopt;
}

}  // namespace

BalancedComplex::BalancedComplex(SimplicialComplex complex,
                                 std::vector<std::vector<VertexId>> classes)
    : complex_(std::move(complex)), classes_(std::move(classes)) {
    if (auto v = check_coloring(complex_, classes_)) throw BalancedValidationError(*v);
}

Face BalancedComplex::class_face(std::size_t rank) const {
    return Face(classes_.at(rank - 1));
}

int BalancedComplex::rank_of(VertexId v) const {
    for (std::size_t c = 0; c < classes_.size(); ++c)
        if (std::find(classes_[c].begin(), classes_[c].end(), v) != classes_[c].end())
            return static_cast<int>(c) + 1;
    throw std::invalid_argument("vertex not in any class");
}

std::optional<BalancedViolation> check_balanced(
    const SimplicialComplex& dx, const std::vector<std::vector<VertexId>>& classes) {
    if (dx.is_void()) return BalancedViolation{"void complex cannot be balanced", ""};
    if (auto v = check_coloring(dx, classes)) return v;
    const std::size_t d = static_cast<std::size_t>(dx.dim() + 1);
    if (classes.size() != d)
        return BalancedViolation{"class count differs from dim+1",
                                 std::to_string(classes.size()) + " classes for d=" +
                                     std::to_string(d)};
    return std::nullopt;
}

BalancedComplex verify_balanced(const SimplicialComplex& dx,
                                const std::vector<std::vector<VertexId>>& classes) {
    if (auto v = check_balanced(dx, classes)) throw BalancedValidationError(*v);
    return BalancedComplex(dx, classes);
}

BalancedComplex rank_select(const BalancedComplex& b, const std::set<int>& keep) {
    for (int r : keep)
        if (r < 1 || r > static_cast<int>(b.num_classes()))
            throw std::domain_error("rank out of range");

    std::vector<VertexId> kept;
    for (int r : keep) {
        const auto& cls = b.classes()[static_cast<std::size_t>(r - 1)];
        kept.insert(kept.end(), cls.begin(), cls.end());
    }
    const SimplicialComplex sub = induced(b.complex(), Face(kept));

    // Selected classes survive verbatim; re-express them in the sub-ids.
    std::vector<std::vector<VertexId>> classes;
    classes.reserve(keep.size());
    for (int r : keep) {
        std::vector<VertexId> cls;
        for (VertexId v : b.classes()[static_cast<std::size_t>(r - 1)]) {
            const std::string& lab = b.complex().label(v);
            const auto& labs = sub.labels();
            auto it = std::find(labs.begin(), labs.end(), lab);
            if (it != labs.end()) cls.push_back(static_cast<VertexId>(it - labs.begin()));
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return BalancedComplex(sub, std::move(classes));
}

BalancedComplex rank_drop(const BalancedComplex& b, const std::set<int>& drop) {
    std::set<int> keep;
    for (int r = 1; r <= static_cast<int>(b.num_classes()); ++r)
        if (!drop.count(r)) keep.insert(r);
    return rank_select(b, keep);
}

}  // namespace srx
