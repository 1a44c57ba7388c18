#include "srx/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace srx {

Face::Face(std::vector<VertexId> verts) : verts_(std::move(verts)) {
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
        throw std::invalid_argument("face has a repeated vertex");
    rebuild_mask();
}

void Face::rebuild_mask() {
    mask_ = 0;
    mask_ok_ = true;
    for (VertexId v : verts_) {
        if (v >= 64) {
            mask_ok_ = false;
            return;
        }
        mask_ |= std::uint64_t{1} << v;
    }
}

bool Face::contains(VertexId v) const {
    if (mask_ok_ && v < 64) return (mask_ >> v) & 1;
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Face::subset_of(const Face& other) const {
    if (mask_ok_ && other.mask_ok_) return (mask_ & ~other.mask_) == 0;
    return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(), verts_.end());
}

bool Face::disjoint_from(const Face& other) const {
    if (mask_ok_ && other.mask_ok_) return (mask_ & other.mask_) == 0;
    auto a = verts_.begin();
    auto b = other.verts_.begin();
    while (a != verts_.end() && b != other.verts_.end()) {
        if (*a == *b) return false;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return true;
}

Face Face::union_with(const Face& other) const {
    std::vector<VertexId> out;
    out.reserve(verts_.size() + other.verts_.size());
    std::set_union(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
                   std::back_inserter(out));
    Face f;
    f.verts_ = std::move(out);
    f.rebuild_mask();
    return f;
}

Face Face::intersect(const Face& other) const {
    std::vector<VertexId> out;
    std::set_intersection(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
                          std::back_inserter(out));
    Face f;
    f.verts_ = std::move(out);
    f.rebuild_mask();
    return f;
}

Face Face::minus(const Face& other) const {
    std::vector<VertexId> out;
    std::set_difference(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
                        std::back_inserter(out));
    Face f;
    f.verts_ = std::move(out);
    f.rebuild_mask();
    return f;
}

Face Face::without(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(verts_.size());
    for (VertexId w : verts_)
        if (w != v) out.push_back(w);
    Face f;
    f.verts_ = std::move(out);
    f.rebuild_mask();
    return f;
}

Face Face::with(VertexId v) const {
    if (contains(v)) return *this;
    std::vector<VertexId> out = verts_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    Face f;
    f.verts_ = std::move(out);
    f.rebuild_mask();
    return f;
}

SimplicialComplex SimplicialComplex::void_complex() { return SimplicialComplex{}; }

SimplicialComplex SimplicialComplex::irrelevant_complex() {
    SimplicialComplex dx;
    dx.facets_ = {Face{}};
    return dx;
}

SimplicialComplex SimplicialComplex::from_label_facets(
    const std::vector<std::vector<std::string>>& faces) {
    std::vector<std::string> labels;
    std::map<std::string, VertexId> intern;
    std::vector<Face> id_faces;
    id_faces.reserve(faces.size());
    for (const auto& face : faces) {
        std::vector<VertexId> ids;
        ids.reserve(face.size());
        for (const auto& lab : face) {
            auto it = intern.find(lab);
            if (it == intern.end()) {
                VertexId id = static_cast<VertexId>(labels.size());
                labels.push_back(lab);
                it = intern.emplace(lab, id).first;
            }
            ids.push_back(it->second);
        }
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw std::invalid_argument("face repeats the vertex label");
        std::vector<VertexId> sorted = ids;
        Face f;
        f = Face(std::move(sorted));
        id_faces.push_back(std::move(f));
    }
    return from_faces(std::move(id_faces), labels);
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> faces,
                                                const std::vector<std::string>& labels) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    // Drop any face contained in a later (larger-or-equal) one.
    std::vector<Face> maximal;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = i + 1; j < faces.size() && !dominated; ++j)
            if (faces[i].subset_of(faces[j])) dominated = true;
        if (!dominated) maximal.push_back(faces[i]);
    }

    if (maximal.empty()) return void_complex();
    if (maximal.size() == 1 && maximal[0].empty()) return irrelevant_complex();

    // Re-intern used vertices densely, ascending old id.
    std::set<VertexId> used;
    for (const Face& f : maximal)
        for (VertexId v : f.vertices()) used.insert(v);
    std::map<VertexId, VertexId> remap;
    std::vector<std::string> new_labels;
    new_labels.reserve(used.size());
    for (VertexId v : used) {
        remap[v] = static_cast<VertexId>(new_labels.size());
        new_labels.push_back(labels.at(v));
    }
    std::vector<Face> new_facets;
    new_facets.reserve(maximal.size());
    for (const Face& f : maximal) {
        std::vector<VertexId> ids;
        ids.reserve(f.size());
        for (VertexId v : f.vertices()) ids.push_back(remap.at(v));
        new_facets.emplace_back(std::move(ids));
    }
    std::sort(new_facets.begin(), new_facets.end());

    SimplicialComplex dx;
    dx.labels_ = std::move(new_labels);
    dx.facets_ = std::move(new_facets);
    return dx;
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<std::string> labels,
                                                  std::vector<Face> facets) {
    std::sort(facets.begin(), facets.end());
    SimplicialComplex dx;
    dx.labels_ = std::move(labels);
    dx.facets_ = std::move(facets);
    return dx;
}

int SimplicialComplex::dim() const {
    if (is_void()) throw std::domain_error("void complex has no dimension");
    return facets_.back().dim();
}

bool SimplicialComplex::contains(const Face& f) const {
    if (is_void()) return false;
    if (f.empty()) return true;
    for (const Face& g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

bool SimplicialComplex::is_facet(const Face& f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
}

bool SimplicialComplex::pure() const {
    if (is_void()) throw std::domain_error("void complex has no purity");
    return facets_.front().size() == facets_.back().size();
}

namespace {

void collect_subsets(const Face& f, std::unordered_set<Face, FaceHash>& out) {
    const auto& vs = f.vertices();
    const std::size_t n = vs.size();
    // Small facets only; guarded by face_count checks at call sites.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::vector<VertexId> sub;
        for (std::size_t i = 0; i < n; ++i)
            if ((bits >> i) & 1) sub.push_back(vs[i]);
        out.insert(Face(std::move(sub)));
    }
}

}  // namespace

std::vector<Face> SimplicialComplex::all_faces() const {
    if (is_void()) throw std::domain_error("void complex has no faces");
    std::uint64_t budget = 0;
    for (const Face& f : facets_) {
        if (f.size() > 24) throw std::length_error("facet too large for face enumeration");
        budget += std::uint64_t{1} << f.size();
        if (budget > (std::uint64_t{1} << 24))
            throw std::length_error("face enumeration too large");
    }
    std::unordered_set<Face, FaceHash> seen;
    for (const Face& f : facets_) collect_subsets(f, seen);
    std::vector<Face> faces(seen.begin(), seen.end());
    std::sort(faces.begin(), faces.end());
    return faces;
}

std::size_t SimplicialComplex::face_count() const { return all_faces().size(); }

Face SimplicialComplex::vertex_set() const {
    std::vector<VertexId> ids(labels_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<VertexId>(i);
    return Face(std::move(ids));
}

std::string SimplicialComplex::face_label(const Face& f) const {
    std::string out = "{";
    bool first = true;
    for (VertexId v : f.vertices()) {
        if (!first) out += ",";
        out += labels_.at(v);
        first = false;
    }
    out += "}";
    return out;
}

Face SimplicialComplex::face_from_labels(const std::vector<std::string>& ls) const {
    std::vector<VertexId> ids;
    ids.reserve(ls.size());
    for (const auto& lab : ls) {
        auto it = std::find(labels_.begin(), labels_.end(), lab);
        if (it == labels_.end()) throw std::invalid_argument("unknown vertex label: " + lab);
        ids.push_back(static_cast<VertexId>(it - labels_.begin()));
    }
    return Face(std::move(ids));
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.facets_.size() != b.facets_.size()) return false;
    auto canon = [](const SimplicialComplex& dx) {
        std::vector<std::vector<std::string>> out;
        out.reserve(dx.facets_.size());
        for (const Face& f : dx.facets_) {
            std::vector<std::string> ls;
            ls.reserve(f.size());
            for (VertexId v : f.vertices()) ls.push_back(dx.labels_[v]);
            std::sort(ls.begin(), ls.end());
            out.push_back(std::move(ls));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return canon(a) == canon(b);
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& dx) {
    if (dx.is_void()) throw std::domain_error("f-vector of the void complex");
    std::vector<std::int64_t> fv(static_cast<std::size_t>(dx.dim()) + 2, 0);
    for (const Face& f : dx.all_faces()) fv[f.size()] += 1;
    return fv;
}

std::vector<std::int64_t> h_vector(const SimplicialComplex& dx) {
    const auto fv = f_vector(dx);
    const int d = dx.dim() + 1;
    std::vector<std::int64_t> hv(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) {
        std::int64_t acc = 0;
        for (int i = 0; i <= k; ++i) {
            const std::int64_t sign = ((k - i) % 2 == 0) ? 1 : -1;
            acc += sign * binomial(d - i, k - i) * fv[static_cast<std::size_t>(i)];
        }
        hv[static_cast<std::size_t>(k)] = acc;
    }
    return hv;
}

std::int64_t reduced_euler(const SimplicialComplex& dx) {
    const auto fv = f_vector(dx);
    std::int64_t out = 0;
    for (std::size_t i = 0; i < fv.size(); ++i) out += (i % 2 == 0 ? -1 : 1) * fv[i];
    return out;
}

SimplicialComplex link(const SimplicialComplex& dx, const Face& t) {
    if (!dx.contains(t)) return SimplicialComplex::void_complex();
    std::vector<Face> gens;
    for (const Face& f : dx.facets())
        if (t.subset_of(f)) gens.push_back(f.minus(t));
    // Facets containing t yield incomparable differences, already maximal.
    return SimplicialComplex::from_faces(std::move(gens), dx.labels());
}

SimplicialComplex antistar(const SimplicialComplex& dx, const Face& u) {
    if (dx.is_void()) return dx;
    std::vector<Face> gens;
    gens.reserve(dx.facets().size());
    for (const Face& f : dx.facets()) gens.push_back(f.minus(u));
    return SimplicialComplex::from_faces(std::move(gens), dx.labels());
}

SimplicialComplex induced(const SimplicialComplex& dx, const Face& w) {
    if (dx.is_void()) return dx;
    std::vector<Face> gens;
    gens.reserve(dx.facets().size());
    for (const Face& f : dx.facets()) gens.push_back(f.intersect(w));
    return SimplicialComplex::from_faces(std::move(gens), dx.labels());
}

namespace {

void k_subsets(const std::vector<VertexId>& vs, std::size_t k, std::size_t start,
               std::vector<VertexId>& cur, std::vector<Face>& out) {
    if (cur.size() == k) {
        out.push_back(Face(cur));
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= vs.size(); ++i) {
        cur.push_back(vs[i]);
        k_subsets(vs, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

SimplicialComplex skeleton(const SimplicialComplex& dx, int k) {
    if (dx.is_void()) throw std::domain_error("skeleton of the void complex");
    if (k < -1 || k > dx.dim()) throw std::domain_error("skeleton index out of range");
    if (k == dx.dim()) return dx;
    if (k == -1) return SimplicialComplex::irrelevant_complex();
    std::vector<Face> gens;
    for (const Face& f : dx.facets()) {
        if (f.dim() <= k) {
            gens.push_back(f);
        } else {
            std::vector<VertexId> cur;
            k_subsets(f.vertices(), static_cast<std::size_t>(k) + 1, 0, cur, gens);
        }
    }
    return SimplicialComplex::from_faces(std::move(gens), dx.labels());
}

SimplicialComplex core_complex(const SimplicialComplex& dx) {
    if (dx.is_void()) throw std::domain_error("core of the void complex");
    if (!dx.has_vertices()) return dx;  // {∅}
    Face cone_points = dx.facets().front();
    for (const Face& f : dx.facets()) cone_points = cone_points.intersect(f);
    return induced(dx, dx.vertex_set().minus(cone_points));
}

namespace {

void require_faceset(const SimplicialComplex& dx, const std::vector<Face>& a) {
    for (const Face& f : a) {
        if (f.empty()) throw std::domain_error("face set contains the empty face");
        if (!dx.contains(f)) throw std::domain_error("face set is not contained in the complex");
    }
}

}  // namespace

bool is_independent_faceset(const SimplicialComplex& dx, const std::vector<Face>& a) {
    require_faceset(dx, a);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] == a[j]) continue;
            if (dx.contains(a[i].union_with(a[j]))) return false;
        }
    return true;
}

bool is_excellent_faceset(const SimplicialComplex& dx, const std::vector<Face>& a) {
    if (!is_independent_faceset(dx, a)) return false;
    for (const Face& f : dx.facets()) {
        bool hit = false;
        for (const Face& s : a)
            if (s.subset_of(f)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

namespace {

std::vector<Face> singleton_faces(const Face& j) {
    std::vector<Face> out;
    out.reserve(j.size());
    for (VertexId v : j.vertices()) out.push_back(Face::single(v));
    return out;
}

}  // namespace

bool is_independent_vertexset(const SimplicialComplex& dx, const Face& j) {
    return is_independent_faceset(dx, singleton_faces(j));
}

bool is_excellent_vertexset(const SimplicialComplex& dx, const Face& j) {
    return is_excellent_faceset(dx, singleton_faces(j));
}

SimplicialComplex remove_independent_faces(const SimplicialComplex& dx,
                                           const std::vector<Face>& a) {
    if (!is_independent_faceset(dx, a))
        throw std::domain_error("face set is not independent");
    if (a.empty()) return dx;
    std::vector<Face> gens;
    for (const Face& f : dx.facets()) {
        // Independence means at most one member of a fits inside one facet.
        const Face* inside = nullptr;
        for (const Face& s : a)
            if (s.subset_of(f)) {
                inside = &s;
                break;
            }
        if (inside == nullptr) {
            gens.push_back(f);
        } else {
            for (VertexId v : inside->vertices()) gens.push_back(f.without(v));
        }
    }
    return SimplicialComplex::from_faces(std::move(gens), dx.labels());
}

}  // namespace srx
