#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace srx {

using VertexId = std::uint32_t;

/// A face: strictly increasing list of vertex ids. Face{} is the empty face.
/// Ids below 64 are mirrored into a bit mask so subset/disjointness tests on
/// small complexes are single word operations.
class Face {
public:
    Face() = default;
    explicit Face(std::vector<VertexId> verts);  // sorts; rejects duplicates
    static Face single(VertexId v) { return Face({v}); }

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    const std::vector<VertexId>& vertices() const { return verts_; }

    bool contains(VertexId v) const;
    bool subset_of(const Face& other) const;
    bool disjoint_from(const Face& other) const;
    Face union_with(const Face& other) const;
    Face intersect(const Face& other) const;
    Face minus(const Face& other) const;
    Face without(VertexId v) const;
    Face with(VertexId v) const;

    friend bool operator==(const Face& a, const Face& b) { return a.verts_ == b.verts_; }
    // Canonical order everywhere: by cardinality, then lexicographic.
    friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
        if (auto c = a.verts_.size() <=> b.verts_.size(); c != std::strong_ordering::equal) return c;
        return a.verts_ <=> b.verts_;
    }

private:
    std::vector<VertexId> verts_;
    std::uint64_t mask_ = 0;
    bool mask_ok_ = true;

    void rebuild_mask();
};

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::size_t h = 1469598103934665603ull;
        for (VertexId v : f.vertices()) {
            h ^= v + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Finite abstract simplicial complex: an interned vertex label table plus
/// the inclusion-maximal facet list, kept in canonical (size, lex) order.
///
/// Three degenerate states are distinguished and all are first-class values:
/// the void complex (no faces at all), the irrelevant complex {∅}, and
/// complexes with vertices. Every vertex id occurs in some facet.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // void complex

    static SimplicialComplex void_complex();
    static SimplicialComplex irrelevant_complex();

    /// Build the complex generated by arbitrary label faces: duplicates
    /// collapse, non-maximal faces are absorbed, labels interned in
    /// first-appearance order. A repeated label inside one face is an error.
    static SimplicialComplex from_label_facets(const std::vector<std::vector<std::string>>& faces);

    /// Same, from id faces over an existing label table. Unused labels are
    /// dropped and ids re-interned densely (ascending old id).
    static SimplicialComplex from_faces(std::vector<Face> faces, const std::vector<std::string>& labels);

    /// Trusted constructor: `facets` must already be an inclusion-free
    /// antichain covering every label. Used where the facet structure is
    /// known by construction (order complexes, nerves).
    static SimplicialComplex from_maximal(std::vector<std::string> labels, std::vector<Face> facets);

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0].empty(); }
    bool has_vertices() const { return !labels_.empty(); }

    int dim() const;                     // requires nonvoid; {∅} has dim -1
    int krull_dim() const { return dim() + 1; }
    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(VertexId v) const { return labels_.at(v); }
    const std::vector<Face>& facets() const { return facets_; }

    bool contains(const Face& f) const;
    bool is_facet(const Face& f) const;
    bool pure() const;                   // requires nonvoid

    /// Every face including the empty one, in canonical (size, lex) order.
    std::vector<Face> all_faces() const;
    /// Total face count including the empty face.
    std::size_t face_count() const;

    Face vertex_set() const;             // {0, .., n-1}
    /// Printable name of a face: "{a,b,c}" with the complex's labels.
    std::string face_label(const Face& f) const;
    /// Face from labels; throws if a label is unknown.
    Face face_from_labels(const std::vector<std::string>& ls) const;

    /// Structural equality: same facets as sets of label sets.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    std::vector<std::string> labels_;
    std::vector<Face> facets_;
};

// Purely combinatorial constructions.

/// f-vector: entry i counts faces of dimension i-1, so fv[0] = 1 (the empty
/// face) and fv.size() = dim + 2. Requires nonvoid.
std::vector<std::int64_t> f_vector(const SimplicialComplex& dx);

/// h-vector, entries 0..d with d = dim + 1. Requires nonvoid.
std::vector<std::int64_t> h_vector(const SimplicialComplex& dx);

/// Reduced Euler characteristic (empty face counted): χ - 1 for nonvoid
/// complexes; -1 on {∅}. Requires nonvoid.
std::int64_t reduced_euler(const SimplicialComplex& dx);

/// Link of a face: void when t is not a face, {∅} when t is a facet.
SimplicialComplex link(const SimplicialComplex& dx, const Face& t);

/// Faces disjoint from the vertex set u (equivalently, induced on V-u).
SimplicialComplex antistar(const SimplicialComplex& dx, const Face& u);

/// Faces contained in the vertex set w.
SimplicialComplex induced(const SimplicialComplex& dx, const Face& w);

/// Faces of dimension at most k, -1 <= k <= dim.
SimplicialComplex skeleton(const SimplicialComplex& dx, int k);

/// Induced complex on the vertices that are not in every facet.
SimplicialComplex core_complex(const SimplicialComplex& dx);

/// A set of nonempty faces is independent when no two of them join to a
/// face; excellent when additionally every facet contains one of them.
bool is_independent_faceset(const SimplicialComplex& dx, const std::vector<Face>& a);
bool is_excellent_faceset(const SimplicialComplex& dx, const std::vector<Face>& a);
bool is_independent_vertexset(const SimplicialComplex& dx, const Face& j);
bool is_excellent_vertexset(const SimplicialComplex& dx, const Face& j);

/// Remove every face containing a member of the independent face set a.
/// For singleton faces this coincides with antistar of the vertex set.
SimplicialComplex remove_independent_faces(const SimplicialComplex& dx, const std::vector<Face>& a);

std::int64_t binomial(int n, int k);

}  // namespace srx
