#pragma once

#include <set>
#include <string>
#include <vector>

#include "srx/balanced.hpp"
#include "srx/complex.hpp"

namespace srx {

/// Finite poset with height bookkeeping. Heights count the elements of a
/// longest chain ending at an element, so minimal elements have height 1.
/// Restrictions keep the original heights of the parent poset alongside the
/// recomputed ones.
class Poset {
public:
    struct Element {
        Face key;          // for face posets: the face itself
        std::string name;  // printable label
        int height = 1;        // recomputed in this poset
        int orig_height = 1;   // height in the poset this was restricted from
    };

    Poset(std::vector<Element> elements, std::vector<std::vector<bool>> strictly_less);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const Element& element(std::size_t i) const { return elements_[i]; }
    const std::vector<Element>& elements() const { return elements_; }
    bool less(std::size_t a, std::size_t b) const { return less_[a][b]; }
    int max_height() const;

    /// Upper covers per element.
    std::vector<std::vector<std::size_t>> covers() const;
    /// All maximal chains, each as an index list in increasing order.
    std::vector<std::vector<std::size_t>> maximal_chains() const;

    /// Restriction to the given element indices (heights recomputed,
    /// originals retained).
    Poset restrict(const std::vector<std::size_t>& keep_indices) const;

private:
    std::vector<Element> elements_;
    std::vector<std::vector<bool>> less_;

    void recompute_heights();
};

/// Poset of nonempty faces ordered by inclusion; height of a face is its
/// cardinality. Requires a complex with at least one vertex.
Poset face_poset(const SimplicialComplex& dx);

/// Elements of height greater than j (by current heights).
Poset truncate_above(const Poset& p, int j);

/// Elements whose current height is not in s.
Poset restrict_heights(const Poset& p, const std::set<int>& s);

/// Complex of chains, one vertex per element, colored by height classes.
BalancedComplex order_complex(const Poset& p);

/// Order complex of the face poset truncated above j: for j = 0 this is the
/// barycentric subdivision. Vertices are labeled by the faces they came
/// from. Requires 0 <= j <= dim.
BalancedComplex truncated_subdivision(const SimplicialComplex& dx, int j);

}  // namespace srx
