#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "srx/complex.hpp"

namespace srx {

struct BalancedViolation {
    std::string what;     // which condition failed
    std::string witness;  // offending face / vertex, printable
};

class BalancedValidationError : public std::runtime_error {
public:
    explicit BalancedValidationError(BalancedViolation v)
        : std::runtime_error(v.what + " (witness: " + v.witness + ")"), violation(std::move(v)) {}
    BalancedViolation violation;
};

/// A complex with an ordered partition of its vertices into color classes,
/// no face meeting a class twice. Construction checks the coloring and the
/// cover; the stricter requirement that the class count equal dim+1 is only
/// enforced by verify_balanced, since rank selection of a non-pure complex
/// can legitimately leave more classes than its dimension needs.
class BalancedComplex {
public:
    BalancedComplex(SimplicialComplex complex, std::vector<std::vector<VertexId>> classes);

    const SimplicialComplex& complex() const { return complex_; }
    const std::vector<std::vector<VertexId>>& classes() const { return classes_; }
    std::size_t num_classes() const { return classes_.size(); }
    /// Color class as a vertex set; ranks are 1-based.
    Face class_face(std::size_t rank) const;
    int rank_of(VertexId v) const;  // 1-based

private:
    SimplicialComplex complex_;
    std::vector<std::vector<VertexId>> classes_;
};

/// First violated balancedness condition, if any. Strict: also requires the
/// class count to equal dim+1.
std::optional<BalancedViolation> check_balanced(const SimplicialComplex& dx,
                                                const std::vector<std::vector<VertexId>>& classes);

/// Validated balanced structure; throws BalancedValidationError otherwise.
BalancedComplex verify_balanced(const SimplicialComplex& dx,
                                const std::vector<std::vector<VertexId>>& classes);

/// Induced subcomplex on the union of the selected (1-based) color classes,
/// carrying the selected classes as its partition.
BalancedComplex rank_select(const BalancedComplex& b, const std::set<int>& keep);

/// Complement selection: drop the given classes.
BalancedComplex rank_drop(const BalancedComplex& b, const std::set<int>& drop);

}  // namespace srx
