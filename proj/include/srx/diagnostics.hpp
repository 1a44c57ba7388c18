#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "srx/balanced.hpp"
#include "srx/complex.hpp"
#include "srx/field.hpp"
#include "srx/homology.hpp"

namespace srx {

/// Raised when the independently computed depth values disagree; this is
/// the library's central self-check and never fires on correct code.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Reduced link homology for every face (empty face included, ascending
/// cardinality). Shared by the depth, Serre and Gorenstein scans.
struct LinkTable {
    std::vector<Face> faces;
    std::vector<BettiVector> betti;
};
LinkTable link_homology_table(const SimplicialComplex& dx, FieldSpec field);

/// Depth from nonvanishing link homology: the least i+|T| with
/// b̃_{i-1}(lk T) nonzero. 0 on {∅}.
int depth_links(const SimplicialComplex& dx, FieldSpec field);

/// Depth from the higher nerves: the least i+j with b̃_{i-1}(N_{j+1})
/// nonzero, capped at d when the whole admissible band vanishes.
int depth_nerves(const SimplicialComplex& dx, FieldSpec field);

struct RankDepthResult {
    int depth = 0;
    // Every (i, dropped rank set) attaining the minimum of i+|S|.
    std::vector<std::pair<int, std::set<int>>> minimizers;
};

/// Depth from rank drops of a balanced structure: the least i+|S| with
/// b̃_{i-1} of the complex with ranks S removed nonzero.
RankDepthResult depth_rank_selection(const BalancedComplex& b, FieldSpec field);

/// Same formula applied to the order complex of the face poset, which works
/// for an arbitrary complex (ranks are removed by original face cardinality).
RankDepthResult depth_rank_selection(const SimplicialComplex& dx, FieldSpec field);

/// Largest l such that b̃_{i-1}(lk T) = 0 whenever i+|T| < d and 0 <= i < l;
/// always at least 1 for complexes with vertices, d exactly when
/// Cohen-Macaulay. 0 on {∅} (which is trivially Cohen-Macaulay).
int serre_level(const SimplicialComplex& dx, FieldSpec field);

bool is_cohen_macaulay(const SimplicialComplex& dx, FieldSpec field);
/// Pure with every vertex link Cohen-Macaulay of the right dimension.
bool is_buchsbaum(const SimplicialComplex& dx, FieldSpec field);
/// Every link has the homology of a sphere of complementary dimension.
bool is_gorenstein_star(const SimplicialComplex& dx, FieldSpec field);
/// The core is Gorenstein*.
bool is_gorenstein(const SimplicialComplex& dx, FieldSpec field);
/// Cohen-Macaulay and still Cohen-Macaulay of the same dimension after
/// deleting any one vertex.
bool is_doubly_cm(const SimplicialComplex& dx, FieldSpec field);

struct DiagnosticsReport {
    FieldSpec field;
    std::size_t n_vertices = 0;
    int dim = -1;
    std::vector<std::int64_t> f_vec;
    std::vector<std::int64_t> h_vec;
    std::int64_t euler_reduced = 0;
    BettiVector betti;

    int depth_links = 0;
    int depth_nerves = 0;
    int depth_rank = 0;
    int depth = 0;  // the agreed value
    std::vector<std::pair<int, std::set<int>>> rank_minimizers;

    int serre = 1;
    bool pure = false;
    bool cohen_macaulay = false;
    bool buchsbaum = false;
    bool gorenstein_star = false;
    bool gorenstein = false;
    bool doubly_cm = false;

    // flag name -> minimal witness, only for flags that are false
    std::map<std::string, std::string> witnesses;
};

/// Full report; computes depth three independent ways and insists they
/// agree. Requires nonvoid.
DiagnosticsReport analyze(const SimplicialComplex& dx, FieldSpec field);

}  // namespace srx
