#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srx/balanced.hpp"
#include "srx/complex.hpp"
#include "srx/diagnostics.hpp"
#include "srx/field.hpp"

namespace srx {

enum class CheckStatus { pass, fail, inapplicable };

/// One executable identity/theorem check. A failing result carries a
/// witness in the same facet-list JSON the CLI reads, so it can be replayed.
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string witness;  // replayable JSON on failure
    std::string note;     // informational findings on pass
    double seconds = 0.0;

    bool failed() const { return status == CheckStatus::fail; }
};

std::string status_name(CheckStatus s);

/// Rank selection on a balanced structure: Cohen-Macaulayness and Serre
/// levels survive every selection, dropping one rank costs at most one from
/// the depth, and the drop is exact somewhere when the top homology of the
/// complex vanishes.
std::vector<CheckResult> check_rank_selection(const BalancedComplex& b, FieldSpec field);

/// Vanishing of truncation homology versus the Serre level, both directions,
/// with informational notes where only one direction bites.
std::vector<CheckResult> check_serre_truncation(const SimplicialComplex& dx, FieldSpec field);

/// Subdivision preserves homology, links transport into the subdivision,
/// truncations match higher nerves, the nerve vanishing band, and the
/// f-vector recovery from nerve Euler characteristics.
std::vector<CheckResult> check_subdivision(const SimplicialComplex& dx, FieldSpec field);

/// Exact integer identities: the link face-count identity, the telescoping
/// link Euler-characteristic identity (pure complexes), and its cumulative
/// form.
std::vector<CheckResult> check_euler_identities(const SimplicialComplex& dx);

/// Gorenstein* truncation homology profile and its converse under
/// non-acyclic links.
std::vector<CheckResult> check_gorenstein_truncation(const SimplicialComplex& dx, FieldSpec field);

struct IndependentScanOptions {
    std::uint64_t seed = 0x5eedu;
    std::size_t exhaustive_vertex_cap = 10;  // enumerate all J when n is at most this
    std::size_t samples = 200;               // otherwise sample this many sets
};

/// Depth and Serre bounds for removal of independent vertex sets and
/// independent face sets, plus the exact-drop witness configuration.
std::vector<CheckResult> check_independent_removal(const SimplicialComplex& dx, FieldSpec field,
                                                   const IndependentScanOptions& opts = {});

/// All checks that apply to a bare complex (rank selection runs on the
/// barycentric subdivision, or on the given partition when one is supplied).
std::vector<CheckResult> check_all(const SimplicialComplex& dx, FieldSpec field,
                                   const BalancedComplex* balanced = nullptr,
                                   const IndependentScanOptions& opts = {});

// --- randomized corpus and the counterexample prospector ---

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// Random pure complex: m distinct (dim+1)-subsets of {1..n}, m drawn from
/// a small grid. Labels are "1".."n".
SimplicialComplex random_pure_complex(Rng& rng, unsigned n, unsigned dim);

struct ProspectConfig {
    unsigned vertices = 6;
    unsigned dim = 2;
    unsigned count = 100;
    std::uint64_t seed = 1;
    std::string predicate = "s2-gap";
    bool pure_only = true;
    unsigned vertex_ceiling = 9;
};

struct ProspectHit {
    std::vector<std::size_t> indices;  // corpus indices involved (1 or 2)
    std::vector<SimplicialComplex> complexes;
    std::vector<DiagnosticsReport> reports;
    std::string note;
};

extern const std::vector<std::string> prospect_predicates;

/// Reduced Betti vectors of the truncations [Δ]_{>j}, j = 0..dim.
std::vector<BettiVector> truncation_betti_table(const SimplicialComplex& dx, FieldSpec field);

/// Truncation homology vanishes in the band i+j < d, i < 2 (the pattern the
/// Serre level 2 necessity direction would produce).
bool has_s2_vanishing_pattern(const SimplicialComplex& dx, FieldSpec field);

/// Deterministic under (seed, config); corpus items are processed in
/// parallel and merged in index order.
std::vector<ProspectHit> prospect(const ProspectConfig& cfg, FieldSpec field, unsigned workers);

/// Predicate evaluation on an explicit corpus (used by prospect internally).
std::vector<ProspectHit> prospect_on(const std::vector<SimplicialComplex>& corpus,
                                     const std::string& predicate, FieldSpec field,
                                     unsigned workers);

}  // namespace srx
