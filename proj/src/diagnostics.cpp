#include "srx/diagnostics.hpp"

#include <algorithm>
#include <limits>

#include "srx/nerve.hpp"
#include "srx/poset.hpp"

namespace srx {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

void require_nonvoid(const SimplicialComplex& dx) {
    if (dx.is_void()) throw std::domain_error("operation requires a nonvoid complex");
}

// Least i >= 0 with b̃_{i-1} nonzero, or none.
std::optional<int> first_nonzero(const BettiVector& b) {
    for (std::size_t idx = 0; idx < b.ranks.size(); ++idx)
        if (b.ranks[idx] != 0) return static_cast<int>(idx);  // idx = i since ranks[0] = b̃_{-1}
    return std::nullopt;
}

}  // namespace

LinkTable link_homology_table(const SimplicialComplex& dx, FieldSpec field) {
    require_nonvoid(dx);
    LinkTable t;
    t.faces = dx.all_faces();
    t.betti.reserve(t.faces.size());
    for (const Face& f : t.faces) t.betti.push_back(reduced_betti(link(dx, f), field));
    return t;
}

int depth_links(const SimplicialComplex& dx, FieldSpec field) {
    require_nonvoid(dx);
    int best = kInf;
    for (const Face& t : dx.all_faces()) {  // ascending cardinality
        if (static_cast<int>(t.size()) >= best) break;
        if (auto i = first_nonzero(reduced_betti(link(dx, t), field)))
            best = std::min(best, *i + static_cast<int>(t.size()));
    }
    return best;  // facets always contribute, so best < kInf
}

int depth_nerves(const SimplicialComplex& dx, FieldSpec field) {
    require_nonvoid(dx);
    if (!dx.has_vertices()) return 0;  // {∅}
    const int d = dx.dim() + 1;
    const NerveFamily fam = nerve_family(dx);
    int best = d;  // depth never exceeds the Krull dimension
    for (int j = 0; j < d && j < best; ++j) {
        if (auto i = first_nonzero(reduced_betti(fam.nerve(j + 1), field)))
            best = std::min(best, *i + j);
    }
    return best;
}

namespace {

// Enumerate subsets of {1..d} in ascending cardinality.
std::vector<std::set<int>> subsets_by_size(int d) {
    std::vector<std::set<int>> out;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << d); ++bits) {
        std::set<int> s;
        for (int r = 0; r < d; ++r)
            if ((bits >> r) & 1) s.insert(r + 1);
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

template <class BettiOfDrop>
RankDepthResult rank_depth_scan(int d, BettiOfDrop betti_of_drop) {
    RankDepthResult out;
    int best = kInf;
    for (const auto& s : subsets_by_size(d)) {
        if (static_cast<int>(s.size()) > best) break;
        const BettiVector b = betti_of_drop(s);
        for (std::size_t idx = 0; idx < b.ranks.size(); ++idx) {
            if (b.ranks[idx] == 0) continue;
            const int value = static_cast<int>(idx) + static_cast<int>(s.size());
            if (value < best) {
                best = value;
                out.minimizers.clear();
            }
            if (value == best) out.minimizers.emplace_back(static_cast<int>(idx), s);
        }
    }
    out.depth = best;
    return out;
}

}  // namespace

RankDepthResult depth_rank_selection(const BalancedComplex& b, FieldSpec field) {
    require_nonvoid(b.complex());
    if (!b.complex().has_vertices()) return RankDepthResult{0, {{0, {}}}};
    const int d = static_cast<int>(b.num_classes());
    return rank_depth_scan(d, [&](const std::set<int>& s) {
        const SimplicialComplex dropped = rank_drop(b, s).complex();
        return reduced_betti(dropped, field);
    });
}

RankDepthResult depth_rank_selection(const SimplicialComplex& dx, FieldSpec field) {
    require_nonvoid(dx);
    if (!dx.has_vertices()) return RankDepthResult{0, {{0, {}}}};
    const Poset p = face_poset(dx);
    const int d = p.max_height();
    return rank_depth_scan(d, [&](const std::set<int>& s) {
        const Poset q = restrict_heights(p, s);
        if (q.empty()) return reduced_betti(SimplicialComplex::irrelevant_complex(), field);
        return reduced_betti(order_complex(q).complex(), field);
    });
}

int serre_level(const SimplicialComplex& dx, FieldSpec field) {
    require_nonvoid(dx);
    if (!dx.has_vertices()) return 0;  // {∅}: Cohen-Macaulay with d = 0
    const int d = dx.dim() + 1;
    int best = d;  // smallest violating i seen so far; d means none
    for (const Face& t : dx.all_faces()) {
        if (static_cast<int>(t.size()) >= d) break;
        if (best <= 1) break;
        const BettiVector b = reduced_betti(link(dx, t), field);
        for (int i = 0; i + static_cast<int>(t.size()) < d && i < best; ++i)
            if (b.at(i - 1) != 0) best = i;
    }
    return std::max(1, best);
}

bool is_cohen_macaulay(const SimplicialComplex& dx, FieldSpec field) {
    require_nonvoid(dx);
    if (!dx.has_vertices()) return true;
    return depth_links(dx, field) == dx.dim() + 1;
}

bool is_buchsbaum(const SimplicialComplex& dx, FieldSpec field) {
    require_nonvoid(dx);
    if (!dx.has_vertices()) return true;
    if (!dx.pure()) return false;
    for (std::size_t v = 0; v < dx.vertex_count(); ++v) {
        const SimplicialComplex lk = link(dx, Face::single(static_cast<VertexId>(v)));
        if (lk.is_irrelevant()) continue;  // dim 0 complex: vertex links are {∅}
        if (lk.dim() != dx.dim() - 1) return false;
        if (!is_cohen_macaulay(lk, field)) return false;
    }
    return true;
}

bool is_gorenstein_star(const SimplicialComplex& dx, FieldSpec field) {
    require_nonvoid(dx);
    const int d = dx.has_vertices() ? dx.dim() + 1 : 0;
    for (const Face& t : dx.all_faces()) {
        const BettiVector b = reduced_betti(link(dx, t), field);
        const int top = d - static_cast<int>(t.size());
        for (std::size_t idx = 0; idx < b.ranks.size(); ++idx) {
            const int i = static_cast<int>(idx);
            const std::int64_t want = (i == top) ? 1 : 0;
            if (b.ranks[idx] != want) return false;
        }
        if (b.at(top - 1) != 1) return false;  // top rank must be exactly one
    }
    return true;
}

bool is_gorenstein(const SimplicialComplex& dx, FieldSpec field) {
    require_nonvoid(dx);
    return is_gorenstein_star(core_complex(dx), field);
}

bool is_doubly_cm(const SimplicialComplex& dx, FieldSpec field) {
    require_nonvoid(dx);
    if (!dx.has_vertices()) return true;
    if (!is_cohen_macaulay(dx, field)) return false;
    for (std::size_t v = 0; v < dx.vertex_count(); ++v) {
        const SimplicialComplex ast = antistar(dx, Face::single(static_cast<VertexId>(v)));
        if (!ast.has_vertices()) return false;  // deleting the only vertex drops dimension
        if (ast.dim() != dx.dim()) return false;
        if (!is_cohen_macaulay(ast, field)) return false;
    }
    return true;
}

namespace {

int depth_from_table(const LinkTable& t) {
    int best = kInf;
    for (std::size_t k = 0; k < t.faces.size(); ++k) {
        if (static_cast<int>(t.faces[k].size()) >= best) break;
        if (auto i = first_nonzero(t.betti[k]))
            best = std::min(best, *i + static_cast<int>(t.faces[k].size()));
    }
    return best;
}

int serre_from_table(const LinkTable& t, int d, std::string* witness,
                     const SimplicialComplex& dx) {
    if (d == 0) return 0;
    int best = d;
    for (std::size_t k = 0; k < t.faces.size(); ++k) {
        const int card = static_cast<int>(t.faces[k].size());
        if (card >= d) break;
        for (int i = 0; i + card < d && i < best; ++i)
            if (t.betti[k].at(i - 1) != 0) {
                best = i;
                if (witness)
                    *witness = "b~_" + std::to_string(i - 1) + "(lk " +
                               dx.face_label(t.faces[k]) + ") != 0";
            }
    }
    return std::max(1, best);
}

bool gorenstein_star_from_table(const LinkTable& t, int d, std::string* witness,
                                const SimplicialComplex& dx) {
    for (std::size_t k = 0; k < t.faces.size(); ++k) {
        const int top = d - static_cast<int>(t.faces[k].size());
        bool ok = t.betti[k].at(top - 1) == 1;
        for (std::size_t idx = 0; ok && idx < t.betti[k].ranks.size(); ++idx)
            if (static_cast<int>(idx) != top && t.betti[k].ranks[idx] != 0) ok = false;
        if (!ok) {
            if (witness)
                *witness = "link of " + dx.face_label(t.faces[k]) +
                           " is not a homology sphere: " + t.betti[k].to_string();
            return false;
        }
    }
    return true;
}

std::string facet_list(const SimplicialComplex& dx) {
    std::string out;
    for (const Face& f : dx.facets()) {
        if (!out.empty()) out += " ";
        out += dx.face_label(f);
    }
    return out;
}

}  // namespace

DiagnosticsReport analyze(const SimplicialComplex& dx, FieldSpec field) {
    require_nonvoid(dx);
    DiagnosticsReport rep;
    rep.field = field;
    rep.n_vertices = dx.vertex_count();
    rep.dim = dx.dim();
    rep.f_vec = f_vector(dx);
    rep.h_vec = h_vector(dx);
    rep.euler_reduced = reduced_euler(dx);
    rep.betti = reduced_betti(dx, field);

    const int d = dx.has_vertices() ? dx.dim() + 1 : 0;
    const LinkTable table = link_homology_table(dx, field);

    rep.depth_links = depth_from_table(table);
    rep.depth_nerves = depth_nerves(dx, field);
    const RankDepthResult rd = depth_rank_selection(dx, field);
    rep.depth_rank = rd.depth;
    rep.rank_minimizers = rd.minimizers;

    if (rep.depth_links != rep.depth_nerves || rep.depth_links != rep.depth_rank)
        throw ConsistencyError("depth algorithms disagree on {" + facet_list(dx) +
                               "} over " + field.name() + ": links=" +
                               std::to_string(rep.depth_links) + " nerves=" +
                               std::to_string(rep.depth_nerves) + " rank=" +
                               std::to_string(rep.depth_rank));
    rep.depth = rep.depth_links;

    std::string serre_witness;
    rep.serre = serre_from_table(table, d, &serre_witness, dx);

    rep.pure = dx.pure();
    if (!rep.pure) {
        const Face& small = dx.facets().front();
        const Face& big = dx.facets().back();
        rep.witnesses["pure"] = "facets " + dx.face_label(small) + " and " + dx.face_label(big) +
                                " have different dimensions";
    }

    rep.cohen_macaulay = rep.depth == d;
    if (!rep.cohen_macaulay && !serre_witness.empty()) rep.witnesses["cohen_macaulay"] = serre_witness;

    std::string gw;
    rep.gorenstein_star = gorenstein_star_from_table(table, d, &gw, dx);
    if (!rep.gorenstein_star) rep.witnesses["gorenstein_star"] = gw;

    {
        const SimplicialComplex core = core_complex(dx);
        if (core == dx) {
            rep.gorenstein = rep.gorenstein_star;
            if (!rep.gorenstein && !gw.empty()) rep.witnesses["gorenstein"] = gw;
        } else {
            rep.gorenstein = is_gorenstein_star(core, field);
            if (!rep.gorenstein)
                rep.witnesses["gorenstein"] = "core {" + facet_list(core) + "} is not Gorenstein*";
        }
    }

    rep.buchsbaum = true;
    if (!rep.pure) {
        rep.buchsbaum = false;
        rep.witnesses["buchsbaum"] = rep.witnesses["pure"];
    } else {
        for (std::size_t v = 0; rep.buchsbaum && v < dx.vertex_count(); ++v) {
            const Face vert = Face::single(static_cast<VertexId>(v));
            const SimplicialComplex lk = link(dx, vert);
            if (lk.is_irrelevant()) continue;
            if (lk.dim() != dx.dim() - 1 || !is_cohen_macaulay(lk, field)) {
                rep.buchsbaum = false;
                rep.witnesses["buchsbaum"] =
                    "link of " + dx.label(static_cast<VertexId>(v)) + " is not Cohen-Macaulay";
            }
        }
    }

    rep.doubly_cm = rep.cohen_macaulay;
    if (!rep.doubly_cm) {
        rep.witnesses["doubly_cm"] = "not Cohen-Macaulay";
    } else if (dx.has_vertices()) {
        for (std::size_t v = 0; rep.doubly_cm && v < dx.vertex_count(); ++v) {
            const SimplicialComplex ast = antistar(dx, Face::single(static_cast<VertexId>(v)));
            const bool ok = ast.has_vertices() && ast.dim() == dx.dim() &&
                            is_cohen_macaulay(ast, field);
            if (!ok) {
                rep.doubly_cm = false;
                rep.witnesses["doubly_cm"] = "deleting vertex " +
                                             dx.label(static_cast<VertexId>(v)) +
                                             " breaks Cohen-Macaulayness";
            }
        }
    }

    return rep;
}

}  // namespace srx
