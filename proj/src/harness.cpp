#include "srx/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "srx/io.hpp"
#include "srx/nerve.hpp"
#include "srx/parallel.hpp"
#include "srx/poset.hpp"

namespace srx {

using ordered_json = nlohmann::ordered_json;

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inapplicable: return "inapplicable";
    }
    return "?";
}

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string witness_json(const SimplicialComplex& dx, const std::string& detail) {
    ordered_json j = ordered_json::parse(emit_json(dx));
    j["detail"] = detail;
    return j.dump();
}

CheckResult make_result(const std::string& name, bool ok, const SimplicialComplex& dx,
                        const std::string& detail, double secs) {
    CheckResult r;
    r.name = name;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    if (!ok) r.witness = witness_json(dx, detail);
    r.seconds = secs;
    return r;
}

CheckResult inapplicable(const std::string& name, const std::string& why) {
    CheckResult r;
    r.name = name;
    r.status = CheckStatus::inapplicable;
    r.note = why;
    return r;
}

// Unreduced Euler characteristic.
std::int64_t euler_char(const SimplicialComplex& dx) {
    const auto fv = f_vector(dx);
    std::int64_t chi = 0;
    for (std::size_t i = 1; i < fv.size(); ++i) chi += (i % 2 == 1 ? 1 : -1) * fv[i];
    return chi;
}

}  // namespace

std::vector<CheckResult> check_rank_selection(const BalancedComplex& b, FieldSpec field) {
    std::vector<CheckResult> out;
    const SimplicialComplex& dx = b.complex();
    const int d = static_cast<int>(b.num_classes());
    const int base_depth = depth_links(dx, field);
    const int base_serre = serre_level(dx, field);
    const bool base_cm = is_cohen_macaulay(dx, field);

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        if (base_cm) {
            for (std::uint32_t bits = 0; ok && bits < (std::uint32_t{1} << d); ++bits) {
                std::set<int> s;
                for (int r = 0; r < d; ++r)
                    if ((bits >> r) & 1) s.insert(r + 1);
                const SimplicialComplex sel = rank_select(b, s).complex();
                if (!is_cohen_macaulay(sel, field)) {
                    ok = false;
                    detail = "rank selection lost Cohen-Macaulayness";
                }
            }
            out.push_back(make_result("cm-rank-selection", ok, dx, detail, sw.seconds()));
        } else {
            out.push_back(inapplicable("cm-rank-selection", "complex is not Cohen-Macaulay"));
        }
    }

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (std::uint32_t bits = 0; ok && bits < (std::uint32_t{1} << d); ++bits) {
            std::set<int> s;
            for (int r = 0; r < d; ++r)
                if ((bits >> r) & 1) s.insert(r + 1);
            const SimplicialComplex sel = rank_select(b, s).complex();
            const int lvl = sel.is_void() ? 0 : serre_level(sel, field);
            const int want = std::min<int>(base_serre, static_cast<int>(s.size()));
            if (lvl < want) {
                ok = false;
                detail = "Serre level dropped below min(level, |S|) at a rank selection";
            }
        }
        out.push_back(make_result("serre-rank-selection", ok, dx, detail, sw.seconds()));
    }

    std::vector<int> drop_depth(static_cast<std::size_t>(d) + 1, 0);
    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= d; ++i) {
            const SimplicialComplex dropped = rank_drop(b, {i}).complex();
            drop_depth[static_cast<std::size_t>(i)] = depth_links(dropped, field);
            if (drop_depth[static_cast<std::size_t>(i)] < base_depth - 1) {
                ok = false;
                detail = "dropping rank " + std::to_string(i) + " cost more than one from depth";
            }
        }
        out.push_back(make_result("rank-drop-depth-bound", ok, dx, detail, sw.seconds()));
    }

    {
        Stopwatch sw;
        if (reduced_betti(dx, field).at(base_depth - 1) != 0) {
            out.push_back(inapplicable("rank-drop-depth-equality",
                                       "top homology at the depth does not vanish"));
        } else {
            bool hit = false;
            for (int i = 1; i <= d; ++i)
                if (drop_depth[static_cast<std::size_t>(i)] == base_depth - 1) hit = true;
            out.push_back(make_result("rank-drop-depth-equality", hit, dx,
                                      "no single rank drop realizes depth-1", sw.seconds()));
        }
    }
    return out;
}

std::vector<BettiVector> truncation_betti_table(const SimplicialComplex& dx, FieldSpec field) {
    std::vector<BettiVector> table;
    const int top = dx.dim();
    table.reserve(static_cast<std::size_t>(top) + 1);
    for (int j = 0; j <= top; ++j)
        table.push_back(reduced_betti(truncated_subdivision(dx, j).complex(), field));
    return table;
}

bool has_s2_vanishing_pattern(const SimplicialComplex& dx, FieldSpec field) {
    const int d = dx.dim() + 1;
    const auto table = truncation_betti_table(dx, field);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < 2 && i + j < d; ++i)
            if (table[static_cast<std::size_t>(j)].at(i - 1) != 0) return false;
    return true;
}

std::vector<CheckResult> check_serre_truncation(const SimplicialComplex& dx, FieldSpec field) {
    std::vector<CheckResult> out;
    if (dx.is_void() || !dx.has_vertices()) {
        out.push_back(inapplicable("serre-truncation-vanishing", "no nonempty faces"));
        out.push_back(inapplicable("truncation-vanishing-sufficiency", "no nonempty faces"));
        return out;
    }
    const int d = dx.dim() + 1;
    const int level = serre_level(dx, field);
    const auto table = truncation_betti_table(dx, field);

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (int j = 0; ok && j < d; ++j)
            for (int i = 0; ok && i < level && i + j < d; ++i)
                if (table[static_cast<std::size_t>(j)].at(i - 1) != 0) {
                    ok = false;
                    detail = "b~_" + std::to_string(i - 1) + " of truncation above " +
                             std::to_string(j) + " is nonzero despite Serre level " +
                             std::to_string(level);
                }
        out.push_back(make_result("serre-truncation-vanishing", ok, dx, detail, sw.seconds()));
    }

    {
        Stopwatch sw;
        // Largest v with the full vanishing band for 0 <= i <= v.
        int v = -1;
        for (int i = 0; i < d; ++i) {
            bool vanish = true;
            for (int j = 0; vanish && i + j < d; ++j)
                if (table[static_cast<std::size_t>(j)].at(i - 1) != 0) vanish = false;
            if (!vanish) break;
            v = i;
        }
        if (v < 1) {
            out.push_back(inapplicable("truncation-vanishing-sufficiency",
                                       "vanishing band too small to conclude anything"));
        } else {
            const bool ok = level >= v;
            out.push_back(make_result("truncation-vanishing-sufficiency", ok, dx,
                                      "vanishing band promises Serre level " + std::to_string(v) +
                                          " but the complex only reaches " + std::to_string(level),
                                      sw.seconds()));
        }

        // Informational converse findings.
        bool gap_pattern = true;
        for (int j = 0; gap_pattern && j < d; ++j)
            for (int i = 0; gap_pattern && i < 2 && i + j < d; ++i)
                if (table[static_cast<std::size_t>(j)].at(i - 1) != 0) gap_pattern = false;
        if (gap_pattern && level < 2) {
            CheckResult r;
            r.name = "serre-converse-gap";
            r.status = CheckStatus::pass;
            r.note = "truncation homology shows the level-2 vanishing pattern, yet the complex "
                     "is not Serre level 2: the vanishing direction has no converse here";
            out.push_back(std::move(r));
        }
        if (level >= 2) {
            for (int j = 0; j < d; ++j)
                for (int i = level; i + j < d; ++i)
                    if (table[static_cast<std::size_t>(j)].at(i - 1) != 0) {
                        CheckResult r;
                        r.name = "serre-converse-noise";
                        r.status = CheckStatus::pass;
                        r.note = "Serre level " + std::to_string(level) + " holds although b~_" +
                                 std::to_string(i - 1) + " of the truncation above " +
                                 std::to_string(j) + " is nonzero";
                        out.push_back(std::move(r));
                        j = d;
                        break;
                    }
        }
    }
    return out;
}

std::vector<CheckResult> check_subdivision(const SimplicialComplex& dx, FieldSpec field) {
    std::vector<CheckResult> out;
    if (dx.is_void() || !dx.has_vertices()) {
        for (const char* name : {"subdivision-betti", "link-subdivision-transport",
                                 "nerve-truncation-betti", "nerve-vanishing-band",
                                 "nerve-f-recovery"})
            out.push_back(inapplicable(name, "no nonempty faces"));
        return out;
    }
    const int d = dx.dim() + 1;
    std::vector<BalancedComplex> subs;
    subs.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) subs.push_back(truncated_subdivision(dx, j));

    {
        Stopwatch sw;
        const bool ok = reduced_betti(dx, field) == reduced_betti(subs[0].complex(), field);
        out.push_back(make_result("subdivision-betti", ok, dx,
                                  "subdivision changed the homology", sw.seconds()));
    }

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (const Face& t : dx.all_faces()) {
            if (t.empty() || !ok) continue;
            const auto& host = subs[t.size() - 1].complex();
            const Face rho = host.face_from_labels({dx.face_label(t)});
            const SimplicialComplex lk_in_sub = link(host, rho);
            if (dx.is_facet(t)) {
                if (!lk_in_sub.is_irrelevant()) {
                    ok = false;
                    detail = "link of a facet vertex in the truncated subdivision is not {∅}";
                }
                continue;
            }
            const SimplicialComplex lk = link(dx, t);
            const SimplicialComplex sd_lk = truncated_subdivision(lk, 0).complex();
            // Transport: the subdivision vertex of a link face G goes to the
            // subdivision vertex of G ∪ T.
            std::map<std::string, std::string> vmap;
            for (const Face& g : lk.all_faces()) {
                if (g.empty()) continue;
                std::vector<VertexId> in_dx;
                for (VertexId v : g.vertices())
                    in_dx.push_back(dx.face_from_labels({lk.label(v)}).vertices()[0]);
                const Face g_in_dx = Face(std::move(in_dx));
                vmap[lk.face_label(g)] = dx.face_label(g_in_dx.union_with(t));
            }
            std::vector<std::vector<std::string>> mapped;
            mapped.reserve(sd_lk.facets().size());
            for (const Face& f : sd_lk.facets()) {
                std::vector<std::string> m;
                m.reserve(f.size());
                for (VertexId v : f.vertices()) m.push_back(vmap.at(sd_lk.label(v)));
                mapped.push_back(std::move(m));
            }
            const SimplicialComplex image = SimplicialComplex::from_label_facets(mapped);
            if (!(image == lk_in_sub)) {
                ok = false;
                detail = "subdividing the link of " + dx.face_label(t) +
                         " differs from the link of its subdivision vertex";
            }
        }
        out.push_back(make_result("link-subdivision-transport", ok, dx, detail, sw.seconds()));
    }

    const NerveFamily fam = nerve_family(dx);
    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (int k = 0; ok && k < d; ++k) {
            if (!(reduced_betti(subs[static_cast<std::size_t>(k)].complex(), field) ==
                  reduced_betti(fam.nerve(k + 1), field))) {
                ok = false;
                detail = "truncation above " + std::to_string(k) + " and nerve " +
                         std::to_string(k + 1) + " have different homology";
            }
        }
        out.push_back(make_result("nerve-truncation-betti", ok, dx, detail, sw.seconds()));
    }

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (int m = 1; ok && m <= d; ++m) {
            const BettiVector b = reduced_betti(fam.nerve(m), field);
            for (std::size_t idx = 0; idx < b.ranks.size(); ++idx) {
                const int i = static_cast<int>(idx);
                if (i + (m - 1) > d && b.ranks[idx] != 0) {
                    ok = false;
                    detail = "nerve " + std::to_string(m) + " has homology above the band";
                }
            }
        }
        out.push_back(make_result("nerve-vanishing-band", ok, dx, detail, sw.seconds()));
    }

    {
        Stopwatch sw;
        const auto fv = f_vector(dx);
        bool ok = true;
        std::string detail;
        for (int i = 0; ok && i < d; ++i) {
            std::int64_t acc = 0;
            for (int j = i; j < d; ++j) acc += binomial(j, i) * euler_char(fam.nerve(j + 1));
            if (acc != fv[static_cast<std::size_t>(i) + 1]) {
                ok = false;
                detail = "face count f_" + std::to_string(i) +
                         " is not recovered from nerve Euler characteristics";
            }
        }
        out.push_back(make_result("nerve-f-recovery", ok, dx, detail, sw.seconds()));
    }
    return out;
}

std::vector<CheckResult> check_euler_identities(const SimplicialComplex& dx) {
    std::vector<CheckResult> out;
    if (dx.is_void()) {
        out.push_back(inapplicable("link-count-identity", "void complex"));
        return out;
    }
    const auto fv = f_vector(dx);
    const int d = dx.dim() + 1;

    // f-vector of every link, grouped by |T|.
    std::vector<std::vector<std::vector<std::int64_t>>> link_fvs(static_cast<std::size_t>(d) + 1);
    for (const Face& t : dx.all_faces())
        link_fvs[t.size()].push_back(f_vector(link(dx, t)));

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (int k = 0; ok && k <= d; ++k)
            for (int i = 0; ok && i + k <= d; ++i) {
                std::int64_t lhs = 0;
                for (const auto& lfv : link_fvs[static_cast<std::size_t>(k)])
                    if (static_cast<std::size_t>(i) < lfv.size())
                        lhs += lfv[static_cast<std::size_t>(i)];
                const std::int64_t rhs =
                    binomial(i + k, k) * fv[static_cast<std::size_t>(i + k)];
                if (lhs != rhs) {
                    ok = false;
                    detail = "link face-count identity fails at k=" + std::to_string(k) +
                             " i=" + std::to_string(i);
                }
            }
        out.push_back(make_result("link-count-identity", ok, dx, detail, sw.seconds()));
    }

    if (!dx.has_vertices() || !dx.pure()) {
        out.push_back(inapplicable("link-euler-telescope", "complex is not pure"));
        out.push_back(inapplicable("cumulative-euler", "complex is not pure"));
        return out;
    }

    // χ̃ sums per cardinality and truncation Euler characteristics.
    std::vector<std::int64_t> tilde_sum(static_cast<std::size_t>(d) + 1, 0);
    for (const Face& t : dx.all_faces()) {
        const auto lfv = f_vector(link(dx, t));
        std::int64_t chi_t = 0;
        for (std::size_t i = 0; i < lfv.size(); ++i)
            chi_t += (i % 2 == 0 ? -1 : 1) * lfv[i];
        tilde_sum[t.size()] += chi_t;
    }
    std::vector<std::int64_t> chi_trunc(static_cast<std::size_t>(d) + 1, 0);
    for (int j = 0; j < d; ++j)
        chi_trunc[static_cast<std::size_t>(j)] = euler_char(truncated_subdivision(dx, j).complex());
    chi_trunc[static_cast<std::size_t>(d)] = 0;  // the truncation above d is void

    {
        Stopwatch sw;
        bool ok = tilde_sum[0] == chi_trunc[0] - 1;  // boundary case: χ̃(Δ) vs χ̃ of the subdivision
        std::string detail = ok ? "" : "telescoping identity fails at k=0";
        for (int k = 1; ok && k <= d; ++k)
            if (tilde_sum[static_cast<std::size_t>(k)] !=
                chi_trunc[static_cast<std::size_t>(k)] - chi_trunc[static_cast<std::size_t>(k) - 1]) {
                ok = false;
                detail = "telescoping identity fails at k=" + std::to_string(k);
            }
        out.push_back(make_result("link-euler-telescope", ok, dx, detail, sw.seconds()));
    }

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (int j = 0; ok && j <= d; ++j)
            for (int i = j; ok && i <= d; ++i) {
                std::int64_t lhs = 0;
                for (int k = j; k <= i; ++k) lhs += tilde_sum[static_cast<std::size_t>(k)];
                const std::int64_t base =
                    j == 0 ? 1 : chi_trunc[static_cast<std::size_t>(j) - 1];
                const std::int64_t rhs = chi_trunc[static_cast<std::size_t>(i)] - base;
                if (lhs != rhs) {
                    ok = false;
                    detail = "cumulative identity fails at j=" + std::to_string(j) +
                             " i=" + std::to_string(i);
                }
            }
        out.push_back(make_result("cumulative-euler", ok, dx, detail, sw.seconds()));
    }
    return out;
}

std::vector<CheckResult> check_gorenstein_truncation(const SimplicialComplex& dx, FieldSpec field) {
    std::vector<CheckResult> out;
    if (dx.is_void()) {
        out.push_back(inapplicable("gorenstein-truncation-profile", "void complex"));
        out.push_back(inapplicable("gorenstein-truncation-converse", "void complex"));
        return out;
    }
    const int d = dx.has_vertices() ? dx.dim() + 1 : 0;
    const bool gstar = is_gorenstein_star(dx, field);

    bool formula = true;
    std::string formula_detail;
    for (int j = 0; formula && j < d; ++j) {
        const BettiVector lhs =
            reduced_betti(truncated_subdivision(dx, j).complex(), field);
        const BettiVector skel = reduced_betti(skeleton(dx, j - 1), field);
        const std::int64_t want_top = skel.at(j - 1);
        for (int i = -1; i <= lhs.max_dim() + 1; ++i) {
            const std::int64_t want = (i == d - j) ? want_top : 0;
            if (lhs.at(i - 1) != want) {
                formula = false;
                formula_detail = "truncation profile fails at j=" + std::to_string(j) +
                                 " i=" + std::to_string(i);
                break;
            }
        }
    }

    {
        Stopwatch sw;
        if (!gstar)
            out.push_back(inapplicable("gorenstein-truncation-profile", "complex is not Gorenstein*"));
        else
            out.push_back(
                make_result("gorenstein-truncation-profile", formula, dx, formula_detail, sw.seconds()));
    }

    {
        Stopwatch sw;
        bool all_links_nonacyclic = true;
        for (const Face& t : dx.all_faces())
            if (reduced_betti(link(dx, t), field).all_zero()) {
                all_links_nonacyclic = false;
                break;
            }
        if (!all_links_nonacyclic || !formula)
            out.push_back(inapplicable("gorenstein-truncation-converse",
                                       !all_links_nonacyclic ? "some link is acyclic"
                                                             : "profile does not hold"));
        else
            out.push_back(make_result("gorenstein-truncation-converse", gstar, dx,
                                      "profile holds with non-acyclic links but the complex is "
                                      "not Gorenstein*",
                                      sw.seconds()));
    }
    return out;
}

namespace {

// All nonempty independent vertex subsets (n small), as faces.
void independent_sets_rec(const SimplicialComplex& dx, VertexId from, std::vector<VertexId>& cur,
                          std::vector<Face>& out) {
    for (VertexId v = from; v < dx.vertex_count(); ++v) {
        bool ok = true;
        for (VertexId u : cur)
            if (dx.contains(Face({u, v}))) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(v);
        out.push_back(Face(cur));
        independent_sets_rec(dx, v + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Face> independent_vertex_sets(const SimplicialComplex& dx,
                                          const IndependentScanOptions& opts, Rng& rng) {
    const std::size_t n = dx.vertex_count();
    std::vector<Face> out;
    if (n <= opts.exhaustive_vertex_cap) {
        std::vector<VertexId> cur;
        independent_sets_rec(dx, 0, cur, out);
        return out;
    }
    std::set<Face> seen;
    for (std::size_t s = 0; s < opts.samples; ++s) {
        std::vector<VertexId> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = n; i > 1; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        const std::size_t target = 1 + rng.below(n);
        std::vector<VertexId> chosen;
        for (VertexId v : perm) {
            if (chosen.size() >= target) break;
            bool ok = true;
            for (VertexId u : chosen)
                if (dx.contains(Face({u, v}))) {
                    ok = false;
                    break;
                }
            if (ok) chosen.push_back(v);
        }
        if (!chosen.empty()) seen.insert(Face(chosen));
    }
    out.assign(seen.begin(), seen.end());
    return out;
}

std::vector<std::vector<Face>> independent_face_sets(const SimplicialComplex& dx,
                                                     const IndependentScanOptions& opts, Rng& rng) {
    std::vector<Face> faces = dx.all_faces();
    faces.erase(std::remove_if(faces.begin(), faces.end(), [](const Face& f) { return f.empty(); }),
                faces.end());
    std::vector<std::vector<Face>> out;
    // Singletons first: the bound must hold for every single face.
    for (const Face& f : faces) out.push_back({f});
    // All independent pairs when the face list is small, else sampled sets.
    if (faces.size() <= 32) {
        for (std::size_t i = 0; i < faces.size(); ++i)
            for (std::size_t j = i + 1; j < faces.size(); ++j)
                if (!dx.contains(faces[i].union_with(faces[j])))
                    out.push_back({faces[i], faces[j]});
    }
    std::set<std::vector<Face>> seen;
    for (std::size_t s = 0; s < opts.samples; ++s) {
        std::vector<std::size_t> perm(faces.size());
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        const std::size_t target = 2 + rng.below(4);
        std::vector<Face> chosen;
        for (std::size_t idx : perm) {
            if (chosen.size() >= target) break;
            bool ok = true;
            for (const Face& g : chosen)
                if (faces[idx] == g || dx.contains(faces[idx].union_with(g))) {
                    ok = false;
                    break;
                }
            if (ok) chosen.push_back(faces[idx]);
        }
        if (chosen.size() >= 2) {
            std::sort(chosen.begin(), chosen.end());
            seen.insert(chosen);
        }
    }
    for (const auto& a : seen) out.push_back(a);
    return out;
}

}  // namespace

std::vector<CheckResult> check_independent_removal(const SimplicialComplex& dx, FieldSpec field,
                                                   const IndependentScanOptions& opts) {
    std::vector<CheckResult> out;
    if (dx.is_void() || !dx.has_vertices()) {
        for (const char* name : {"independent-removal-depth", "excellent-removal-serre",
                                 "independent-face-removal-depth", "depth-drop-witness"})
            out.push_back(inapplicable(name, "no vertices"));
        return out;
    }
    Rng rng(opts.seed);
    const int base_depth = depth_links(dx, field);
    const int base_serre = serre_level(dx, field);

    const std::vector<Face> j_sets = independent_vertex_sets(dx, opts, rng);
    std::map<Face, int> ast_depth;

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (const Face& j : j_sets) {
            const SimplicialComplex ast = antistar(dx, j);
            const int dep = ast.is_void() ? 0 : depth_links(ast, field);
            ast_depth[j] = dep;
            if (dep < base_depth - 1) {
                ok = false;
                detail = "removing independent set " + dx.face_label(j) +
                         " dropped depth by more than one";
                break;
            }
        }
        out.push_back(make_result("independent-removal-depth", ok, dx, detail, sw.seconds()));
    }

    {
        Stopwatch sw;
        bool ok = true;
        bool any = false;
        std::string detail;
        for (const Face& j : j_sets) {
            if (!is_excellent_vertexset(dx, j)) continue;
            any = true;
            const SimplicialComplex ast = antistar(dx, j);
            const int lvl = (!ast.has_vertices()) ? 0 : serre_level(ast, field);
            const int d_ast = (!ast.has_vertices()) ? 0 : ast.dim() + 1;
            if (lvl < std::min(base_serre, d_ast)) {
                ok = false;
                detail = "removing excellent set " + dx.face_label(j) + " lost the Serre level";
                break;
            }
        }
        if (!any)
            out.push_back(inapplicable("excellent-removal-serre", "no excellent set in the scan"));
        else
            out.push_back(make_result("excellent-removal-serre", ok, dx, detail, sw.seconds()));
    }

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (const auto& a : independent_face_sets(dx, opts, rng)) {
            const SimplicialComplex removed = remove_independent_faces(dx, a);
            const int dep = removed.is_void() ? 0 : depth_links(removed, field);
            if (dep < base_depth - 1) {
                ok = false;
                detail = "removing an independent face set dropped depth by more than one";
                break;
            }
        }
        out.push_back(make_result("independent-face-removal-depth", ok, dx, detail, sw.seconds()));
    }

    {
        Stopwatch sw;
        if (reduced_betti(dx, field).at(base_depth - 1) != 0) {
            out.push_back(inapplicable("depth-drop-witness",
                                       "homology at the depth does not vanish"));
        } else {
            // Minimal-cardinality faces T with b̃_{depth-|T|-1}(lk T) nonzero.
            std::vector<Face> witnesses;
            std::size_t min_card = 0;
            for (const Face& t : dx.all_faces()) {
                if (!witnesses.empty() && t.size() > min_card) break;
                if (static_cast<int>(t.size()) > base_depth) break;
                const BettiVector b = reduced_betti(link(dx, t), field);
                if (b.at(base_depth - static_cast<int>(t.size()) - 1) != 0) {
                    if (witnesses.empty()) min_card = t.size();
                    witnesses.push_back(t);
                }
            }
            bool ok = true;
            bool any = false;
            std::string detail;
            for (const Face& j : j_sets) {
                bool touches = false;
                for (const Face& t : witnesses)
                    if (!t.disjoint_from(j)) {
                        touches = true;
                        break;
                    }
                if (!touches) continue;
                any = true;
                if (ast_depth.at(j) != base_depth - 1) {
                    ok = false;
                    detail = "independent set " + dx.face_label(j) +
                             " meets a minimal witness but the depth drop is not exactly one";
                    break;
                }
            }
            if (!any)
                out.push_back(inapplicable("depth-drop-witness",
                                           "no scanned independent set meets a minimal witness"));
            else
                out.push_back(make_result("depth-drop-witness", ok, dx, detail, sw.seconds()));
        }
    }
    return out;
}

std::vector<CheckResult> check_all(const SimplicialComplex& dx, FieldSpec field,
                                   const BalancedComplex* balanced,
                                   const IndependentScanOptions& opts) {
    std::vector<CheckResult> out;
    auto append = [&out](std::vector<CheckResult> rs) {
        for (auto& r : rs) out.push_back(std::move(r));
    };
    append(check_subdivision(dx, field));
    append(check_serre_truncation(dx, field));
    append(check_euler_identities(dx));
    append(check_gorenstein_truncation(dx, field));
    append(check_independent_removal(dx, field, opts));
    if (balanced != nullptr) {
        append(check_rank_selection(*balanced, field));
    } else if (dx.has_vertices()) {
        append(check_rank_selection(truncated_subdivision(dx, 0), field));
    }
    return out;
}

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        const std::uint64_t x = next();
        if (x < limit) return x % bound;
    }
}

SimplicialComplex random_pure_complex(Rng& rng, unsigned n, unsigned dim) {
    const unsigned k = dim + 1;
    if (k > n) throw std::invalid_argument("dimension too large for the vertex count");
    const std::int64_t total = binomial(static_cast<int>(n), static_cast<int>(k));
    const std::uint64_t m_max = std::min<std::uint64_t>(2 * n, static_cast<std::uint64_t>(total));
    const std::uint64_t m_min = std::min<std::uint64_t>(dim + 2, m_max);
    const std::uint64_t m = m_min + rng.below(m_max - m_min + 1);

    std::set<std::vector<unsigned>> chosen;
    while (chosen.size() < m) {
        std::vector<unsigned> pool(n);
        std::iota(pool.begin(), pool.end(), 1);
        for (unsigned i = 0; i < k; ++i) {
            const std::uint64_t j = i + rng.below(n - i);
            std::swap(pool[i], pool[static_cast<std::size_t>(j)]);
        }
        std::vector<unsigned> facet(pool.begin(), pool.begin() + k);
        std::sort(facet.begin(), facet.end());
        chosen.insert(std::move(facet));
    }
    std::vector<std::vector<std::string>> faces;
    faces.reserve(chosen.size());
    for (const auto& facet : chosen) {
        std::vector<std::string> ls;
        ls.reserve(facet.size());
        for (unsigned v : facet) ls.push_back(std::to_string(v));
        faces.push_back(std::move(ls));
    }
    return SimplicialComplex::from_label_facets(faces);
}

const std::vector<std::string> prospect_predicates = {"s2-gap", "s2-noise", "betti-twin"};

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return r.next();
}

std::string table_key(const std::vector<BettiVector>& table) {
    std::string key;
    for (const auto& b : table) key += b.to_string() + ";";
    return key;
}

struct ProspectRecord {
    SimplicialComplex complex;
    DiagnosticsReport report;
    std::vector<BettiVector> table;
};

}  // namespace

std::vector<ProspectHit> prospect_on(const std::vector<SimplicialComplex>& corpus,
                                     const std::string& predicate, FieldSpec field,
                                     unsigned workers) {
    if (std::find(prospect_predicates.begin(), prospect_predicates.end(), predicate) ==
        prospect_predicates.end())
        throw std::invalid_argument("unknown predicate: " + predicate);

    std::vector<ProspectRecord> records(corpus.size());
    parallel_for(corpus.size(), workers, [&](std::size_t i) {
        records[i].complex = corpus[i];
        records[i].report = analyze(corpus[i], field);
        records[i].table = truncation_betti_table(corpus[i], field);
    });

    std::vector<ProspectHit> hits;
    if (predicate == "s2-gap" || predicate == "s2-noise") {
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& rec = records[i];
            const int d = rec.complex.dim() + 1;
            bool match = false;
            std::string note;
            if (predicate == "s2-gap") {
                bool vanish = true;
                for (int j = 0; vanish && j < d; ++j)
                    for (int ii = 0; vanish && ii < 2 && ii + j < d; ++ii)
                        if (rec.table[static_cast<std::size_t>(j)].at(ii - 1) != 0) vanish = false;
                match = vanish && rec.report.serre < 2;
                note = "level-2 truncation vanishing without Serre level 2";
            } else {
                match = rec.report.serre >= 2 &&
                        rec.table[0].at(1) != 0;  // b̃_1 of the barycentric subdivision
                note = "Serre level 2 with nonvanishing first truncation homology";
            }
            if (match) {
                ProspectHit hit;
                hit.indices = {i};
                hit.complexes = {rec.complex};
                hit.reports = {rec.report};
                hit.note = note;
                hits.push_back(std::move(hit));
            }
        }
        return hits;
    }

    // betti-twin: identical truncation tables, different flags.
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < records.size(); ++i)
        groups[table_key(records[i].table)].push_back(i);
    for (const auto& [key, members] : groups) {
        (void)key;
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const auto& ra = records[members[a]].report;
                const auto& rb = records[members[b]].report;
                std::vector<std::string> diffs;
                if ((ra.serre >= 2) != (rb.serre >= 2)) diffs.push_back("serre-level-2");
                if (ra.buchsbaum != rb.buchsbaum) diffs.push_back("buchsbaum");
                if (ra.gorenstein != rb.gorenstein) diffs.push_back("gorenstein");
                if (diffs.empty()) continue;
                ProspectHit hit;
                hit.indices = {members[a], members[b]};
                hit.complexes = {records[members[a]].complex, records[members[b]].complex};
                hit.reports = {ra, rb};
                std::string note = "identical truncation homology, different flags:";
                for (const auto& s : diffs) note += " " + s;
                hit.note = note;
                hits.push_back(std::move(hit));
            }
    }
    std::sort(hits.begin(), hits.end(),
              [](const ProspectHit& x, const ProspectHit& y) { return x.indices < y.indices; });
    return hits;
}

std::vector<ProspectHit> prospect(const ProspectConfig& cfg, FieldSpec field, unsigned workers) {
    if (cfg.vertices > cfg.vertex_ceiling)
        throw std::invalid_argument("vertex count exceeds the configured ceiling");
    if (cfg.count == 0) return {};
    std::vector<SimplicialComplex> corpus;
    corpus.reserve(cfg.count);
    for (unsigned i = 0; i < cfg.count; ++i) {
        Rng rng(mix_seed(cfg.seed, i));
        if (cfg.pure_only) {
            corpus.push_back(random_pure_complex(rng, cfg.vertices, cfg.dim));
        } else {
            // Mixed facet sizes; generated faces absorb into a possibly
            // non-pure complex.
            std::vector<std::vector<std::string>> faces;
            const std::uint64_t m = 2 + rng.below(2 * cfg.vertices);
            for (std::uint64_t f = 0; f < m; ++f) {
                const unsigned size = 1 + static_cast<unsigned>(rng.below(cfg.dim + 1));
                std::set<unsigned> vs;
                while (vs.size() < size)
                    vs.insert(1 + static_cast<unsigned>(rng.below(cfg.vertices)));
                std::vector<std::string> ls;
                for (unsigned v : vs) ls.push_back(std::to_string(v));
                faces.push_back(std::move(ls));
            }
            corpus.push_back(SimplicialComplex::from_label_facets(faces));
        }
    }
    return prospect_on(corpus, cfg.predicate, field, workers);
}

}  // namespace srx
