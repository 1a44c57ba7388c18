// srx: diagnostics for finite simplicial complexes.
//
// Subcommands: analyze, verify, nerve, subdivide, rank-select, prospect.
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage or
// parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "srx/harness.hpp"
#include "srx/io.hpp"
#include "srx/nerve.hpp"
#include "srx/parallel.hpp"
#include "srx/poset.hpp"

namespace {

using srx::CheckStatus;

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

srx::InputDocument load(const std::string& path, const std::string& format) {
    srx::InputFormat hint = srx::InputFormat::auto_detect;
    if (format == "text") hint = srx::InputFormat::text;
    if (format == "json") hint = srx::InputFormat::json;
    srx::InputDocument doc = srx::parse_input(read_source(path), hint);
    if (doc.had_redundant_faces)
        std::cerr << "warning: non-maximal input faces were absorbed\n";
    return doc;
}

srx::FieldSpec field_of(unsigned p) {
    return p == 0 ? srx::FieldSpec::rationals() : srx::FieldSpec::prime(p);
}

std::vector<std::vector<srx::VertexId>> parse_partition_spec(const srx::SimplicialComplex& dx,
                                                             const std::string& spec) {
    std::vector<std::vector<std::string>> classes;
    std::istringstream in(spec);
    std::string cls;
    while (std::getline(in, cls, ';')) {
        std::vector<std::string> labels;
        std::istringstream cl(cls);
        std::string lab;
        while (std::getline(cl, lab, ',')) {
            if (!lab.empty()) labels.push_back(lab);
        }
        classes.push_back(std::move(labels));
    }
    return srx::partition_from_labels(dx, classes);
}

std::optional<srx::BalancedComplex> balanced_of(const srx::InputDocument& doc,
                                                const std::string& partition_spec) {
    if (!partition_spec.empty())
        return srx::verify_balanced(doc.complex, parse_partition_spec(doc.complex, partition_spec));
    if (doc.partition_labels)
        return srx::verify_balanced(doc.complex,
                                    srx::partition_from_labels(doc.complex, *doc.partition_labels));
    return std::nullopt;
}

int print_check_results(const std::vector<srx::CheckResult>& results) {
    bool failed = false;
    for (const auto& r : results) {
        std::ostringstream line;
        line << "[" << srx::status_name(r.status) << "] " << r.name;
        if (r.seconds > 0) {
            line.setf(std::ios::fixed);
            line.precision(3);
            line << " (" << r.seconds << "s)";
        }
        if (!r.note.empty()) line << "  -- " << r.note;
        std::cout << line.str() << "\n";
        if (r.failed()) {
            failed = true;
            std::cout << "  witness: " << r.witness << "\n";
        }
    }
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagnostics for finite simplicial complexes"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "auto";
    unsigned field_char = 0;
    bool as_json = false;
    std::string partition_spec;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input file, or - for stdin")->required();
        cmd->add_option("--format", format, "input format: auto, text, json")
            ->check(CLI::IsMember({"auto", "text", "json"}));
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "full diagnostics report");
    add_input(analyze_cmd);
    analyze_cmd->add_option("--field", field_char, "field characteristic (0 = rationals)");
    analyze_cmd->add_flag("--json", as_json, "machine-readable report");

    auto* verify_cmd = app.add_subcommand("verify", "run theorem and identity checks");
    add_input(verify_cmd);
    verify_cmd->add_option("--field", field_char, "field characteristic (0 = rationals)");
    std::string check_name = "all";
    verify_cmd->add_option("--check", check_name,
                           "one of: all, subdivision, serre-truncation, euler, "
                           "gorenstein-truncation, independent-removal, rank-selection");
    std::uint64_t scan_seed = 0x5eedu;
    verify_cmd->add_option("--seed", scan_seed, "seed for sampled independent-set scans");
    verify_cmd->add_option("--partition", partition_spec,
                           "balanced partition, classes ;-separated, labels ,-separated");

    auto* nerve_cmd = app.add_subcommand("nerve", "higher nerve of the facet cover");
    add_input(nerve_cmd);
    int nerve_index = 1;
    nerve_cmd->add_option("--index", nerve_index, "which nerve (1-based)")->required();

    auto* subdiv_cmd = app.add_subcommand("subdivide", "truncated barycentric subdivision");
    add_input(subdiv_cmd);
    int above = 0;
    subdiv_cmd->add_option("--above", above, "drop faces of cardinality <= this");
    subdiv_cmd->add_flag("--json", as_json, "emit JSON with the height partition");

    auto* select_cmd = app.add_subcommand("rank-select", "rank-selected subcomplex");
    add_input(select_cmd);
    std::string keep_spec;
    select_cmd->add_option("--keep", keep_spec, "comma-separated 1-based ranks to keep")->required();
    select_cmd->add_option("--partition", partition_spec,
                           "balanced partition, classes ;-separated, labels ,-separated");
    select_cmd->add_flag("--json", as_json, "emit JSON with the partition");

    auto* prospect_cmd = app.add_subcommand("prospect", "search random complexes for phenomena");
    srx::ProspectConfig cfg;
    prospect_cmd->add_option("--vertices", cfg.vertices, "vertex count")->required();
    prospect_cmd->add_option("--dim", cfg.dim, "facet dimension")->required();
    prospect_cmd->add_option("--count", cfg.count, "corpus size")->required();
    prospect_cmd->add_option("--seed", cfg.seed, "corpus seed")->required();
    prospect_cmd->add_option("--predicate", cfg.predicate, "s2-gap, s2-noise or betti-twin")
        ->required();
    bool mixed_dims = false;
    prospect_cmd->add_flag("--mixed-dims", mixed_dims, "allow non-pure draws");
    prospect_cmd->add_option("--field", field_char, "field characteristic (0 = rationals)");
    prospect_cmd->add_option("--ceiling", cfg.vertex_ceiling, "largest allowed vertex count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze_cmd->parsed()) {
            const auto doc = load(file, format);
            const auto rep = srx::analyze(doc.complex, field_of(field_char));
            std::cout << (as_json ? srx::report_to_json(rep, doc.complex)
                                  : srx::report_to_text(rep, doc.complex));
            return 0;
        }

        if (verify_cmd->parsed()) {
            const auto doc = load(file, format);
            const auto field = field_of(field_char);
            srx::IndependentScanOptions opts;
            opts.seed = scan_seed;
            const auto balanced = balanced_of(doc, partition_spec);
            std::vector<srx::CheckResult> results;
            if (check_name == "all") {
                results = srx::check_all(doc.complex, field,
                                         balanced ? &*balanced : nullptr, opts);
            } else if (check_name == "subdivision") {
                results = srx::check_subdivision(doc.complex, field);
            } else if (check_name == "serre-truncation") {
                results = srx::check_serre_truncation(doc.complex, field);
            } else if (check_name == "euler") {
                results = srx::check_euler_identities(doc.complex);
            } else if (check_name == "gorenstein-truncation") {
                results = srx::check_gorenstein_truncation(doc.complex, field);
            } else if (check_name == "independent-removal") {
                results = srx::check_independent_removal(doc.complex, field, opts);
            } else if (check_name == "rank-selection") {
                if (balanced) {
                    results = srx::check_rank_selection(*balanced, field);
                } else if (doc.complex.has_vertices()) {
                    results = srx::check_rank_selection(
                        srx::truncated_subdivision(doc.complex, 0), field);
                } else {
                    throw std::invalid_argument("rank-selection needs a balanced structure");
                }
            } else {
                throw std::invalid_argument("unknown check: " + check_name);
            }
            return print_check_results(results);
        }

        if (nerve_cmd->parsed()) {
            const auto doc = load(file, format);
            std::cout << srx::emit_text(srx::higher_nerve(doc.complex, nerve_index));
            return 0;
        }

        if (subdiv_cmd->parsed()) {
            const auto doc = load(file, format);
            const auto sub = srx::truncated_subdivision(doc.complex, above);
            std::cout << (as_json ? srx::emit_json(sub.complex(), &sub)
                                  : srx::emit_text(sub.complex()));
            return 0;
        }

        if (select_cmd->parsed()) {
            const auto doc = load(file, format);
            auto balanced = balanced_of(doc, partition_spec);
            if (!balanced)
                throw std::invalid_argument(
                    "rank-select needs a partition: JSON input with a \"partition\" key "
                    "(e.g. from subdivide --json) or --partition");
            std::set<int> keep;
            std::istringstream ks(keep_spec);
            std::string tok;
            while (std::getline(ks, tok, ','))
                if (!tok.empty()) keep.insert(std::stoi(tok));
            const auto sel = srx::rank_select(*balanced, keep);
            std::cout << (as_json ? srx::emit_json(sel.complex(), &sel)
                                  : srx::emit_text(sel.complex()));
            return 0;
        }

        if (prospect_cmd->parsed()) {
            cfg.pure_only = !mixed_dims;
            const auto hits =
                srx::prospect(cfg, field_of(field_char), srx::default_worker_count());
            for (const auto& hit : hits) {
                nlohmann::ordered_json j;
                j["indices"] = hit.indices;
                nlohmann::ordered_json complexes = nlohmann::ordered_json::array();
                for (std::size_t i = 0; i < hit.complexes.size(); ++i) {
                    auto c = nlohmann::ordered_json::parse(srx::emit_json(hit.complexes[i]));
                    c["depth"] = hit.reports[i].depth;
                    c["serre_level"] = hit.reports[i].serre;
                    c["buchsbaum"] = hit.reports[i].buchsbaum;
                    c["gorenstein"] = hit.reports[i].gorenstein;
                    complexes.push_back(std::move(c));
                }
                j["complexes"] = std::move(complexes);
                j["note"] = hit.note;
                std::cout << j.dump() << "\n";
            }
            std::cout << "hits: " << hits.size() << "\n";
            return 0;
        }
    } catch (const srx::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
