#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "srx/balanced.hpp"
#include "srx/complex.hpp"
#include "srx/diagnostics.hpp"

namespace srx {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_number(line) {}
    int line_number;
};

enum class InputFormat { auto_detect, text, json };

/// A parsed input file: the complex plus whatever else the document carried.
struct InputDocument {
    InputFormat format = InputFormat::text;
    SimplicialComplex complex;
    // Optional balanced partition (JSON "partition" key), as label classes.
    std::optional<std::vector<std::vector<std::string>>> partition_labels;
    // True when an input face was absorbed by a strictly larger one.
    bool had_redundant_faces = false;
};

/// Text format: '#' starts a comment, each non-blank line is one facet of
/// whitespace-separated labels, the bare token {} is the empty face, an
/// empty file is the void complex. JSON format: {"facets": [[...], ...]}
/// with an optional "partition" of label classes. Files whose first
/// non-blank content starts with '{' are treated as JSON unless that first
/// line is exactly "{}".
InputDocument parse_input(std::string_view bytes, InputFormat hint = InputFormat::auto_detect);

/// Canonical text form; reparses to an equal complex.
std::string emit_text(const SimplicialComplex& dx);

/// JSON form; includes "partition" when a balanced structure is given.
std::string emit_json(const SimplicialComplex& dx, const BalancedComplex* balanced = nullptr);

/// Resolve a partition given in labels against a parsed complex.
std::vector<std::vector<VertexId>> partition_from_labels(
    const SimplicialComplex& dx, const std::vector<std::vector<std::string>>& classes);

std::string report_to_text(const DiagnosticsReport& rep, const SimplicialComplex& dx);
std::string report_to_json(const DiagnosticsReport& rep, const SimplicialComplex& dx);

}  // namespace srx
