#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "reebforge/bounds.hpp"
#include "reebforge/complex.hpp"
#include "reebforge/fiber_power.hpp"
#include "reebforge/homology.hpp"
#include "reebforge/reeb.hpp"
#include "reebforge/reeb_graph.hpp"

namespace reebforge {

// File formats are JSON documents; see README for the grammar. Parse
// failures throw ParseError with the source name plus line and column;
// structural problems throw the corresponding validation error.

/// `base_dir` resolves relative paths in map and function files.
SimplicialComplex parse_complex(std::string_view text, std::string_view source = "<input>");
SimplicialMap parse_map(std::string_view text, const std::filesystem::path& base_dir,
                        std::string_view source = "<input>");
PLFunction parse_function(std::string_view text, const std::filesystem::path& base_dir,
                          std::string_view source = "<input>");

SimplicialComplex read_complex(const std::filesystem::path& path);
SimplicialMap read_map(const std::filesystem::path& path);
PLFunction read_function(const std::filesystem::path& path);

/// What a document describes, judged by its fields.
enum class DocumentKind { Complex, Map, Function };
DocumentKind sniff_document(const std::filesystem::path& path);

std::string write_complex(const SimplicialComplex& complex);
/// Domain and codomain are written inline.
std::string write_map(const SimplicialMap& map);
std::string write_function(const PLFunction& function);

// Reports. Each is one JSON object; integers that can exceed 64 bits and all
// rationals are written as decimal strings.
std::string betti_report(const BettiVector& betti);
std::string reeb_graph_report(const ReebGraph& graph);
std::string reeb_graph_dot(const ReebGraph& graph);
/// With `detail`, includes the strata table and the realization.
std::string reeb_space_report(const ReebComplex& reeb, const SimplicialComplex& codomain,
                              bool detail);
std::string descent_report(const DescentReport& report);
std::string b1_report(const B1Report& report);
std::string quotient_report(const QuotientReport& report);
std::string bound_report(std::string_view name,
                         const std::vector<std::pair<std::string, std::uint64_t>>& params,
                         const BigInt& value);

}  // namespace reebforge
