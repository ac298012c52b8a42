#pragma once

// JSON forms of algebras, modules, morphisms and decision reports.
//
//   algebra:  {"name", "p", "dim", "unit": [..], "mult": [i][j][k], "gorenstein_n": int|null}
//   module:   {"algebra": str, "side": "right"|"left", "dim", "action": [matrix x dim A]}
//   morphism: {"source": path|module, "target": path|module, "matrix": [[..]..]}
//
// Parse and validation failures throw Error(ParseError) whose message starts
// with "<origin>:<line>:".

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "phantomkit/deciders.hpp"

namespace phantomkit {

using Json = nlohmann::ordered_json;

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
/// Parses JSON text; syntax errors are reported with line and column.
Json parse_json_text(std::string_view text, std::string_view origin);

Json matrix_to_json(const Mat& m);
Json algebra_to_json(const AlgebraPresentation& a);
Json module_to_json(const ModuleRep& m);
Json morphism_to_json(const ModuleMorphism& f);  // source and target inline
Json witness_to_json(const TestWitness& w);
Json report_to_json(const DecisionReport& r);

AlgebraPresentation parse_algebra(std::string_view text, std::string_view origin);

/// Resolves the "algebra" field of a module file to a ring.
using RingResolver = std::function<RingPtr(const std::string& name)>;

ModuleRep parse_module(std::string_view text, std::string_view origin, const RingResolver& rings);
ModuleRep module_from_json(const Json& j, std::string_view text, std::string_view origin,
                           const RingResolver& rings);

/// Source and target are module objects or paths relative to `base_dir`.
ModuleMorphism parse_morphism(std::string_view text, std::string_view origin, const RingResolver& rings,
                              const std::filesystem::path& base_dir);

}  // namespace phantomkit
