#pragma once

#include <json.hpp>
#include <string>

#include "biplane/counting.hpp"
#include "biplane/drawing.hpp"
#include "biplane/extremal.hpp"
#include "biplane/graph.hpp"
#include "biplane/search.hpp"
#include "biplane/structure.hpp"

namespace biplane {

using Json = nlohmann::ordered_json;

/// Compact single-line dump followed by a newline. Key order is insertion
/// order, so equal values always give equal bytes.
std::string dump(const Json& j);

/// Throws ParseError on malformed text.
Json parse_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// {"n": int, "colors": [int], "edges": [[int,int]]}
Json to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const Json& j);

// Graph schema plus "crossings": [[e,f]] and "rotations": {"node": [[segment, dir]]}.
Json to_json(const Drawing& d);
Drawing drawing_from_json(const Json& j);

Json to_json(const EdgeClassification& c);
Json to_json(const CensusReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const PartsDecomposition& p);
Json to_json(const StructureReport& r);
Json to_json(const std::vector<BoundVerdict>& verdicts);
Json to_json(const DecideResult& r);
Json to_json(const BetaSearchResult& r);
Json to_json(const CrBoundDerivation& d);
Json to_json(const K37Refutation& r);
Json to_json(const PairSupport& s);

// Presentation only; see render.cpp.
std::string render_svg(const Drawing& d);
std::string render_decomposition_svg(const Drawing& d);
std::string render_dot(const Drawing& d);

}  // namespace biplane
