#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "lcc/covering.hpp"
#include "lcc/graph.hpp"
#include "lcc/interval.hpp"
#include "lcc/rect_cover.hpp"
#include "lcc/representation.hpp"
#include "lcc/setfam.hpp"

namespace lcc {

using Json = nlohmann::json;

// Every *_from_json throws MalformedInput on a wrong shape or value.

Json to_json(const Graph& g);               // {"n": n, "edges": [[u,v],...]}
Graph graph_from_json(const Json& j);

Json to_json(const CliqueCovering& c);      // {"cliques": [[...],...]}, sorted
CliqueCovering covering_from_json(const Json& j);

Json to_json(const IntersectionRepresentation& r); // {"labels": L, "sets": [[...],...]}
IntersectionRepresentation representation_from_json(const Json& j);

// Coordinates with a power-of-two denominator are written as JSON numbers,
// others as "p/q" strings; both forms (and integers) are read back exactly.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const IntervalModel& m);       // {"points": [...], "intervals": [[lo,hi],...]}
IntervalModel interval_model_from_json(const Json& j);

// Contiguous rectangles as {"rows":[lo,hi],"cols":[lo,hi]}; any other as
// {"row_set":[...],"col_set":[...]}. Both forms are accepted on input.
Json to_json(const RectCovering& c);        // {"n": n, "rects": [...]}
RectCovering rect_covering_from_json(const Json& j);

Json to_json(const SetPairFamily& f);       // {"r","s","pairs":[{"A":[...],"B":[...]},...]}
SetPairFamily family_from_json(const Json& j);

// Compact dump with sorted keys and one trailing LF.
std::string canonical_dump(const Json& j);

// Throws MalformedInput when the file cannot be read or parsed.
Json read_json_file(const std::filesystem::path& p);
// Throws MalformedInput when the file cannot be written.
void write_text_file(const std::filesystem::path& p, const std::string& text);

} // namespace lcc
