#pragma once

#include <string>

#include <json.hpp>

#include "flagcoords/cusp.hpp"
#include "flagcoords/representation.hpp"
#include "flagcoords/surface.hpp"

namespace fc {

using json = nlohmann::ordered_json;

// Serializes with every floating-point number printed to 17 significant
// digits.
std::string dump(const json& j, int indent = 2);

// Throws ParseError with the byte offset of the failure.
json parse_json(const std::string& text);
json read_json_file(const std::string& path);        // IoError, ParseError
std::string read_text_file(const std::string& path);  // IoError
void write_text_file(const std::string& path, const std::string& text);

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);
json matrix_to_json(const Mat3& m);  // rows of [re, im] pairs

json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

// {"phi": [{"edge", "face", "slots", "value"}...],
//  "faces": [{"face", "Phi", "delta"}...]}, delta[i] = delta^i_{i+1,i+2}.
json to_json(const Triangulation& t, const Decoration& d);
Decoration decoration_from_json(const Triangulation& t, const json& j);

// {"m": [{"edge", "face", "slots", "value"}...], "Phi": [{"face", "value"}...]}
json to_json(const Triangulation& t, const MDecoration& md);
MDecoration mdecoration_from_json(const Triangulation& t, const json& j);

// {"base_vertex", "relator", "loops": [{"name", "vertices"}...]}
json to_json(const Hexagonation& hx, const LoopSet& loops);
LoopSet loops_from_json(const Hexagonation& hx, const json& j);

json to_json(const ValidationReport& r);
json to_json(const CuspReport& r);
json to_json(const SurfaceRepresentation& r);

}  // namespace fc
