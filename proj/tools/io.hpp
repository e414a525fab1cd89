#pragma once

#include <string>
#include <vector>

#include "gsp4/adjacency.hpp"
#include "gsp4/bm_cycles.hpp"
#include "gsp4/local_model.hpp"
#include "json.hpp"

namespace gsp4::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
std::string schema(const std::string& kind);

Weight parse_weight(const std::string& text);  // "a,b,c"

json to_json(const Weight& l);
json to_json(const ExtAffine& x);
json to_json(const DualElement& z);
json to_json(const Tuple& x);
json to_json(const APPair& q);
json to_json(const SerreWeight& s);
json to_json(const TamePresentation& t);
json to_json(const AdjacencyInstance& inst);
template <class Tag>
json to_json(const Combination<Tag>& c) {
    json r = json::array();
    for (const auto& [s, k] : c.coeff) r.push_back({{"weight", to_json(s)}, {"multiplicity", k}});
    return r;
}

Weight weight_from_json(const json& j);

// A path to a JSON fixture, or inline "word:a,b,c;word:a,b,c" with one entry per embedding.
// A prime stored in the fixture must agree with p.
TamePresentation load_presentation(const std::string& arg, Int p);
// A path to a JSON fixture, or inline "a,b,c;a,b,c".
SerreWeight load_serre_weight(const std::string& arg, Int p);

json matrix_to_json(const PolyMat<Q>& a);
json matrix_to_json(const PolyMat<Fq>& a);
// Accepts a bare 4x4 array of {"coeffs": {...}} entries or an object with "rows".
PolyMat<Q> matrix_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace gsp4::cli
