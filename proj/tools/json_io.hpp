#pragma once

#include <string>

#include <json.hpp>

#include "ftflag/coxeter.hpp"
#include "ftflag/flags.hpp"
#include "ftflag/ftverify.hpp"
#include "ftflag/picard2.hpp"

namespace ftflag::io {

// Keys are emitted in insertion order; every object below has a fixed key
// order so identical inputs give byte-identical output. Node indices are
// 1-based. Rationals are "p/q" strings.
using json = nlohmann::ordered_json;

/// Accepts [[...]] or {"matrix": [[...]]} or {"intersection_matrix": [[...]]}.
/// Throws Error{Parse} naming the offending entry, Error{NotSquare}.
IntMatrix parse_matrix(const json& j);
IntMatrix parse_matrix(const std::string& text);

json to_json(const IntVector& v);
json to_json(const RatVector& v);
json to_json(const NodeSet& s);
json to_json(const DynkinDiagram& d);
json to_json(const ComponentVerdict& c);
json to_json(const std::vector<InductionStep>& seq);

/// {"kind", "components", "dimension_bound", "kernel"}
json classification_json(const ClassificationVerdict& v, std::optional<int> dimension_bound);

/// {"verdict", "ingested_orientation", "components", "dimension_bound",
///  "affine_witness", "consistency", "minimal_violation"}
json ft_report_json(const CartanMatrix& m, const FTReport& r);

/// {"diagram": "A4", "marked": [1,4]}
struct MarkedSpec {
    std::string diagram;
    NodeSet marked;
};
MarkedSpec parse_marked_spec(const json& j);
json to_json(const MarkedSpec& s);

} // namespace ftflag::io
