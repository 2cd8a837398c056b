#pragma once

// JSON forms. Field names: manifold, genera, patches.{f12,f13,f23} as
// [{genus, boundary}], loci as [{id, classes:[{essential, meridian} x3]}],
// incidence.{f12,f13,f23} as per-piece locus-id lists.

#include <json.hpp>

#include "handle3/classify.hpp"
#include "handle3/decomp.hpp"
#include "handle3/moves.hpp"

namespace handle3 {

using json = nlohmann::json;

json to_json(const ManifoldForm& m);
ManifoldForm manifold_from_json(const json& j);

json to_json(const SurfacePiece& p);
json to_json(const PieceSet& ps);
json to_json(const Profile& p);
json to_json(const CurveClass& c);
json to_json(const Decomposition& d);
// Accepts a bare decomposition, or an output envelope / object carrying one
// under "decomposition" (possibly inside "data").
Decomposition decomposition_from_json(const json& j);

json to_json(const ArcDescriptor& a);
ArcDescriptor arc_from_json(const json& j);
json to_json(const Witness& w);
json to_json(const MoveRecord& m);
json to_json(const MoveScript& s);
// Accepts {"moves":[...]}, a bare array, or an envelope carrying "script".
MoveScript script_from_json(const json& j);

json to_json(const CaseId& c);
CaseId case_from_json(const json& j);
json to_json(const EmbeddingPattern& p);
EmbeddingPattern pattern_from_json(const json& j);

}  // namespace handle3
