// SPDX-License-Identifier: Apache-2.0
//
// JSON form of CompositeParams, shared by the CLI flags and the HTTP service
// so both apply identical validation.
//
//   {"a": 0.5, "alpha_g": 1, "w": 0.5, "gloss": 0, "translucency_gain": 0,
//    "light_offset": [0, 0], "fresnel_pos": [[0,0.04],[0.7,0.12],[1,1]],
//    "fresnel_neg": [[0,0.04],[0.5,0.5],[1,1]], "mirror": false,
//    "env_tileable": false, "blend_op": "shape", "levels": 6}
//
// "eta" may be given instead of "a" (never both); it is mapped through
// a_from_eta. Missing keys take their defaults; unknown keys are rejected.

#pragma once

#include <json.hpp>

#include "mock3d/compositor.hpp"

namespace mock3d {

// Throws ParamError naming the offending key.
CompositeParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const CompositeParams& p);

FresnelCurve curve_from_json(const nlohmann::json& j, const char* field);
nlohmann::json curve_to_json(const FresnelCurve& c);

}  // namespace mock3d
