// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "mock3d/params_json.hpp"

using namespace mock3d;
using nlohmann::json;

namespace {

std::string rejected_field(const json& j) {
  try {
    params_from_json(j);
  } catch (const ParamError& e) {
    return e.field();
  }
  return "accepted";
}

}  // namespace

TEST_CASE("empty object gives defaults") {
  const CompositeParams p = params_from_json(json::object());
  CHECK(p.optics.a == 0.0);
  CHECK(p.optics.w.value() == 0.5);
  CHECK(p.alpha_g == 1.0);
  CHECK(p.gloss == 0.0);
  CHECK(p.translucency_gain == 0.0);
  CHECK(p.levels == 6);
  CHECK(p.blend_op == BlendOp::kShape);
  CHECK_FALSE(p.optics.mirror);
  CHECK_FALSE(p.env_tileable);
}

TEST_CASE("defaults serialise the documented Fresnel curves") {
  const json j = params_to_json(CompositeParams{});
  CHECK(j.at("w") == 0.5);
  CHECK(j.at("fresnel_pos") == json::parse("[[0,0.04],[0.7,0.12],[1,1]]"));
  CHECK(j.at("fresnel_neg") == json::parse("[[0,0.04],[0.5,0.5],[1,1]]"));
  CHECK(j.at("blend_op") == "shape");
}

TEST_CASE("round trip") {
  const json in = json::parse(R"({
    "a": -0.3, "alpha_g": 0.25, "w": 0.8, "gloss": 0.5,
    "translucency_gain": 7, "light_offset": [0.1, -0.2],
    "fresnel_pos": [[0, 0.1], [1, 0.9]], "fresnel_neg": [[0, 0], [0.3, 0.2], [1, 1]],
    "mirror": true, "env_tileable": true, "blend_op": "multiply", "levels": 9})");
  const CompositeParams p = params_from_json(in);
  CHECK(p.optics.a == -0.3);
  CHECK(p.optics.w.value() == 0.8);
  CHECK(p.optics.light_offset.y == -0.2);
  CHECK(p.optics.mirror);
  CHECK(p.blend_op == BlendOp::kMultiply);
  CHECK(p.levels == 9);
  CHECK(params_to_json(p) == in);
}

TEST_CASE("eta maps through log2 and excludes a") {
  CHECK(params_from_json({{"eta", 1.33}}).optics.a ==
        doctest::Approx(std::log2(1.33)));
  CHECK(params_from_json({{"eta", 4.0}}).optics.a == 1.0);
  CHECK(params_from_json({{"eta", 0.25}}).optics.a == -1.0);
  CHECK(rejected_field({{"eta", 1.2}, {"a", 0.1}}) == "eta");
  CHECK(rejected_field({{"eta", 0}}) == "eta");
  CHECK(rejected_field({{"eta", -2}}) == "eta");
}

TEST_CASE("invalid values name their field") {
  CHECK(rejected_field({{"a", 3}}) == "a");
  CHECK(rejected_field({{"a", -1.5}}) == "a");
  CHECK(rejected_field({{"a", "x"}}) == "a");
  CHECK(rejected_field({{"w", 0}}) == "w");
  CHECK(rejected_field({{"w", 1.5}}) == "w");
  CHECK(rejected_field({{"alpha_g", 2}}) == "alpha_g");
  CHECK(rejected_field({{"gloss", -0.1}}) == "gloss");
  CHECK(rejected_field({{"translucency_gain", -1}}) == "translucency_gain");
  CHECK(rejected_field({{"light_offset", {0.1}}}) == "light_offset");
  CHECK(rejected_field({{"light_offset", {0.9, 0}}}) == "light_offset");
  CHECK(rejected_field({{"mirror", 1}}) == "mirror");
  CHECK(rejected_field({{"env_tileable", "yes"}}) == "env_tileable");
  CHECK(rejected_field({{"blend_op", "screen"}}) == "blend_op");
  CHECK(rejected_field({{"levels", 0}}) == "levels");
  CHECK(rejected_field({{"levels", 13}}) == "levels");
  CHECK(rejected_field({{"levels", 2.5}}) == "levels");
  CHECK(rejected_field({{"sharpness", 1}}) == "sharpness");
  CHECK(rejected_field(json::array()) == "params");
  CHECK(rejected_field({{"a", 1}, {"levels", 12}}) == "accepted");
}

TEST_CASE("curve validation") {
  CHECK(rejected_field({{"fresnel_pos", {{0, 0.1}}}}) == "fresnel_pos");
  CHECK(rejected_field({{"fresnel_pos", {{0.1, 0}, {1, 1}}}}) == "fresnel_pos");
  CHECK(rejected_field({{"fresnel_neg", {{0, 0}, {0.9, 1}}}}) == "fresnel_neg");
  CHECK(rejected_field({{"fresnel_neg", {{0, 0}, {0.5, 0.2}, {0.5, 0.3}, {1, 1}}}}) ==
        "fresnel_neg");
  CHECK(rejected_field({{"fresnel_neg", {{0, 0}, {1, 1.2}}}}) == "fresnel_neg");
  CHECK(rejected_field({{"fresnel_neg", {{0, 0, 1}, {1, 1}}}}) == "fresnel_neg");
  CHECK(rejected_field({{"fresnel_neg", "flat"}}) == "fresnel_neg");
  const FresnelCurve c = curve_from_json(json::parse("[[0,0.2],[0.5,0.6],[1,0.4]]"), "c");
  CHECK(c(0.25) == doctest::Approx(0.4));
  CHECK(c(0.75) == doctest::Approx(0.5));
}
