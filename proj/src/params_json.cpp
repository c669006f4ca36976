// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <string>

#include "mock3d/params_json.hpp"

namespace mock3d {

using nlohmann::json;

namespace {

double get_number(const json& j, const char* field) {
  const json& v = j.at(field);
  if (!v.is_number()) throw ParamError(field, "expected a number");
  return v.get<double>();
}

bool get_bool(const json& j, const char* field) {
  const json& v = j.at(field);
  if (!v.is_boolean()) throw ParamError(field, "expected true or false");
  return v.get<bool>();
}

}  // namespace

FresnelCurve curve_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw ParamError(field, "expected [[t, f], ...]");
  std::vector<CurveKnot> knots;
  for (const json& k : j) {
    if (!k.is_array() || k.size() != 2 || !k[0].is_number() ||
        !k[1].is_number())
      throw ParamError(field, "each knot must be a [t, f] pair of numbers");
    knots.push_back({k[0].get<double>(), k[1].get<double>()});
  }
  try {
    return FresnelCurve(std::move(knots));
  } catch (const std::invalid_argument& e) {
    throw ParamError(field, e.what());
  }
}

json curve_to_json(const FresnelCurve& c) {
  json out = json::array();
  for (const CurveKnot& k : c.knots()) out.push_back({k.t, k.f});
  return out;
}

CompositeParams params_from_json(const json& j) {
  if (!j.is_object()) throw ParamError("params", "expected a JSON object");
  static const std::set<std::string> known = {
      "a",      "eta",         "alpha_g",     "w",      "gloss",
      "translucency_gain",     "light_offset", "fresnel_pos",
      "fresnel_neg", "mirror", "env_tileable", "blend_op", "levels"};
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) throw ParamError(key, "unknown parameter");

  CompositeParams p;
  if (j.contains("a") && j.contains("eta"))
    throw ParamError("eta", "'a' and 'eta' are mutually exclusive");
  if (j.contains("a")) p.optics.a = get_number(j, "a");
  if (j.contains("eta")) {
    const double eta = get_number(j, "eta");
    if (!(eta > 0.0)) throw ParamError("eta", "must be > 0");
    p.optics.a = a_from_eta(eta);
  }
  if (j.contains("w")) {
    const double w = get_number(j, "w");
    if (!(w > 0.0 && w <= 1.0)) throw ParamError("w", "must be in (0, 1]");
    p.optics.w = WScale(w);
  }
  if (j.contains("light_offset")) {
    const json& lo = j.at("light_offset");
    if (!lo.is_array() || lo.size() != 2 || !lo[0].is_number() ||
        !lo[1].is_number())
      throw ParamError("light_offset", "expected [lx, ly]");
    p.optics.light_offset = {lo[0].get<double>(), lo[1].get<double>()};
  }
  if (j.contains("fresnel_pos"))
    p.optics.curve_pos = curve_from_json(j.at("fresnel_pos"), "fresnel_pos");
  if (j.contains("fresnel_neg"))
    p.optics.curve_neg = curve_from_json(j.at("fresnel_neg"), "fresnel_neg");
  if (j.contains("mirror")) p.optics.mirror = get_bool(j, "mirror");
  if (j.contains("alpha_g")) p.alpha_g = get_number(j, "alpha_g");
  if (j.contains("gloss")) p.gloss = get_number(j, "gloss");
  if (j.contains("translucency_gain"))
    p.translucency_gain = get_number(j, "translucency_gain");
  if (j.contains("env_tileable")) p.env_tileable = get_bool(j, "env_tileable");
  if (j.contains("blend_op")) {
    const json& v = j.at("blend_op");
    if (!v.is_string()) throw ParamError("blend_op", "expected a string");
    try {
      p.blend_op = blend_op_from_string(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParamError("blend_op", e.what());
    }
  }
  if (j.contains("levels")) {
    const json& v = j.at("levels");
    if (!v.is_number_integer()) throw ParamError("levels", "expected an integer");
    p.levels = v.get<int>();
  }
  validate_params(p);
  return p;
}

json params_to_json(const CompositeParams& p) {
  return {
      {"a", p.optics.a},
      {"alpha_g", p.alpha_g},
      {"w", p.optics.w.value()},
      {"gloss", p.gloss},
      {"translucency_gain", p.translucency_gain},
      {"light_offset", {p.optics.light_offset.x, p.optics.light_offset.y}},
      {"fresnel_pos", curve_to_json(p.optics.curve_pos)},
      {"fresnel_neg", curve_to_json(p.optics.curve_neg)},
      {"mirror", p.optics.mirror},
      {"env_tileable", p.env_tileable},
      {"blend_op", to_string(p.blend_op)},
      {"levels", p.levels},
  };
}

}  // namespace mock3d
