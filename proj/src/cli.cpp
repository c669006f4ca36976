// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "mock3d/cli.hpp"
#include "mock3d/params_json.hpp"
#include "mock3d/pipeline.hpp"
#include "mock3d/service.hpp"

namespace mock3d {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamFlags {
  std::optional<double> a;
  std::optional<double> eta;
  std::optional<double> alpha_g;
  std::optional<double> w;
  std::optional<double> gloss;
  std::optional<double> translucency;
  std::vector<double> light_offset;
  std::optional<std::string> fresnel_pos;
  std::optional<std::string> fresnel_neg;
  bool mirror = false;
  bool env_tileable = false;
  std::optional<std::string> blend;
  std::optional<int> levels;

  void add_to(CLI::App* app) {
    auto* a_opt = app->add_option("--a", a, "Pseudo index of refraction in [-1, 1]");
    auto* eta_opt = app->add_option("--eta", eta, "Relative index of refraction; a = log2(eta)");
    a_opt->excludes(eta_opt);
    app->add_option("--alpha-g", alpha_g, "Global opacity in [0, 1]");
    app->add_option("--w", w, "Normal flattening factor in (0, 1]");
    app->add_option("--gloss", gloss, "Environment blur fraction in [0, 1]");
    app->add_option("--translucency", translucency,
                    "Background blur texels per unit displacement");
    app->add_option("--light-offset", light_offset, "Environment offset lx ly")
        ->expected(2);
    app->add_option("--fresnel-pos", fresnel_pos,
                    "Curve for a = +1 as JSON [[t,f],...] or @file");
    app->add_option("--fresnel-neg", fresnel_neg,
                    "Curve for a = -1 as JSON [[t,f],...] or @file");
    app->add_flag("--mirror", mirror, "Perfect mirror (f = 1)");
    app->add_flag("--env-tileable", env_tileable, "Wrap environment lookups");
    app->add_option("--blend", blend, "shape | over | multiply | add");
    app->add_option("--levels", levels, "Blur pyramid levels");
  }

  json to_json() const {
    json j = json::object();
    if (a) j["a"] = *a;
    if (eta) j["eta"] = *eta;
    if (alpha_g) j["alpha_g"] = *alpha_g;
    if (w) j["w"] = *w;
    if (gloss) j["gloss"] = *gloss;
    if (translucency) j["translucency_gain"] = *translucency;
    if (!light_offset.empty()) j["light_offset"] = light_offset;
    if (fresnel_pos) j["fresnel_pos"] = parse_curve_arg(*fresnel_pos, "fresnel_pos");
    if (fresnel_neg) j["fresnel_neg"] = parse_curve_arg(*fresnel_neg, "fresnel_neg");
    if (mirror) j["mirror"] = true;
    if (env_tileable) j["env_tileable"] = true;
    if (blend) j["blend_op"] = *blend;
    if (levels) j["levels"] = *levels;
    return j;
  }

  static json parse_curve_arg(const std::string& arg, const char* field) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
      std::ifstream in(arg.substr(1));
      if (!in) throw UsageError("cannot read curve file " + arg.substr(1));
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    try {
      return json::parse(text);
    } catch (const json::parse_error&) {
      throw ParamError(field, "not valid JSON");
    }
  }
};

struct DecodeFlags {
  bool shape_srgb = false;
  bool d_from_z = false;
  int max_dim = 0;

  void add_to(CLI::App* app, bool with_max_dim = true) {
    app->add_flag("--shape-srgb", shape_srgb,
                  "Decode the shape map through the sRGB curve");
    app->add_flag("--d-from-z", d_from_z,
                  "Derive thickness from the normal z (alpha masks the object)");
    if (with_max_dim)
      app->add_option("--max-dim", max_dim,
                      "Downscale inputs so the longest side is at most N")
          ->check(CLI::NonNegativeNumber);
  }

  PipelineOptions options() const { return {shape_srgb, d_from_z, max_dim}; }
};

std::string describe(const CompositeParams& p) {
  std::ostringstream os;
  os << "a=" << p.optics.a << " alpha_g=" << p.alpha_g
     << " w=" << p.optics.w.value() << " gloss=" << p.gloss
     << " translucency=" << p.translucency_gain
     << " blend=" << to_string(p.blend_op)
     << (p.optics.mirror ? " mirror" : "");
  return os.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::optional<Image8> read_optional(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return read_png(path);
}

json stats_to_json(const ShapeStats& s) {
  auto channel = [](const ChannelStats& c) {
    return json{{"min", c.min}, {"max", c.max}, {"mean", c.mean}};
  };
  return {{"width", s.width},       {"height", s.height},
          {"x", channel(s.x)},      {"y", channel(s.y)},
          {"d", channel(s.d)},      {"coverage", s.coverage},
          {"max_abs_curl", s.max_abs_curl}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Mock-3D compositing with shape maps", "mock3d"};
  app.require_subcommand(1);
  std::optional<int> threads;
  app.add_option("--threads", threads, "OpenMP thread count")
      ->check(CLI::PositiveNumber);

  // composite
  auto* comp = app.add_subcommand("composite", "Composite with a shape map");
  std::string c_shape, c_bg, c_fg, c_env, c_out;
  ParamFlags c_params;
  DecodeFlags c_decode;
  comp->add_option("--shape", c_shape, "Shape map PNG")->required();
  comp->add_option("--bg", c_bg, "Background PNG")->required();
  comp->add_option("--fg", c_fg, "Foreground PNG");
  comp->add_option("--env", c_env, "Environment PNG");
  comp->add_option("--out", c_out, "Output PNG")->required();
  c_params.add_to(comp);
  c_decode.add_to(comp);

  // stack
  auto* stk = app.add_subcommand("stack", "Composite a layer stack split by an eye layer");
  std::vector<std::string> s_layers;
  std::optional<std::size_t> s_eye;
  std::string s_shape, s_fg, s_env, s_out;
  ParamFlags s_params;
  DecodeFlags s_decode;
  stk->add_option("--layer", s_layers, "Paint layer PNG, back to front (repeatable)")
      ->required();
  stk->add_option("--eye", s_eye,
                  "Number of paint layers behind the eye (default: all)");
  stk->add_option("--shape", s_shape, "Shape map PNG")->required();
  stk->add_option("--fg", s_fg, "Foreground PNG");
  stk->add_option("--env", s_env, "Environment PNG");
  stk->add_option("--out", s_out, "Output PNG")->required();
  s_params.add_to(stk);
  s_decode.add_to(stk, false);

  // blend
  auto* bl = app.add_subcommand("blend", "Classic over / multiply / add");
  std::string b_op, b_fg, b_bg, b_out;
  double b_alpha = 1.0;
  bl->add_option("--op", b_op, "over | multiply | add")
      ->required()
      ->check(CLI::IsMember({"over", "multiply", "add"}));
  bl->add_option("--fg", b_fg, "Foreground PNG")->required();
  bl->add_option("--bg", b_bg, "Background PNG")->required();
  bl->add_option("--alpha-g", b_alpha, "Global opacity in [0, 1]");
  bl->add_option("--out", b_out, "Output PNG")->required();

  // inspect
  auto* ins = app.add_subcommand("inspect", "Shape map statistics");
  std::string i_path;
  bool i_json = false;
  DecodeFlags i_decode;
  ins->add_option("shape", i_path, "Shape map PNG")->required();
  ins->add_flag("--json", i_json, "Machine-readable output");
  i_decode.add_to(ins, false);

  // fixture
  auto* fix = app.add_subcommand("fixture", "Write a procedural fixture PNG");
  fix->alias("encode-fixture");
  FixtureSpec f_spec;
  std::string f_out;
  fix->add_option("--kind", f_spec.kind, "sphere | rotation | flat | checker | sky")
      ->required();
  fix->add_option("--size", f_spec.size, "Edge length in texels")->required();
  fix->add_option("--radius", f_spec.radius, "Sphere radius as a fraction of half the size");
  fix->add_option("--thickness", f_spec.thickness, "Sphere thickness scale in (0, 1]");
  fix->add_option("--out", f_out, "Output PNG")->required();

  // serve
  auto* srv = app.add_subcommand("serve", "Run the HTTP compositing service");
  ServiceConfig cfg;
  if (const char* env_port = std::getenv("MOCK3D_PORT")) cfg.port = std::atoi(env_port);
  double max_upload_mb = static_cast<double>(cfg.max_upload_bytes) / (1 << 20);
  srv->add_option("--host", cfg.host, "Bind address");
  srv->add_option("--port", cfg.port, "Port (env MOCK3D_PORT)");
  srv->add_option("--max-upload-mb", max_upload_mb, "Upload size limit");
  srv->add_option("--capacity", cfg.asset_capacity, "Asset cache entries")
      ->check(CLI::PositiveNumber);
  srv->add_option("--preview-max", cfg.default_preview_max,
                  "Default preview max dimension (0 disables)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (threads) omp_set_num_threads(*threads);

  try {
    if (*comp) {
      const auto start = std::chrono::steady_clock::now();
      const CompositeParams params = params_from_json(c_params.to_json());
      const Image8 shape = read_png(c_shape);
      const Image8 bg = read_png(c_bg);
      const auto fg = read_optional(c_fg);
      const auto env = read_optional(c_env);
      const Image8 result =
          composite_8bit(shape, fg ? &*fg : nullptr, bg, env ? &*env : nullptr,
                         params, c_decode.options());
      write_png(c_out, result);
      out << "composite " << result.width << "x" << result.height << " "
          << describe(params) << " -> " << c_out << " (" << elapsed_ms(start)
          << " ms)\n";
    } else if (*stk) {
      const auto start = std::chrono::steady_clock::now();
      const CompositeParams params = params_from_json(s_params.to_json());
      LayerStack stack;
      for (const std::string& path : s_layers)
        stack.layers.push_back({color_from_8bit(read_png(path)), LayerRole::kPaint});
      stack.eye = s_eye.value_or(s_layers.size());
      if (stack.eye > s_layers.size())
        throw UsageError("--eye must be at most the number of --layer images");
      RasterImage shape_raw = raw_from_8bit(read_png(s_shape));
      if (s_decode.shape_srgb) shape_raw = to_linear(shape_raw);
      stack.layers.push_back({std::move(shape_raw), LayerRole::kShapeMap});
      if (!s_fg.empty())
        stack.layers.push_back({color_from_8bit(read_png(s_fg)), LayerRole::kForeground});
      std::optional<RasterImage> env;
      if (!s_env.empty()) env = color_from_8bit(read_png(s_env));
      const RasterImage result = composite_stack(
          stack, env ? &*env : nullptr, params, {.d_from_z = s_decode.d_from_z});
      write_png(s_out, color_to_8bit(result));
      out << "stack " << result.width() << "x" << result.height() << " layers="
          << s_layers.size() << " eye=" << stack.eye << " " << describe(params)
          << " -> " << s_out << " (" << elapsed_ms(start) << " ms)\n";
    } else if (*bl) {
      const auto start = std::chrono::steady_clock::now();
      const RasterImage fg = color_from_8bit(read_png(b_fg));
      const RasterImage bg = color_from_8bit(read_png(b_bg));
      const RasterImage result =
          classic_blend(blend_op_from_string(b_op), fg, bg, b_alpha);
      write_png(b_out, color_to_8bit(result));
      out << "blend " << result.width() << "x" << result.height() << " op="
          << b_op << " alpha_g=" << b_alpha << " -> " << b_out << " ("
          << elapsed_ms(start) << " ms)\n";
    } else if (*ins) {
      const ShapeMap sm = shape_from_8bit(read_png(i_path), i_decode.options());
      const ShapeStats s = inspect_shape_map(sm);
      if (i_json) {
        out << stats_to_json(s).dump(2) << "\n";
      } else {
        auto line = [&](const char* name, const ChannelStats& c) {
          out << name << ": min " << c.min << " max " << c.max << " mean "
              << c.mean << "\n";
        };
        out << i_path << ": " << s.width << "x" << s.height << "\n";
        line("x", s.x);
        line("y", s.y);
        line("d", s.d);
        out << "coverage: " << s.coverage << "\n"
            << "max |curl|: " << s.max_abs_curl << "\n";
      }
    } else if (*fix) {
      write_png(f_out, fixture_8bit(f_spec));
      out << "fixture " << f_spec.kind << " " << f_spec.size << "x"
          << f_spec.size << " -> " << f_out << "\n";
    } else if (*srv) {
      cfg.max_upload_bytes = static_cast<std::size_t>(max_upload_mb * (1 << 20));
      if (!run_server(cfg)) {
        err << "error: cannot bind " << cfg.host << ":" << cfg.port << "\n";
        return 2;
      }
    }
  } catch (const ParamError& e) {
    err << "error: invalid parameter " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace mock3d
