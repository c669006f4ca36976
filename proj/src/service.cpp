// SPDX-License-Identifier: Apache-2.0

#include <sodium.h>

#include <httplib.h>
#include <json.hpp>

#include <cstdio>
#include <optional>
#include <stdexcept>

#include "mock3d/params_json.hpp"
#include "mock3d/pipeline.hpp"
#include "mock3d/service.hpp"

namespace mock3d {

using nlohmann::json;

namespace {

void ensure_sodium() {
  static const bool ok = sodium_init() >= 0;
  if (!ok) throw std::runtime_error("libsodium failed to initialize");
}

std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

HttpResult error(int status, const std::string& message,
                 const std::string& field = {}) {
  json body = {{"error", message}};
  if (!field.empty()) body["field"] = field;
  return {status, "application/json", body.dump()};
}

struct RequestError {
  HttpResult result;
};

std::vector<std::uint8_t> decode_base64(const std::string& text,
                                        const std::string& field) {
  std::vector<std::uint8_t> out(text.size() / 4 * 3 + 3);
  std::size_t len = 0;
  if (sodium_base642bin(out.data(), out.size(), text.data(), text.size(),
                        " \r\n", &len, nullptr,
                        sodium_base64_VARIANT_ORIGINAL) != 0)
    throw RequestError{error(400, "invalid base64 data", field)};
  out.resize(len);
  return out;
}

}  // namespace

std::string content_id(std::span<const std::uint8_t> bytes) {
  ensure_sodium();
  unsigned char digest[crypto_hash_sha256_BYTES];
  crypto_hash_sha256(digest, bytes.data(), bytes.size());
  char hex[2 * crypto_hash_sha256_BYTES + 1];
  sodium_bin2hex(hex, sizeof hex, digest, sizeof digest);
  return hex;
}

AssetStore::AssetStore(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0)
    throw std::invalid_argument("asset store capacity must be >= 1");
}

std::string AssetStore::put(std::span<const std::uint8_t> bytes) {
  std::string id = content_id(bytes);
  {
    std::lock_guard lock(mu_);
    if (auto it = entries_.find(id); it != entries_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
      return id;
    }
  }
  auto image = std::make_shared<const Image8>(decode_png(bytes));
  std::lock_guard lock(mu_);
  if (entries_.contains(id)) return id;
  lru_.push_front(id);
  entries_.emplace(id, Entry{std::move(image), lru_.begin()});
  while (entries_.size() > capacity_) {
    entries_.erase(lru_.back());
    lru_.pop_back();
  }
  return id;
}

std::shared_ptr<const Image8> AssetStore::get(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = entries_.find(id);
  if (it == entries_.end()) return nullptr;
  lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
  return it->second.image;
}

std::size_t AssetStore::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

CompositeService::CompositeService(ServiceConfig cfg)
    : cfg_(std::move(cfg)), assets_(cfg_.asset_capacity) {}

HttpResult CompositeService::upload_asset(std::string_view body) {
  if (body.size() > cfg_.max_upload_bytes)
    return error(413, "upload exceeds " + std::to_string(cfg_.max_upload_bytes) +
                          " bytes");
  try {
    const std::string id = assets_.put(as_bytes(body));
    return {200, "application/json", json{{"id", id}}.dump()};
  } catch (const PngError& e) {
    return error(400, e.what());
  }
}

HttpResult CompositeService::composite(std::string_view body) {
  json req;
  try {
    req = json::parse(body);
  } catch (const json::parse_error& e) {
    return error(400, std::string("malformed JSON: ") + e.what());
  }
  if (!req.is_object()) return error(400, "request must be a JSON object");

  try {
    auto resolve = [&](const char* role,
                       bool required) -> std::shared_ptr<const Image8> {
      if (!req.contains(role) || req.at(role).is_null()) {
        if (required)
          throw RequestError{error(400, std::string("missing ") + role, role)};
        return nullptr;
      }
      const json& ref = req.at(role);
      std::string id;
      if (ref.is_string()) {
        id = ref.get<std::string>();
      } else if (ref.is_object() && ref.contains("id") && ref["id"].is_string()) {
        id = ref["id"].get<std::string>();
      } else if (ref.is_object() && ref.contains("base64") &&
                 ref["base64"].is_string()) {
        const auto bytes = decode_base64(ref["base64"].get<std::string>(), role);
        if (bytes.size() > cfg_.max_upload_bytes)
          throw RequestError{error(413, "inline image too large", role)};
        try {
          return std::make_shared<const Image8>(decode_png(bytes));
        } catch (const PngError& e) {
          throw RequestError{error(400, e.what(), role)};
        }
      } else {
        throw RequestError{
            error(400, "asset reference must be an id or {\"base64\": ...}", role)};
      }
      auto img = assets_.get(id);
      if (!img) throw RequestError{error(404, "unknown asset id " + id, role)};
      return img;
    };

    const auto shape = resolve("shape", true);
    const auto bg = resolve("bg", true);
    const auto fg = resolve("fg", false);
    const auto env = resolve("env", false);

    const CompositeParams params =
        params_from_json(req.value("params", json::object()));

    PipelineOptions opts;
    opts.max_dim = cfg_.default_preview_max;
    auto flag = [&](const char* key, bool& target) {
      if (!req.contains(key)) return;
      if (!req[key].is_boolean())
        throw ParamError(key, "expected true or false");
      target = req[key].get<bool>();
    };
    flag("shape_srgb", opts.shape_srgb);
    flag("d_from_z", opts.d_from_z);
    if (req.contains("preview_max_dim")) {
      const json& m = req["preview_max_dim"];
      if (!m.is_number_integer() || m.get<long>() < 0)
        throw ParamError("preview_max_dim", "expected an integer >= 0");
      opts.max_dim = m.get<int>();
    }

    const Image8 out = composite_8bit(*shape, fg.get(), *bg, env.get(), params, opts);
    const std::vector<std::uint8_t> png = encode_png(out);
    return {200, "image/png", std::string(png.begin(), png.end())};
  } catch (const RequestError& e) {
    return e.result;
  } catch (const ParamError& e) {
    return error(422, e.what(), e.field());
  } catch (const std::invalid_argument& e) {
    return error(422, e.what(), "inputs");
  }
}

HttpResult CompositeService::defaults() const {
  json body = params_to_json(CompositeParams{});
  body["preview_max_dim"] = cfg_.default_preview_max;
  return {200, "application/json", body.dump()};
}

HttpResult CompositeService::fixture(const std::string& kind, int size) const {
  try {
    const std::vector<std::uint8_t> png =
        encode_png(fixture_8bit({.kind = kind, .size = size}));
    return {200, "image/png", std::string(png.begin(), png.end())};
  } catch (const std::invalid_argument& e) {
    return error(kind == "sphere" || kind == "rotation" || kind == "flat" ||
                         kind == "checker" || kind == "sky"
                     ? 422
                     : 404,
                 e.what());
  }
}

void CompositeService::mount(httplib::Server& server) {
  auto reply = [](httplib::Response& res, const HttpResult& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };

  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods",
                               "GET, POST, OPTIONS"}});
  // httplib answers oversized bodies with 413 before the handler runs.
  server.set_payload_max_length(cfg_.max_upload_bytes * 2);

  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  server.Post("/assets", [this, reply](const httplib::Request& req,
                                       httplib::Response& res) {
    reply(res, upload_asset(req.body));
  });
  server.Post("/composite", [this, reply](const httplib::Request& req,
                                          httplib::Response& res) {
    reply(res, composite(req.body));
  });
  server.Get("/defaults", [this, reply](const httplib::Request&,
                                        httplib::Response& res) {
    reply(res, defaults());
  });
  server.Get(R"(/fixtures/([a-z]+))", [this, reply](const httplib::Request& req,
                                                    httplib::Response& res) {
    int size = 256;
    if (req.has_param("size")) {
      try {
        size = std::stoi(req.get_param_value("size"));
      } catch (const std::exception&) {
        reply(res, error(422, "size must be an integer", "size"));
        return;
      }
    }
    reply(res, fixture(req.matches[1], size));
  });
  server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"ok":true})", "application/json");
  });
}

bool run_server(const ServiceConfig& cfg) {
  CompositeService service(cfg);
  httplib::Server server;
  service.mount(server);
  if (!server.bind_to_port(cfg.host, cfg.port)) return false;
  std::fprintf(stderr, "mock3d service listening on %s:%d\n", cfg.host.c_str(),
               cfg.port);
  return server.listen_after_bind();
}

}  // namespace mock3d
