// SPDX-License-Identifier: Apache-2.0
//
// Stateless HTTP facade over the compositor.
//
//   POST /assets           body: PNG bytes         -> {"id": "<sha256>"}
//   POST /composite        body: CompositeRequest  -> image/png
//   GET  /defaults                                 -> default params JSON
//   GET  /fixtures/<kind>  ?size=N                 -> image/png
//   GET  /health                                   -> {"ok": true}
//
// CompositeRequest:
//   {"shape": <ref>, "bg": <ref>, "fg": <ref>?, "env": <ref>?,
//    "params": {...}, "shape_srgb": false, "d_from_z": false,
//    "preview_max_dim": 512}
// where <ref> is an asset id string, {"id": "..."} or {"base64": "..."}.

#pragma once

#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "mock3d/png_io.hpp"

namespace httplib {
class Server;
}

namespace mock3d {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t max_upload_bytes = 32u << 20;
  std::size_t asset_capacity = 64;
  int default_preview_max = 512;
};

// Lowercase hex SHA-256 of the bytes.
std::string content_id(std::span<const std::uint8_t> bytes);

// Content-addressed in-memory image cache with LRU eviction. Thread safe.
class AssetStore {
 public:
  explicit AssetStore(std::size_t capacity);

  // Decodes the PNG (throws PngError when malformed) and returns its id.
  std::string put(std::span<const std::uint8_t> bytes);
  // nullptr for unknown ids. A hit marks the entry most recently used.
  std::shared_ptr<const Image8> get(const std::string& id);

  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }

 private:
  struct Entry {
    std::shared_ptr<const Image8> image;
    std::list<std::string>::iterator lru_pos;
  };

  std::size_t capacity_;
  mutable std::mutex mu_;
  std::list<std::string> lru_;  // front = most recent
  std::unordered_map<std::string, Entry> entries_;
};

struct HttpResult {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

class CompositeService {
 public:
  explicit CompositeService(ServiceConfig cfg = {});

  HttpResult upload_asset(std::string_view body);
  HttpResult composite(std::string_view body);
  HttpResult defaults() const;
  HttpResult fixture(const std::string& kind, int size) const;

  // Registers all routes plus permissive CORS headers on `server`.
  void mount(httplib::Server& server);

  const ServiceConfig& config() const { return cfg_; }
  AssetStore& assets() { return assets_; }

 private:
  ServiceConfig cfg_;
  AssetStore assets_;
};

// Blocks serving on cfg.host:cfg.port. Returns false if the port could not be
// bound.
bool run_server(const ServiceConfig& cfg);

}  // namespace mock3d
