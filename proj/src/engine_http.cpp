// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include <httplib.h>
#include <json.hpp>

#include "lrmt/backtranslate.hpp"
#include "lrmt/errors.hpp"

namespace lrmt {
namespace {

class HttpEngine : public EngineClient {
 public:
  explicit HttpEngine(std::string base_url) : base_url_(std::move(base_url)) {}

  std::vector<std::string> translate(const std::vector<std::string>& texts,
                                     const LanguageTag& source_lang,
                                     const LanguageTag& target_lang) override {
    httplib::Client client(base_url_);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(120, 0);
    nlohmann::json request{
        {"texts", texts},
        {"src_lang", source_lang.rendered()},
        {"tgt_lang", target_lang.rendered()},
    };
    httplib::Result res =
        client.Post("/translate", request.dump(), "application/json");
    if (!res) {
      throw EngineTransient("engine " + base_url_ + ": " +
                            httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw EngineTransient("engine " + base_url_ + ": HTTP " +
                            std::to_string(res->status));
    }
    nlohmann::json body = nlohmann::json::parse(res->body, nullptr, false);
    if (body.is_discarded() || !body.is_object() ||
        !body.contains("translations") || !body["translations"].is_array()) {
      throw EngineTransient("engine " + base_url_ + ": malformed response body");
    }
    std::vector<std::string> out;
    out.reserve(body["translations"].size());
    for (const auto& t : body["translations"]) {
      if (!t.is_string()) {
        throw EngineTransient("engine " + base_url_ +
                              ": non-string translation in response");
      }
      out.push_back(t.get<std::string>());
    }
    return out;
  }

  std::string id() const override { return base_url_; }

 private:
  std::string base_url_;
};

}  // namespace

std::unique_ptr<EngineClient> make_http_engine(const std::string& base_url) {
  return std::make_unique<HttpEngine>(base_url);
}

}  // namespace lrmt
