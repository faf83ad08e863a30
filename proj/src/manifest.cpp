// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include "lrmt/manifest.hpp"

#include <algorithm>
#include <set>

#include "lrmt/errors.hpp"

namespace lrmt {
namespace {

using nlohmann::json;

long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InvalidOverride("override " + key + ": '" + value +
                          "' is not an integer");
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InvalidOverride("override " + key + ": '" + value +
                          "' is not a number");
  }
}

}  // namespace

nlohmann::json emit_training_manifest(const std::vector<LanguageTag>& languages,
                                      const ManifestOverrides& overrides) {
  if (languages.empty()) {
    throw InvalidConfig("manifest needs at least one language");
  }

  json model{
      {"base_model", "facebook/nllb-200-3.3B"},
      {"embed_size", 2048},
      {"ffn_size", 8192},
      {"attn_heads", 16},
      {"encoder_layers", 24},
      {"decoder_layers", 24},
  };
  json adapter{
      {"peft_type", "lora"},
      {"rank", 128},
      {"lora_alpha", 256},
      {"lora_dropout", 0.1},
      {"target_modules", "all linear"},
  };
  json inference{
      {"num_beams", 10},
      {"repetition_penalty", 2.5},
  };
  json stage_defaults{
      {"optimizer", "adafactor"},
      {"learning_rate", 1e-5},
      {"epochs", 8},
      {"precision", "bf16"},
  };
  double p_mask = 0.15;

  std::vector<std::string> overridden;
  for (const auto& [key, value] : overrides) {
    if (key == "epochs") {
      long long v = parse_int(key, value);
      if (v < 1) throw InvalidOverride("override epochs: must be >= 1");
      stage_defaults["epochs"] = v;
    } else if (key == "learning_rate") {
      double v = parse_double(key, value);
      if (v <= 0) throw InvalidOverride("override learning_rate: must be > 0");
      stage_defaults["learning_rate"] = v;
    } else if (key == "optimizer" || key == "precision") {
      if (value.empty()) throw InvalidOverride("override " + key + ": empty");
      stage_defaults[key] = value;
    } else if (key == "p_mask") {
      double v = parse_double(key, value);
      if (!(v > 0.0 && v < 1.0)) {
        throw InvalidOverride("override p_mask: must be in (0, 1)");
      }
      p_mask = v;
    } else if (key == "num_beams") {
      long long v = parse_int(key, value);
      if (v < 1) throw InvalidOverride("override num_beams: must be >= 1");
      inference["num_beams"] = v;
    } else if (key == "repetition_penalty") {
      double v = parse_double(key, value);
      if (v < 1.0) {
        throw InvalidOverride("override repetition_penalty: must be >= 1");
      }
      inference["repetition_penalty"] = v;
    } else if (key == "rank") {
      long long v = parse_int(key, value);
      if (v < 1) throw InvalidOverride("override rank: must be > 0");
      adapter["rank"] = v;
    } else if (key == "lora_alpha") {
      double v = parse_double(key, value);
      if (v <= 0) throw InvalidOverride("override lora_alpha: must be > 0");
      adapter["lora_alpha"] = v;
    } else if (key == "lora_dropout") {
      double v = parse_double(key, value);
      if (!(v >= 0.0 && v < 1.0)) {
        throw InvalidOverride("override lora_dropout: must be in [0, 1)");
      }
      adapter["lora_dropout"] = v;
    } else if (key == "target_modules") {
      if (value.empty()) throw InvalidOverride("override target_modules: empty");
      adapter["target_modules"] = value;
    } else if (key == "base_model") {
      if (value.empty()) throw InvalidOverride("override base_model: empty");
      model["base_model"] = value;
    } else {
      throw InvalidOverride("unknown override key '" + key + "'");
    }
    overridden.push_back(key);
  }
  std::sort(overridden.begin(), overridden.end());

  json mlm_stage = stage_defaults;
  mlm_stage["stage"] = "mlm";
  mlm_stage["p_mask"] = p_mask;
  json en_to_indic = stage_defaults;
  en_to_indic["stage"] = "en_to_indic";
  json indic_to_en = stage_defaults;
  indic_to_en["stage"] = "indic_to_en";

  json langs = json::array();
  json new_tokens = json::array();
  std::set<std::string> seen;
  for (const LanguageTag& lang : languages) {
    std::string tag = lang.rendered();
    if (!seen.insert(tag).second) continue;
    langs.push_back(tag);
    if (!lang.info().base_model_native) new_tokens.push_back(tag);
  }

  return json{
      {"model", model},
      {"adapter", adapter},
      {"stages", json::array({mlm_stage, en_to_indic, indic_to_en})},
      {"inference", inference},
      {"languages", langs},
      {"token_registry", {{"new_language_tokens", new_tokens}}},
      // left unset on purpose: the toolkit does not invent values the
      // trainer must choose
      {"trainer",
       {{"batch_size", nullptr}, {"warmup", nullptr}, {"scheduler", nullptr}}},
      {"overridden", overridden},
  };
}

namespace {

const json* get_section(const json& doc, const char* key, const char* type) {
  if (!doc.contains(key)) {
    throw ManifestParseError(std::string("manifest: missing section '") + key +
                             "'");
  }
  const json& section = doc.at(key);
  bool ok = (std::string(type) == "object" && section.is_object()) ||
            (std::string(type) == "array" && section.is_array());
  if (!ok) {
    throw ManifestParseError(std::string("manifest: section '") + key +
                             "' must be a JSON " + type);
  }
  return &section;
}

double num_or_throw(const json& obj, const std::string& where,
                    const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw ManifestParseError("manifest: " + where + "." + key +
                             " must be a number");
  }
  return obj.at(key).get<double>();
}

}  // namespace

std::vector<std::string> validate_manifest(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ManifestParseError("manifest: document must be a JSON object");
  }
  std::vector<std::string> violations;
  auto violate = [&](std::string what) { violations.push_back(std::move(what)); };

  const json& model = *get_section(doc, "model", "object");
  for (const char* key :
       {"embed_size", "ffn_size", "attn_heads", "encoder_layers",
        "decoder_layers"}) {
    if (num_or_throw(model, "model", key) <= 0) {
      violate(std::string("model.") + key + " must be positive");
    }
  }
  if (num_or_throw(model, "model", "encoder_layers") +
          num_or_throw(model, "model", "decoder_layers") !=
      48) {
    violate("model: encoder_layers + decoder_layers must equal 48");
  }

  const json& adapter = *get_section(doc, "adapter", "object");
  if (!adapter.contains("peft_type") || adapter.at("peft_type") != "lora") {
    violate("adapter.peft_type must be \"lora\"");
  }
  if (num_or_throw(adapter, "adapter", "rank") <= 0) {
    violate("adapter.rank must be > 0");
  }
  double dropout = num_or_throw(adapter, "adapter", "lora_dropout");
  if (!(dropout >= 0.0 && dropout < 1.0)) {
    violate("adapter.lora_dropout must be in [0, 1)");
  }

  const json& stages = *get_section(doc, "stages", "array");
  const std::vector<std::string> expected_order{"mlm", "en_to_indic",
                                                "indic_to_en"};
  std::vector<std::string> actual_order;
  for (const json& stage : stages) {
    if (!stage.is_object() || !stage.contains("stage") ||
        !stage.at("stage").is_string()) {
      throw ManifestParseError("manifest: every stage needs a string 'stage'");
    }
    std::string name = stage.at("stage").get<std::string>();
    actual_order.push_back(name);
    bool has_p_mask = stage.contains("p_mask");
    if (name == "mlm") {
      if (!has_p_mask) {
        violate("stage mlm: p_mask is required");
      } else {
        double p = num_or_throw(stage, "stage mlm", "p_mask");
        if (!(p > 0.0 && p < 1.0)) violate("stage mlm: p_mask must be in (0, 1)");
      }
    } else if (has_p_mask) {
      violate("stage " + name + ": p_mask is only valid on the mlm stage");
    }
  }
  if (actual_order != expected_order) {
    violate("stages must be exactly [mlm, en_to_indic, indic_to_en]");
  }

  const json& inference = *get_section(doc, "inference", "object");
  if (num_or_throw(inference, "inference", "num_beams") < 1) {
    violate("inference.num_beams must be >= 1");
  }
  if (num_or_throw(inference, "inference", "repetition_penalty") < 1.0) {
    violate("inference.repetition_penalty must be >= 1");
  }

  const json& registry = *get_section(doc, "token_registry", "object");
  if (!registry.contains("new_language_tokens") ||
      !registry.at("new_language_tokens").is_array()) {
    throw ManifestParseError(
        "manifest: token_registry.new_language_tokens must be an array");
  }
  std::set<std::string> base_tags;
  for (const LanguageInfo& info : language_registry()) {
    if (info.base_model_native) {
      base_tags.insert(std::string(info.code) + "_" + info.default_script);
    }
  }
  std::set<std::string> seen;
  for (const json& token : registry.at("new_language_tokens")) {
    if (!token.is_string()) {
      throw ManifestParseError("manifest: language tokens must be strings");
    }
    std::string tag = token.get<std::string>();
    if (!seen.insert(tag).second) {
      violate("token_registry: duplicate token " + tag);
    }
    if (base_tags.count(tag)) {
      violate("token_registry: token " + tag +
              " collides with the base model registry");
    }
  }

  return violations;
}

std::string canonical_json(const nlohmann::json& doc) {
  return doc.dump(2) + "\n";
}

}  // namespace lrmt
