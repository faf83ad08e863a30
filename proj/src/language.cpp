// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include "lrmt/language.hpp"

#include "lrmt/errors.hpp"

namespace lrmt {

const std::vector<LanguageInfo>& language_registry() {
  static const std::vector<LanguageInfo> registry = {
      {"eng", "Latn", "English", true},
      {"asm", "Beng", "Assamese", true},
      {"mni", "Beng", "Manipuri", true},
      {"kha", "Latn", "Khasi", false},
      {"lus", "Latn", "Mizo", true},
  };
  return registry;
}

namespace {

const LanguageInfo* find_info(std::string_view code) {
  for (const auto& info : language_registry()) {
    if (code == info.code) return &info;
  }
  return nullptr;
}

bool well_formed_script(std::string_view s) {
  if (s.size() != 4) return false;
  if (s[0] < 'A' || s[0] > 'Z') return false;
  for (std::size_t i = 1; i < 4; ++i) {
    if (s[i] < 'a' || s[i] > 'z') return false;
  }
  return true;
}

}  // namespace

LanguageTag LanguageTag::parse(std::string_view text) {
  std::string_view code = text;
  std::string_view script;
  auto sep = text.find('_');
  if (sep != std::string_view::npos) {
    code = text.substr(0, sep);
    script = text.substr(sep + 1);
  }
  const LanguageInfo* info = find_info(code);
  if (info == nullptr) {
    throw InvalidConfig("unknown language code '" + std::string(code) +
                        "' (known: eng, asm, mni, kha, lus)");
  }
  if (script.empty()) script = info->default_script;
  if (!well_formed_script(script)) {
    throw InvalidConfig("ill-formed script '" + std::string(script) +
                        "' in language tag '" + std::string(text) + "'");
  }
  return LanguageTag(std::string(code), std::string(script));
}

const LanguageInfo& LanguageTag::info() const {
  const LanguageInfo* info = find_info(code_);
  if (info == nullptr) throw InvalidConfig("unregistered language " + code_);
  return *info;
}

}  // namespace lrmt
