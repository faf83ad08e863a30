// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Language identification in NLLB-style notation: ISO-639-3 code plus
// 4-letter script, rendered as "asm_Beng".

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lrmt {

struct LanguageInfo {
  const char* code;           // ISO-639-3, lowercase
  const char* default_script; // 4-letter titlecase
  const char* display_name;
  bool base_model_native;     // supported by the base translation model
};

// The registry of languages this toolkit handles. Extend here.
const std::vector<LanguageInfo>& language_registry();

class LanguageTag {
 public:
  // Parses "asm_Beng" or a bare code like "asm" (default script applied).
  // Throws InvalidConfig for unknown codes or ill-formed tags.
  static LanguageTag parse(std::string_view text);

  LanguageTag() = default;

  const std::string& code() const { return code_; }
  const std::string& script() const { return script_; }
  std::string rendered() const { return code_ + "_" + script_; }
  const LanguageInfo& info() const;

  bool operator==(const LanguageTag& o) const {
    return code_ == o.code_ && script_ == o.script_;
  }
  bool operator!=(const LanguageTag& o) const { return !(*this == o); }
  bool operator<(const LanguageTag& o) const {
    return code_ != o.code_ ? code_ < o.code_ : script_ < o.script_;
  }

 private:
  LanguageTag(std::string code, std::string script)
      : code_(std::move(code)), script_(std::move(script)) {}

  std::string code_;
  std::string script_;
};

}  // namespace lrmt
