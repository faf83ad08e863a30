// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Declarative training/inference manifests for the external trainer:
// base model shape, LoRA adapter settings, the three-stage schedule
// (mlm, en_to_indic, indic_to_en) and decoding parameters. The manifest
// is emitted as canonical JSON (sorted keys, 2-space indent, LF) so
// golden-file comparisons are byte-exact.

#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "lrmt/language.hpp"

namespace lrmt {

using ManifestOverrides = std::map<std::string, std::string>;

// Emits the manifest for the given languages. Defaults carry the training
// configuration this toolkit targets; overrides (e.g. {"epochs","1"}) are
// applied to their owning section(s) and listed under "overridden".
// Throws InvalidOverride for unknown keys or out-of-range values.
nlohmann::json emit_training_manifest(const std::vector<LanguageTag>& languages,
                                      const ManifestOverrides& overrides = {});

// Returns the invariant violations of a structurally well-formed manifest
// (empty means valid). Structural problems (wrong JSON types, missing
// sections) raise ManifestParseError.
std::vector<std::string> validate_manifest(const nlohmann::json& doc);

// Sorted keys, 2-space indent, UTF-8, trailing LF.
std::string canonical_json(const nlohmann::json& doc);

}  // namespace lrmt
