// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Configuration-driven pipeline runs: ingest -> dedup -> filter ->
// (optional back-translation) -> merge -> stats -> write, with a
// deterministic run report. Also renders the stats and evaluation tables.

#pragma once

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lrmt/backtranslate.hpp"
#include "lrmt/corpus.hpp"
#include "lrmt/metrics.hpp"

namespace lrmt {

struct SourceSpec {
  enum class Format { Parallel, Tsv };
  Format format = Format::Parallel;
  Origin origin = Origin::Other;
  std::filesystem::path source_file;
  std::filesystem::path target_file;  // parallel format only
  LanguageTag source_lang;
  LanguageTag target_lang;
};

struct PipelineConfig {
  LanguageTag language;  // the Indic side, used for reporting and manifests
  std::vector<SourceSpec> sources;
  FilterConfig filter;
  bool filter_enabled = true;
  double dev_fraction = 0.0;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = "out";
  int jobs = 1;

  std::optional<std::filesystem::path> bt_mono;
  LanguageTag bt_mono_lang;
  LanguageTag bt_engine_lang = LanguageTag::parse("eng_Latn");
  std::string bt_engine = "mock";
  std::vector<BtScheduleStep> bt_schedule;
  std::size_t bt_batch_size = 32;
  int bt_max_in_flight = 1;
  bool bt_filter = true;

  std::vector<LanguageTag> manifest_languages;

  std::string canonical_text;  // canonicalized config content
  std::string config_hash;     // fnv1a-64 of canonical_text
};

// Key-value config file: one `key = value` per line, '#' comments,
// repeatable `source =` entries. Relative paths resolve against the
// config file's directory.
PipelineConfig parse_pipeline_config(const std::filesystem::path& file);
PipelineConfig parse_pipeline_config_text(std::string_view text,
                                          const std::filesystem::path& base_dir);

std::string canonicalize_config_text(std::string_view text);
std::string fnv1a_hex(std::string_view data);

struct StageCount {
  std::string name;
  std::uint64_t in = 0;
  std::uint64_t out = 0;
  std::map<std::string, std::uint64_t> detail;
  double seconds = 0.0;  // logged, never serialized
};

struct RunReport {
  std::string config_hash;
  std::vector<StageCount> stages;
  SourceBreakdown breakdown;         // raw (pre-dedup) per-source counts
  SourceBreakdown breakdown_final;   // post-pipeline counts
  std::vector<std::string> outputs;  // file names relative to out_dir
};

// Executes the pipeline; timing and progress go to `log` (stderr in the
// CLI). Outputs are byte-deterministic for a given config and inputs.
// On a stage failure, partial outputs are saved under out_dir/quarantine
// and the error is rethrown with the stage name attached.
RunReport run_pipeline(const PipelineConfig& config, std::ostream& log);

// Deterministic report serialization (no timings).
nlohmann::json report_json(const RunReport& report);

// Table 1 style table: Language | ISO-639-3 | WMT Parallel | BPCC |
// PMIndia | OLD | Back-Translated | Total (raw and post-dedup views).
std::string render_stats_table(const SourceBreakdown& raw,
                               const SourceBreakdown& deduped,
                               const std::string& raw_label = "Raw counts",
                               const std::string& second_label =
                                   "After exact-pair dedup");
nlohmann::json stats_json(const SourceBreakdown& raw,
                          const SourceBreakdown& deduped);

struct EvalRow {
  MetricReport report;
  std::string test_set = "-";
};

// Columns: Language Pairs | Test Set | BLEU | TER | RIBES | METEOR | ChrF.
// BLEU/TER/ChrF rounded to 2 decimals, RIBES/METEOR to 4.
std::string render_eval_table(const std::vector<EvalRow>& rows);
nlohmann::json eval_report_json(const std::vector<EvalRow>& rows);

}  // namespace lrmt
