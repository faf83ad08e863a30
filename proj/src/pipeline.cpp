// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include "lrmt/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lrmt/errors.hpp"
#include "lrmt/manifest.hpp"

namespace lrmt {
namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string canonicalize_config_text(std::string_view text) {
  std::string canonical;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, nl - start);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::string flat;
    bool in_space = true;
    for (char c : trim(line)) {
      if (c == ' ' || c == '\t') {
        if (!in_space) flat.push_back(' ');
        in_space = true;
      } else {
        flat.push_back(c);
        in_space = false;
      }
    }
    while (!flat.empty() && flat.back() == ' ') flat.pop_back();
    if (!flat.empty()) {
      canonical += flat;
      canonical.push_back('\n');
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return canonical;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

PipelineConfig parse_pipeline_config_text(std::string_view text,
                                          const std::filesystem::path& base_dir) {
  PipelineConfig config;
  config.canonical_text = canonicalize_config_text(text);
  config.config_hash = fnv1a_hex(config.canonical_text);

  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };

  bool have_language = false;
  bool have_bt_mono_lang = false;
  std::istringstream in{std::string(config.canonical_text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidConfig("config line " + std::to_string(line_no) +
                          ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "language") {
        config.language = LanguageTag::parse(value);
        have_language = true;
      } else if (key == "seed") {
        config.seed = std::stoull(value);
      } else if (key == "jobs") {
        config.jobs = std::stoi(value);
      } else if (key == "out_dir") {
        config.out_dir = resolve(value);
      } else if (key == "min_chars") {
        config.filter.min_chars = std::stoull(value);
      } else if (key == "max_chars") {
        config.filter.max_chars = std::stoull(value);
      } else if (key == "max_len_ratio") {
        config.filter.max_len_ratio = std::stod(value);
      } else if (key == "filter") {
        if (value == "on") config.filter_enabled = true;
        else if (value == "off") config.filter_enabled = false;
        else throw InvalidConfig("filter must be on or off");
      } else if (key == "dev_fraction") {
        config.dev_fraction = std::stod(value);
      } else if (key == "source") {
        // source = parallel ORIGIN src_file tgt_file src_lang tgt_lang
        // source = tsv ORIGIN file src_lang tgt_lang
        std::vector<std::string> parts = split_ws(value);
        SourceSpec spec;
        if (parts.size() == 6 && parts[0] == "parallel") {
          spec.format = SourceSpec::Format::Parallel;
          spec.origin = origin_from_string(parts[1]);
          spec.source_file = resolve(parts[2]);
          spec.target_file = resolve(parts[3]);
          spec.source_lang = LanguageTag::parse(parts[4]);
          spec.target_lang = LanguageTag::parse(parts[5]);
        } else if (parts.size() == 5 && parts[0] == "tsv") {
          spec.format = SourceSpec::Format::Tsv;
          spec.origin = origin_from_string(parts[1]);
          spec.source_file = resolve(parts[2]);
          spec.source_lang = LanguageTag::parse(parts[3]);
          spec.target_lang = LanguageTag::parse(parts[4]);
        } else {
          throw InvalidConfig(
              "source must be 'parallel ORIGIN src tgt src_lang tgt_lang' "
              "or 'tsv ORIGIN file src_lang tgt_lang'");
        }
        config.sources.push_back(std::move(spec));
      } else if (key == "bt_mono") {
        config.bt_mono = resolve(value);
      } else if (key == "bt_mono_lang") {
        config.bt_mono_lang = LanguageTag::parse(value);
        have_bt_mono_lang = true;
      } else if (key == "bt_engine_lang") {
        config.bt_engine_lang = LanguageTag::parse(value);
      } else if (key == "bt_engine") {
        config.bt_engine = value;
      } else if (key == "bt_schedule") {
        for (const std::string& tok : split_ws(value)) {
          std::size_t colon = tok.find(':');
          BtScheduleStep step;
          if (colon == std::string::npos) {
            step.budget.char_budget = std::stoull(tok);
            step.engine_id = "";  // falls back to bt_engine
          } else {
            step.budget.char_budget = std::stoull(tok.substr(0, colon));
            step.engine_id = tok.substr(colon + 1);
          }
          config.bt_schedule.push_back(std::move(step));
        }
      } else if (key == "bt_batch_size") {
        config.bt_batch_size = std::stoull(value);
      } else if (key == "bt_max_in_flight") {
        config.bt_max_in_flight = std::stoi(value);
      } else if (key == "bt_filter") {
        if (value == "on") config.bt_filter = true;
        else if (value == "off") config.bt_filter = false;
        else throw InvalidConfig("bt_filter must be on or off");
      } else if (key == "manifest_languages") {
        config.manifest_languages.clear();
        std::string csv = value;
        std::replace(csv.begin(), csv.end(), ',', ' ');
        for (const std::string& tag : split_ws(csv)) {
          config.manifest_languages.push_back(LanguageTag::parse(tag));
        }
      } else {
        throw InvalidConfig("unknown config key '" + key + "'");
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw InvalidConfig("config line " + std::to_string(line_no) + " (" +
                          key + "): " + e.what());
    }
  }

  if (!have_language) throw InvalidConfig("config: 'language' is required");
  if (config.sources.empty() && !config.bt_mono) {
    throw InvalidConfig("config: at least one source (or bt_mono) is required");
  }
  if (config.bt_mono && !have_bt_mono_lang) {
    config.bt_mono_lang = config.language;
  }
  if (config.bt_mono && config.bt_schedule.empty()) {
    throw InvalidConfig("config: bt_mono needs a bt_schedule");
  }
  for (BtScheduleStep& step : config.bt_schedule) {
    if (step.engine_id.empty()) step.engine_id = config.bt_engine;
  }
  if (config.manifest_languages.empty()) {
    config.manifest_languages.push_back(config.language);
  }
  if (!config.sources.empty()) {
    for (const SourceSpec& s : config.sources) {
      if (s.source_lang != config.sources.front().source_lang ||
          s.target_lang != config.sources.front().target_lang) {
        throw InvalidConfig("config: all sources must share one direction");
      }
    }
  }
  return config;
}

PipelineConfig parse_pipeline_config(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open config " + file.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_pipeline_config_text(text, file.parent_path());
}

namespace {

class StageTimer {
 public:
  StageTimer(RunReport& report, std::ostream& log, std::string name)
      : report_(report), log_(log), start_(std::chrono::steady_clock::now()) {
    stage_.name = std::move(name);
  }
  StageCount& stage() { return stage_; }
  void finish() {
    stage_.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3fs", stage_.seconds);
    log_ << "[" << stage_.name << "] " << stage_.in << " -> " << stage_.out
         << " (" << buf << ")\n";
    report_.stages.push_back(stage_);
  }

 private:
  RunReport& report_;
  std::ostream& log_;
  StageCount stage_;
  std::chrono::steady_clock::time_point start_;
};

void write_text_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << data;
}

}  // namespace

nlohmann::json report_json(const RunReport& report) {
  nlohmann::json stages = nlohmann::json::array();
  for (const StageCount& s : report.stages) {
    nlohmann::json detail(s.detail);
    stages.push_back({{"name", s.name},
                      {"in", s.in},
                      {"out", s.out},
                      {"detail", detail}});
  }
  auto breakdown_to_json = [](const SourceBreakdown& b) {
    nlohmann::json langs = nlohmann::json::object();
    for (const auto& [lang, total] : b.totals) {
      nlohmann::json entry = nlohmann::json::object();
      for (const auto& [key, count] : b.counts) {
        if (key.first == lang) entry[to_string(key.second)] = count;
      }
      entry["total"] = total;
      langs[lang] = entry;
    }
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [lang, count] : b.mono_lines) mono[lang] = count;
    return nlohmann::json{{"languages", langs}, {"mono_lines", mono}};
  };
  return nlohmann::json{{"config_hash", report.config_hash},
                        {"stages", stages},
                        {"breakdown", breakdown_to_json(report.breakdown)},
                        {"breakdown_final",
                         breakdown_to_json(report.breakdown_final)},
                        {"outputs", report.outputs}};
}

RunReport run_pipeline(const PipelineConfig& config, std::ostream& log) {
  RunReport report;
  report.config_hash = config.config_hash;
  std::string stage_name = "setup";
  try {
    std::filesystem::create_directories(config.out_dir);

    // ingest
    stage_name = "ingest";
    StageTimer ingest_timer(report, log, "ingest");
    std::vector<Corpus> sources;
    for (const SourceSpec& spec : config.sources) {
      Corpus c = spec.format == SourceSpec::Format::Parallel
                     ? ingest_parallel(spec.source_file, spec.target_file,
                                       spec.source_lang, spec.target_lang,
                                       spec.origin, config.jobs)
                     : ingest_tsv(spec.source_file, spec.source_lang,
                                  spec.target_lang, spec.origin, config.jobs);
      ingest_timer.stage().out += c.size();
      sources.push_back(std::move(c));
    }
    ingest_timer.stage().in = ingest_timer.stage().out;
    ingest_timer.stage().detail["sources"] = config.sources.size();
    ingest_timer.finish();
    report.breakdown = stats(sources);

    Corpus combined =
        sources.empty()
            ? Corpus::parallel(config.bt_engine_lang, config.bt_mono_lang)
            : merge(sources);

    // dedup
    stage_name = "dedup";
    StageTimer dedup_timer(report, log, "dedup");
    dedup_timer.stage().in = combined.size();
    DedupResult deduped = dedup(combined);
    dedup_timer.stage().out = deduped.corpus.size();
    dedup_timer.stage().detail["removed"] = deduped.removed;
    dedup_timer.finish();
    combined = std::move(deduped.corpus);

    // filter
    stage_name = "filter";
    StageTimer filter_timer(report, log, "filter");
    filter_timer.stage().in = combined.size();
    if (config.filter_enabled) {
      FilterResult filtered = filter_pairs(combined, config.filter);
      filter_timer.stage().detail["dropped_short"] = filtered.dropped_short;
      filter_timer.stage().detail["dropped_long"] = filtered.dropped_long;
      filter_timer.stage().detail["dropped_ratio"] = filtered.dropped_ratio;
      combined = std::move(filtered.corpus);
    }
    filter_timer.stage().out = combined.size();
    filter_timer.finish();

    // back-translation
    std::optional<Corpus> bt_corpus;
    std::vector<BtIterationRecord> bt_records;
    if (config.bt_mono) {
      stage_name = "backtranslate";
      StageTimer bt_timer(report, log, "backtranslate");
      bt_timer.stage().in = combined.size();
      Corpus mono = ingest_mono(*config.bt_mono, config.bt_mono_lang, config.jobs);
      std::map<std::string, std::unique_ptr<EngineClient>> engines;
      auto resolver = [&](const std::string& id) -> EngineClient& {
        auto it = engines.find(id);
        if (it == engines.end()) {
          it = engines.emplace(id, make_engine(id)).first;
        }
        return *it->second;
      };
      BtOptions options;
      options.batch_size = config.bt_batch_size;
      options.max_in_flight = config.bt_max_in_flight;
      options.engine_lang = config.bt_engine_lang;
      if (config.bt_filter) options.filter = config.filter;
      BtResult bt = bt_iterate(mono, config.bt_schedule, resolver, options);
      bt_timer.stage().detail["mono_lines"] = mono.size();
      bt_timer.stage().detail["produced"] = bt.corpus.size();
      bt_timer.stage().out = combined.size() + bt.corpus.size();
      bt_timer.finish();
      bt_corpus = std::move(bt.corpus);
      bt_records = std::move(bt.records);
    }

    // merge authentic + synthetic
    stage_name = "merge";
    StageTimer merge_timer(report, log, "merge");
    merge_timer.stage().in = combined.size() + (bt_corpus ? bt_corpus->size() : 0);
    if (bt_corpus && !bt_corpus->empty()) {
      if (combined.empty() && config.sources.empty()) {
        combined = std::move(*bt_corpus);
      } else {
        combined = merge({combined, *bt_corpus});
      }
    }
    merge_timer.stage().out = combined.size();
    merge_timer.finish();

    report.breakdown_final = stats({combined});

    // split
    Corpus train = Corpus::parallel(combined.source_lang(), combined.target_lang());
    Corpus dev = train;
    bool do_split = config.dev_fraction > 0.0;
    if (do_split) {
      stage_name = "split";
      StageTimer split_timer(report, log, "split");
      split_timer.stage().in = combined.size();
      std::tie(train, dev) = split(combined, config.dev_fraction, config.seed);
      split_timer.stage().out = train.size() + dev.size();
      split_timer.stage().detail["train"] = train.size();
      split_timer.stage().detail["dev"] = dev.size();
      split_timer.finish();
    }

    // write outputs
    stage_name = "write";
    write_jsonl_file(combined, config.out_dir / "corpus.jsonl");
    report.outputs.push_back("corpus.jsonl");
    if (do_split) {
      write_jsonl_file(train, config.out_dir / "train.jsonl");
      write_jsonl_file(dev, config.out_dir / "dev.jsonl");
      report.outputs.push_back("train.jsonl");
      report.outputs.push_back("dev.jsonl");
    }
    if (!bt_records.empty()) {
      std::ofstream audit(config.out_dir / "bt_audit.jsonl", std::ios::binary);
      if (!audit) throw IoError("cannot write bt_audit.jsonl");
      write_audit_log(bt_records, audit);
      report.outputs.push_back("bt_audit.jsonl");
    }
    write_text_file(config.out_dir / "manifest.json",
                    canonical_json(emit_training_manifest(
                        config.manifest_languages)));
    report.outputs.push_back("manifest.json");
    write_text_file(config.out_dir / "stats.json",
                    canonical_json(stats_json(report.breakdown,
                                              report.breakdown_final)));
    report.outputs.push_back("stats.json");
    std::sort(report.outputs.begin(), report.outputs.end());
    write_text_file(config.out_dir / "report.json",
                    canonical_json(report_json(report)));

    return report;
  } catch (const std::exception& e) {
    // keep whatever was produced for postmortem, then rethrow with stage
    std::error_code ec;
    std::filesystem::path quarantine = config.out_dir / "quarantine";
    std::filesystem::create_directories(quarantine, ec);
    write_text_file(quarantine / "failed_stage.txt",
                    stage_name + ": " + e.what() + "\n");
    for (const char* name : {"corpus.jsonl", "train.jsonl", "dev.jsonl",
                             "manifest.json", "stats.json", "report.json",
                             "bt_audit.jsonl"}) {
      std::filesystem::path produced = config.out_dir / name;
      if (std::filesystem::exists(produced, ec)) {
        std::filesystem::rename(produced, quarantine / name, ec);
      }
    }
    const Error* known = dynamic_cast<const Error*>(&e);
    throw Error(known ? known->kind() : ErrorKind::Data,
                "pipeline stage '" + stage_name + "' failed: " + e.what());
  }
}

namespace {

std::string thousands(std::uint64_t value) {
  std::string digits = std::to_string(value);
  std::string out;
  int count = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (count && count % 3 == 0) out.push_back(',');
    out.push_back(*it);
    ++count;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string display_name(const std::string& rendered_tag) {
  std::string code = rendered_tag.substr(0, rendered_tag.find('_'));
  for (const LanguageInfo& info : language_registry()) {
    if (code == info.code) return info.display_name;
  }
  return rendered_tag;
}

const Origin kTableOrigins[] = {Origin::WMT, Origin::BPCC, Origin::PMIndia,
                                Origin::OLD, Origin::BackTranslated};

std::string render_one_stats_table(const SourceBreakdown& b) {
  std::ostringstream out;
  bool has_other = false;
  for (const auto& [key, count] : b.counts) {
    if (key.second == Origin::Other && count > 0) has_other = true;
  }
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %-10s %13s %9s %9s %7s %16s",
                "Language", "ISO-639-3", "WMT Parallel", "BPCC", "PMIndia",
                "OLD", "Back-Translated");
  out << line;
  if (has_other) out << "    Other";
  std::snprintf(line, sizeof line, " %10s", "Total");
  out << line << '\n';
  for (const auto& [lang, total] : b.totals) {
    std::string code = lang.substr(0, lang.find('_'));
    std::snprintf(line, sizeof line, "%-10s %-10s %13s %9s %9s %7s %16s",
                  display_name(lang).c_str(), code.c_str(),
                  thousands(b.count(lang, Origin::WMT)).c_str(),
                  thousands(b.count(lang, Origin::BPCC)).c_str(),
                  thousands(b.count(lang, Origin::PMIndia)).c_str(),
                  thousands(b.count(lang, Origin::OLD)).c_str(),
                  thousands(b.count(lang, Origin::BackTranslated)).c_str());
    out << line;
    if (has_other) {
      std::snprintf(line, sizeof line, " %8s",
                    thousands(b.count(lang, Origin::Other)).c_str());
      out << line;
    }
    std::snprintf(line, sizeof line, " %10s", thousands(total).c_str());
    out << line << '\n';
  }
  for (const auto& [lang, count] : b.mono_lines) {
    std::snprintf(line, sizeof line, "%-10s %-10s monolingual lines: %s",
                  display_name(lang).c_str(),
                  lang.substr(0, lang.find('_')).c_str(),
                  thousands(count).c_str());
    out << line << '\n';
  }
  return out.str();
}

nlohmann::json breakdown_json(const SourceBreakdown& b) {
  nlohmann::json langs = nlohmann::json::object();
  for (const auto& [lang, total] : b.totals) {
    nlohmann::json entry = nlohmann::json::object();
    for (Origin origin : kTableOrigins) {
      entry[to_string(origin)] = b.count(lang, origin);
    }
    if (b.count(lang, Origin::Other) > 0) {
      entry["Other"] = b.count(lang, Origin::Other);
    }
    entry["total"] = total;
    langs[lang] = entry;
  }
  nlohmann::json mono = nlohmann::json::object();
  for (const auto& [lang, count] : b.mono_lines) mono[lang] = count;
  return nlohmann::json{{"languages", langs}, {"mono_lines", mono}};
}

}  // namespace

std::string render_stats_table(const SourceBreakdown& raw,
                               const SourceBreakdown& deduped,
                               const std::string& raw_label,
                               const std::string& second_label) {
  std::string out = raw_label + "\n" + render_one_stats_table(raw);
  out += "\n" + second_label + "\n" + render_one_stats_table(deduped);
  return out;
}

nlohmann::json stats_json(const SourceBreakdown& raw,
                          const SourceBreakdown& deduped) {
  return nlohmann::json{{"raw", breakdown_json(raw)},
                        {"deduped", breakdown_json(deduped)}};
}

std::string render_eval_table(const std::vector<EvalRow>& rows) {
  if (rows.empty()) throw InvalidConfig("eval report: no rows");
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-22s %-26s %8s %8s %8s %8s %8s\n",
                "Language Pairs", "Test Set", "BLEU", "TER", "RIBES", "METEOR",
                "ChrF");
  out << line;
  for (const EvalRow& row : rows) {
    std::string pair = display_name(row.report.source_lang.rendered()) + "-" +
                       display_name(row.report.target_lang.rendered());
    std::snprintf(line, sizeof line,
                  "%-22s %-26s %8.2f %8.2f %8.4f %8.4f %8.2f\n", pair.c_str(),
                  row.test_set.c_str(), row.report.bleu, row.report.ter,
                  row.report.ribes, row.report.meteor, row.report.chrf);
    out << line;
  }
  return out.str();
}

nlohmann::json eval_report_json(const std::vector<EvalRow>& rows) {
  if (rows.empty()) throw InvalidConfig("eval report: no rows");
  nlohmann::json out = nlohmann::json::array();
  for (const EvalRow& row : rows) {
    nlohmann::json aux = nlohmann::json::object();
    for (const auto& [key, value] : row.report.aux) aux[key] = value;
    out.push_back({{"language_pair",
                    display_name(row.report.source_lang.rendered()) + "-" +
                        display_name(row.report.target_lang.rendered())},
                   {"test_set", row.test_set},
                   {"src_lang", row.report.source_lang.rendered()},
                   {"tgt_lang", row.report.target_lang.rendered()},
                   {"n_segments", row.report.n_segments},
                   {"scores",
                    {{"bleu", row.report.bleu},
                     {"ter", row.report.ter},
                     {"ribes", row.report.ribes},
                     {"meteor", row.report.meteor},
                     {"chrf", row.report.chrf}}},
                   {"aux", aux}});
  }
  return out;
}

}  // namespace lrmt
