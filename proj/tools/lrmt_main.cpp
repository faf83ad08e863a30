// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// lrmt: corpus pipeline and evaluation toolkit for low-resource machine
// translation. Subcommands: normalize, ingest, dedup, filter, merge,
// split, stats, backtranslate, manifest, eval, run.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lrmt/backtranslate.hpp"
#include "lrmt/corpus.hpp"
#include "lrmt/errors.hpp"
#include "lrmt/manifest.hpp"
#include "lrmt/metrics.hpp"
#include "lrmt/normalize.hpp"
#include "lrmt/pipeline.hpp"
#include "lrmt/unicode.hpp"

namespace {

struct GlobalOptions {
  int jobs = 1;
  bool jobs_set = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool quiet = false;
  std::string config_path;
};

std::ostream& info(const GlobalOptions& global) {
  static std::ofstream null_stream;  // default-constructed: badbit sink
  return global.quiet ? static_cast<std::ostream&>(null_stream) : std::cerr;
}

std::vector<std::string> read_input_lines(const std::string& path) {
  if (path == "-") {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) lines.push_back(line);
    std::u32string scratch;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (!lrmt::uni::decode_utf8(lines[i], scratch)) {
        throw lrmt::Utf8Error("stdin", i + 1);
      }
    }
    return lines;
  }
  return lrmt::read_utf8_lines(path);
}

std::vector<std::string> clean_lines(std::vector<std::string> lines) {
  for (auto& line : lines) line = lrmt::clean_line(line);
  return lines;
}

void cmd_normalize(const GlobalOptions& global, const std::string& input,
                   bool check) {
  std::vector<std::string> lines = read_input_lines(input);
  if (check) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (!lrmt::is_clean(lines[i])) {
        throw lrmt::Error(lrmt::ErrorKind::Data,
                          (input == "-" ? std::string("stdin") : input) +
                              ": line " + std::to_string(i + 1) +
                              " is not normalized");
      }
    }
    info(global) << lines.size() << " lines already clean\n";
    return;
  }
  std::ostringstream out;
  for (const auto& line : lines) out << lrmt::clean_line(line) << '\n';
  std::cout << out.str();
}

lrmt::FilterConfig filter_from(std::uint64_t min_chars, std::uint64_t max_chars,
                               double max_ratio) {
  lrmt::FilterConfig cfg;
  cfg.min_chars = min_chars;
  cfg.max_chars = max_chars;
  cfg.max_len_ratio = max_ratio;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lrmt - corpus pipeline and evaluation toolkit for low-resource MT"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--jobs", global.jobs, "worker threads for line processing")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { global.jobs_set = true; });
  app.add_option("--seed", global.seed, "seed for all stochastic steps")
      ->each([&](const std::string&) { global.seed_set = true; });
  app.add_flag("--quiet", global.quiet, "suppress progress output");
  app.add_option("--config", global.config_path, "pipeline config file (run)");

  // normalize
  auto* normalize = app.add_subcommand(
      "normalize", "clean UTF-8 lines from a file or stdin to stdout");
  auto norm_input = std::make_shared<std::string>("-");
  auto norm_check = std::make_shared<bool>(false);
  normalize->add_option("input", *norm_input, "input file or - for stdin");
  normalize->add_flag("--check", *norm_check,
                      "exit nonzero if any line is not already clean");
  normalize->callback(
      [&, norm_input, norm_check] { cmd_normalize(global, *norm_input, *norm_check); });

  // ingest
  auto* ingest = app.add_subcommand("ingest", "read parallel or TSV data into JSONL");
  struct IngestArgs {
    std::string format = "parallel";
    std::string src, tgt, file, src_lang, tgt_lang, origin = "Other", out;
  };
  auto ia = std::make_shared<IngestArgs>();
  ingest->add_option("--format", ia->format, "parallel or tsv")
      ->check(CLI::IsMember({"parallel", "tsv"}));
  ingest->add_option("--src", ia->src, "source-side line file (parallel)");
  ingest->add_option("--tgt", ia->tgt, "target-side line file (parallel)");
  ingest->add_option("--file", ia->file, "two-column TSV file (tsv)");
  ingest->add_option("--src-lang", ia->src_lang, "source language tag")->required();
  ingest->add_option("--tgt-lang", ia->tgt_lang, "target language tag")->required();
  ingest->add_option("--origin", ia->origin,
                     "WMT, BPCC, PMIndia, OLD, BackTranslated or Other");
  ingest->add_option("--out", ia->out, "output JSONL file")->required();
  ingest->callback([&, ia] {
    lrmt::LanguageTag src = lrmt::LanguageTag::parse(ia->src_lang);
    lrmt::LanguageTag tgt = lrmt::LanguageTag::parse(ia->tgt_lang);
    lrmt::Origin origin = lrmt::origin_from_string(ia->origin);
    lrmt::Corpus corpus =
        ia->format == "parallel"
            ? (ia->src.empty() || ia->tgt.empty()
                   ? throw lrmt::InvalidConfig(
                         "ingest --format parallel needs --src and --tgt")
                   : lrmt::ingest_parallel(ia->src, ia->tgt, src, tgt, origin,
                                           global.jobs))
            : (ia->file.empty()
                   ? throw lrmt::InvalidConfig("ingest --format tsv needs --file")
                   : lrmt::ingest_tsv(ia->file, src, tgt, origin, global.jobs));
    lrmt::write_jsonl_file(corpus, ia->out);
    info(global) << "ingested " << corpus.size() << " pairs -> " << ia->out
                 << "\n";
  });

  // dedup
  auto* dedup_cmd = app.add_subcommand("dedup", "drop exact duplicate pairs");
  auto dd_in = std::make_shared<std::string>();
  auto dd_out = std::make_shared<std::string>();
  dedup_cmd->add_option("--in", *dd_in, "input JSONL")->required();
  dedup_cmd->add_option("--out", *dd_out, "output JSONL")->required();
  dedup_cmd->callback([&, dd_in, dd_out] {
    lrmt::DedupResult r = lrmt::dedup(lrmt::read_jsonl_file(*dd_in));
    lrmt::write_jsonl_file(r.corpus, *dd_out);
    info(global) << "removed " << r.removed << " duplicates, kept "
                 << r.corpus.size() << "\n";
  });

  // filter
  auto* filter_cmd = app.add_subcommand("filter", "drop out-of-bounds pairs");
  struct FilterArgs {
    std::string in, out;
    std::uint64_t min_chars = 1, max_chars = 2000;
    double max_ratio = 3.0;
  };
  auto fa = std::make_shared<FilterArgs>();
  filter_cmd->add_option("--in", fa->in)->required();
  filter_cmd->add_option("--out", fa->out)->required();
  filter_cmd->add_option("--min-chars", fa->min_chars, "minimum side length");
  filter_cmd->add_option("--max-chars", fa->max_chars, "maximum side length");
  filter_cmd->add_option("--max-ratio", fa->max_ratio, "maximum length ratio");
  filter_cmd->callback([&, fa] {
    lrmt::FilterResult r =
        lrmt::filter_pairs(lrmt::read_jsonl_file(fa->in),
                           filter_from(fa->min_chars, fa->max_chars, fa->max_ratio));
    lrmt::write_jsonl_file(r.corpus, fa->out);
    info(global) << "kept " << r.corpus.size() << " (dropped short "
                 << r.dropped_short << ", long " << r.dropped_long << ", ratio "
                 << r.dropped_ratio << ")\n";
  });

  // merge
  auto* merge_cmd = app.add_subcommand("merge", "concatenate JSONL corpora");
  auto mg_inputs = std::make_shared<std::vector<std::string>>();
  auto mg_out = std::make_shared<std::string>();
  merge_cmd->add_option("inputs", *mg_inputs, "input JSONL files")
      ->required()
      ->expected(-1);
  merge_cmd->add_option("--out", *mg_out)->required();
  merge_cmd->callback([&, mg_inputs, mg_out] {
    std::vector<lrmt::Corpus> corpora;
    for (const auto& path : *mg_inputs) {
      corpora.push_back(lrmt::read_jsonl_file(path));
    }
    lrmt::Corpus merged = lrmt::merge(corpora);
    lrmt::write_jsonl_file(merged, *mg_out);
    info(global) << "merged " << merged.size() << " pairs -> " << *mg_out << "\n";
  });

  // split
  auto* split_cmd = app.add_subcommand("split", "deterministic train/dev split");
  struct SplitArgs {
    std::string in, train, dev;
    double fraction = 0.1;
  };
  auto sa = std::make_shared<SplitArgs>();
  split_cmd->add_option("--in", sa->in)->required();
  split_cmd->add_option("--train", sa->train)->required();
  split_cmd->add_option("--dev", sa->dev)->required();
  split_cmd->add_option("--dev-fraction", sa->fraction);
  split_cmd->callback([&, sa] {
    auto [train, dev] =
        lrmt::split(lrmt::read_jsonl_file(sa->in), sa->fraction, global.seed);
    lrmt::write_jsonl_file(train, sa->train);
    lrmt::write_jsonl_file(dev, sa->dev);
    info(global) << "train " << train.size() << ", dev " << dev.size() << "\n";
  });

  // stats
  auto* stats_cmd =
      app.add_subcommand("stats", "per-language per-origin breakdown");
  auto st_inputs = std::make_shared<std::vector<std::string>>();
  auto st_json = std::make_shared<bool>(false);
  stats_cmd->add_option("inputs", *st_inputs, "JSONL corpora")
      ->required()
      ->expected(-1);
  stats_cmd->add_flag("--json", *st_json, "machine-readable output");
  stats_cmd->callback([&, st_inputs, st_json] {
    std::vector<lrmt::Corpus> raw, deduped;
    for (const auto& path : *st_inputs) {
      raw.push_back(lrmt::read_jsonl_file(path));
      deduped.push_back(lrmt::dedup(raw.back()).corpus);
    }
    lrmt::SourceBreakdown raw_stats = lrmt::stats(raw);
    lrmt::SourceBreakdown dedup_stats = lrmt::stats(deduped);
    if (*st_json) {
      std::cout << lrmt::canonical_json(lrmt::stats_json(raw_stats, dedup_stats));
    } else {
      std::cout << lrmt::render_stats_table(raw_stats, dedup_stats);
    }
  });

  // backtranslate
  auto* bt_cmd = app.add_subcommand(
      "backtranslate", "turn monolingual text into synthetic pairs");
  struct BtArgs {
    std::string mono, mono_lang, engine = "mock", engine_lang = "eng_Latn";
    std::string out, audit, schedule_file;
    std::uint64_t budget = 0;
    std::size_t batch_size = 32;
    int max_in_flight = 1;
    bool no_filter = false;
    std::uint64_t min_chars = 1, max_chars = 2000;
    double max_ratio = 3.0;
  };
  auto ba = std::make_shared<BtArgs>();
  bt_cmd->add_option("--mono", ba->mono, "monolingual input file")->required();
  bt_cmd->add_option("--mono-lang", ba->mono_lang, "language of the input")
      ->required();
  bt_cmd->add_option("--engine", ba->engine, "mock, mock-rev or an http URL");
  bt_cmd->add_option("--engine-lang", ba->engine_lang,
                     "language the engine translates into");
  bt_cmd->add_option("--budget", ba->budget,
                     "character budget (single iteration)");
  bt_cmd->add_option("--schedule", ba->schedule_file,
                     "file with one 'budget [engine]' per line");
  bt_cmd->add_option("--out", ba->out, "output JSONL")->required();
  bt_cmd->add_option("--audit", ba->audit,
                     "audit log path (default: <out>.audit.jsonl)");
  bt_cmd->add_option("--batch-size", ba->batch_size);
  bt_cmd->add_option("--max-in-flight", ba->max_in_flight);
  bt_cmd->add_flag("--no-filter", ba->no_filter, "disable the quality filter");
  bt_cmd->add_option("--min-chars", ba->min_chars);
  bt_cmd->add_option("--max-chars", ba->max_chars);
  bt_cmd->add_option("--max-ratio", ba->max_ratio);
  bt_cmd->callback([&, ba] {
    std::vector<lrmt::BtScheduleStep> schedule;
    if (!ba->schedule_file.empty()) {
      for (const std::string& line : lrmt::read_utf8_lines(ba->schedule_file)) {
        std::istringstream ls(line);
        std::string budget, engine;
        if (!(ls >> budget)) continue;
        ls >> engine;
        schedule.push_back({{std::stoull(budget)},
                            engine.empty() ? ba->engine : engine});
      }
    } else if (ba->budget > 0) {
      schedule.push_back({{ba->budget}, ba->engine});
    } else {
      throw lrmt::InvalidConfig("backtranslate needs --budget or --schedule");
    }
    lrmt::Corpus mono = lrmt::ingest_mono(ba->mono,
                                          lrmt::LanguageTag::parse(ba->mono_lang),
                                          global.jobs);
    std::map<std::string, std::unique_ptr<lrmt::EngineClient>> engines;
    auto resolver = [&](const std::string& id) -> lrmt::EngineClient& {
      auto it = engines.find(id);
      if (it == engines.end()) it = engines.emplace(id, lrmt::make_engine(id)).first;
      return *it->second;
    };
    lrmt::BtOptions options;
    options.batch_size = ba->batch_size;
    options.max_in_flight = ba->max_in_flight;
    options.engine_lang = lrmt::LanguageTag::parse(ba->engine_lang);
    if (!ba->no_filter) {
      options.filter = filter_from(ba->min_chars, ba->max_chars, ba->max_ratio);
    }
    lrmt::BtResult result = lrmt::bt_iterate(mono, schedule, resolver, options);
    lrmt::write_jsonl_file(result.corpus, ba->out);
    std::string audit_path =
        ba->audit.empty() ? ba->out + ".audit.jsonl" : ba->audit;
    std::ofstream audit(audit_path, std::ios::binary);
    if (!audit) throw lrmt::IoError("cannot write " + audit_path);
    lrmt::write_audit_log(result.records, audit);
    info(global) << "produced " << result.corpus.size() << " pairs over "
                 << result.records.size() << " iterations -> " << ba->out
                 << " (audit: " << audit_path << ")\n";
  });

  // manifest
  auto* manifest_cmd =
      app.add_subcommand("manifest", "emit the training manifest");
  struct ManifestArgs {
    std::string languages = "asm,mni,kha,lus";
    std::string out;
    std::vector<std::string> overrides;
  };
  auto ma = std::make_shared<ManifestArgs>();
  manifest_cmd->add_option("--languages", ma->languages,
                           "comma-separated language tags or codes");
  manifest_cmd->add_option("--out", ma->out, "output file (default stdout)");
  manifest_cmd->add_option("--override", ma->overrides,
                           "key=value hyperparameter override (repeatable)");
  manifest_cmd->callback([&, ma] {
    std::vector<lrmt::LanguageTag> languages;
    std::string csv = ma->languages;
    std::replace(csv.begin(), csv.end(), ',', ' ');
    std::istringstream ls(csv);
    std::string tag;
    while (ls >> tag) languages.push_back(lrmt::LanguageTag::parse(tag));
    lrmt::ManifestOverrides overrides;
    for (const std::string& kv : ma->overrides) {
      std::size_t eq = kv.find('=');
      if (eq == std::string::npos) {
        throw lrmt::InvalidOverride("override '" + kv + "' is not key=value");
      }
      overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    std::string doc =
        lrmt::canonical_json(lrmt::emit_training_manifest(languages, overrides));
    if (ma->out.empty()) {
      std::cout << doc;
    } else {
      std::ofstream out(ma->out, std::ios::binary);
      if (!out) throw lrmt::IoError("cannot write " + ma->out);
      out << doc;
      info(global) << "manifest -> " << ma->out << "\n";
    }
  });

  // eval
  auto* eval_cmd = app.add_subcommand(
      "eval", "score hypotheses against references with all five metrics");
  struct EvalArgs {
    std::string hyp, ref, src_lang, tgt_lang, test_set = "-";
    bool lowercase = false;
    bool json_only = false;
  };
  auto ea = std::make_shared<EvalArgs>();
  eval_cmd->add_option("--hyp", ea->hyp, "hypothesis file")->required();
  eval_cmd->add_option("--ref", ea->ref, "reference file")->required();
  eval_cmd->add_option("--src-lang", ea->src_lang)->required();
  eval_cmd->add_option("--tgt-lang", ea->tgt_lang)->required();
  eval_cmd->add_option("--test-set", ea->test_set, "label for the report row");
  eval_cmd->add_flag("--lowercase", ea->lowercase, "case fold before scoring");
  eval_cmd->add_flag("--json", ea->json_only, "emit only the JSON object");
  eval_cmd->callback([&, ea] {
    std::vector<std::string> hyp = clean_lines(read_input_lines(ea->hyp));
    std::vector<std::string> ref = clean_lines(read_input_lines(ea->ref));
    lrmt::MetricReport report = lrmt::evaluate_all(
        hyp, ref, lrmt::LanguageTag::parse(ea->src_lang),
        lrmt::LanguageTag::parse(ea->tgt_lang), ea->lowercase);
    std::vector<lrmt::EvalRow> rows{{report, ea->test_set}};
    if (!ea->json_only) std::cout << lrmt::render_eval_table(rows);
    std::cout << lrmt::canonical_json(lrmt::eval_report_json(rows));
  });

  // run
  auto* run_cmd = app.add_subcommand("run", "execute the full pipeline");
  auto run_config = std::make_shared<std::string>();
  run_cmd->add_option("config", *run_config, "pipeline config file");
  run_cmd->callback([&, run_config] {
    std::string path = !run_config->empty() ? *run_config : global.config_path;
    if (path.empty()) {
      throw lrmt::InvalidConfig("run needs a config file (--config or positional)");
    }
    lrmt::PipelineConfig config = lrmt::parse_pipeline_config(path);
    if (global.jobs_set) config.jobs = global.jobs;
    if (global.seed_set) config.seed = global.seed;
    std::ofstream null_stream;
    lrmt::RunReport report =
        lrmt::run_pipeline(config, global.quiet ? null_stream : std::cerr);
    std::cout << lrmt::render_stats_table(report.breakdown,
                                          report.breakdown_final,
                                          "Ingested sources (raw)",
                                          "Final corpus");
    std::cout << "config hash: " << report.config_hash << "\n";
    std::cout << "outputs in " << config.out_dir.string() << ": ";
    for (std::size_t i = 0; i < report.outputs.size(); ++i) {
      std::cout << (i ? ", " : "") << report.outputs[i];
    }
    std::cout << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const lrmt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
