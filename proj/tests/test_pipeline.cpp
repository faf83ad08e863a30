// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include "lrmt/pipeline.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "lrmt/errors.hpp"
#include "test_util.hpp"

using namespace lrmt;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

// Two aligned files plus a mono file; returns the config text.
std::string write_fixture(const testing::TempDir& dir, int pairs = 50) {
  std::string eng, lus, mono;
  for (int i = 0; i < pairs; ++i) {
    eng += "english sentence number " + std::to_string(i) + "\n";
    lus += "mizo thu " + std::to_string(i) + "\n";
  }
  for (int i = 0; i < 30; ++i) {
    mono += "mizo mono line " + std::to_string(i) + "\n";
  }
  testing::write_file(dir.file("train.eng"), eng);
  testing::write_file(dir.file("train.lus"), lus);
  testing::write_file(dir.file("mono.lus"), mono);
  return "language = lus_Latn\n"
         "seed = 11\n"
         "out_dir = out\n"
         "source = parallel WMT train.eng train.lus eng_Latn lus_Latn\n"
         "bt_mono = mono.lus\n"
         "bt_engine = mock-rev\n"
         "bt_schedule = 200 400\n"
         "dev_fraction = 0.2\n"
         "manifest_languages = lus\n";
}

}  // namespace

TEST_CASE("config parsing") {
  testing::TempDir dir;
  std::string text = write_fixture(dir);
  PipelineConfig config = parse_pipeline_config_text(text, dir.path());
  CHECK(config.language.rendered() == "lus_Latn");
  CHECK(config.seed == 11);
  CHECK(config.sources.size() == 1);
  CHECK(config.sources[0].origin == Origin::WMT);
  CHECK(config.sources[0].source_lang.rendered() == "eng_Latn");
  CHECK(config.bt_mono.has_value());
  CHECK(config.bt_mono_lang.rendered() == "lus_Latn");  // defaults to language
  REQUIRE(config.bt_schedule.size() == 2);
  CHECK(config.bt_schedule[0].budget.char_budget == 200);
  CHECK(config.bt_schedule[0].engine_id == "mock-rev");
  CHECK(config.dev_fraction == doctest::Approx(0.2));
  CHECK(config.manifest_languages.size() == 1);
  CHECK(!config.config_hash.empty());
}

TEST_CASE("config hash ignores comments and whitespace") {
  std::string a = "language = lus_Latn\nsource = tsv OLD x.tsv eng lus\n";
  std::string b =
      "# a comment\nlanguage   =   lus_Latn\n\n"
      "source = tsv OLD x.tsv eng lus   # trailing note\n";
  PipelineConfig ca = parse_pipeline_config_text(a, ".");
  PipelineConfig cb = parse_pipeline_config_text(b, ".");
  CHECK(ca.config_hash == cb.config_hash);

  std::string c = "language = kha_Latn\nsource = tsv OLD x.tsv eng kha\n";
  CHECK(parse_pipeline_config_text(c, ".").config_hash != ca.config_hash);
}

TEST_CASE("config rejections") {
  CHECK_THROWS_AS(parse_pipeline_config_text("seed = 1\n", "."), InvalidConfig);
  CHECK_THROWS_AS(
      parse_pipeline_config_text("language = lus\nnot_a_key = 3\n", "."),
      InvalidConfig);
  CHECK_THROWS_AS(
      parse_pipeline_config_text("language = lus\nsource = bogus\n", "."),
      InvalidConfig);
  CHECK_THROWS_AS(parse_pipeline_config_text("language = lus\n", "."),
                  InvalidConfig);
  CHECK_THROWS_AS(
      parse_pipeline_config_text(
          "language = lus\nbt_mono = m.txt\n", "."),
      InvalidConfig);  // schedule missing
  // mixed directions
  CHECK_THROWS_AS(parse_pipeline_config_text(
                      "language = lus\n"
                      "source = tsv OLD a.tsv eng lus\n"
                      "source = tsv OLD b.tsv lus eng\n",
                      "."),
                  InvalidConfig);
}

TEST_CASE("run_pipeline produces deterministic outputs and telescoping counts") {
  testing::TempDir dir;
  std::string text = write_fixture(dir);
  PipelineConfig config = parse_pipeline_config_text(text, dir.path());
  config.out_dir = dir.file("out");
  std::ostringstream log;
  RunReport report = run_pipeline(config, log);

  // stage counts telescope
  REQUIRE(report.stages.size() >= 4);
  for (std::size_t i = 1; i < report.stages.size(); ++i) {
    CHECK(report.stages[i].in == report.stages[i - 1].out);
  }
  CHECK(report.stages.front().name == "ingest");
  CHECK(report.stages.front().out == 50);

  for (const char* name :
       {"corpus.jsonl", "train.jsonl", "dev.jsonl", "bt_audit.jsonl",
        "manifest.json", "stats.json", "report.json"}) {
    CAPTURE(name);
    CHECK(std::filesystem::exists(config.out_dir / name));
  }
  // report.json contains no timing fields
  std::string report_text = read_file(config.out_dir / "report.json");
  CHECK(report_text.find("seconds") == std::string::npos);
  CHECK(report_text.find(report.config_hash) != std::string::npos);

  // rerun with more jobs: byte-identical outputs
  PipelineConfig config8 = parse_pipeline_config_text(text, dir.path());
  config8.out_dir = dir.file("out8");
  config8.jobs = 8;
  std::ostringstream log8;
  RunReport report8 = run_pipeline(config8, log8);
  CHECK(report8.config_hash == report.config_hash);
  for (const char* name :
       {"corpus.jsonl", "train.jsonl", "dev.jsonl", "bt_audit.jsonl",
        "manifest.json", "stats.json", "report.json"}) {
    CAPTURE(name);
    CHECK(read_file(config.out_dir / name) == read_file(config8.out_dir / name));
  }
}

TEST_CASE("run_pipeline failure goes to quarantine with the stage name") {
  testing::TempDir dir;
  std::string text =
      "language = lus_Latn\n"
      "out_dir = out\n"
      "source = parallel WMT missing.eng missing.lus eng_Latn lus_Latn\n";
  PipelineConfig config = parse_pipeline_config_text(text, dir.path());
  config.out_dir = dir.file("out");
  std::ostringstream log;
  try {
    run_pipeline(config, log);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("ingest") != std::string::npos);
  }
  CHECK(std::filesystem::exists(config.out_dir / "quarantine" /
                                "failed_stage.txt"));
}

TEST_CASE("zero-size sources still produce a valid report") {
  testing::TempDir dir;
  testing::write_file(dir.file("empty.eng"), "");
  testing::write_file(dir.file("empty.lus"), "");
  std::string text =
      "language = lus_Latn\n"
      "source = parallel WMT empty.eng empty.lus eng_Latn lus_Latn\n";
  PipelineConfig config = parse_pipeline_config_text(text, dir.path());
  config.out_dir = dir.file("out");
  std::ostringstream log;
  RunReport report = run_pipeline(config, log);
  CHECK(report.stages.front().out == 0);
  CHECK(std::filesystem::exists(config.out_dir / "corpus.jsonl"));
  CHECK(read_file(config.out_dir / "corpus.jsonl").empty());
  CHECK(std::filesystem::exists(config.out_dir / "report.json"));
}

TEST_CASE("eval table renders the documented figures") {
  MetricReport r;
  r.bleu = 27.26;
  r.ter = 52.79;
  r.ribes = 0.3032;
  r.meteor = 0.513;
  r.chrf = 65.2;
  r.source_lang = LanguageTag::parse("eng");
  r.target_lang = LanguageTag::parse("asm");
  r.n_segments = 1000;
  std::string table = render_eval_table({{r, "en_to_as_contrastive"}});
  CHECK(table.find("Language Pairs") != std::string::npos);
  CHECK(table.find("Test Set") != std::string::npos);
  CHECK(table.find("English-Assamese") != std::string::npos);
  CHECK(table.find("en_to_as_contrastive") != std::string::npos);
  CHECK(table.find("27.26") != std::string::npos);
  CHECK(table.find("52.79") != std::string::npos);
  CHECK(table.find("0.3032") != std::string::npos);
  CHECK(table.find("0.5130") != std::string::npos);
  CHECK(table.find("65.20") != std::string::npos);

  CHECK_THROWS_AS(render_eval_table({}), InvalidConfig);  // usage error
  CHECK_THROWS_AS(eval_report_json({}), InvalidConfig);
}

TEST_CASE("eval json carries full precision scores") {
  MetricReport r;
  r.bleu = 71.65313105737893;
  r.source_lang = LanguageTag::parse("eng");
  r.target_lang = LanguageTag::parse("kha");
  r.n_segments = 3;
  nlohmann::json j = eval_report_json({{r, "dev"}});
  CHECK(j[0]["scores"]["bleu"].get<double>() ==
        doctest::Approx(71.65313105737893).epsilon(1e-12));
  CHECK(j[0]["language_pair"] == "English-Khasi");
  CHECK(j[0]["test_set"] == "dev");
}

TEST_CASE("stats table mirrors the breakdown columns") {
  Corpus wmt = Corpus::parallel(LanguageTag::parse("eng"),
                                LanguageTag::parse("asm"));
  for (int i = 0; i < 3; ++i) {
    wmt.add_pair({"e" + std::to_string(i), "a" + std::to_string(i),
                  Origin::WMT, SyntheticSide::None});
  }
  SourceBreakdown raw = stats({wmt});
  std::string table = render_stats_table(raw, raw);
  CHECK(table.find("Language") != std::string::npos);
  CHECK(table.find("ISO-639-3") != std::string::npos);
  CHECK(table.find("WMT Parallel") != std::string::npos);
  CHECK(table.find("BPCC") != std::string::npos);
  CHECK(table.find("PMIndia") != std::string::npos);
  CHECK(table.find("OLD") != std::string::npos);
  CHECK(table.find("Back-Translated") != std::string::npos);
  CHECK(table.find("Total") != std::string::npos);
  CHECK(table.find("Assamese") != std::string::npos);

  nlohmann::json j = stats_json(raw, raw);
  CHECK(j["raw"]["languages"]["asm_Beng"]["WMT"] == 3);
  CHECK(j["raw"]["languages"]["asm_Beng"]["total"] == 3);
}

TEST_CASE("fnv1a hash is stable") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("language = lus\n") != fnv1a_hex("language = kha\n"));
}
