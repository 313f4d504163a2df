// Copyright 2026 The negprobe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "negprobe/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "negprobe/corpus.hpp"
#include "negprobe/drift.hpp"
#include "negprobe/error.hpp"
#include "negprobe/harness.hpp"
#include "negprobe/metrics.hpp"
#include "negprobe/mmgen.hpp"
#include "negprobe/probegen.hpp"
#include "negprobe/text.hpp"

namespace negprobe {
namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kDefaultSeed = 42;
constexpr const char* kDataRootEnv = "NEGPROBE_DATA_ROOT";

// Relative inputs resolve against $NEGPROBE_DATA_ROOT when it is set.
fs::path input_path(const std::string& p, bool directory = false) {
  fs::path path(p);
  if (path.is_relative()) {
    if (const char* root = std::getenv(kDataRootEnv); root != nullptr && *root != '\0') {
      path = fs::path(root) / path;
    }
  }
  if (!fs::exists(path)) throw DataError("no such " + std::string(directory ? "directory" : "file") +
                                         ": " + path.string());
  if (directory && !fs::is_directory(path)) throw DataError("not a directory: " + path.string());
  return path;
}

fs::path manifest_for(const fs::path& output) {
  fs::path m = output;
  m += ".manifest.json";
  return m;
}

std::vector<int> parse_ks(const std::string& s) {
  std::vector<int> ks;
  for (const auto& part : split(s, ',')) {
    std::string_view t = trim(part);
    if (t.empty()) continue;
    try {
      std::size_t used = 0;
      int k = std::stoi(std::string(t), &used);
      if (used != t.size() || k < 1) throw std::invalid_argument("k");
      ks.push_back(k);
    } catch (const std::exception&) {
      throw UsageError("invalid cutoff list: " + s);
    }
  }
  if (ks.empty()) throw UsageError("empty cutoff list");
  return ks;
}

// Comma-separated values, or a file with one value per line.
std::vector<double> parse_runs(const std::string& s) {
  std::vector<std::string> tokens;
  fs::path maybe(s);
  if (s.find(',') == std::string::npos && fs::is_regular_file(maybe)) {
    for_each_line(maybe, [&](std::size_t, std::string_view line) { tokens.emplace_back(line); });
  } else {
    tokens = split(s, ',');
  }
  std::vector<double> values;
  for (const auto& token : tokens) {
    std::string_view t = trim(token);
    if (t.empty()) continue;
    try {
      std::size_t used = 0;
      double v = std::stod(std::string(t), &used);
      if (used != t.size()) throw std::invalid_argument("v");
      values.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("invalid number '" + std::string(t) + "' in run list");
    }
  }
  return values;
}

std::string fixed2(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  return s.str();
}

Json stats_json(const BuildStats& stats) {
  return Json{{"inputs", stats.inputs}, {"emitted", stats.emitted}, {"drops", stats.drops}};
}

struct Context {
  std::vector<std::string> argv;
  std::ostream& out;
  std::ostream& err;
};

void report_summary(Context& ctx, const IngestSummary& s) { ctx.err << s.describe() << '\n'; }

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{args, out, err};
  CLI::App app{"negprobe: logical-negation probing datasets, scoring, and weight drift"};
  app.name(args.empty() ? "negprobe" : fs::path(args[0]).filename().string());
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::function<void()> action;

  // ingest
  struct {
    std::string triples, frequencies, cloze, out_dir;
    std::vector<std::string> definitions;
  } ing;
  auto* ingest = app.add_subcommand("ingest", "Validate and normalize lexical resources");
  ingest->add_option("--triples", ing.triples, "Knowledge triples (JSON records, CSV/TSV, or ConceptNet rows)");
  ingest->add_option("--definitions", ing.definitions, "Definition files, merged in order");
  ingest->add_option("--frequencies", ing.frequencies, "Token frequency table");
  ingest->add_option("--cloze", ing.cloze, "Cloze records");
  ingest->add_option("--out-dir", ing.out_dir, "Directory for normalized record files")->required();
  ingest->callback([&] {
    action = [&] {
      if (ing.triples.empty() && ing.definitions.empty() && ing.frequencies.empty() && ing.cloze.empty()) {
        throw UsageError("ingest needs at least one of --triples, --definitions, --frequencies, --cloze");
      }
      fs::path dir(ing.out_dir);
      RunManifest manifest("ingest", ctx.argv);
      Json summaries = Json::object();
      auto record = [&](const std::string& name, const IngestSummary& s) {
        report_summary(ctx, s);
        summaries[name] = Json{{"loaded", s.loaded}, {"duplicates", s.duplicates}, {"skipped", s.skipped}};
      };
      if (!ing.triples.empty()) {
        fs::path in = input_path(ing.triples);
        auto loaded = load_triples(in);
        manifest.add_input(in);
        write_file_atomic(dir / "triples.jsonl", serialize_records(loaded.items));
        manifest.add_output(dir / "triples.jsonl");
        record("triples", loaded.summary);
      }
      if (!ing.definitions.empty()) {
        std::vector<fs::path> paths;
        for (const auto& p : ing.definitions) paths.push_back(input_path(p));
        auto loaded = load_definitions(paths);
        for (const auto& p : paths) manifest.add_input(p);
        write_file_atomic(dir / "definitions.jsonl", serialize_records(loaded.items));
        manifest.add_output(dir / "definitions.jsonl");
        record("definitions", loaded.summary);
      }
      if (!ing.frequencies.empty()) {
        fs::path in = input_path(ing.frequencies);
        auto loaded = load_frequencies(in);
        manifest.add_input(in);
        write_file_atomic(dir / "frequencies.jsonl", serialize_records(loaded.items));
        manifest.add_output(dir / "frequencies.jsonl");
        record("frequencies", loaded.summary);
      }
      if (!ing.cloze.empty()) {
        fs::path in = input_path(ing.cloze);
        auto loaded = load_cloze(in);
        manifest.add_input(in);
        write_file_atomic(dir / "cloze.jsonl", serialize_records(loaded.items));
        manifest.add_output(dir / "cloze.jsonl");
        record("cloze", loaded.summary);
      }
      manifest.set("ingest", summaries);
      manifest.write(dir / "ingest.manifest.json");
    };
  });

  // build-mkrnq
  struct {
    std::string cloze, triples, out;
  } mkr;
  auto* build_mkrnq = app.add_subcommand("build-mkrnq", "Build negated knowledge queries");
  build_mkrnq->add_option("--cloze", mkr.cloze, "Cloze records")->required();
  build_mkrnq->add_option("--triples", mkr.triples, "Knowledge triples")->required();
  build_mkrnq->add_option("--out", mkr.out, "Output query batch")->required();
  build_mkrnq->callback([&] {
    action = [&] {
      fs::path cloze = input_path(mkr.cloze), triples = input_path(mkr.triples);
      auto records = load_cloze(cloze);
      auto kb = load_triples(triples);
      report_summary(ctx, records.summary);
      report_summary(ctx, kb.summary);
      auto result = build_mkr_nq(records.items, kb.items);
      write_file_atomic(mkr.out, serialize_query_batch(result.queries));
      RunManifest manifest("build-mkrnq", ctx.argv);
      manifest.add_input(cloze);
      manifest.add_input(triples);
      manifest.add_output(mkr.out);
      manifest.set("counts", stats_json(result.stats));
      manifest.set("ingest_skipped", Json{{"cloze", records.summary.skipped}, {"triples", kb.summary.skipped}});
      manifest.write(manifest_for(mkr.out));
      ctx.err << "build-mkrnq: " << result.stats.emitted << " queries from " << result.stats.inputs
              << " records, " << result.stats.dropped() << " dropped\n";
    };
  });

  // build-mwr
  struct {
    std::string frequencies, triples, templates, out;
    std::int64_t min_count = 5;
  } mwr;
  auto* build_mwr_cmd = app.add_subcommand("build-mwr", "Build synonym/antonym word retrieval queries");
  build_mwr_cmd->add_option("--frequencies", mwr.frequencies, "Token frequency table")->required();
  build_mwr_cmd->add_option("--triples", mwr.triples, "Triples with Synonym/Antonym relations")->required();
  build_mwr_cmd->add_option("--templates", mwr.templates, "Template records (default: six built-in templates)");
  build_mwr_cmd->add_option("--min-count", mwr.min_count, "Keep words seen more than this many times")
      ->capture_default_str();
  build_mwr_cmd->add_option("--out", mwr.out, "Output query batch")->required();
  build_mwr_cmd->callback([&] {
    action = [&] {
      fs::path freq_path = input_path(mwr.frequencies), triple_path = input_path(mwr.triples);
      auto freqs = load_frequencies(freq_path);
      auto kb = load_triples(triple_path);
      report_summary(ctx, freqs.summary);
      report_summary(ctx, kb.summary);
      RunManifest manifest("build-mwr", ctx.argv);
      std::vector<MwrTemplate> templates = default_mwr_templates();
      if (!mwr.templates.empty()) {
        fs::path t = input_path(mwr.templates);
        templates = load_mwr_templates(t);
        manifest.add_input(t);
      }
      auto result = build_mwr(freqs.items, kb.items, templates, MwrOptions{mwr.min_count});
      write_file_atomic(mwr.out, serialize_query_batch(result.queries));
      manifest.add_input(freq_path);
      manifest.add_input(triple_path);
      manifest.add_output(mwr.out);
      manifest.set("counts", stats_json(result.stats));
      Json conflicts = Json::object();
      for (const auto& [word, both] : result.conflicts) conflicts[word] = both;
      manifest.set("conflicts", conflicts);
      manifest.set("filters", Json{{"min_count_exclusive", mwr.min_count},
                                   {"single_token_answers_only", true},
                                   {"pos", {"Noun", "Adjective", "Adverb"}}});
      manifest.write(manifest_for(mwr.out));
      ctx.err << "build-mwr: " << result.queries.size() << " queries\n";
    };
  });

  // build-sar
  struct {
    std::string triples, sizes = "33000,1000,2000", out_dir;
    std::uint64_t seed = kDefaultSeed;
  } sar;
  auto* build_sar_cmd = app.add_subcommand("build-sar", "Build balanced synonym/antonym pair splits");
  build_sar_cmd->add_option("--triples", sar.triples, "Triples with Synonym/Antonym relations")->required();
  build_sar_cmd->add_option("--sizes", sar.sizes, "train,dev,test sizes")->capture_default_str();
  build_sar_cmd->add_option("--seed", sar.seed, "Sampling seed")->capture_default_str();
  build_sar_cmd->add_option("--out-dir", sar.out_dir, "Output directory")->required();
  build_sar_cmd->callback([&] {
    action = [&] {
      auto parts = split(sar.sizes, ',');
      if (parts.size() != 3) throw UsageError("--sizes needs three values: train,dev,test");
      SarSizes sizes;
      try {
        sizes = SarSizes{std::stoul(parts[0]), std::stoul(parts[1]), std::stoul(parts[2])};
      } catch (const std::exception&) {
        throw UsageError("invalid --sizes: " + sar.sizes);
      }
      fs::path triple_path = input_path(sar.triples);
      auto kb = load_triples(triple_path);
      report_summary(ctx, kb.summary);
      auto pairs = build_sar(kb.items, sizes, sar.seed);
      fs::path dir(sar.out_dir);
      RunManifest manifest("build-sar", ctx.argv);
      manifest.set_seed(sar.seed);
      manifest.add_input(triple_path);
      Json counts = Json::object();
      for (Split s : {Split::Train, Split::Dev, Split::Test}) {
        std::vector<SarPair> chunk;
        for (const auto& p : pairs) {
          if (p.split == s) chunk.push_back(p);
        }
        std::string name = std::string(to_string(s));
        for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        fs::path file = dir / ("sar_" + name + ".jsonl");
        write_file_atomic(file, serialize_records(chunk));
        manifest.add_output(file);
        counts[name] = chunk.size();
      }
      manifest.set("counts", counts);
      manifest.write(dir / "build-sar.manifest.json");
    };
  });

  // build-mm
  struct {
    std::vector<std::string> definitions;
    int k = 10;
    double fraction = 0.05;
    std::uint64_t seed = kDefaultSeed;
    bool same_stem = false;
    std::string out_dir;
  } mm;
  auto* build_mm = app.add_subcommand("build-mm", "Build the meaning-matching corpus");
  build_mm->add_option("--definitions", mm.definitions, "Definition files, merged in order")->required();
  build_mm->add_option("--k", mm.k, "Negatives per word")->capture_default_str();
  build_mm->add_option("--validation-fraction", mm.fraction, "Fraction of words held out")->capture_default_str();
  build_mm->add_option("--seed", mm.seed, "Sampling seed")->capture_default_str();
  build_mm->add_flag("--exclude-same-stem", mm.same_stem, "Skip negatives sharing the word's stem");
  build_mm->add_option("--out-dir", mm.out_dir, "Output directory")->required();
  build_mm->callback([&] {
    action = [&] {
      std::vector<fs::path> paths;
      for (const auto& p : mm.definitions) paths.push_back(input_path(p));
      auto defs = load_definitions(paths);
      report_summary(ctx, defs.summary);
      MmDatasetSpec spec{mm.k, mm.fraction, mm.seed, mm.same_stem};
      auto data = build_mm_dataset(defs.items, spec);
      fs::path dir(mm.out_dir);
      write_file_atomic(dir / "mm_train.jsonl", serialize_records(data.train));
      write_file_atomic(dir / "mm_validation.jsonl", serialize_records(data.validation));
      RunManifest manifest("build-mm", ctx.argv);
      manifest.set_seed(mm.seed);
      for (const auto& p : paths) manifest.add_input(p);
      manifest.add_output(dir / "mm_train.jsonl");
      manifest.add_output(dir / "mm_validation.jsonl");
      manifest.set("spec", Json{{"k", mm.k},
                                {"validation_fraction", mm.fraction},
                                {"exclude_same_stem", mm.same_stem}});
      manifest.set("counts", Json{{"words", defs.items.size()},
                                  {"train_examples", data.train.size()},
                                  {"validation_examples", data.validation.size()},
                                  {"validation_words", data.validation_words.size()}});
      manifest.write(dir / "build-mm.manifest.json");
    };
  });

  // score
  struct {
    std::string dataset, preds, ks = "1,3,5", model = "model", out, table;
    bool lenient = false;
  } sc;
  auto* score = app.add_subcommand("score", "Hit-rate metrics for a prediction batch");
  score->add_option("--dataset", sc.dataset, "Query batch")->required();
  score->add_option("--preds", sc.preds, "Prediction batch")->required();
  score->add_option("--k", sc.ks, "Comma-separated cutoffs")->capture_default_str();
  score->add_option("--model", sc.model, "Row label for the table")->capture_default_str();
  score->add_flag("--lenient", sc.lenient, "Skip queries with too few predictions instead of failing");
  score->add_option("--out", sc.out, "Write the metric report record here");
  score->add_option("--table", sc.table, "Write the text table here");
  score->callback([&] {
    action = [&] {
      std::vector<int> ks = parse_ks(sc.ks);
      fs::path dataset = input_path(sc.dataset), preds_path = input_path(sc.preds);
      auto queries = read_query_batch(dataset);
      auto preds = read_prediction_batch(preds_path);
      MetricReport report = aggregate(queries, preds, ks, AggregateOptions{sc.lenient});
      std::string table = format_report_table(report, sc.model);
      ctx.out << table;
      for (const auto& m : report.per_k) {
        if (m.skipped > 0) ctx.err << "k=" << m.k << ": skipped " << m.skipped << " queries\n";
      }
      if (sc.out.empty() && sc.table.empty()) return;
      RunManifest manifest("score", ctx.argv);
      manifest.add_input(dataset);
      manifest.add_input(preds_path);
      fs::path anchor;
      if (!sc.out.empty()) {
        write_file_atomic(sc.out, dump_record(to_json(report)) + "\n");
        manifest.add_output(sc.out);
        anchor = sc.out;
      }
      if (!sc.table.empty()) {
        write_file_atomic(sc.table, table);
        manifest.add_output(sc.table);
        if (anchor.empty()) anchor = sc.table;
      }
      manifest.write(manifest_for(anchor));
    };
  });

  // regen-ratio and pos-breakdown share their inputs.
  struct {
    std::string dataset, preds, out;
  } rr, pb;
  auto* regen = app.add_subcommand("regen-ratio", "Share of MWR queries answered with the probed word");
  regen->add_option("--dataset", rr.dataset, "MWR query batch")->required();
  regen->add_option("--preds", rr.preds, "Prediction batch")->required();
  regen->add_option("--out", rr.out, "Write the ratios record here");
  regen->callback([&] {
    action = [&] {
      fs::path dataset = input_path(rr.dataset), preds_path = input_path(rr.preds);
      auto ratios = regeneration_ratio(read_query_batch(dataset), read_prediction_batch(preds_path));
      auto show = [](const std::optional<double>& v) { return v ? fixed2(*v) : std::string("n/a"); };
      ctx.out << "R_syn  " << show(ratios.r_syn) << '\n' << "R_ant  " << show(ratios.r_ant) << '\n';
      if (rr.out.empty()) return;
      Json rec{{"r_syn", ratios.r_syn ? Json(*ratios.r_syn) : Json(nullptr)},
               {"r_ant", ratios.r_ant ? Json(*ratios.r_ant) : Json(nullptr)},
               {"synonym_queries", ratios.synonym_queries},
               {"antonym_queries", ratios.antonym_queries}};
      write_file_atomic(rr.out, dump_record(rec) + "\n");
      RunManifest manifest("regen-ratio", ctx.argv);
      manifest.add_input(dataset);
      manifest.add_input(preds_path);
      manifest.add_output(rr.out);
      manifest.write(manifest_for(rr.out));
    };
  });

  auto* pos = app.add_subcommand("pos-breakdown", "Mean HR@1 per part of speech");
  pos->add_option("--dataset", pb.dataset, "MWR query batch")->required();
  pos->add_option("--preds", pb.preds, "Prediction batch")->required();
  pos->add_option("--out", pb.out, "Write the breakdown record here");
  pos->callback([&] {
    action = [&] {
      fs::path dataset = input_path(pb.dataset), preds_path = input_path(pb.preds);
      auto parts = pos_breakdown(read_query_batch(dataset), read_prediction_batch(preds_path));
      for (const auto& [tag, value] : parts) ctx.out << std::left << std::setw(10) << tag << fixed2(value) << '\n';
      if (pb.out.empty()) return;
      write_file_atomic(pb.out, dump_record(Json(parts)) + "\n");
      RunManifest manifest("pos-breakdown", ctx.argv);
      manifest.add_input(dataset);
      manifest.add_input(preds_path);
      manifest.add_output(pb.out);
      manifest.write(manifest_for(pb.out));
    };
  });

  // drift
  struct {
    std::string before, after, out, summary_out;
    bool relative = false, blocks = false;
  } dr;
  auto* drift = app.add_subcommand("drift", "Per-layer Frobenius drift between two weight dumps");
  drift->add_option("--before", dr.before, "Dump directory before training")->required();
  drift->add_option("--after", dr.after, "Dump directory after training")->required();
  drift->add_flag("--relative", dr.relative, "Normalize by the layer's own norm instead of its size");
  drift->add_flag("--blocks", dr.blocks, "Aggregate tensors into numbered blocks");
  drift->add_option("--out", dr.out, "Per-layer CSV output");
  drift->add_option("--summary-out", dr.summary_out, "Box-plot summary record output");
  drift->callback([&] {
    action = [&] {
      fs::path before = input_path(dr.before, true), after = input_path(dr.after, true);
      DriftOptions options;
      options.norm = dr.relative ? DriftNormalization::Relative : DriftNormalization::ElementCount;
      options.blocks = dr.blocks;
      DriftReport report = drift_report(before, after, options);
      const auto& s = report.summary;
      ctx.out << "layers " << report.layers.size() << '\n'
              << std::setprecision(9) << "min " << s.min << "\nq1 " << s.q1 << "\nmedian " << s.median
              << "\nq3 " << s.q3 << "\nmax " << s.max << '\n';
      if (dr.out.empty() && dr.summary_out.empty()) return;
      RunManifest manifest("drift", ctx.argv);
      manifest.add_input(before / "manifest.jsonl");
      manifest.add_input(after / "manifest.jsonl");
      fs::path anchor;
      if (!dr.out.empty()) {
        write_file_atomic(dr.out, drift_csv(report));
        manifest.add_output(dr.out);
        anchor = dr.out;
      }
      if (!dr.summary_out.empty()) {
        Json rec{{"layers", report.layers.size()},
                 {"min", s.min}, {"q1", s.q1}, {"median", s.median}, {"q3", s.q3}, {"max", s.max},
                 {"normalization", dr.relative ? "relative" : "element_count"},
                 {"granularity", dr.blocks ? "block" : "tensor"}};
        write_file_atomic(dr.summary_out, dump_record(rec) + "\n");
        manifest.add_output(dr.summary_out);
        if (anchor.empty()) anchor = dr.summary_out;
      }
      manifest.write(manifest_for(anchor));
    };
  });

  // significance
  struct {
    std::string a, b, out;
  } sig;
  auto* significance = app.add_subcommand("significance", "Welch's t-test between two sets of run scores");
  significance->add_option("--a", sig.a, "Runs of system A (comma list or file)")->required();
  significance->add_option("--b", sig.b, "Runs of system B (comma list or file)")->required();
  significance->add_option("--out", sig.out, "Write the test record here");
  significance->callback([&] {
    action = [&] {
      std::vector<double> a = parse_runs(sig.a), b = parse_runs(sig.b);
      WelchResult r = welch_t_test(a, b);
      if (!r.warning.empty()) ctx.err << "warning: " << r.warning << '\n';
      ctx.out << std::setprecision(10) << "t " << r.t << "\ndf " << r.df << "\np " << r.p
              << "\nsignificant " << (r.significant ? "yes" : "no") << '\n';
      if (sig.out.empty()) return;
      Json rec{{"t", std::isfinite(r.t) ? Json(r.t) : Json(r.t > 0 ? "inf" : "-inf")},
               {"df", r.df}, {"p", r.p}, {"significant", r.significant}, {"warning", r.warning}};
      write_file_atomic(sig.out, dump_record(rec) + "\n");
      RunManifest manifest("significance", ctx.argv);
      manifest.add_input(sig.a);
      manifest.add_input(sig.b);
      manifest.add_output(sig.out);
      manifest.write(manifest_for(sig.out));
    };
  });

  // mock-predict
  struct {
    std::string dataset, model = "echo", answers, answers_from, fallback, out;
    int k = 5;
  } mp;
  auto* mock = app.add_subcommand("mock-predict", "Deterministic offline stand-in for a masked LM");
  mock->add_option("--dataset", mp.dataset, "Query batch")->required();
  mock->add_option("--model", mp.model, "echo or lookup")
      ->check(CLI::IsMember({"echo", "lookup"}))
      ->capture_default_str();
  mock->add_option("--answers", mp.answers, "Answer table for the lookup model");
  mock->add_option("--answers-from", mp.answers_from, "Derive the lookup table from each query")
      ->check(CLI::IsMember({"wrong", "gold"}));
  mock->add_option("--fallback", mp.fallback, "Answer for ids missing from the table");
  mock->add_option("--k", mp.k, "Predictions per query")->check(CLI::PositiveNumber)->capture_default_str();
  mock->add_option("--out", mp.out, "Output prediction batch")->required();
  mock->callback([&] {
    action = [&] {
      fs::path dataset = input_path(mp.dataset);
      auto queries = read_query_batch(dataset);
      RunManifest manifest("mock-predict", ctx.argv);
      manifest.add_input(dataset);
      std::vector<PredictionList> preds;
      if (mp.model == "echo") {
        preds = mock_echo_model(queries, mp.k);
      } else {
        AnswerTable table;
        if (!mp.answers.empty()) {
          fs::path answers = input_path(mp.answers);
          table = read_answer_table(answers);
          manifest.add_input(answers);
        } else if (!mp.answers_from.empty()) {
          table = answer_table_from(queries, mp.answers_from == "wrong" ? AnswerSource::WrongSet
                                                                        : AnswerSource::GoldSet);
        } else if (mp.fallback.empty()) {
          throw UsageError("lookup model needs --answers, --answers-from, or --fallback");
        }
        std::optional<std::string> fallback;
        if (!mp.fallback.empty()) fallback = mp.fallback;
        preds = mock_lookup_model(queries, table, mp.k, fallback);
      }
      write_file_atomic(mp.out, serialize_prediction_batch(preds));
      manifest.add_output(mp.out);
      manifest.set("model", mp.model);
      manifest.write(manifest_for(mp.out));
    };
  });

  std::vector<char*> argv;
  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"negprobe"} : args;
  for (auto& a : storage) argv.push_back(a.data());

  if (storage.size() > 1 && !storage[1].empty() && storage[1][0] != '-') {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) { return s->get_name() == storage[1]; });
    if (!known) {
      err << "error: unknown subcommand '" << storage[1] << "'\n\n" << app.help();
      return 1;
    }
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (action) action();
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace negprobe
