#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <thread>

#include <json.hpp>

#include "satdforge/code/language.hpp"
#include "satdforge/harness/analysis.hpp"
#include "satdforge/harness/extract.hpp"
#include "satdforge/harness/templates.hpp"
#include "satdforge/judge/client.hpp"
#include "satdforge/pipeline/dataset_io.hpp"
#include "satdforge/pipeline/filters.hpp"
#include "satdforge/pipeline/judge_filter.hpp"
#include "satdforge/pipeline/split.hpp"
#include "satdforge/track/tracker.hpp"
#include "satdforge/util/fsio.hpp"
#include "satdforge/util/log.hpp"
#include "satdforge/util/strings.hpp"

namespace fs = std::filesystem;
using namespace satdforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitEndpoint = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string lang = "java";
  std::string repos;
  std::string dataset;
  std::string endpoint;
  std::string model;
  std::string template_name = "noexplain";
  std::string out;
  std::string stats;
  std::string cache_dir;
  std::string api_key;
  std::string stub;
  std::vector<std::string> inputs;
  long long seed = 0;
  int jobs = 4;
  int retry_limit = 5;
  std::size_t token_limit = 1024;
  std::size_t crystal_k = 500;
  bool per_item_correlation = false;
};

code::Language parse_lang_or_throw(const std::string& name) {
  auto lang = code::parse_language(name);
  if (!lang) throw ConfigError("unknown language: " + name);
  return *lang;
}

std::vector<fs::path> read_manifest(const std::string& path) {
  auto content = util::read_file(path);
  if (!content) throw ConfigError("cannot read repository manifest " + path);
  std::vector<fs::path> repos;
  for (const std::string& line : util::split_lines(*content)) {
    std::string t = util::trim(line);
    if (t.empty() || t[0] == '#') continue;
    fs::path p(t);
    if (!fs::exists(p))
      throw ConfigError("repository path does not exist: " + t);
    repos.push_back(std::move(p));
  }
  if (repos.empty()) throw ConfigError("manifest lists no repositories");
  return repos;
}

judge::ClientConfig make_client_config(const Options& opt) {
  if (opt.endpoint.empty()) throw ConfigError("--endpoint is required");
  if (opt.model.empty()) throw ConfigError("--model is required");
  judge::ClientConfig cfg;
  cfg.endpoint_url = opt.endpoint;
  cfg.model = opt.model;
  cfg.max_concurrency = std::max(opt.jobs, 1);
  cfg.retry_limit = opt.retry_limit;
  cfg.api_key = opt.api_key;
  if (!opt.cache_dir.empty()) cfg.cache_dir = opt.cache_dir;
  return cfg;
}

// ---- mine ----

int cmd_mine(const Options& opt) {
  if (opt.out.empty()) throw ConfigError("--out is required");
  code::Language lang = parse_lang_or_throw(opt.lang);
  std::vector<fs::path> repos = read_manifest(opt.repos);

  std::vector<std::vector<track::SatdRecord>> per_repo(repos.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= repos.size()) return;
      try {
        per_repo[i] = track::track_repository(repos[i], lang);
      } catch (const track::RepoError& e) {
        util::log_error("skipping repository " + repos[i].string() + ": " +
                        e.what());
      }
    }
  };
  unsigned jobs = static_cast<unsigned>(std::max(opt.jobs, 1));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, repos.size()); ++t)
    pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::vector<track::SatdRecord> all;
  for (auto& records : per_repo)
    all.insert(all.end(), records.begin(), records.end());
  pipeline::write_records(all, opt.out);
  std::printf("mined %zu SATD records from %zu repositories -> %s\n",
              all.size(), repos.size(), opt.out.c_str());
  return kExitOk;
}

// ---- filter ----

int cmd_filter(const Options& opt) {
  if (opt.inputs.empty()) throw ConfigError("need a records file");
  if (opt.out.empty()) throw ConfigError("--out is required");
  std::vector<fs::path> repo_paths = read_manifest(opt.repos);

  std::map<std::pair<std::string, std::string>,
           std::unique_ptr<track::GitRepo>>
      repos;
  for (const auto& path : repo_paths) {
    auto key = track::derive_user_project(path);
    if (!repos.count(key))
      repos.emplace(key, std::make_unique<track::GitRepo>(path));
  }
  pipeline::RepoResolver resolver =
      [&](const std::string& user,
          const std::string& project) -> const track::GitRepo* {
    auto it = repos.find({user, project});
    return it == repos.end() ? nullptr : it->second.get();
  };

  std::vector<track::SatdRecord> records =
      pipeline::read_records(opt.inputs.front());
  pipeline::PipelineOptions options;
  options.token_limit = opt.token_limit;
  options.jobs = opt.jobs;
  pipeline::FilterResult result =
      pipeline::apply_heuristic_filters(records, resolver, options);

  pipeline::write_dataset(result.samples, opt.out);
  std::string stats_path =
      opt.stats.empty() ? opt.out + ".stats.tsv" : opt.stats;
  pipeline::write_stats(result.stats.rows, stats_path);
  for (const auto& [name, count] : result.stats.rows)
    std::printf("%-32s %zu\n", name.c_str(), count);
  std::printf("filtered dataset -> %s (stats -> %s)\n", opt.out.c_str(),
              stats_path.c_str());
  return kExitOk;
}

// ---- judge ----

int cmd_judge(const Options& opt) {
  if (opt.inputs.empty()) throw ConfigError("need a samples file");
  if (opt.out.empty()) throw ConfigError("--out is required");
  std::vector<pipeline::RepaymentSample> samples =
      pipeline::read_dataset(opt.inputs.front());

  judge::ChatClient client(make_client_config(opt));
  pipeline::JudgeFilterOptions options;
  options.pending_path = opt.out + ".pending.jsonl";
  pipeline::JudgeFilterResult result =
      pipeline::apply_judge_filter(samples, client, options);

  pipeline::write_dataset(result.kept, opt.out);
  if (!opt.stats.empty()) {
    std::vector<std::pair<std::string, std::size_t>> rows;
    if (auto existing = util::read_file(opt.stats)) {
      for (const std::string& line : util::split_lines(*existing)) {
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || line.substr(0, tab) == "step_name")
          continue;
        rows.emplace_back(line.substr(0, tab),
                          std::stoull(line.substr(tab + 1)));
      }
    }
    rows.push_back(result.stats_row);
    pipeline::write_stats(rows, opt.stats);
  }
  std::printf("judge kept %zu of %zu samples (%zu pending) -> %s\n",
              result.kept.size(), samples.size(), result.pending.size(),
              opt.out.c_str());
  return result.pending.empty() ? kExitOk : kExitEndpoint;
}

// ---- generate ----

int cmd_generate(const Options& opt) {
  if (opt.inputs.empty()) throw ConfigError("need a samples file");
  if (opt.out.empty()) throw ConfigError("--out is required");
  auto tpl_name = harness::parse_template_name(opt.template_name);
  if (!tpl_name || *tpl_name == harness::TemplateName::Custom)
    throw ConfigError("unknown template: " + opt.template_name);
  harness::PromptTemplate tpl = harness::builtin_template(*tpl_name);

  std::vector<pipeline::RepaymentSample> samples =
      pipeline::read_dataset(opt.inputs.front());
  judge::ChatClient client(make_client_config(opt));

  std::vector<judge::ChatRequest> requests;
  requests.reserve(samples.size());
  for (const auto& s : samples) {
    judge::ChatRequest req;
    req.model = opt.model;
    req.prompt = harness::render_repayment_prompt(tpl, s.method_before,
                                                  s.record.comment_text);
    requests.push_back(std::move(req));
  }
  std::vector<judge::ChatClient::Outcome> outcomes =
      client.complete_many(requests);

  std::string out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!outcomes[i].text)
      throw judge::ExhaustedRetries("generation failed for " +
                                    pipeline::sample_key(samples[i]) + ": " +
                                    outcomes[i].error);
    nlohmann::ordered_json j;
    j["sample_key"] = pipeline::sample_key(samples[i]);
    j["model_id"] = opt.model;
    j["template_name"] = harness::template_display_name(*tpl_name);
    j["generated_raw"] = *outcomes[i].text;
    out += j.dump();
    out += '\n';
  }
  util::write_file_atomic(opt.out, out);
  std::printf("generated %zu responses -> %s\n", samples.size(),
              opt.out.c_str());
  return kExitOk;
}

// ---- evaluate ----

int cmd_evaluate(const Options& opt) {
  if (opt.inputs.empty()) throw ConfigError("need a samples file");
  if (opt.out.empty()) throw ConfigError("--out is required");
  std::vector<pipeline::RepaymentSample> samples =
      pipeline::read_dataset(opt.inputs.front());
  if (samples.empty()) throw ConfigError("dataset is empty");

  harness::ExperimentRun run;
  run.dataset_id = fs::path(opt.inputs.front()).filename().string();

  std::map<std::string, std::string> raw_by_key;
  bool stub = !opt.stub.empty();
  if (stub) {
    if (opt.stub != "ground-truth" && opt.stub != "input")
      throw ConfigError("--stub must be ground-truth or input");
    run.model_id = "stub:" + opt.stub;
    run.template_name = "stub";
  } else {
    if (opt.inputs.size() < 2)
      throw ConfigError("need a responses file (or --stub)");
    auto content = util::read_file(opt.inputs[1]);
    if (!content) throw ConfigError("cannot read " + opt.inputs[1]);
    int line_no = 0;
    for (const std::string& line : util::split_lines(*content)) {
      ++line_no;
      if (util::is_blank(line)) continue;
      auto j = nlohmann::ordered_json::parse(line, nullptr, false);
      if (j.is_discarded())
        throw pipeline::DatasetParseError("malformed JSON", line_no);
      raw_by_key[j.at("sample_key").get<std::string>()] =
          j.at("generated_raw").get<std::string>();
      run.model_id = j.at("model_id").get<std::string>();
      run.template_name = j.at("template_name").get<std::string>();
    }
  }
  if (!opt.model.empty()) run.model_id = opt.model;

  metrics::TriviallySharedNgrams shared =
      harness::build_shared_ngrams(samples, opt.crystal_k);

  for (const auto& sample : samples) {
    std::string key = pipeline::sample_key(sample);
    harness::ItemResult item;
    item.sample_key = key;
    if (stub) {
      item.generated_raw =
          opt.stub == "ground-truth" ? sample.method_after : sample.method_before;
      item.extracted_code = item.generated_raw;
    } else {
      auto it = raw_by_key.find(key);
      if (it == raw_by_key.end())
        throw pipeline::DatasetParseError("no response for sample " + key, 0);
      item.generated_raw = it->second;
      item.extracted_code = harness::extract_code_from_response(
          item.generated_raw, sample.record.language);
    }
    try {
      item.report =
          harness::evaluate_item(sample, item.extracted_code, shared);
    } catch (const metrics::EmptyReferenceDiff& e) {
      throw std::runtime_error("corrupted sample " + key + ": " + e.what());
    }
    run.items.push_back(std::move(item));
  }

  harness::write_run(run, opt.out);
  harness::AggregateRow agg = harness::aggregate(run);
  std::printf(
      "evaluated %zu items: EM %.1f%%, BLEU-diff %.3f, CrystalBLEU-diff %.3f, "
      "LineF1 %.3f -> %s\n",
      agg.items, agg.em_percent, agg.bleu_diff, agg.crystal_diff, agg.line_f,
      opt.out.c_str());
  return kExitOk;
}

// ---- report ----

std::array<double, 6> metric_vector(const harness::AggregateRow& a) {
  return {a.em_percent, a.bleu_whole, a.crystal_whole,
          a.bleu_diff,  a.crystal_diff, a.line_f};
}

int cmd_report(const Options& opt) {
  if (opt.inputs.empty()) throw ConfigError("need at least one run file");
  if (opt.dataset.empty()) throw ConfigError("--dataset is required");
  if (opt.out.empty()) throw ConfigError("--out directory is required");
  fs::create_directories(opt.out);

  std::vector<pipeline::RepaymentSample> samples =
      pipeline::read_dataset(opt.dataset);
  std::map<std::string, harness::Difficulty> difficulty;
  for (const auto& s : samples)
    difficulty[pipeline::sample_key(s)] = harness::classify_difficulty(s);

  std::vector<harness::ExperimentRun> runs;
  for (const auto& path : opt.inputs) runs.push_back(harness::read_run(path));

  // Aggregate table, Table-6 shaped.
  std::string agg_out =
      "Model\tTemplate\tSubset\tExactMatch\tBLEU-diff\tCrystalBLEU-diff\t"
      "LineP\tLineR\tLineF1\tAvgDel\tAvgIns\n";
  char buf[512];
  auto emit = [&](const harness::ExperimentRun& run, const char* subset,
                  const harness::AggregateRow& a) {
    std::snprintf(buf, sizeof buf,
                  "%s\t%s\t%s\t%.1f\t%.3f\t%.3f\t%.3f\t%.3f\t%.3f\t%.1f\t%.1f\n",
                  run.model_id.c_str(), run.template_name.c_str(), subset,
                  a.em_percent, a.bleu_diff, a.crystal_diff, a.line_p, a.line_r,
                  a.line_f, a.avg_deleted, a.avg_inserted);
    agg_out += buf;
  };
  for (const auto& run : runs) {
    harness::DifficultyAggregates agg =
        harness::aggregate_by_difficulty(run, difficulty);
    emit(run, "all", agg.all);
    emit(run, "easy", agg.easy);
    emit(run, "hard", agg.hard);
  }
  util::write_file_atomic(fs::path(opt.out) / "aggregates.tsv", agg_out);

  // Correlation matrix over per-run aggregates (or per-item with the flag).
  static const char* kMetricNames[6] = {"EM",        "BLEU-whole",
                                        "CrystalBLEU-whole", "BLEU-diff",
                                        "CrystalBLEU-diff",  "LineF1"};
  std::array<std::vector<double>, 6> columns;
  if (opt.per_item_correlation) {
    for (const auto& run : runs)
      for (const auto& item : run.items) {
        columns[0].push_back(static_cast<double>(item.report.exact_match));
        columns[1].push_back(item.report.bleu_whole);
        columns[2].push_back(item.report.crystal_whole);
        columns[3].push_back(item.report.bleu_diff);
        columns[4].push_back(item.report.crystal_diff);
        columns[5].push_back(item.report.line_f);
      }
  } else {
    for (const auto& run : runs) {
      std::array<double, 6> v = metric_vector(harness::aggregate(run));
      for (int m = 0; m < 6; ++m) columns[static_cast<std::size_t>(m)].push_back(v[static_cast<std::size_t>(m)]);
    }
  }
  std::string corr_out = "metric";
  for (const char* name : kMetricNames) corr_out += std::string("\t") + name;
  corr_out += '\n';
  for (int a = 0; a < 6; ++a) {
    corr_out += kMetricNames[a];
    for (int b = 0; b < 6; ++b) {
      if (a == b) {
        corr_out += "\t1.000";
        continue;
      }
      try {
        double r = harness::pearson(columns[static_cast<std::size_t>(a)],
                                    columns[static_cast<std::size_t>(b)]);
        std::snprintf(buf, sizeof buf, "\t%.3f", r);
        corr_out += buf;
      } catch (const std::runtime_error&) {
        corr_out += "\tnan";
      }
    }
    corr_out += '\n';
  }
  util::write_file_atomic(fs::path(opt.out) / "correlations.tsv", corr_out);

  // Coverage over all runs together.
  harness::CoverageCounts cov = harness::coverage_counts(runs);
  std::string cov_out = "setting\tcount\n";
  cov_out += "addressed_by_all\t" + std::to_string(cov.addressed_by_all) + "\n";
  cov_out += "addressed_by_at_least_one\t" +
             std::to_string(cov.addressed_by_at_least_one) + "\n";
  cov_out += "addressed_by_exactly_one\t" +
             std::to_string(cov.addressed_by_exactly_one) + "\n";
  util::write_file_atomic(fs::path(opt.out) / "coverage.tsv", cov_out);

  // Oracle template per model.
  std::map<std::string, std::vector<harness::ExperimentRun>> by_model;
  for (const auto& run : runs) by_model[run.model_id].push_back(run);
  std::string oracle_out = "Model\tTemplate\tExactMatch\n";
  for (const auto& [model, model_runs] : by_model) {
    for (const auto& run : model_runs) {
      std::snprintf(buf, sizeof buf, "%s\t%s\t%.1f\n", model.c_str(),
                    run.template_name.c_str(),
                    harness::aggregate(run).em_percent);
      oracle_out += buf;
    }
    std::snprintf(buf, sizeof buf, "%s\tOracle\t%.1f\n", model.c_str(),
                  harness::oracle_em(model_runs));
    oracle_out += buf;
  }
  util::write_file_atomic(fs::path(opt.out) / "oracle.tsv", oracle_out);

  std::printf("wrote aggregates, correlations, coverage and oracle tables -> %s\n",
              opt.out.c_str());
  return kExitOk;
}

// ---- split ----

int cmd_split(const Options& opt) {
  if (opt.inputs.empty()) throw ConfigError("need a samples file");
  if (opt.out.empty()) throw ConfigError("--out prefix is required");
  std::vector<pipeline::RepaymentSample> samples =
      pipeline::read_dataset(opt.inputs.front());
  pipeline::DatasetSplit split =
      pipeline::split_by_repository(samples, opt.seed);
  pipeline::write_dataset(split.train, opt.out + ".train.jsonl");
  pipeline::write_dataset(split.validation, opt.out + ".validation.jsonl");
  pipeline::write_dataset(split.test, opt.out + ".test.jsonl");
  std::printf("split %zu samples into %zu/%zu/%zu (train/validation/test)\n",
              samples.size(), split.train.size(), split.validation.size(),
              split.test.size());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"satd-forge: mine SATD repayments from git history and "
               "evaluate machine-generated fixes"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI/TOML file");

  Options opt;
  opt.api_key = "";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--jobs", opt.jobs, "Worker threads / in-flight requests");
    return sub;
  };
  auto add_endpoint = [&](CLI::App* sub) {
    sub->add_option("--endpoint", opt.endpoint, "Chat-completion base URL");
    sub->add_option("--model", opt.model, "Model identifier");
    sub->add_option("--cache", opt.cache_dir, "Response cache directory");
    sub->add_option("--retry-limit", opt.retry_limit, "Attempts per request");
    sub->add_option("--api-key", opt.api_key, "Bearer credential")
        ->envname("SATD_FORGE_API_KEY");
    return sub;
  };

  CLI::App* mine = add_common(app.add_subcommand(
      "mine", "Track SATD comments through repository histories"));
  mine->add_option("--repos", opt.repos, "Manifest of local clone paths")
      ->required();
  mine->add_option("--lang", opt.lang, "java or python")->required();
  mine->add_option("--out", opt.out, "Output records file")->required();

  CLI::App* filter = add_common(app.add_subcommand(
      "filter", "Apply the heuristic filter pipeline to mined records"));
  filter->add_option("records", opt.inputs, "Records file")->required();
  filter->add_option("--repos", opt.repos, "Manifest of local clone paths")
      ->required();
  filter->add_option("--out", opt.out, "Output dataset file")->required();
  filter->add_option("--stats", opt.stats, "Stats table path");
  filter->add_option("--token-limit", opt.token_limit,
                     "Token cap per method side");

  CLI::App* judge_cmd = add_endpoint(add_common(app.add_subcommand(
      "judge", "LLM relevance filter over a dataset")));
  judge_cmd->add_option("samples", opt.inputs, "Samples file")->required();
  judge_cmd->add_option("--out", opt.out, "Kept samples file")->required();
  judge_cmd->add_option("--stats", opt.stats, "Stats table to append to");

  CLI::App* generate = add_endpoint(add_common(app.add_subcommand(
      "generate", "Request repayments for every sample")));
  generate->add_option("samples", opt.inputs, "Samples file")->required();
  generate
      ->add_option("--template", opt.template_name,
                   "mastropaolo-t2|noexplain|cot1|cot2")
      ->required();
  generate->add_option("--out", opt.out, "Responses file")->required();

  CLI::App* evaluate = add_common(app.add_subcommand(
      "evaluate", "Score generated repayments against ground truth"));
  evaluate
      ->add_option("inputs", opt.inputs,
                   "Samples file, then responses file unless --stub")
      ->required();
  evaluate->add_option("--stub", opt.stub,
                       "ground-truth or input (bypasses responses)");
  evaluate->add_option("--model", opt.model, "Override model id in the run");
  evaluate->add_option("--crystal-k", opt.crystal_k,
                       "Trivially-shared n-grams per order");
  evaluate->add_option("--out", opt.out, "Run file")->required();

  CLI::App* report = app.add_subcommand(
      "report", "Aggregate, correlation, coverage and oracle tables");
  report->add_option("runs", opt.inputs, "Run files")->required();
  report->add_option("--dataset", opt.dataset, "Dataset the runs were scored on")
      ->required();
  report->add_option("--out", opt.out, "Output directory")->required();
  report->add_flag("--per-item-correlation", opt.per_item_correlation,
                   "Correlate per item instead of per run");

  CLI::App* split = app.add_subcommand(
      "split", "Repository-wise 85/5/10 train/validation/test split");
  split->add_option("samples", opt.inputs, "Samples file")->required();
  split->add_option("--seed", opt.seed, "Shuffle seed")->required();
  split->add_option("--out", opt.out, "Output path prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (mine->parsed()) return cmd_mine(opt);
    if (filter->parsed()) return cmd_filter(opt);
    if (judge_cmd->parsed()) return cmd_judge(opt);
    if (generate->parsed()) return cmd_generate(opt);
    if (evaluate->parsed()) return cmd_evaluate(opt);
    if (report->parsed()) return cmd_report(opt);
    if (split->parsed()) return cmd_split(opt);
  } catch (const ConfigError& e) {
    util::log_error(e.what());
    return kExitConfig;
  } catch (const judge::EndpointError& e) {
    util::log_error(e.what());
    return kExitEndpoint;
  } catch (const pipeline::DatasetParseError& e) {
    util::log_error(e.what());
    return kExitData;
  } catch (const pipeline::SplitImpossible& e) {
    util::log_error(e.what());
    return kExitData;
  } catch (const harness::MismatchedKeys& e) {
    util::log_error(e.what());
    return kExitData;
  } catch (const std::exception& e) {
    util::log_error(e.what());
    return kExitData;
  }
  return kExitConfig;
}
