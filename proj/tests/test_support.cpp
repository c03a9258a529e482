#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "satdforge/util/fsio.hpp"
#include "satdforge/util/strings.hpp"
#include "satdforge/util/subprocess.hpp"

namespace testsupport {

namespace fs = std::filesystem;
using satdforge::util::run_command;
using satdforge::util::RunOptions;

// ---------------------------------------------------------------- TestRepo

TestRepo::TestRepo(const fs::path& dir) : dir_(dir) {
  fs::create_directories(dir_);
  git({"init", "-q", "-b", "main"});
}

std::string TestRepo::git(const std::vector<std::string>& args,
                          const std::string& stdin_data) {
  std::vector<std::string> argv = {"git", "-C", dir_.string()};
  argv.insert(argv.end(), args.begin(), args.end());
  RunOptions opts;
  if (!stdin_data.empty()) opts.stdin_data = stdin_data;
  std::string stamp = std::to_string(clock_) + " +0000";
  opts.env = {{"GIT_AUTHOR_NAME", "fixture"},
              {"GIT_AUTHOR_EMAIL", "fixture@example.com"},
              {"GIT_COMMITTER_NAME", "fixture"},
              {"GIT_COMMITTER_EMAIL", "fixture@example.com"},
              {"GIT_AUTHOR_DATE", stamp},
              {"GIT_COMMITTER_DATE", stamp}};
  auto res = run_command(argv, opts);
  if (!res.ok())
    throw std::runtime_error("git " + args.front() + " failed: " + res.err);
  return res.out;
}

void TestRepo::write(const std::string& rel_path, const std::string& content) {
  fs::path full = dir_ / rel_path;
  fs::create_directories(full.parent_path());
  satdforge::util::write_file_atomic(full, content);
}

void TestRepo::remove(const std::string& rel_path) {
  fs::remove(dir_ / rel_path);
}

void TestRepo::move(const std::string& from, const std::string& to) {
  fs::create_directories((dir_ / to).parent_path());
  fs::rename(dir_ / from, dir_ / to);
}

std::string TestRepo::commit(const std::string& message) {
  clock_ += 100;
  git({"add", "-A"});
  git({"commit", "-q", "--allow-empty", "-m", message});
  return satdforge::util::trim(git({"rev-parse", "HEAD"}));
}

// ------------------------------------------------------- pipeline fixture

PipelineFixture build_pipeline_fixture(const fs::path& root) {
  PipelineFixture fixture;
  fixture.repo_path = root / "fixuser" / "fixrepo";
  TestRepo repo(fixture.repo_path);

  std::string big_before = "def m_big():\n    # TODO simplify this very large method\n";
  std::string big_after = "def m_big():\n";
  for (int i = 0; i < 300; ++i) {
    big_before += "    a" + std::to_string(i) + " = " + std::to_string(i) + "\n";
    big_after += "    a" + std::to_string(i) + " = " + std::to_string(i) + "\n";
  }
  big_before += "    return a0\n";
  big_after += "    return a0 + 1\n";

  const std::string dup_before =
      "def m_dup():\n"
      "    # TODO use a proper helper\n"
      "    value = compute()\n"
      "    return value\n";
  const std::string dup_after =
      "def m_dup():\n"
      "    value = helper()\n"
      "    return value\n";

  repo.write("persist.py",
             "def keeper():\n"
             "    # TODO keep this forever note\n"
             "    return None\n");
  repo.write("wc.py",
             "def m_wc():\n"
             "    # TODO\n"
             "    y = 1\n"
             "    return y\n");
  repo.write("top.py",
             "# TODO move this elsewhere soon\n"
             "CONST = 1\n"
             "\n"
             "def helper():\n"
             "    return CONST\n");
  repo.write("gone.py",
             "def m_gone():\n"
             "    # TODO delete whole method\n"
             "    return 1\n"
             "\n"
             "def m_stay():\n"
             "    return 2\n");
  repo.write("same.py",
             "def m_same():\n"
             "    # TODO drop this comment\n"
             "    return 42\n");
  repo.write("multi.py",
             "def m_multi():\n"
             "    # TODO first debt item here\n"
             "    x = 1\n"
             "    # FIXME second debt item\n"
             "    return x\n");
  repo.write("ascii.py",
             "def m_ascii():\n"
             "    # TODO fix the caf\xc3\xa9 logic\n"
             "    return \"x\"\n");
  repo.write("big.py", big_before);
  repo.write("dup1.py", dup_before);
  repo.write("dup2.py", dup_before);
  repo.write("clean1.py",
             "def m_one(items):\n"
             "    # TODO validate the input list\n"
             "    total = sum(items)\n"
             "    return total\n");
  repo.write("clean2.py",
             "def m_two(x):\n"
             "    # FIXME handle negative values\n"
             "    return x * 2\n");
  repo.commit("seed files");

  repo.write("wc.py",
             "def m_wc():\n"
             "    y = 2\n"
             "    return y\n");
  repo.write("top.py",
             "CONST = 1\n"
             "\n"
             "def helper():\n"
             "    return CONST\n");
  repo.write("gone.py",
             "def m_stay():\n"
             "    return 2\n");
  repo.write("same.py",
             "def m_same():\n"
             "    return 42\n");
  repo.write("multi.py",
             "def m_multi():\n"
             "    x = 2\n"
             "    # FIXME second debt item\n"
             "    return x\n");
  repo.write("ascii.py",
             "def m_ascii():\n"
             "    return \"y\"\n");
  repo.write("big.py", big_after);
  repo.write("dup1.py", dup_after);
  repo.write("dup2.py", dup_after);
  repo.write("clean1.py",
             "def m_one(items):\n"
             "    if not items:\n"
             "        raise ValueError(\"empty\")\n"
             "    total = sum(items)\n"
             "    return total\n");
  repo.write("clean2.py",
             "def m_two(x):\n"
             "    if x < 0:\n"
             "        x = -x\n"
             "    return x * 2\n");
  repo.commit("repay and remove");

  fixture.expected_stats = {
      {"satd_total", 13},
      {"satd_deleted", 11},
      {"word_count_ge_3", 10},
      {"inside_or_above_method", 9},
      {"method_name_survives", 8},
      {"method_updated", 7},
      {"single_satd_before_none_after", 6},
      {"deduplicated", 5},
      {"ascii_only", 4},
      {"token_limit_1024", 3},
  };
  fixture.expected_final = 3;
  return fixture;
}

// -------------------------------------------------- synthetic histories

namespace {

struct HistoryState {
  // file -> lines (every line globally unique)
  std::map<std::string, std::vector<std::string>> files;
};

std::string fast_import_blob(const std::string& content) {
  return "data " + std::to_string(content.size()) + "\n" + content + "\n";
}

}  // namespace

SyntheticHistory generate_history(const fs::path& root, unsigned seed,
                                  satdforge::code::Language lang) {
  SyntheticHistory history;
  history.repo_path = root / ("hist" + std::to_string(seed));
  fs::create_directories(history.repo_path);

  {
    std::vector<std::string> argv = {"git", "-C", history.repo_path.string(),
                                     "init", "-q", "-b", "main"};
    auto res = run_command(argv);
    if (!res.ok()) throw std::runtime_error("git init failed: " + res.err);
  }

  std::mt19937 rng(seed * 7919u + 13u);
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  auto chance = [&](int percent) {
    return std::uniform_int_distribution<int>(0, 99)(rng) < percent;
  };

  const std::string ext = satdforge::code::source_extension(lang);
  const std::string comment_marker = lang == satdforge::code::Language::Java ? "// " : "# ";
  int counter = 0;
  auto fresh_word = [&]() { return "w" + std::to_string(counter++); };
  auto fresh_code_line = [&]() {
    return "v" + std::to_string(counter++) + " = " + std::to_string(pick(900));
  };
  auto fresh_satd_line = [&]() {
    return comment_marker + "TODO marker s" + std::to_string(counter++) + " " +
           fresh_word() + " " + fresh_word();
  };

  HistoryState state;
  std::string stream;
  int commits = 6 + static_cast<int>(pick(8));
  long long stamp = 1650000000;

  for (int c = 0; c < commits; ++c) {
    // mutate the tree
    int edits = 1 + static_cast<int>(pick(4));
    for (int e = 0; e < edits; ++e) {
      if (state.files.empty() || chance(25)) {
        std::string name = "f" + std::to_string(counter++) + ext;
        std::vector<std::string> lines;
        int n = 2 + static_cast<int>(pick(5));
        for (int l = 0; l < n; ++l)
          lines.push_back(chance(35) ? fresh_satd_line() : fresh_code_line());
        state.files[name] = std::move(lines);
        continue;
      }
      auto it = state.files.begin();
      std::advance(it, static_cast<long>(pick(state.files.size())));
      auto& [name, lines] = *it;
      int op = static_cast<int>(pick(5));
      if (op == 0) {
        lines.insert(lines.begin() + static_cast<long>(pick(lines.size() + 1)),
                     chance(40) ? fresh_satd_line() : fresh_code_line());
      } else if (op == 1 && lines.size() > 1) {
        lines.erase(lines.begin() + static_cast<long>(pick(lines.size())));
      } else if (op == 2) {
        // rename only, content untouched, so -M pairs the files
        std::string new_name = "r" + std::to_string(counter++) + ext;
        auto moved = std::move(lines);
        state.files.erase(it);
        state.files[new_name] = std::move(moved);
      } else if (op == 3 && !lines.empty()) {
        std::size_t idx = pick(lines.size());
        if (lines[idx].rfind(comment_marker, 0) != 0)
          lines[idx] = fresh_code_line();  // code lines may change in place
      } else if (lines.size() > 2 && chance(30)) {
        state.files.erase(it);  // drop the whole file
      } else {
        lines.push_back(fresh_code_line());
      }
    }

    stamp += 60;
    stream += "commit refs/heads/main\n";
    stream += "committer Synthetic <s@example.com> " + std::to_string(stamp) +
              " +0000\n";
    stream += fast_import_blob("commit " + std::to_string(c));
    stream += "deleteall\n";
    for (const auto& [name, lines] : state.files) {
      std::string content;
      for (const auto& l : lines) content += l + "\n";
      stream += "M 100644 inline " + name + "\n";
      stream += "data " + std::to_string(content.size()) + "\n";
      stream += content;
      stream += "\n";
    }
  }
  stream += "done\n";

  RunOptions opts;
  opts.stdin_data = stream;
  auto res = run_command({"git", "-C", history.repo_path.string(),
                          "fast-import", "--quiet", "--done"},
                         opts);
  if (!res.ok()) throw std::runtime_error("fast-import failed: " + res.err);
  run_command({"git", "-C", history.repo_path.string(), "checkout", "-q", "main"});

  // collect every planted SATD line (they all carry "TODO marker")
  std::set<std::string> texts;
  std::string all = stream;
  for (const auto& line : satdforge::util::split_lines(all)) {
    if (line.find("TODO marker") != std::string::npos &&
        line.rfind(comment_marker, 0) == 0)
      texts.insert(line);
  }
  history.planted_texts.assign(texts.begin(), texts.end());
  return history;
}

std::vector<OracleRecord> brute_force_scan(
    const fs::path& repo, const std::vector<std::string>& texts,
    satdforge::code::Language lang) {
  auto git = [&](const std::vector<std::string>& args) {
    std::vector<std::string> argv = {"git", "-C", repo.string()};
    argv.insert(argv.end(), args.begin(), args.end());
    auto res = run_command(argv);
    if (!res.ok()) throw std::runtime_error("oracle git failed: " + res.err);
    return res.out;
  };

  std::vector<std::string> commits;
  for (const auto& line : satdforge::util::split_lines(
           git({"log", "--first-parent", "--reverse", "--format=%H", "HEAD"})))
    if (!line.empty()) commits.push_back(line);

  const std::string ext = satdforge::code::source_extension(lang);

  // snapshot of every commit: file -> lines
  std::vector<std::map<std::string, std::vector<std::string>>> snapshots;
  std::map<std::string, std::vector<std::string>> blob_cache;
  for (const auto& commit : commits) {
    std::map<std::string, std::vector<std::string>> files;
    for (const auto& entry :
         satdforge::util::split_lines(git({"ls-tree", "-r", commit}))) {
      if (entry.empty()) continue;
      std::size_t tab = entry.find('\t');
      std::string meta = entry.substr(0, tab);
      std::string path = entry.substr(tab + 1);
      if (path.size() < ext.size() ||
          path.compare(path.size() - ext.size(), ext.size(), ext) != 0)
        continue;
      std::string sha = meta.substr(meta.rfind(' ') + 1);
      auto cached = blob_cache.find(sha);
      if (cached == blob_cache.end()) {
        std::string content = git({"cat-file", "blob", sha});
        cached = blob_cache
                     .emplace(sha, satdforge::util::split_lines(content))
                     .first;
      }
      files[path] = cached->second;
    }
    snapshots.push_back(std::move(files));
  }

  auto locate = [](const std::map<std::string, std::vector<std::string>>& snap,
                   const std::string& text)
      -> std::optional<std::pair<std::string, int>> {
    for (const auto& [path, lines] : snap) {
      for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i] == text)
          return std::make_pair(path, static_cast<int>(i) + 1);
    }
    return std::nullopt;
  };

  std::vector<OracleRecord> records;
  for (const auto& text : texts) {
    OracleRecord rec;
    rec.comment_text = text;
    std::size_t born = commits.size();
    for (std::size_t c = 0; c < commits.size(); ++c) {
      if (locate(snapshots[c], text)) {
        born = c;
        break;
      }
    }
    if (born == commits.size()) continue;  // never landed on the main branch
    rec.creation_commit = commits[born];
    rec.line_at_creation = locate(snapshots[born], text)->second;
    std::size_t died = commits.size();
    for (std::size_t c = born + 1; c < commits.size(); ++c) {
      if (!locate(snapshots[c], text)) {
        died = c;
        break;
      }
    }
    if (died < commits.size()) {
      rec.deletion_commit = commits[died];
      auto at_parent = locate(snapshots[died - 1], text);
      rec.line_before_deletion = at_parent->second;
      rec.file_path = at_parent->first;
    } else {
      auto at_head = locate(snapshots.back(), text);
      rec.file_path = at_head->first;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

// ------------------------------------------------------------ BLEU oracle

double oracle_bleu(const satdforge::code::TokenStream& candidate,
                   const satdforge::code::TokenStream& reference, int max_order,
                   const std::vector<double>& weights) {
  if (candidate.empty()) return 0.0;

  std::vector<double> precisions;
  std::vector<double> used_weights;
  for (int n = 1; n <= max_order; ++n) {
    auto order = static_cast<std::size_t>(n);
    if (candidate.size() < order) continue;  // no n-grams of this order

    std::vector<std::vector<std::string>> cand_ngrams, ref_pool;
    for (std::size_t i = 0; i + order <= candidate.size(); ++i)
      cand_ngrams.emplace_back(candidate.begin() + static_cast<long>(i),
                               candidate.begin() + static_cast<long>(i + order));
    for (std::size_t i = 0; i + order <= reference.size(); ++i)
      ref_pool.emplace_back(reference.begin() + static_cast<long>(i),
                            reference.begin() + static_cast<long>(i + order));

    // clipping by physically removing matches from the reference pool
    int matched = 0;
    for (const auto& g : cand_ngrams) {
      auto it = std::find(ref_pool.begin(), ref_pool.end(), g);
      if (it != ref_pool.end()) {
        ++matched;
        ref_pool.erase(it);
      }
    }
    double p = static_cast<double>(matched) /
               static_cast<double>(cand_ngrams.size());
    if (p == 0.0) return 0.0;
    precisions.push_back(p);
    used_weights.push_back(weights[static_cast<std::size_t>(n - 1)]);
  }
  if (precisions.empty()) return 0.0;

  double wsum = 0;
  for (double w : used_weights) wsum += w;
  double product = 1.0;
  for (std::size_t i = 0; i < precisions.size(); ++i)
    product *= std::pow(precisions[i], used_weights[i] / wsum);

  auto c = static_cast<double>(candidate.size());
  auto r = static_cast<double>(reference.size());
  double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
  return bp * product;
}

satdforge::code::TokenStream random_stream(std::mt19937& rng,
                                           std::size_t max_len,
                                           int alphabet_size) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> sym(0, alphabet_size - 1);
  satdforge::code::TokenStream stream;
  std::size_t len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i)
    stream.push_back("t" + std::to_string(sym(rng)));
  return stream;
}

}  // namespace testsupport
