#include "satdforge/harness/run_io.hpp"

#include <json.hpp>

#include "satdforge/pipeline/dataset_io.hpp"
#include "satdforge/util/fsio.hpp"
#include "satdforge/util/strings.hpp"

namespace satdforge::harness {

namespace {
using ordered_json = nlohmann::ordered_json;
}

void write_run(const ExperimentRun& run, const std::filesystem::path& path) {
  std::string out;
  for (const auto& item : run.items) {
    ordered_json j;
    j["sample_key"] = item.sample_key;
    j["model_id"] = run.model_id;
    j["template_name"] = run.template_name;
    j["dataset_id"] = run.dataset_id;
    j["generated_raw"] = item.generated_raw;
    j["extracted_code"] = item.extracted_code;
    j["exact_match"] = item.report.exact_match;
    j["bleu_whole"] = item.report.bleu_whole;
    j["crystal_whole"] = item.report.crystal_whole;
    j["bleu_diff"] = item.report.bleu_diff;
    j["crystal_diff"] = item.report.crystal_diff;
    j["line_p"] = item.report.line_p;
    j["line_r"] = item.report.line_r;
    j["line_f"] = item.report.line_f;
    j["deleted_lines"] = item.report.deleted_lines;
    j["inserted_lines"] = item.report.inserted_lines;
    out += j.dump();
    out += '\n';
  }
  util::write_file_atomic(path, out);
}

ExperimentRun read_run(const std::filesystem::path& path) {
  auto content = util::read_file(path);
  if (!content) throw std::runtime_error("cannot read " + path.string());

  ExperimentRun run;
  int line_no = 0;
  for (const std::string& line : util::split_lines(*content)) {
    ++line_no;
    if (util::is_blank(line)) continue;
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw pipeline::DatasetParseError("malformed JSON", line_no);
    try {
      run.model_id = j.at("model_id").get<std::string>();
      run.template_name = j.at("template_name").get<std::string>();
      run.dataset_id = j.at("dataset_id").get<std::string>();
      ItemResult item;
      item.sample_key = j.at("sample_key").get<std::string>();
      item.generated_raw = j.at("generated_raw").get<std::string>();
      item.extracted_code = j.at("extracted_code").get<std::string>();
      item.report.exact_match = j.at("exact_match").get<int>();
      item.report.bleu_whole = j.at("bleu_whole").get<double>();
      item.report.crystal_whole = j.at("crystal_whole").get<double>();
      item.report.bleu_diff = j.at("bleu_diff").get<double>();
      item.report.crystal_diff = j.at("crystal_diff").get<double>();
      item.report.line_p = j.at("line_p").get<double>();
      item.report.line_r = j.at("line_r").get<double>();
      item.report.line_f = j.at("line_f").get<double>();
      item.report.deleted_lines = j.at("deleted_lines").get<long>();
      item.report.inserted_lines = j.at("inserted_lines").get<long>();
      run.items.push_back(std::move(item));
    } catch (const nlohmann::json::exception& e) {
      throw pipeline::DatasetParseError(e.what(), line_no);
    }
  }
  return run;
}

}  // namespace satdforge::harness
