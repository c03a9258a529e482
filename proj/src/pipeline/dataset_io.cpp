#include "satdforge/pipeline/dataset_io.hpp"

#include <json.hpp>

#include "satdforge/util/fsio.hpp"
#include "satdforge/util/strings.hpp"

namespace satdforge::pipeline {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_fields(const track::SatdRecord& r) {
  ordered_json j;
  j["user"] = r.user;
  j["project"] = r.project;
  j["file_path"] = r.file_path;
  j["creation_commit"] = r.creation_commit;
  if (r.deletion_commit)
    j["deletion_commit"] = *r.deletion_commit;
  else
    j["deletion_commit"] = nullptr;
  j["line_at_creation"] = r.line_at_creation;
  if (r.line_before_deletion)
    j["line_before_deletion"] = *r.line_before_deletion;
  else
    j["line_before_deletion"] = nullptr;
  j["satd_comment"] = r.comment_text;
  j["language"] = code::language_name(r.language);
  return j;
}

track::SatdRecord parse_record(const ordered_json& j, int line_no) {
  track::SatdRecord r;
  try {
    r.user = j.at("user").get<std::string>();
    r.project = j.at("project").get<std::string>();
    r.file_path = j.at("file_path").get<std::string>();
    r.creation_commit = j.at("creation_commit").get<std::string>();
    if (!j.at("deletion_commit").is_null())
      r.deletion_commit = j.at("deletion_commit").get<std::string>();
    r.line_at_creation = j.at("line_at_creation").get<int>();
    if (!j.at("line_before_deletion").is_null())
      r.line_before_deletion = j.at("line_before_deletion").get<int>();
    r.comment_text = j.at("satd_comment").get<std::string>();
    auto lang = code::parse_language(j.at("language").get<std::string>());
    if (!lang) throw DatasetParseError("unknown language", line_no);
    r.language = *lang;
  } catch (const nlohmann::json::exception& e) {
    throw DatasetParseError(e.what(), line_no);
  }
  return r;
}

template <typename T, typename ToJson>
void write_jsonl(const std::vector<T>& rows, const std::filesystem::path& path,
                 ToJson to_json) {
  std::string out;
  for (const T& row : rows) {
    out += to_json(row).dump();
    out += '\n';
  }
  util::write_file_atomic(path, out);
}

template <typename Parse>
auto read_jsonl(const std::filesystem::path& path, Parse parse) {
  auto content = util::read_file(path);
  if (!content)
    throw std::runtime_error("cannot read " + path.string());
  std::vector<decltype(parse(ordered_json{}, 0))> rows;
  int line_no = 0;
  for (const std::string& line : util::split_lines(*content)) {
    ++line_no;
    if (util::is_blank(line)) continue;
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw DatasetParseError("malformed JSON", line_no);
    rows.push_back(parse(j, line_no));
  }
  return rows;
}

}  // namespace

void write_records(const std::vector<track::SatdRecord>& records,
                   const std::filesystem::path& path) {
  write_jsonl(records, path,
              [](const track::SatdRecord& r) { return record_fields(r); });
}

std::vector<track::SatdRecord> read_records(const std::filesystem::path& path) {
  return read_jsonl(path, [](const ordered_json& j, int line_no) {
    return parse_record(j, line_no);
  });
}

void write_dataset(const std::vector<RepaymentSample>& samples,
                   const std::filesystem::path& path) {
  write_jsonl(samples, path, [](const RepaymentSample& s) {
    ordered_json j = record_fields(s.record);
    j["method_before"] = s.method_before;
    j["method_after"] = s.method_after;
    return j;
  });
}

std::vector<RepaymentSample> read_dataset(const std::filesystem::path& path) {
  return read_jsonl(path, [](const ordered_json& j, int line_no) {
    RepaymentSample s;
    s.record = parse_record(j, line_no);
    try {
      s.method_before = j.at("method_before").get<std::string>();
      s.method_after = j.at("method_after").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw DatasetParseError(e.what(), line_no);
    }
    return s;
  });
}

void write_stats(const std::vector<std::pair<std::string, std::size_t>>& rows,
                 const std::filesystem::path& path) {
  std::string out = "step_name\tcount\n";
  for (const auto& [name, count] : rows)
    out += name + "\t" + std::to_string(count) + "\n";
  util::write_file_atomic(path, out);
}

}  // namespace satdforge::pipeline
