#include "satdforge/code/comments.hpp"

#include <cctype>

#include "satdforge/code/scan.hpp"
#include "satdforge/util/strings.hpp"

namespace satdforge::code {

std::vector<CommentSpan> extract_comments(std::string_view source,
                                          Language lang) {
  detail::ScanResult scan = detail::scan_source(source, lang);
  std::vector<CommentSpan> spans;
  for (const auto& r : scan.regions) {
    CommentKind kind = CommentKind::Line;
    switch (r.kind) {
      case detail::Region::Kind::LineComment: kind = CommentKind::Line; break;
      case detail::Region::Kind::BlockComment: kind = CommentKind::Block; break;
      case detail::Region::Kind::DocString: kind = CommentKind::Docstring; break;
      case detail::Region::Kind::StringLit: continue;
    }
    spans.push_back({std::string(source.substr(r.begin, r.end - r.begin)),
                     kind, r.start_line, r.end_line});
  }
  return spans;
}

const std::vector<std::string>& default_satd_keywords() {
  static const std::vector<std::string> keywords = {"TODO", "FIXME", "HACK",
                                                    "XXX"};
  return keywords;
}

namespace {

bool word_boundary(std::string_view text, std::size_t pos, std::size_t len) {
  auto is_word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  if (pos > 0 && is_word(text[pos - 1])) return false;
  if (pos + len < text.size() && is_word(text[pos + len])) return false;
  return true;
}

}  // namespace

bool detect_satd(std::string_view comment_text) {
  return detect_satd(comment_text, default_satd_keywords());
}

bool detect_satd(std::string_view comment_text,
                 const std::vector<std::string>& keywords) {
  std::string lower = util::to_lower(comment_text);
  for (const auto& keyword : keywords) {
    std::string k = util::to_lower(keyword);
    std::size_t pos = 0;
    while ((pos = lower.find(k, pos)) != std::string::npos) {
      if (word_boundary(lower, pos, k.size())) return true;
      pos += 1;
    }
  }
  return false;
}

int satd_word_count(std::string_view comment_text) {
  int count = 0;
  for (std::string line : util::split_lines(std::string(comment_text))) {
    for (std::string_view delim : {"/*", "*/", "'''", "\"\"\""}) {
      std::size_t pos;
      while ((pos = line.find(delim)) != std::string::npos)
        line.replace(pos, delim.size(), " ");
    }
    std::string body = util::lstrip(line);
    std::size_t skip = 0;
    while (skip < body.size() &&
           (body[skip] == '/' || body[skip] == '#' || body[skip] == '*'))
      ++skip;
    count += static_cast<int>(util::whitespace_tokens(body.substr(skip)).size());
  }
  return count;
}

}  // namespace satdforge::code
