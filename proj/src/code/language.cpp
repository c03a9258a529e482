#include "satdforge/code/language.hpp"

#include "satdforge/util/strings.hpp"

namespace satdforge::code {

std::string language_name(Language lang) {
  return lang == Language::Java ? "java" : "python";
}

std::optional<Language> parse_language(std::string_view name) {
  std::string lower = util::to_lower(name);
  if (lower == "java") return Language::Java;
  if (lower == "python" || lower == "py") return Language::Python;
  return std::nullopt;
}

std::string source_extension(Language lang) {
  return lang == Language::Java ? ".java" : ".py";
}

}  // namespace satdforge::code
