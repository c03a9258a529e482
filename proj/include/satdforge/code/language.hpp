#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace satdforge::code {

enum class Language { Java, Python };

std::string language_name(Language lang);                       // "java" / "python"
std::optional<Language> parse_language(std::string_view name);  // case-insensitive
std::string source_extension(Language lang);                    // ".java" / ".py"

}  // namespace satdforge::code
