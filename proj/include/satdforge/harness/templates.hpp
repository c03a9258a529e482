#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace satdforge::harness {

enum class TemplateName { MastropaoloT2, NoExplain, CoT1, CoT2, Custom };

// {code} and {comment} each appear exactly once in the body.
struct PromptTemplate {
  TemplateName name = TemplateName::Custom;
  std::string body;
};

PromptTemplate builtin_template(TemplateName name);

std::optional<TemplateName> parse_template_name(std::string_view name);
std::string template_display_name(TemplateName name);

// Bit-exact substitution of code and comment into the template body. Throws
// std::invalid_argument if a placeholder is missing or repeated.
std::string render_repayment_prompt(const PromptTemplate& tpl,
                                    std::string_view code,
                                    std::string_view comment);

}  // namespace satdforge::harness
