#include "satdforge/harness/templates.hpp"

#include <algorithm>
#include <stdexcept>

#include "satdforge/util/strings.hpp"

namespace satdforge::harness {

PromptTemplate builtin_template(TemplateName name) {
  switch (name) {
    case TemplateName::MastropaoloT2:
      return {name,
              "Perform removal of this SATD: {comment} from this code: {code}"};
    case TemplateName::NoExplain:
      return {name,
              "How to update the following code to resolve the SATD? No need "
              "to explain. Just provide the updated code.\n"
              "### Code:\n"
              "{code}\n"
              "### SATD comment:\n"
              "{comment}\n"
              "### Updated code after SATD repayment:"};
    case TemplateName::CoT1:
      return {name,
              "How to update the following code to resolve the SATD?\n"
              "### Code:\n"
              "{code}\n"
              "### SATD comment:\n"
              "{comment}\n"
              "### Consider the following questions in your answer:\n"
              "Shortly explain how to resolve the SATD.\n"
              "Provide the updated code."};
    case TemplateName::CoT2:
      return {name,
              "How to update the following code to resolve the Self-Admitted "
              "Technical Debt (SATD)?\n"
              "### Code:\n"
              "{code}\n"
              "### SATD comment:\n"
              "{comment}\n"
              "### Consider the following questions in your answer:\n"
              "1. Briefly explain how to resolve the SATD.\n"
              "2. Provide the updated code."};
    case TemplateName::Custom:
      break;
  }
  throw std::invalid_argument("no builtin body for custom templates");
}

std::optional<TemplateName> parse_template_name(std::string_view name) {
  std::string lower = util::to_lower(name);
  if (lower == "mastropaolo-t2") return TemplateName::MastropaoloT2;
  if (lower == "noexplain") return TemplateName::NoExplain;
  if (lower == "cot1") return TemplateName::CoT1;
  if (lower == "cot2") return TemplateName::CoT2;
  if (lower == "custom") return TemplateName::Custom;
  return std::nullopt;
}

std::string template_display_name(TemplateName name) {
  switch (name) {
    case TemplateName::MastropaoloT2: return "Mastropaolo-T2";
    case TemplateName::NoExplain: return "NoExplain";
    case TemplateName::CoT1: return "CoT1";
    case TemplateName::CoT2: return "CoT2";
    case TemplateName::Custom: return "custom";
  }
  return "custom";
}

namespace {

std::size_t find_unique(const std::string& body, std::string_view placeholder) {
  std::size_t pos = body.find(placeholder);
  if (pos == std::string::npos)
    throw std::invalid_argument("template is missing " +
                                std::string(placeholder));
  if (body.find(placeholder, pos + 1) != std::string::npos)
    throw std::invalid_argument("template repeats " + std::string(placeholder));
  return pos;
}

}  // namespace

std::string render_repayment_prompt(const PromptTemplate& tpl,
                                    std::string_view code,
                                    std::string_view comment) {
  const std::string& body = tpl.body;
  // Both placeholders are located up front so substituted text can never be
  // mistaken for a placeholder itself.
  struct Slot {
    std::size_t pos;
    std::size_t len;
    std::string_view value;
  };
  Slot slots[2] = {{find_unique(body, "{code}"), 6, code},
                   {find_unique(body, "{comment}"), 9, comment}};
  if (slots[0].pos > slots[1].pos) std::swap(slots[0], slots[1]);

  std::string out;
  out.reserve(body.size() + code.size() + comment.size());
  out.append(body, 0, slots[0].pos);
  out.append(slots[0].value);
  out.append(body, slots[0].pos + slots[0].len,
             slots[1].pos - slots[0].pos - slots[0].len);
  out.append(slots[1].value);
  out.append(body, slots[1].pos + slots[1].len, std::string::npos);
  return out;
}

}  // namespace satdforge::harness
