#include "satdforge/metrics/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace satdforge::metrics {

void BleuConfig::validate() const {
  if (max_order < 1) throw std::invalid_argument("BLEU order must be >= 1");
  if (static_cast<int>(weights.size()) != max_order)
    throw std::invalid_argument("BLEU needs one weight per order");
  double sum = 0;
  for (double w : weights) {
    if (w < 0) throw std::invalid_argument("BLEU weights must be >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("BLEU weights must sum to 1");
}

std::string ngram_key(const code::TokenStream& tokens, std::size_t start,
                      std::size_t order) {
  std::string key;
  for (std::size_t i = 0; i < order; ++i) {
    if (i) key.push_back('\x1f');
    key += tokens[start + i];
  }
  return key;
}

namespace {

using Counts = std::unordered_map<std::string, long>;

Counts ngram_counts(const code::TokenStream& tokens, std::size_t order,
                    const TriviallySharedNgrams* excluded) {
  Counts counts;
  if (tokens.size() < order) return counts;
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    std::string key = ngram_key(tokens, i, order);
    if (excluded && excluded->ngrams.count(key)) continue;
    ++counts[key];
  }
  return counts;
}

double bleu_impl(const code::TokenStream& candidate,
                 const code::TokenStream& reference,
                 const TriviallySharedNgrams* excluded,
                 const BleuConfig& cfg) {
  cfg.validate();
  const auto c = static_cast<double>(candidate.size());
  const auto r = static_cast<double>(reference.size());
  if (candidate.empty()) return 0.0;

  double weight_sum = 0.0;
  std::vector<std::pair<double, double>> precisions;  // (p_n, w_n)
  for (int n = 1; n <= cfg.max_order; ++n) {
    Counts cand = ngram_counts(candidate, static_cast<std::size_t>(n), excluded);
    long total = 0;
    for (const auto& [key, count] : cand) total += count;
    if (total == 0) continue;  // dropped order; weights renormalize below

    Counts ref = ngram_counts(reference, static_cast<std::size_t>(n), excluded);
    long matched = 0;
    for (const auto& [key, count] : cand) {
      auto it = ref.find(key);
      if (it != ref.end()) matched += std::min(count, it->second);
    }
    double p = static_cast<double>(matched) / static_cast<double>(total);
    if (p == 0.0) {
      if (cfg.smooth_epsilon <= 0.0) return 0.0;
      p = cfg.smooth_epsilon / static_cast<double>(total);
    }
    precisions.emplace_back(p, cfg.weights[static_cast<std::size_t>(n - 1)]);
    weight_sum += cfg.weights[static_cast<std::size_t>(n - 1)];
  }
  if (precisions.empty() || weight_sum <= 0.0) return 0.0;

  double log_sum = 0.0;
  for (const auto& [p, w] : precisions) log_sum += (w / weight_sum) * std::log(p);
  double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
  return bp * std::exp(log_sum);
}

}  // namespace

double bleu(const code::TokenStream& candidate,
            const code::TokenStream& reference, const BleuConfig& cfg) {
  return bleu_impl(candidate, reference, nullptr, cfg);
}

double crystal_bleu(const code::TokenStream& candidate,
                    const code::TokenStream& reference,
                    const TriviallySharedNgrams& shared,
                    const BleuConfig& cfg) {
  return bleu_impl(candidate, reference, &shared, cfg);
}

TriviallySharedNgrams trivially_shared(
    const std::vector<code::TokenStream>& corpus, std::size_t k,
    int max_order) {
  TriviallySharedNgrams shared;
  shared.k = k;
  if (k == 0) return shared;
  for (int n = 1; n <= max_order; ++n) {
    std::map<std::string, long> freq;  // ordered: ties resolve lexicographically
    for (const auto& stream : corpus) {
      if (stream.size() < static_cast<std::size_t>(n)) continue;
      for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= stream.size();
           ++i)
        ++freq[ngram_key(stream, i, static_cast<std::size_t>(n))];
    }
    std::vector<std::pair<std::string, long>> ranked(freq.begin(), freq.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) {
                       return a.second > b.second;
                     });
    for (std::size_t i = 0; i < ranked.size() && i < k; ++i)
      shared.ngrams.insert(ranked[i].first);
  }
  return shared;
}

}  // namespace satdforge::metrics
