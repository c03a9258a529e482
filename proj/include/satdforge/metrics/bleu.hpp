#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "satdforge/code/lexer.hpp"

namespace satdforge::metrics {

struct BleuConfig {
  int max_order = 4;
  std::vector<double> weights = {0.25, 0.25, 0.25, 0.25};
  // 0 keeps the plain formula (a zero precision zeroes the score); a positive
  // value substitutes epsilon/total for zero-match orders.
  double smooth_epsilon = 0.0;

  void validate() const;  // throws std::invalid_argument
};

// The k most frequent n-grams per order over a corpus, unioned across orders.
struct TriviallySharedNgrams {
  std::unordered_set<std::string> ngrams;  // keys as produced by ngram_key
  std::size_t k = 0;
};

// Internal key used for n-gram identity across the metrics code.
std::string ngram_key(const code::TokenStream& tokens, std::size_t start,
                      std::size_t order);

// Modified n-gram precision BLEU with brevity penalty. Orders with no
// candidate n-grams are dropped and the remaining weights renormalized; an
// empty candidate scores 0.
double bleu(const code::TokenStream& candidate,
            const code::TokenStream& reference, const BleuConfig& cfg = {});

TriviallySharedNgrams trivially_shared(
    const std::vector<code::TokenStream>& corpus, std::size_t k,
    int max_order);

// BLEU with the shared n-grams removed from both candidate and reference
// counts; the brevity penalty still uses full token lengths.
double crystal_bleu(const code::TokenStream& candidate,
                    const code::TokenStream& reference,
                    const TriviallySharedNgrams& shared,
                    const BleuConfig& cfg = {});

}  // namespace satdforge::metrics
