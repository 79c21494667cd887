#include "catalan/kernels.hpp"

#include <algorithm>
#include <numeric>

#include "catalan/motzkin.hpp"
#include "catalan/plane_tree.hpp"

namespace catalan::kernels {

std::size_t shard_depth(const StepAlphabet& alphabet, std::size_t length, std::size_t target) {
  std::size_t depth = 0;
  while (depth < length && completable_prefixes(alphabet, length, depth).size() < target) ++depth;
  return depth;
}

ParityTally tree_leaf_parity(std::size_t n, Execution ex) {
  return reduce_words<ParityTally>(
      StepAlphabet::parentheses(), 2 * n,
      [](ParityTally& acc, std::string_view w) { acc.add(encoding_stats(w).leaves % 2 == 0); }, ex);
}

ParityTally legal_tree_leaf_parity(std::size_t n, Execution ex) {
  return reduce_words<ParityTally>(
      StepAlphabet::parentheses(), 2 * n,
      [](ParityTally& acc, std::string_view w) {
        if (is_legal_encoding(w)) acc.add(encoding_stats(w).leaves % 2 == 0);
      },
      ex);
}

LeafLevelHistograms tree_leaf_and_level_histograms(std::size_t n, Execution ex) {
  return reduce_words<LeafLevelHistograms>(
      StepAlphabet::parentheses(), 2 * n,
      [](LeafLevelHistograms& acc, std::string_view w) {
        const TreeStats s = encoding_stats(w);
        acc.leaves.add(s.leaves);
        acc.even_level.add(s.even_level);
      },
      ex);
}

ParityTally path_statistic_parity(std::size_t length, Execution ex) {
  return reduce_words<ParityTally>(
      StepAlphabet::two_motzkin(), length,
      [](ParityTally& acc, std::string_view w) { acc.add(path_stats(w).statistic % 2 == 0); }, ex);
}

Histogram path_wavy_histogram(std::size_t length, Execution ex) {
  return reduce_words<Histogram>(
      StepAlphabet::two_motzkin(), length,
      [](Histogram& acc, std::string_view w) {
        acc.add(static_cast<std::size_t>(std::count(w.begin(), w.end(), 'W')));
      },
      ex);
}

Histogram udu_row(std::size_t semilength, Execution ex) {
  return reduce_words<Histogram>(
      StepAlphabet::dyck(), 2 * semilength, [](Histogram& acc, std::string_view w) { acc.add(udu_count(w)); }, ex);
}

ParityTally labelled_leaf_parity(std::size_t n, Execution ex) {
  return reduce_words<ParityTally>(
      StepAlphabet::parentheses(), 2 * n,
      [n](ParityTally& acc, std::string_view w) {
        // every labelling is walked; the leaf count depends on the shape only
        const bool even = encoding_stats(w).leaves % 2 == 0;
        std::vector<int> labels(n + 1);
        std::iota(labels.begin(), labels.end(), 1);
        do {
          acc.add(even);
        } while (std::next_permutation(labels.begin(), labels.end()));
      },
      ex);
}

namespace {

bool strictly_before(const StepAlphabet& a, std::string_view x, std::string_view y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [&](char p, char q) { return a.rank(p) < a.rank(q); });
}

}  // namespace

void WordCount::add(const StepAlphabet& a, std::string_view w) {
  alphabet = &a;
  if (count == 0)
    first.assign(w);
  else if (!strictly_before(a, last, w))
    ++out_of_order;
  ++count;
  last.assign(w);
}

void WordCount::merge(const WordCount& o) {
  if (o.count == 0) return;
  if (count == 0) {
    *this = o;
    return;
  }
  if (!strictly_before(*o.alphabet, last, o.first)) ++out_of_order;
  count += o.count;
  out_of_order += o.out_of_order;
  last = o.last;
}

WordCount count_words(const StepAlphabet& alphabet, std::size_t length, Execution ex) {
  return reduce_words<WordCount>(
      alphabet, length, [&alphabet](WordCount& acc, std::string_view w) { acc.add(alphabet, w); }, ex);
}

}  // namespace catalan::kernels
