#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catalan/lattice_words.hpp"

namespace catalan::kernels {

enum class Execution { Serial, Parallel };

struct ParityTally {
  long long even = 0;
  long long odd = 0;

  void add(bool is_even) { (is_even ? even : odd) += 1; }
  void add(bool is_even, long long weight) { (is_even ? even : odd) += weight; }
  void merge(const ParityTally& o) {
    even += o.even;
    odd += o.odd;
  }
  long long total() const { return even + odd; }
  long long signed_sum() const { return even - odd; }
  friend bool operator==(const ParityTally&, const ParityTally&) = default;
};

struct Histogram {
  std::vector<long long> counts;

  void add(std::size_t k, long long weight = 1) {
    if (k >= counts.size()) counts.resize(k + 1, 0);
    counts[k] += weight;
  }
  void merge(const Histogram& o) {
    for (std::size_t k = 0; k < o.counts.size(); ++k) add(k, o.counts[k]);
  }
  long long total() const {
    long long t = 0;
    for (long long c : counts) t += c;
    return t;
  }
  friend bool operator==(const Histogram&, const Histogram&) = default;
};

// Smallest prefix length giving at least `target` shards (or the whole word).
std::size_t shard_depth(const StepAlphabet& alphabet, std::size_t length, std::size_t target = 256);

// Folds visit(acc, word) over every lattice word of the given length. The parallel path
// splits the words by prefix, reduces each shard independently and merges the partial
// results in prefix order, so Acc::merge only needs to be associative; results (including
// any "first counterexample" an accumulator keeps) match the serial path exactly.
template <class Acc, class Visit>
Acc reduce_words(const StepAlphabet& alphabet, std::size_t length, Visit&& visit, Execution ex) {
  if (ex == Execution::Serial) {
    Acc acc{};
    for_each_lattice_word(alphabet, length, {}, [&](std::string_view w) { visit(acc, w); });
    return acc;
  }
  const std::vector<std::string> prefixes =
      completable_prefixes(alphabet, length, shard_depth(alphabet, length));
  std::vector<Acc> parts(prefixes.size());
  const long shards = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < shards; ++i) {
    Acc& acc = parts[static_cast<std::size_t>(i)];
    for_each_lattice_word(alphabet, length, prefixes[static_cast<std::size_t>(i)],
                          [&](std::string_view w) { visit(acc, w); });
  }
  Acc acc{};
  for (const Acc& p : parts) acc.merge(p);
  return acc;
}

// Leaf parity over all plane trees with n edges.
ParityTally tree_leaf_parity(std::size_t n, Execution ex);

// Leaf parity restricted to legal trees (the part the involution leaves fixed).
ParityTally legal_tree_leaf_parity(std::size_t n, Execution ex);

struct LeafLevelHistograms {
  Histogram leaves;
  Histogram even_level;
  void merge(const LeafLevelHistograms& o) {
    leaves.merge(o.leaves);
    even_level.merge(o.even_level);
  }
};
LeafLevelHistograms tree_leaf_and_level_histograms(std::size_t n, Execution ex);

// Parity of 1 + ups + wavies over all 2-Motzkin paths of the given length.
ParityTally path_statistic_parity(std::size_t length, Execution ex);
Histogram path_wavy_histogram(std::size_t length, Execution ex);

// Row k -> number of Dyck paths of the given semilength with k occurrences of UDU.
Histogram udu_row(std::size_t semilength, Execution ex);

// Leaf parity over all labelled plane trees with n edges, each labelling visited.
ParityTally labelled_leaf_parity(std::size_t n, Execution ex);

struct WordCount {
  long long count = 0;
  long long out_of_order = 0;  // adjacent pairs not strictly increasing
  std::string first;
  std::string last;
  const StepAlphabet* alphabet = nullptr;

  void add(const StepAlphabet& a, std::string_view w);
  void merge(const WordCount& o);
};
// Counts words and checks the stream is strictly increasing (hence duplicate free).
WordCount count_words(const StepAlphabet& alphabet, std::size_t length, Execution ex);

}  // namespace catalan::kernels
