#pragma once

#include <map>
#include <string>
#include <vector>

#include "csf/graph.hpp"
#include "csf/partition.hpp"

namespace csf {

enum class WordFamily { Path, Cycle, Pan };

/// The family graph on n vertices with its internal edges labelled 1..s
/// consecutively: paths left to right, cycles around, pans around the cycle
/// starting and ending next to the pendant edge.
struct LabelledGraph {
  Graph graph;
  std::vector<EdgeRef> labels;
};

LabelledGraph labelled_family(WordFamily family, int n);

/// Every DNC-tree leaf as a word over {L, M, R, X}, acting at each stage on
/// the remaining internal edge with the smallest label, with its star forest.
struct LambdaWord {
  std::string symbols;
  Partition forest;
};

std::vector<LambdaWord> lambda_words(WordFamily family, int n);
/// Words whose star forest is St_lambda.
std::vector<std::string> lambda_words_for(WordFamily family, int n, const Partition& lambda);
long count_lambda_words(WordFamily family, int n, const Partition& lambda);
/// Number of words per star forest, for every forest that occurs.
std::map<Partition, long> lambda_word_counts(WordFamily family, int n);

WordFamily parse_word_family(std::string_view name);

}  // namespace csf
