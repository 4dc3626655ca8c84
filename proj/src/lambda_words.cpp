#include "csf/lambda_words.hpp"

#include <optional>

#include "csf/errors.hpp"
#include "csf/families.hpp"

namespace csf {

LabelledGraph labelled_family(WordFamily family, int n) {
  LabelledGraph out;
  switch (family) {
    case WordFamily::Path:
      if (n < 4) throw DomainError("path words need n >= 4");
      out.graph = families::path(n);
      for (int i = 1; i + 2 < n; ++i) out.labels.emplace_back(i, i + 1);
      break;
    case WordFamily::Cycle:
      if (n < 3) throw DomainError("cycle words need n >= 3");
      out.graph = families::cycle(n);
      for (int i = 0; i < n; ++i) out.labels.emplace_back(i, (i + 1) % n);
      break;
    case WordFamily::Pan:
      if (n < 4) throw DomainError("pan words need n >= 4");
      out.graph = families::pan(n);
      for (int i = 0; i < n - 1; ++i) out.labels.emplace_back(i, (i + 1) % (n - 1));
      break;
  }
  return out;
}

namespace {

using Labels = std::vector<std::optional<EdgeRef>>;

// After merging v into u, relabel endpoints and drop labels that now name
// the same edge as an earlier label.
Labels remap(const Labels& labels, int u, int v, std::size_t acted) {
  Labels out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i == acted || !labels[i]) continue;
    int a = labels[i]->u == v ? u : labels[i]->u;
    int b = labels[i]->v == v ? u : labels[i]->v;
    if (a == b) continue;
    EdgeRef e(a, b);
    bool duplicate = false;
    for (std::size_t j = 0; j < i; ++j) duplicate = duplicate || (out[j] && *out[j] == e);
    if (!duplicate) out[i] = e;
  }
  return out;
}

void walk(const Graph& g, const Labels& labels, std::size_t pos, std::string& word, std::vector<LambdaWord>& out) {
  if (pos == labels.size()) {
    if (!internal_edges(g).empty()) throw DomainError("labelling does not cover every internal edge");
    out.push_back({word, component_partition(g)});
    return;
  }
  const auto& e = labels[pos];
  if (!e || !is_internal_edge(g, *e)) {
    word.push_back('X');
    walk(g, labels, pos + 1, word, out);
    word.pop_back();
    return;
  }
  Labels after_delete = labels;
  after_delete[pos].reset();
  Labels after_merge = remap(labels, e->u, e->v, pos);

  word.push_back('L');
  walk(delete_edge(g, *e), after_delete, pos + 1, word, out);
  word.back() = 'M';
  walk(dot_contract(g, *e), after_merge, pos + 1, word, out);
  word.back() = 'R';
  walk(leaf_contract(g, *e).graph, after_merge, pos + 1, word, out);
  word.pop_back();
}

}  // namespace

std::vector<LambdaWord> lambda_words(WordFamily family, int n) {
  auto lg = labelled_family(family, n);
  Labels labels(lg.labels.begin(), lg.labels.end());
  std::vector<LambdaWord> out;
  std::string word;
  walk(lg.graph, labels, 0, word, out);
  return out;
}

std::vector<std::string> lambda_words_for(WordFamily family, int n, const Partition& lambda) {
  std::vector<std::string> out;
  for (auto& w : lambda_words(family, n)) {
    if (w.forest == lambda) out.push_back(std::move(w.symbols));
  }
  return out;
}

long count_lambda_words(WordFamily family, int n, const Partition& lambda) {
  return static_cast<long>(lambda_words_for(family, n, lambda).size());
}

std::map<Partition, long> lambda_word_counts(WordFamily family, int n) {
  std::map<Partition, long> out;
  for (const auto& w : lambda_words(family, n)) ++out[w.forest];
  return out;
}

WordFamily parse_word_family(std::string_view name) {
  if (name == "path") return WordFamily::Path;
  if (name == "cycle") return WordFamily::Cycle;
  if (name == "pan") return WordFamily::Pan;
  throw ParseError("unknown word family '" + std::string(name) + "' (expected path, cycle or pan)");
}

}  // namespace csf
