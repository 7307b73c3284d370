#include "radalign/retrieval.hpp"

#include <algorithm>
#include <stdexcept>

namespace radalign {

void sort_ranking(std::vector<ScoredItem>& items) {
  std::sort(items.begin(), items.end(), [](const ScoredItem& a, const ScoredItem& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.id < b.id;
  });
}

double map_at_k(const std::vector<MapQuery>& queries, int k) {
  if (queries.empty()) throw std::invalid_argument("map_at_k: no queries");
  if (k < 1) throw std::invalid_argument("map_at_k: k must be positive");
  double total = 0.0;
  for (const auto& q : queries) {
    std::vector<ScoredItem> ranked = q.candidates;
    sort_ranking(ranked);
    size_t total_relevant = 0;
    for (const auto& c : ranked)
      if (q.is_relevant(c.id)) ++total_relevant;
    if (total_relevant == 0) continue;  // contributes 0, still counted
    const size_t cutoff = std::min<size_t>(static_cast<size_t>(k), ranked.size());
    double ap = 0.0;
    size_t hits = 0;
    for (size_t i = 0; i < cutoff; ++i) {
      if (q.is_relevant(ranked[i].id)) {
        ++hits;
        ap += static_cast<double>(hits) / static_cast<double>(i + 1);
      }
    }
    ap /= static_cast<double>(std::min<size_t>(static_cast<size_t>(k), total_relevant));
    total += ap;
  }
  return total / static_cast<double>(queries.size());
}

double recall_at_k(const std::vector<RecallQuery>& queries, int k) {
  if (queries.empty()) throw std::invalid_argument("recall_at_k: no queries");
  if (k < 1) throw std::invalid_argument("recall_at_k: k must be positive");
  size_t hits = 0;
  for (const auto& q : queries) {
    std::vector<ScoredItem> ranked = q.candidates;
    sort_ranking(ranked);
    const size_t cutoff = std::min<size_t>(static_cast<size_t>(k), ranked.size());
    for (size_t i = 0; i < cutoff; ++i) {
      if (ranked[i].id == q.paired_id) {
        ++hits;
        break;
      }
    }
  }
  return static_cast<double>(hits) / static_cast<double>(queries.size());
}

}  // namespace radalign
