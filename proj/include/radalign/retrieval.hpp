#pragma once

#include <functional>
#include <string>
#include <vector>

namespace radalign {

// One scored candidate in a retrieval ranking. Rankings sort by descending
// similarity with ties broken by ascending item id, so every metric is
// deterministic.
struct ScoredItem {
  std::string id;
  double similarity = 0.0;
};

// Sorts in place by (similarity desc, id asc).
void sort_ranking(std::vector<ScoredItem>& items);

struct MapQuery {
  std::vector<ScoredItem> candidates;          // query itself must be excluded
  std::function<bool(const std::string&)> is_relevant;
};

// Mean over queries of average precision truncated at k:
//   AP@k = (sum over relevant hits at positions i<=k of precision@i) / min(k, total relevant)
// A query with zero relevant candidates contributes 0 and is still counted.
double map_at_k(const std::vector<MapQuery>& queries, int k);

struct RecallQuery {
  std::vector<ScoredItem> candidates;
  std::string paired_id;  // exactly one ground-truth candidate
};

// Fraction of queries whose paired item lands in the top k of the ranking.
double recall_at_k(const std::vector<RecallQuery>& queries, int k);

}  // namespace radalign
