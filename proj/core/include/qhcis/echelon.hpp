#pragma once

#include "qhcis/scalars.hpp"

#include <map>

namespace qhcis {

/// Incremental row echelon over Q(sqrt 2) with sparse rows keyed by an
/// ordered key type. Rows are normalized so the leading key has
/// coefficient 1; reduction walks keys in increasing order.
template <class Key>
class SparseEchelon {
public:
  using Row = std::map<Key, QuadExt>;

  Row reduce(Row v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto pivot = rows_.find(it->first);
      if (pivot == rows_.end()) {
        ++it;
        continue;
      }
      QuadExt c = it->second;
      const Key key = it->first;
      for (const auto& [k, w] : pivot->second) {
        auto [jt, fresh] = v.emplace(k, QuadExt(0));
        jt->second -= c * w;
        if (jt->second.is_zero()) v.erase(jt);
      }
      it = v.upper_bound(key);
    }
    return v;
  }

  /// Inserts a row; returns false when it was already in the span.
  bool insert(Row v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    QuadExt lead = v.begin()->second;
    for (auto& [k, c] : v) c /= lead;
    Key pivot = v.begin()->first;
    rows_.emplace(std::move(pivot), std::move(v));
    return true;
  }

  bool contains(Row v) const { return reduce(std::move(v)).empty(); }
  size_t rank() const { return rows_.size(); }

private:
  std::map<Key, Row> rows_;
};

}  // namespace qhcis
