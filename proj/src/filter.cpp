#include "topolab/filter.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace topolab {

IndexSet IndexSet::standard(int k) {
  if (k < 1) throw InputError("index set must be nonempty");
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    if (i < 26) {
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
      labels.push_back("i" + std::to_string(i));
    }
  }
  return IndexSet{std::move(labels)};
}

IndexSet IndexSet::of(std::vector<std::string> labels) {
  if (labels.empty()) throw InputError("index set must be nonempty");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw InputError("index labels must be distinct");
  if (labels.size() > kMaxPoints) throw ResourceError("index set too large");
  return IndexSet{std::move(labels)};
}

int IndexSet::position(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  throw InputError("unknown index label: " + label);
}

FiniteFilter::FiniteFilter(IndexSet index, Mask core)
    : index_(std::move(index)), core_(core) {
  const Mask full = full_mask(index_.size());
  // Explicit member family: all supersets of the core, ascending. Iterate
  // supersets via the complement-submask trick.
  const Mask free = full & ~core_;
  Mask extra = 0;
  while (true) {
    members_.push_back(core_ | extra);
    if (extra == free) break;
    extra = (extra - free) & free;
  }
  std::sort(members_.begin(), members_.end());
}

FiniteFilter FiniteFilter::principal(IndexSet index, Mask core) {
  if (index.labels.empty()) throw InputError("index set must be nonempty");
  const Mask full = full_mask(static_cast<int>(index.labels.size()));
  if (core & ~full) throw InputError("core has an index out of range");
  if (core == 0) throw InputError("improper filter: empty core");
  return FiniteFilter(std::move(index), core);
}

FiniteFilter FiniteFilter::from_base(const IndexSet& index,
                                     const std::vector<Mask>& base) {
  if (base.empty()) throw InputError("filter base must be nonempty");
  const Mask full = full_mask(index.size());
  Mask core = full;
  for (Mask b : base) {
    if (b & ~full) throw InputError("base set has an index out of range");
    core &= b;
  }
  if (core == 0) {
    throw InputError("improper filter: some finite intersection of the base is empty");
  }
  return FiniteFilter(index, core);
}

bool FiniteFilter::contains(Mask s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool FiniteFilter::is_ultrafilter() const {
  const Mask full = full_mask(index_.size());
  bool by_complements = true;
  for (Mask a = 0; a <= full; ++a) {
    if (!contains(a) && !contains(full & ~a)) {
      by_complements = false;
      break;
    }
  }
  const bool by_core = popcount(core_) == 1;
  if (by_complements != by_core) {
    throw InternalError("ultrafilter characterizations disagree");
  }
  return by_core;
}

std::pair<Mask, Mask> FiniteFilter::non_ultra_partition() const {
  if (is_ultrafilter()) {
    throw InputError("non-ultra-partition: filter is an ultrafilter");
  }
  const Mask j1 = Mask{1} << lowest_point(core_);
  const Mask j2 = full_mask(index_.size()) & ~j1;
  if (contains(j1) || contains(j2)) {
    throw InternalError("non-ultra-partition postcondition failed");
  }
  return {j1, j2};
}

bool FiniteFilter::is_mn_regular(int m, int n) const {
  if (m < 1) throw InputError("is-mn-regular needs m >= 1");
  if (n < 0) throw InputError("is-mn-regular needs n >= 0");
  if (n > static_cast<int>(members_.size())) return false;
  // DFS over ascending member choices; adding a member requires every
  // (m-1)-subset of the current selection to intersect it emptily.
  std::vector<Mask> chosen;
  auto extendable = [&](Mask cand) {
    if (m == 1) return cand == 0;
    const int need = m - 1;
    if (static_cast<int>(chosen.size()) < need) return true;
    std::vector<int> pick(need);
    // Enumerate (m-1)-subsets of chosen by index.
    for (int i = 0; i < need; ++i) pick[i] = i;
    while (true) {
      Mask inter = cand;
      for (int idx : pick) inter &= chosen[idx];
      if (inter != 0) return false;
      int i = need - 1;
      while (i >= 0 && pick[i] == static_cast<int>(chosen.size()) - need + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }
    return true;
  };
  std::function<bool(std::size_t)> dfs = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == n) return true;
    for (std::size_t i = from; i < members_.size(); ++i) {
      if (!extendable(members_[i])) continue;
      chosen.push_back(members_[i]);
      if (dfs(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return dfs(0);
}

bool FiniteFilter::subfilter_of(const FiniteFilter& other) const {
  if (!(index_ == other.index_)) return false;
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::vector<FiniteFilter> enumerate_filters(const IndexSet& index,
                                            const Limits& limits) {
  if (index.size() > limits.max_filter_index) {
    throw ResourceError("enumerate-filters: index size exceeds limit");
  }
  std::vector<FiniteFilter> out;
  const Mask full = full_mask(index.size());
  for (Mask core = 1; core <= full; ++core) {
    out.push_back(FiniteFilter::principal(index, core));
  }
  return out;
}

std::vector<FiniteFilter> enumerate_ultrafilters(const IndexSet& index,
                                                 const Limits& limits) {
  std::vector<FiniteFilter> out;
  for (auto& f : enumerate_filters(index, limits)) {
    if (popcount(f.core()) == 1) out.push_back(std::move(f));
  }
  return out;
}

FilterFamily FilterFamily::of(std::vector<FiniteFilter> filters) {
  if (filters.empty()) throw InputError("filter family must be nonempty");
  for (const auto& f : filters) {
    if (!(f.index() == filters.front().index())) {
      throw InputError("filter family has mixed index sets");
    }
  }
  return FilterFamily{filters.front().index(), std::move(filters)};
}

}  // namespace topolab
