#pragma once

#include <string>
#include <utility>
#include <vector>

#include "topolab/pointset.hpp"

namespace topolab {

// Ordered list of distinct index names; subsets of the index are masks over
// label positions.
struct IndexSet {
  std::vector<std::string> labels;

  static IndexSet standard(int k);  // "a", "b", "c", ...
  static IndexSet of(std::vector<std::string> labels);  // validates

  int size() const { return static_cast<int>(labels.size()); }
  int position(const std::string& label) const;  // InputError if absent
  bool operator==(const IndexSet& o) const { return labels == o.labels; }
};

// A proper filter over a finite index set. Members are stored explicitly and
// kept consistent with the principal normal form (all supersets of the core).
class FiniteFilter {
 public:
  static FiniteFilter principal(IndexSet index, Mask core);
  // Upward/intersection closure of the base; improper base -> InputError.
  static FiniteFilter from_base(const IndexSet& index,
                                const std::vector<Mask>& base);

  const IndexSet& index() const { return index_; }
  Mask core() const { return core_; }
  const std::vector<Mask>& members() const { return members_; }

  // Definitional membership test against the explicit member family.
  bool contains(Mask s) const;

  // Complement characterization, cross-checked against |core| == 1.
  bool is_ultrafilter() const;

  // Disjoint (J1, J2) covering the index with neither in the filter.
  // J1 is the singleton of the smallest core element. Pre: not ultrafilter.
  std::pair<Mask, Mask> non_ultra_partition() const;

  // Existence of n distinct members every m of which intersect emptily,
  // decided by search over member subsets.
  bool is_mn_regular(int m, int n) const;

  // Member-family inclusion.
  bool subfilter_of(const FiniteFilter& other) const;

  bool operator==(const FiniteFilter& o) const {
    return index_ == o.index_ && core_ == o.core_;
  }

 private:
  FiniteFilter(IndexSet index, Mask core);

  IndexSet index_;
  Mask core_ = 0;
  std::vector<Mask> members_;
};

// All proper filters on the index, ordered by ascending core mask.
std::vector<FiniteFilter> enumerate_filters(const IndexSet& index,
                                            const Limits& limits = {});
std::vector<FiniteFilter> enumerate_ultrafilters(const IndexSet& index,
                                                 const Limits& limits = {});

// Nonempty family of filters over one index set (finite-index kind).
struct FilterFamily {
  IndexSet index;
  std::vector<FiniteFilter> filters;

  static FilterFamily of(std::vector<FiniteFilter> filters);  // validates
  int size() const { return static_cast<int>(filters.size()); }
};

}  // namespace topolab
