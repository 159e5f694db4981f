#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "topolab/pointset.hpp"

namespace topolab {

// A topology on points {0..n-1} with the open family stored explicitly,
// sorted ascending by mask. Immutable after construction.
class FiniteSpace {
 public:
  // Validates the family: must contain the empty and full sets and be closed
  // under pairwise union and intersection.
  static FiniteSpace from_opens(int n, std::vector<Mask> opens);

  // Closes `base` under pairwise unions/intersections and adds empty + full.
  static FiniteSpace from_base(int n, const std::vector<Mask>& base,
                               long max_opens = 1L << 20);

  // Trusted constructor from minimal-neighborhood rows of a preorder
  // (row[p] is the smallest open set containing p). Opens are all up-sets.
  static FiniteSpace from_min_nbhds(int n, const std::vector<Mask>& rows);

  static FiniteSpace discrete(int n);
  static FiniteSpace indiscrete(int n);
  static FiniteSpace sierpinski();  // opens {}, {1}, {0,1}

  // Initial interval topology: opens are exactly the intervals [0, a), a <= n.
  static FiniteSpace iit(int n);

  int points() const { return n_; }
  Mask full() const { return full_mask(n_); }
  const std::vector<Mask>& opens() const { return opens_; }
  std::vector<Mask> closed_sets() const;  // sorted ascending

  bool is_open(Mask s) const;
  bool is_closed(Mask s) const { return is_open(full() & ~s); }

  // Smallest closed superset of a.
  Mask closure(Mask a) const;

  // Smallest open set containing y.
  Mask min_nbhd(int y) const;

  // No two nonempty closed sets are disjoint.
  bool is_ultraconnected() const;
  // First disjoint pair of nonempty closed sets in ascending (C1, C2) order,
  // or nullopt when ultraconnected.
  std::optional<std::pair<Mask, Mask>> disjoint_closed_pair() const;

  // Every m-tuple of points (repetition allowed) has intersecting closures.
  bool is_m_ultraconnected(int m) const;

  // Subspace on the points of s; point k of the subspace is the k-th point
  // of s in ascending order.
  FiniteSpace subspace(Mask s) const;

  // Bitmap over subset indices: bit s set iff mask s is open. Needs n <= 6.
  std::uint64_t family_code() const;

  bool operator==(const FiniteSpace& o) const {
    return n_ == o.n_ && opens_ == o.opens_;
  }

 private:
  FiniteSpace(int n, std::vector<Mask> opens);
  void check_point(int p) const;

  int n_ = 1;
  std::vector<Mask> opens_;
  std::vector<Mask> min_nbhd_;
};

// f maps points of X to points of Y; true iff every preimage of an open of Y
// is open in X.
bool is_continuous(const std::vector<int>& f, const FiniteSpace& X,
                   const FiniteSpace& Y);

}  // namespace topolab
