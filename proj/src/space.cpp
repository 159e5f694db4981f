#include "topolab/space.hpp"

#include <algorithm>
#include <set>

namespace topolab {

FiniteSpace::FiniteSpace(int n, std::vector<Mask> opens)
    : n_(n), opens_(std::move(opens)) {
  min_nbhd_.assign(n_, full());
  for (int p = 0; p < n_; ++p) {
    for (Mask o : opens_) {
      if (has_point(o, p)) min_nbhd_[p] &= o;
    }
  }
}

FiniteSpace FiniteSpace::from_opens(int n, std::vector<Mask> opens) {
  if (n < 1) throw InputError("space must have at least one point");
  if (n > kMaxPoints) throw ResourceError("space too large: " + std::to_string(n));
  const Mask full = full_mask(n);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (Mask o : opens) {
    if (o & ~full) throw InputError("open set has a point out of range");
  }
  if (opens.empty() || opens.front() != 0 || opens.back() != full) {
    throw InputError("open family must contain the empty set and the full set");
  }
  if (opens.size() > 4096) {
    throw ResourceError("open family too large to validate pairwise");
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      Mask u = opens[i] | opens[j];
      Mask w = opens[i] & opens[j];
      if (!std::binary_search(opens.begin(), opens.end(), u) ||
          !std::binary_search(opens.begin(), opens.end(), w)) {
        throw InputError("open family is not closed under union/intersection");
      }
    }
  }
  return FiniteSpace(n, std::move(opens));
}

FiniteSpace FiniteSpace::from_base(int n, const std::vector<Mask>& base,
                                   long max_opens) {
  if (n < 1) throw InputError("space must have at least one point");
  if (n > kMaxPoints) throw ResourceError("space too large: " + std::to_string(n));
  const Mask full = full_mask(n);
  std::set<Mask> fam{Mask{0}, full};
  for (Mask b : base) {
    if (b & ~full) throw InputError("base set has a point out of range");
    fam.insert(b);
  }
  // Fixpoint closure under pairwise union and intersection.
  std::vector<Mask> work(fam.begin(), fam.end());
  while (!work.empty()) {
    std::vector<Mask> next;
    for (Mask a : work) {
      for (Mask b : fam) {
        for (Mask c : {a | b, a & b}) {
          if (fam.insert(c).second) {
            next.push_back(c);
            if (static_cast<long>(fam.size()) > max_opens) {
              throw ResourceError("open-family closure exceeds limit");
            }
          }
        }
      }
    }
    work = std::move(next);
  }
  return FiniteSpace(n, std::vector<Mask>(fam.begin(), fam.end()));
}

FiniteSpace FiniteSpace::from_min_nbhds(int n, const std::vector<Mask>& rows) {
  // Opens are the sets S with row[p] subseteq S for every p in S. For n <= 6
  // enumerate subsets directly; beyond that close the rows under union.
  std::vector<Mask> opens;
  if (n <= 6) {
    const Mask full = full_mask(n);
    for (Mask s = 0;; ++s) {
      bool up = true;
      Mask rest = s;
      while (rest) {
        int p = std::countr_zero(rest);
        rest &= rest - 1;
        if (!subset_of(rows[p], s)) {
          up = false;
          break;
        }
      }
      if (up) opens.push_back(s);
      if (s == full) break;
    }
    return FiniteSpace(n, std::move(opens));
  }
  return from_base(n, rows);
}

FiniteSpace FiniteSpace::discrete(int n) {
  if (n < 1) throw InputError("space must have at least one point");
  std::vector<Mask> rows(n);
  for (int p = 0; p < n; ++p) rows[p] = Mask{1} << p;
  return from_min_nbhds(n, rows);
}

FiniteSpace FiniteSpace::indiscrete(int n) {
  if (n < 1) throw InputError("space must have at least one point");
  return FiniteSpace(n, {Mask{0}, full_mask(n)});
}

FiniteSpace FiniteSpace::sierpinski() {
  return FiniteSpace(2, {Mask{0}, Mask{0b10}, Mask{0b11}});
}

FiniteSpace FiniteSpace::iit(int n) {
  if (n < 1) throw InputError("iit-space needs n >= 1");
  if (n > kMaxPoints) throw ResourceError("space too large: " + std::to_string(n));
  std::vector<Mask> opens;
  for (int a = 0; a <= n; ++a) opens.push_back(full_mask(a));
  return FiniteSpace(n, std::move(opens));
}

std::vector<Mask> FiniteSpace::closed_sets() const {
  std::vector<Mask> out;
  out.reserve(opens_.size());
  for (Mask o : opens_) out.push_back(full() & ~o);
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteSpace::is_open(Mask s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

Mask FiniteSpace::closure(Mask a) const {
  if (a & ~full()) throw InputError("closure: point out of range");
  // Complement of the union of all opens disjoint from a.
  Mask avoid = 0;
  for (Mask o : opens_) {
    if ((o & a) == 0) avoid |= o;
  }
  return full() & ~avoid;
}

Mask FiniteSpace::min_nbhd(int y) const {
  check_point(y);
  return min_nbhd_[y];
}

void FiniteSpace::check_point(int p) const {
  if (p < 0 || p >= n_) {
    throw InputError("point " + std::to_string(p) + " out of range 0.." +
                     std::to_string(n_ - 1));
  }
}

std::optional<std::pair<Mask, Mask>> FiniteSpace::disjoint_closed_pair() const {
  const std::vector<Mask> closed = closed_sets();
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (closed[i] == 0) continue;
    for (std::size_t j = i + 1; j < closed.size(); ++j) {
      if (closed[j] == 0) continue;
      if ((closed[i] & closed[j]) == 0) return std::make_pair(closed[i], closed[j]);
    }
  }
  return std::nullopt;
}

bool FiniteSpace::is_ultraconnected() const { return !disjoint_closed_pair(); }

bool FiniteSpace::is_m_ultraconnected(int m) const {
  if (m < 1) throw InputError("is-m-ultraconnected needs m >= 1");
  // A tuple's closure intersection only depends on its set of distinct
  // values, so scan value sets of size <= min(m, n).
  const int k = std::min(m, n_);
  std::vector<Mask> cls(n_);
  for (int p = 0; p < n_; ++p) cls[p] = closure(Mask{1} << p);
  const Mask full = full_mask(n_);
  for (Mask v = 1; v <= full; ++v) {
    if (popcount(v) > k) continue;
    Mask inter = full;
    Mask rest = v;
    while (rest) {
      inter &= cls[std::countr_zero(rest)];
      rest &= rest - 1;
    }
    if (inter == 0) return false;
  }
  return true;
}

FiniteSpace FiniteSpace::subspace(Mask s) const {
  if (s & ~full()) throw InputError("subspace: point out of range");
  if (s == 0) throw InputError("subspace must be nonempty");
  const std::vector<int> pts = mask_points(s);
  std::vector<int> newid(n_, -1);
  for (std::size_t i = 0; i < pts.size(); ++i) newid[pts[i]] = static_cast<int>(i);
  std::set<Mask> fam;
  for (Mask o : opens_) {
    Mask t = 0;
    Mask rest = o & s;
    while (rest) {
      t |= Mask{1} << newid[std::countr_zero(rest)];
      rest &= rest - 1;
    }
    fam.insert(t);
  }
  return FiniteSpace(static_cast<int>(pts.size()),
                     std::vector<Mask>(fam.begin(), fam.end()));
}

std::uint64_t FiniteSpace::family_code() const {
  if (n_ > 6) throw ResourceError("family_code needs n <= 6");
  std::uint64_t code = 0;
  for (Mask o : opens_) code |= std::uint64_t{1} << o;
  return code;
}

bool is_continuous(const std::vector<int>& f, const FiniteSpace& X,
                   const FiniteSpace& Y) {
  if (static_cast<int>(f.size()) != X.points()) {
    throw InputError("map must be total on the domain");
  }
  for (int v : f) {
    if (v < 0 || v >= Y.points()) throw InputError("map value out of range");
  }
  for (Mask o : Y.opens()) {
    Mask pre = 0;
    for (int p = 0; p < X.points(); ++p) {
      if (has_point(o, f[p])) pre |= Mask{1} << p;
    }
    if (!X.is_open(pre)) return false;
  }
  return true;
}

}  // namespace topolab
