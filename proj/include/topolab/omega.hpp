#pragma once

#include <vector>

#include "topolab/config.hpp"

namespace topolab {

// A subset of the naturals given by explicit prefix flags followed by a
// repeating cycle: membership of m >= prefix length t is cycle[(m-t) mod p].
// This class is closed under the Boolean operations and decidable for the
// F_Z membership test, which is all the omega machinery needs.
class EventuallyPeriodicSet {
 public:
  EventuallyPeriodicSet(std::vector<bool> prefix, std::vector<bool> cycle);

  static EventuallyPeriodicSet omega();   // all naturals
  static EventuallyPeriodicSet evens();
  static EventuallyPeriodicSet finite(const std::vector<long>& elements);

  bool member(long m) const;
  bool infinite() const;  // some cycle flag is set
  int prefix_length() const { return static_cast<int>(prefix_.size()); }
  int period() const { return static_cast<int>(cycle_.size()); }
  const std::vector<bool>& prefix() const { return prefix_; }
  const std::vector<bool>& cycle() const { return cycle_; }

  EventuallyPeriodicSet complement() const;
  EventuallyPeriodicSet intersect(const EventuallyPeriodicSet& o) const;
  EventuallyPeriodicSet unite(const EventuallyPeriodicSet& o) const;
  EventuallyPeriodicSet difference(const EventuallyPeriodicSet& o) const;

  // Same set of naturals (compared on an aligned window), regardless of the
  // stored prefix/cycle presentation.
  bool same_set(const EventuallyPeriodicSet& o) const;

 private:
  std::vector<bool> prefix_;
  std::vector<bool> cycle_;
};

// The filter F_Z of all W with Z \ W finite (Frechet filter relativized
// to Z). Z must be infinite.
struct OmegaFilter {
  EventuallyPeriodicSet z;

  static OmegaFilter frechet_on(EventuallyPeriodicSet z);  // validates
  static OmegaFilter frechet() { return frechet_on(EventuallyPeriodicSet::omega()); }
};

// Decides W in F_Z on the combined prefix + lcm cycle.
bool omega_member(const OmegaFilter& f, const EventuallyPeriodicSet& w);

}  // namespace topolab
