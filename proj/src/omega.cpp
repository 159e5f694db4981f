#include "topolab/omega.hpp"

#include <algorithm>
#include <numeric>

namespace topolab {
namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

EventuallyPeriodicSet::EventuallyPeriodicSet(std::vector<bool> prefix,
                                             std::vector<bool> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw InputError("eventually periodic set needs a nonempty cycle");
}

EventuallyPeriodicSet EventuallyPeriodicSet::omega() {
  return EventuallyPeriodicSet({}, {true});
}

EventuallyPeriodicSet EventuallyPeriodicSet::evens() {
  return EventuallyPeriodicSet({}, {true, false});
}

EventuallyPeriodicSet EventuallyPeriodicSet::finite(const std::vector<long>& elements) {
  long top = -1;
  for (long e : elements) {
    if (e < 0) throw InputError("natural numbers only");
    top = std::max(top, e);
  }
  std::vector<bool> prefix(static_cast<std::size_t>(top + 1), false);
  for (long e : elements) prefix[static_cast<std::size_t>(e)] = true;
  return EventuallyPeriodicSet(std::move(prefix), {false});
}

bool EventuallyPeriodicSet::member(long m) const {
  if (m < 0) return false;
  const long t = prefix_length();
  if (m < t) return prefix_[static_cast<std::size_t>(m)];
  return cycle_[static_cast<std::size_t>((m - t) % period())];
}

bool EventuallyPeriodicSet::infinite() const {
  return std::find(cycle_.begin(), cycle_.end(), true) != cycle_.end();
}

EventuallyPeriodicSet EventuallyPeriodicSet::complement() const {
  std::vector<bool> p(prefix_), c(cycle_);
  p.flip();
  c.flip();
  return EventuallyPeriodicSet(std::move(p), std::move(c));
}

namespace {

// Pointwise combination on the common prefix length and lcm period.
EventuallyPeriodicSet combine(const EventuallyPeriodicSet& a,
                              const EventuallyPeriodicSet& b,
                              bool (*op)(bool, bool)) {
  const long t = std::max(a.prefix_length(), b.prefix_length());
  const long l = lcm_long(a.period(), b.period());
  std::vector<bool> prefix(static_cast<std::size_t>(t));
  for (long m = 0; m < t; ++m) prefix[m] = op(a.member(m), b.member(m));
  std::vector<bool> cycle(static_cast<std::size_t>(l));
  for (long r = 0; r < l; ++r) cycle[r] = op(a.member(t + r), b.member(t + r));
  return EventuallyPeriodicSet(std::move(prefix), std::move(cycle));
}

}  // namespace

EventuallyPeriodicSet EventuallyPeriodicSet::intersect(
    const EventuallyPeriodicSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && y; });
}

EventuallyPeriodicSet EventuallyPeriodicSet::unite(
    const EventuallyPeriodicSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x || y; });
}

EventuallyPeriodicSet EventuallyPeriodicSet::difference(
    const EventuallyPeriodicSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && !y; });
}

bool EventuallyPeriodicSet::same_set(const EventuallyPeriodicSet& o) const {
  const long t = std::max(prefix_length(), o.prefix_length());
  const long l = lcm_long(period(), o.period());
  for (long m = 0; m < t + l; ++m) {
    if (member(m) != o.member(m)) return false;
  }
  return true;
}

OmegaFilter OmegaFilter::frechet_on(EventuallyPeriodicSet z) {
  if (!z.infinite()) throw InputError("F_Z needs an infinite Z");
  return OmegaFilter{std::move(z)};
}

bool omega_member(const OmegaFilter& f, const EventuallyPeriodicSet& w) {
  // Z \ W is finite iff it is empty past the combined prefix, which only
  // needs one combined cycle to decide.
  const EventuallyPeriodicSet bad = f.z.difference(w);
  return !bad.infinite();
}

}  // namespace topolab
