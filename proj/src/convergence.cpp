#include "topolab/convergence.hpp"

#include <algorithm>
#include <numeric>

namespace topolab {
namespace {

void check_sequence(const FiniteSpace& X, const IndexedSequence& seq) {
  if (seq.points.size() != static_cast<std::size_t>(seq.index.size())) {
    throw InputError("sequence is not total on its index set");
  }
  for (int p : seq.points) {
    if (p < 0 || p >= X.points()) throw InputError("sequence value out of range");
  }
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

int seq_value_at(const OmegaSequence& seq, long m) {
  const long t = static_cast<long>(seq.prefix.size());
  if (m < t) return seq.prefix[static_cast<std::size_t>(m)];
  const long p = static_cast<long>(seq.cycle.size());
  return seq.cycle[static_cast<std::size_t>((m - t) % p)];
}

void check_omega_sequence(const FiniteSpace& X, const OmegaSequence& seq) {
  if (seq.cycle.empty()) throw InputError("omega-sequence needs a nonempty cycle");
  for (int v : seq.prefix) {
    if (v < 0 || v >= X.points()) throw InputError("sequence value out of range");
  }
  for (int v : seq.cycle) {
    if (v < 0 || v >= X.points()) throw InputError("sequence value out of range");
  }
}

// Odometer over value tuples in index order, first position most
// significant; yields sequences in lexicographic order.
bool next_tuple(std::vector<int>& t, int radix) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < radix) return true;
    t[i] = 0;
  }
  return false;
}

double pow_count(int radix, int len) {
  double c = 1;
  for (int i = 0; i < len; ++i) c *= radix;
  return c;
}

}  // namespace

Mask limit_set_definitional(const FiniteSpace& X, const IndexedSequence& seq,
                            const FiniteFilter& F) {
  check_sequence(X, seq);
  if (!(seq.index == F.index())) {
    throw InputError("sequence and filter index sets differ");
  }
  Mask out = 0;
  for (int x = 0; x < X.points(); ++x) {
    bool ok = true;
    for (Mask u : X.opens()) {
      if (!has_point(u, x)) continue;
      Mask idx = 0;
      for (int i = 0; i < seq.index.size(); ++i) {
        if (has_point(u, seq.points[i])) idx |= Mask{1} << i;
      }
      if (!F.contains(idx)) {
        ok = false;
        break;
      }
    }
    if (ok) out |= Mask{1} << x;
  }
  return out;
}

Mask limit_set_core(const FiniteSpace& X, const IndexedSequence& seq,
                    const FiniteFilter& F) {
  check_sequence(X, seq);
  Mask inter = X.full();
  Mask core = F.core();
  while (inter && core) {
    const int i = std::countr_zero(core);
    core &= core - 1;
    inter &= X.closure(Mask{1} << seq.points[i]);
  }
  return inter;
}

Mask limit_set(const FiniteSpace& X, const IndexedSequence& seq,
               const FiniteFilter& F) {
  const Mask definitional = limit_set_definitional(X, seq, F);
  const Mask shortcut = limit_set_core(X, seq, F);
  if (definitional != shortcut) {
    throw InternalError("limit-set routes disagree");
  }
  return definitional;
}

namespace {

// Shared scan for F/P-compactness: find the first sequence (lexicographic)
// with empty limit set under every filter of the list.
Verdict compact_scan(const FiniteSpace& X, const std::vector<FiniteFilter>& fs,
                     const IndexSet& index, const Limits& limits,
                     const std::string& method) {
  if (pow_count(X.points(), index.size()) >
      static_cast<double>(limits.max_bruteforce_sequences)) {
    throw ResourceError("compactness scan exceeds sequence budget");
  }
  Verdict v;
  v.method = method;
  v.value = true;
  std::vector<int> tuple(index.size(), 0);
  do {
    ++v.checked;
    bool admitted = false;
    for (const auto& f : fs) {
      IndexedSequence seq{index, tuple};
      if (limit_set(X, seq, f) != 0) {
        admitted = true;
        break;
      }
    }
    if (!admitted) {
      v.value = false;
      v.witness = nlohmann::json{{"sequence", tuple}};
      return v;
    }
  } while (next_tuple(tuple, X.points()));
  return v;
}

}  // namespace

Verdict is_f_compact(const FiniteSpace& X, const FiniteFilter& F,
                     const Limits& limits) {
  return compact_scan(X, {F}, F.index(), limits, "definitional");
}

Verdict is_p_compact(const FiniteSpace& X, const FilterFamily& P,
                     const Limits& limits) {
  return compact_scan(X, P.filters, P.index, limits, "definitional");
}

Mask recurrent_values(const FiniteSpace& X, const OmegaSequence& seq,
                      const OmegaFilter& F) {
  check_omega_sequence(X, seq);
  const long t = std::max<long>(static_cast<long>(seq.prefix.size()),
                                F.z.prefix_length());
  const long l = lcm_long(static_cast<long>(seq.cycle.size()), F.z.period());
  Mask v = 0;
  for (long r = 0; r < l; ++r) {
    if (F.z.member(t + r)) v |= Mask{1} << seq_value_at(seq, t + r);
  }
  return v;
}

Mask omega_limit_set(const FiniteSpace& X, const OmegaSequence& seq,
                     const OmegaFilter& F) {
  const Mask v = recurrent_values(X, seq, F);
  Mask out = 0;
  for (int y = 0; y < X.points(); ++y) {
    if (subset_of(v, X.min_nbhd(y))) out |= Mask{1} << y;
  }
  const Mask oracle = omega_limit_set_unrolled(X, seq, F);
  if (out != oracle) throw InternalError("omega limit-set routes disagree");
  return out;
}

Mask omega_limit_set_unrolled(const FiniteSpace& X, const OmegaSequence& seq,
                              const OmegaFilter& F) {
  check_omega_sequence(X, seq);
  const long t = std::max<long>(static_cast<long>(seq.prefix.size()),
                                F.z.prefix_length());
  const long l = lcm_long(static_cast<long>(seq.cycle.size()), F.z.period());
  const long window = t + 3 * l;
  Mask out = 0;
  for (int y = 0; y < X.points(); ++y) {
    bool is_limit = true;
    for (Mask u : X.opens()) {
      if (!has_point(u, y)) continue;
      // {m : x_m in U} belongs to F_Z iff Z \ {..} is finite; on eventually
      // periodic data a bad position recurs within every tail cycle, so the
      // last two unrolled cycles decide finiteness.
      bool bad_tail = false;
      for (long m = t + l; m < window; ++m) {
        if (F.z.member(m) && !has_point(u, seq_value_at(seq, m))) {
          bad_tail = true;
          break;
        }
      }
      if (bad_tail) {
        is_limit = false;
        break;
      }
    }
    if (is_limit) out |= Mask{1} << y;
  }
  return out;
}

Verdict is_sequentially_compact(const FiniteSpace& X, int max_cycle_length) {
  Verdict v;
  v.method = "EP-restricted";
  v.value = true;
  // Every eventually periodic sequence restricts, along the positions of its
  // first cycle value, to a constant subsequence; verify convergence there
  // for every cycle up to the sample bound.
  for (int len = 1; len <= max_cycle_length; ++len) {
    std::vector<int> cycle(len, 0);
    do {
      ++v.checked;
      OmegaSequence seq{{}, cycle};
      const int value = cycle[0];
      std::vector<bool> zflags(len, false);
      for (int i = 0; i < len; ++i) zflags[i] = cycle[i] == value;
      OmegaFilter fz = OmegaFilter::frechet_on(EventuallyPeriodicSet({}, zflags));
      if (!has_point(omega_limit_set(X, seq, fz), value)) {
        v.value = false;
        v.witness = nlohmann::json{{"cycle", cycle}};
        return v;
      }
    } while (next_tuple(cycle, X.points()));
  }
  return v;
}

Verdict every_sequence_converges(const FiniteSpace& X) {
  Verdict v;
  v.method = "shortcut";
  // Finite criterion: some point sees the whole space as its only
  // neighborhood.
  int hub = -1;
  for (int y = 0; y < X.points(); ++y) {
    if (X.min_nbhd(y) == X.full()) {
      hub = y;
      break;
    }
  }
  // Cross-check: every nonempty recurrent value set V must admit a point
  // whose minimal neighborhood covers V.
  Mask first_bad = 0;
  for (Mask vs = 1; vs <= X.full(); ++vs) {
    ++v.checked;
    bool converges = false;
    for (int y = 0; y < X.points(); ++y) {
      if (subset_of(vs, X.min_nbhd(y))) {
        converges = true;
        break;
      }
    }
    if (!converges) {
      first_bad = vs;
      break;
    }
  }
  if ((hub >= 0) != (first_bad == 0)) {
    throw InternalError("every-sequence-converges routes disagree");
  }
  v.value = hub >= 0;
  if (v.value) {
    v.witness = nlohmann::json{{"point", hub}};
  } else {
    v.witness = nlohmann::json{{"cycle", mask_points(first_bad)}};
  }
  return v;
}

Mask set_limit_set(const FiniteSpace& X, const SetSequence& seq,
                   const FiniteFilter& F) {
  if (seq.sets.size() != static_cast<std::size_t>(seq.index.size())) {
    throw InputError("set sequence is not total on its index set");
  }
  if (!(seq.index == F.index())) {
    throw InputError("set sequence and filter index sets differ");
  }
  for (Mask y : seq.sets) {
    if (y == 0) throw InputError("set sequence values must be nonempty");
    if (!X.is_open(y)) throw InputError("set sequence values must be open");
  }
  Mask out = 0;
  for (int x = 0; x < X.points(); ++x) {
    bool ok = true;
    for (Mask u : X.opens()) {
      if (!has_point(u, x)) continue;
      Mask idx = 0;
      for (int i = 0; i < seq.index.size(); ++i) {
        if (seq.sets[i] & u) idx |= Mask{1} << i;
      }
      if (!F.contains(idx)) {
        ok = false;
        break;
      }
    }
    if (ok) out |= Mask{1} << x;
  }
  return out;
}

Verdict is_p_pseudocompact(const FiniteSpace& X, const FilterFamily& P,
                           const Limits& limits) {
  std::vector<Mask> opens;
  for (Mask o : X.opens()) {
    if (o != 0) opens.push_back(o);
  }
  if (pow_count(static_cast<int>(opens.size()), P.index.size()) >
      static_cast<double>(limits.max_bruteforce_sequences)) {
    throw ResourceError("pseudocompactness scan exceeds sequence budget");
  }
  Verdict v;
  v.method = "definitional";
  v.value = true;
  std::vector<int> pick(P.index.size(), 0);
  do {
    ++v.checked;
    SetSequence seq;
    seq.index = P.index;
    seq.sets.reserve(pick.size());
    for (int i : pick) seq.sets.push_back(opens[i]);
    bool admitted = false;
    for (const auto& f : P.filters) {
      if (set_limit_set(X, seq, f) != 0) {
        admitted = true;
        break;
      }
    }
    if (!admitted) {
      v.value = false;
      nlohmann::json sets = nlohmann::json::array();
      for (Mask s : seq.sets) sets.push_back(mask_points(s));
      v.witness = nlohmann::json{{"sets", sets}};
      return v;
    }
  } while (next_tuple(pick, static_cast<int>(opens.size())));
  return v;
}

OkMask ok_mask_of_sequence(const FiniteSpace& X, const std::vector<int>& values,
                           int index_size) {
  // inter[c] over core masks c, built by peeling the lowest index bit.
  const int cores = (1 << index_size) - 1;
  std::vector<Mask> inter(static_cast<std::size_t>(cores) + 1);
  inter[0] = X.full();
  std::vector<Mask> cls(X.points());
  for (int p = 0; p < X.points(); ++p) cls[p] = X.closure(Mask{1} << p);
  OkMask ok = 0;
  for (int c = 1; c <= cores; ++c) {
    const int low = std::countr_zero(static_cast<unsigned>(c));
    inter[c] = inter[c & (c - 1)] & cls[values[low]];
    if (inter[c] != 0) ok |= OkMask{1} << (c - 1);
  }
  return ok;
}

std::vector<OkMask> minimal_ok_profile(const FiniteSpace& X, int index_size) {
  std::vector<OkMask> seen;
  std::vector<int> tuple(index_size, 0);
  do {
    seen.push_back(ok_mask_of_sequence(X, tuple, index_size));
  } while (next_tuple(tuple, X.points()));
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  std::vector<OkMask> minimal;
  for (OkMask a : seen) {
    bool dominated = false;
    for (OkMask b : seen) {
      if (b != a && (b & a) == b) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(a);
  }
  return minimal;
}

OkMask family_ok_bits(const FilterFamily& P) {
  if (P.index.size() > 5) {
    throw ResourceError("admitting-set machinery needs |I| <= 5");
  }
  OkMask bits = 0;
  for (const auto& f : P.filters) {
    bits |= OkMask{1} << (f.core() - 1);
  }
  return bits;
}

}  // namespace topolab
