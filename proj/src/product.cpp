#include "topolab/product.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace topolab {
namespace {

std::vector<int> factor_strides(const std::vector<FiniteSpace>& factors) {
  std::vector<int> strides(factors.size(), 1);
  for (int j = static_cast<int>(factors.size()) - 2; j >= 0; --j) {
    strides[j] = strides[j + 1] * factors[j + 1].points();
  }
  return strides;
}

long total_points(const std::vector<FiniteSpace>& factors) {
  long total = 1;
  for (const auto& f : factors) {
    total *= f.points();
    if (total > (1L << 30)) return 1L << 30;
  }
  return total;
}

double pow_count(int radix, int len) {
  double c = 1;
  for (int i = 0; i < len; ++i) c *= radix;
  return c;
}

bool next_tuple(std::vector<int>& t, const std::vector<int>& radix) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < radix[i]) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

ProductSpace::ProductSpace(std::vector<FiniteSpace> factors, ProductMode mode,
                           FiniteSpace space, std::vector<int> strides)
    : factors_(std::move(factors)),
      mode_(mode),
      space_(std::move(space)),
      strides_(std::move(strides)) {}

ProductSpace ProductSpace::build(std::vector<FiniteSpace> factors,
                                 ProductMode mode, const Limits& limits) {
  if (factors.empty()) throw InputError("product needs at least one factor");
  const long total = total_points(factors);
  if (total > limits.max_materialize_points) {
    throw ResourceError("product too large to materialize: " +
                        std::to_string(total) + " points");
  }
  const int n = static_cast<int>(total);
  const std::vector<int> strides = factor_strides(factors);
  const int k = static_cast<int>(factors.size());

  // Rectangle base: one open per factor; box(k) restricts how many
  // coordinates may be proper.
  std::vector<Mask> base;
  std::vector<int> pick(k, 0);
  std::vector<int> radix(k);
  for (int j = 0; j < k; ++j) radix[j] = static_cast<int>(factors[j].opens().size());
  do {
    int proper = 0;
    for (int j = 0; j < k; ++j) {
      if (factors[j].opens()[pick[j]] != factors[j].full()) ++proper;
    }
    if (mode.box && !mode.omega && proper >= mode.k) continue;
    Mask rect = 0;
    for (int point = 0; point < n; ++point) {
      bool inside = true;
      int rest = point;
      for (int j = 0; j < k; ++j) {
        const int coord = rest / strides[j];
        rest %= strides[j];
        if (!has_point(factors[j].opens()[pick[j]], coord)) {
          inside = false;
          break;
        }
      }
      if (inside) rect |= Mask{1} << point;
    }
    base.push_back(rect);
  } while (next_tuple(pick, radix));

  FiniteSpace space = FiniteSpace::from_base(n, base, limits.max_materialize_opens);
  return ProductSpace(std::move(factors), mode, std::move(space), strides);
}

int ProductSpace::encode(const std::vector<int>& tuple) const {
  if (tuple.size() != factors_.size()) {
    throw InputError("tuple arity does not match the factor count");
  }
  int point = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (tuple[j] < 0 || tuple[j] >= factors_[j].points()) {
      throw InputError("tuple coordinate out of range");
    }
    point += tuple[j] * strides_[j];
  }
  return point;
}

std::vector<int> ProductSpace::decode(int point) const {
  if (point < 0 || point >= points()) throw InputError("product point out of range");
  std::vector<int> tuple(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    tuple[j] = point / strides_[j];
    point %= strides_[j];
  }
  return tuple;
}

int ProductSpace::project(int point, int factor) const {
  return decode(point)[static_cast<std::size_t>(factor)];
}

IndexedSequence ProductSpace::project_sequence(const IndexedSequence& seq,
                                               int factor) const {
  IndexedSequence out;
  out.index = seq.index;
  out.points.reserve(seq.points.size());
  for (int p : seq.points) out.points.push_back(project(p, factor));
  return out;
}

bool projection_law_check(const ProductSpace& product, const IndexedSequence& seq,
                          const FiniteFilter& F) {
  const bool in_product = limit_set(product.space(), seq, F) != 0;
  bool all_factors = true;
  for (int j = 0; j < static_cast<int>(product.factors().size()); ++j) {
    if (limit_set(product.factors()[j], product.project_sequence(seq, j), F) == 0) {
      all_factors = false;
      break;
    }
  }
  return in_product == all_factors;
}

namespace {

struct OkProfileWithReps {
  std::vector<OkMask> minimal;
  std::vector<std::vector<int>> reps;  // first sequence achieving each entry
};

OkProfileWithReps profile_with_reps(const FiniteSpace& X, int index_size) {
  std::map<OkMask, std::vector<int>> first_for;
  std::vector<int> tuple(index_size, 0);
  std::vector<int> radix(index_size, X.points());
  do {
    OkMask ok = ok_mask_of_sequence(X, tuple, index_size);
    first_for.emplace(ok, tuple);
  } while (next_tuple(tuple, radix));
  OkProfileWithReps out;
  for (const auto& [ok, rep] : first_for) {
    bool dominated = false;
    for (const auto& [other, rep2] : first_for) {
      if (other != ok && (other & ok) == other) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      out.minimal.push_back(ok);
      out.reps.push_back(rep);
    }
  }
  return out;
}

}  // namespace

Verdict product_is_p_compact(const std::vector<FiniteSpace>& factors,
                             const FilterFamily& P, const Limits& limits) {
  if (factors.empty()) throw InputError("product needs at least one factor");
  const long total = total_points(factors);
  if (total > limits.max_product_points) {
    throw ResourceError("product exceeds the point budget: " +
                        std::to_string(total));
  }
  const int k = P.index.size();
  if (total <= limits.max_materialize_points &&
      pow_count(static_cast<int>(total), k) <=
          static_cast<double>(limits.max_bruteforce_sequences)) {
    ProductSpace prod = ProductSpace::build(factors, ProductMode::product(), limits);
    return is_p_compact(prod.space(), P, limits);
  }

  const OkMask pbits = family_ok_bits(P);
  std::vector<OkProfileWithReps> profiles;
  profiles.reserve(factors.size());
  for (const auto& f : factors) profiles.push_back(profile_with_reps(f, k));

  Verdict v;
  v.method = "shortcut";
  // A product sequence is a tuple of factor sequences; its admitting set is
  // the intersection of theirs. Search the profile combinations for one that
  // misses P entirely.
  std::vector<std::size_t> choice(factors.size(), 0);
  std::function<bool(std::size_t, OkMask)> dfs = [&](std::size_t j, OkMask acc) {
    if ((acc & pbits) == 0) {
      for (std::size_t r = j; r < factors.size(); ++r) choice[r] = 0;
      return true;
    }
    if (j == factors.size()) return false;
    for (std::size_t i = 0; i < profiles[j].minimal.size(); ++i) {
      ++v.checked;
      choice[j] = i;
      if (dfs(j + 1, acc & profiles[j].minimal[i])) return true;
    }
    return false;
  };
  const OkMask all = static_cast<OkMask>((1u << ((1 << k) - 1)) - 1);
  const bool bad_found = dfs(0, all);
  v.value = !bad_found;
  if (bad_found) {
    // Assemble the witness product sequence from the per-factor
    // representatives and re-verify componentwise that no filter admits it.
    const std::vector<int> strides = factor_strides(factors);
    std::vector<int> points(static_cast<std::size_t>(k), 0);
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const auto& rep = profiles[j].reps[choice[j]];
      for (int i = 0; i < k; ++i) points[i] += rep[i] * strides[j];
    }
    IndexedSequence witness{P.index, points};
    for (const auto& f : P.filters) {
      bool some_factor_empty = false;
      for (std::size_t j = 0; j < factors.size(); ++j) {
        const auto& rep = profiles[j].reps[choice[j]];
        IndexedSequence part{P.index, rep};
        if (limit_set(factors[j], part, f) == 0) {
          some_factor_empty = true;
          break;
        }
      }
      if (!some_factor_empty) {
        throw InternalError("factored P-compactness witness failed re-verification");
      }
    }
    v.witness = nlohmann::json{{"sequence", witness.points}};
  }
  return v;
}

bool product_every_sequence_converges(const std::vector<FiniteSpace>& factors) {
  for (const auto& f : factors) {
    if (!every_sequence_converges(f).value) return false;
  }
  return true;
}

DiagonalWitness diagonal_counterexample(
    const FilterFamily& P,
    const std::vector<std::pair<FiniteSpace, IndexedSequence>>& witnesses,
    const Limits& limits) {
  if (witnesses.size() != P.filters.size()) {
    throw InputError("diagonal construction needs one witness per filter");
  }
  DiagonalWitness out;
  out.family = P;
  for (std::size_t j = 0; j < witnesses.size(); ++j) {
    const auto& [space, seq] = witnesses[j];
    if (!(seq.index == P.index)) {
      throw InputError("witness sequence index does not match the family");
    }
    if (limit_set(space, seq, P.filters[j]) != 0) {
      throw InputError("witness pair has a nonempty limit set");
    }
    out.factors.push_back(space);
    out.part_seqs.push_back(seq);
  }
  const long total = total_points(out.factors);
  if (total > limits.max_product_points) {
    throw ResourceError("diagonal product exceeds the point budget");
  }
  const std::vector<int> strides = factor_strides(out.factors);
  std::vector<int> points(static_cast<std::size_t>(P.index.size()), 0);
  for (std::size_t j = 0; j < out.factors.size(); ++j) {
    for (int i = 0; i < P.index.size(); ++i) {
      points[i] += out.part_seqs[j].points[i] * strides[j];
    }
  }
  out.diagonal = IndexedSequence{P.index, points};
  // The projection onto factor j is seq_j, whose F_j-limit set is empty, so
  // no F in the family admits the diagonal. Verify per filter anyway.
  for (std::size_t j = 0; j < P.filters.size(); ++j) {
    if (limit_set(out.factors[j], out.part_seqs[j], P.filters[j]) != 0) {
      throw InternalError("diagonal verification failed");
    }
  }
  return out;
}

IndexedSequence non_ultra_witness_sequence(const FiniteSpace& X,
                                           const FiniteFilter& F, Mask c1,
                                           Mask c2) {
  if (c1 == 0 || c2 == 0) throw InputError("closed pair must be nonempty");
  if (c1 & c2) throw InputError("closed pair must be disjoint");
  if (!X.is_closed(c1) || !X.is_closed(c2)) {
    throw InputError("closed pair must be closed");
  }
  const auto [j1, j2] = F.non_ultra_partition();
  IndexedSequence seq;
  seq.index = F.index();
  seq.points.resize(static_cast<std::size_t>(F.index().size()));
  const int v1 = lowest_point(c1);
  const int v2 = lowest_point(c2);
  for (int i = 0; i < F.index().size(); ++i) {
    seq.points[static_cast<std::size_t>(i)] = has_point(j1, i) ? v1 : v2;
  }
  if (limit_set(X, seq, F) != 0) {
    throw InternalError("non-ultra witness has a limit point");
  }
  return seq;
}

SplitWitness split_to_discrete(const FiniteSpace& X, Mask c, Mask c_prime) {
  if (c == 0 || c_prime == 0) throw InputError("closed pair must be nonempty");
  if (c & c_prime) throw InputError("closed pair must be disjoint");
  if (!X.is_closed(c) || !X.is_closed(c_prime)) {
    throw InputError("closed pair must be closed");
  }
  SplitWitness out{X.subspace(c | c_prime), {}};
  for (int p : mask_points(c | c_prime)) {
    out.map.push_back(has_point(c, p) ? 0 : 1);
  }
  if (!is_continuous(out.map, out.subspace, FiniteSpace::discrete(2))) {
    throw InternalError("split map is not continuous");
  }
  return out;
}

std::vector<int> chain_function(const FiniteSpace& X,
                                const std::vector<Mask>& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] == 0) throw InputError("chain sets must be nonempty");
    if (!X.is_closed(chain[i])) throw InputError("chain sets must be closed");
    if (i + 1 < chain.size() && !subset_of(chain[i + 1], chain[i])) {
      throw InputError("chain must be decreasing");
    }
  }
  std::vector<int> f(static_cast<std::size_t>(X.points()), 0);
  for (int x = 0; x < X.points(); ++x) {
    int count = 0;
    for (Mask c : chain) {
      if (has_point(c, x)) ++count;
    }
    f[static_cast<std::size_t>(x)] = count;
  }
  if (!is_continuous(f, X, FiniteSpace::iit(static_cast<int>(chain.size()) + 1))) {
    throw InternalError("chain function is not continuous");
  }
  return f;
}

}  // namespace topolab
