#include "topolab/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "topolab/parallel.hpp"

namespace topolab {
namespace {

// Candidate neighborhood rows for point p: every mask containing p.
std::vector<Mask> row_candidates(int n, int p) {
  std::vector<Mask> out;
  const Mask full = full_mask(n);
  for (Mask m = 0; m <= full; ++m) {
    if (has_point(m, p)) out.push_back(m);
  }
  return out;
}

// Rows form a preorder iff q in rows[p] implies rows[q] subseteq rows[p].
// The DFS checks that condition incrementally against already-placed rows.
void preorder_dfs(int n, int next, std::vector<Mask>& rows,
                  std::vector<std::uint64_t>& out) {
  if (next == n) {
    FiniteSpace sp = FiniteSpace::from_min_nbhds(n, rows);
    out.push_back(sp.family_code());
    return;
  }
  const Mask full = full_mask(n);
  for (Mask m = 0; m <= full; ++m) {
    if (!has_point(m, next)) continue;
    bool ok = true;
    for (int q = 0; q < next && ok; ++q) {
      if (has_point(m, q) && !subset_of(rows[q], m)) ok = false;
      if (ok && has_point(rows[q], next) && !subset_of(m, rows[q])) ok = false;
    }
    if (!ok) continue;
    rows[next] = m;
    preorder_dfs(n, next + 1, rows, out);
  }
}

std::vector<std::uint64_t> all_family_codes(int n, int workers) {
  if (n == 1) return {FiniteSpace::indiscrete(1).family_code()};
  const std::vector<Mask> first = row_candidates(n, 0);
  auto chunks = parallel_map_ordered<std::vector<std::uint64_t>>(
      first.size(), workers, [&](std::size_t i) {
        std::vector<Mask> rows(n);
        rows[0] = first[i];
        std::vector<std::uint64_t> found;
        preorder_dfs(n, 1, rows, found);
        return found;
      });
  std::vector<std::uint64_t> codes;
  for (auto& c : chunks) codes.insert(codes.end(), c.begin(), c.end());
  std::sort(codes.begin(), codes.end());
  return codes;
}

FiniteSpace space_from_family_code(int n, std::uint64_t code) {
  std::vector<Mask> opens;
  for (int s = 0; s < (1 << n); ++s) {
    if ((code >> s) & 1) opens.push_back(static_cast<Mask>(s));
  }
  return FiniteSpace::from_opens(n, std::move(opens));
}

// Per-permutation lookup tables mapping each subset mask to its image.
std::vector<std::vector<std::uint8_t>> permutation_tables(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint8_t>> tables;
  do {
    std::vector<std::uint8_t> table(1 << n);
    for (int s = 0; s < (1 << n); ++s) {
      int t = 0;
      for (int b = 0; b < n; ++b) {
        if ((s >> b) & 1) t |= 1 << perm[b];
      }
      table[s] = static_cast<std::uint8_t>(t);
    }
    tables.push_back(std::move(table));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tables;
}

std::uint64_t remap_code(std::uint64_t code, const std::vector<std::uint8_t>& table) {
  std::uint64_t out = 0;
  while (code) {
    int s = std::countr_zero(code);
    code &= code - 1;
    out |= std::uint64_t{1} << table[s];
  }
  return out;
}

}  // namespace

SpaceCatalogue enumerate_topologies(int n, DedupMode mode, const Limits& limits,
                                    int workers) {
  if (n < 1) throw InputError("enumerate-topologies needs n >= 1");
  const int limit = mode == DedupMode::Labeled ? limits.max_labeled_points
                                               : limits.max_homeo_points;
  if (n > limit) {
    throw ResourceError("enumerate-topologies: n = " + std::to_string(n) +
                        " exceeds limit " + std::to_string(limit));
  }
  std::vector<std::uint64_t> codes = all_family_codes(n, workers);
  if (mode == DedupMode::UpToHomeomorphism) {
    const auto tables = permutation_tables(n);
    std::vector<std::uint64_t> canon = parallel_map_ordered<std::uint64_t>(
        codes.size(), workers, [&](std::size_t i) {
          std::uint64_t best = ~std::uint64_t{0};
          for (const auto& t : tables) best = std::min(best, remap_code(codes[i], t));
          return best;
        });
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    codes = std::move(canon);
  }
  SpaceCatalogue cat;
  cat.dedup = mode;
  cat.spaces.reserve(codes.size());
  for (std::uint64_t c : codes) cat.spaces.push_back(space_from_family_code(n, c));
  return cat;
}

std::vector<FiniteSpace> spaces_up_to(int max_points, const Limits& limits,
                                      int workers) {
  std::vector<FiniteSpace> out;
  for (int n = 1; n <= max_points; ++n) {
    auto cat = enumerate_topologies(n, DedupMode::Labeled, limits, workers);
    out.insert(out.end(), cat.spaces.begin(), cat.spaces.end());
  }
  return out;
}

std::uint64_t canonical_family_code(const FiniteSpace& space) {
  const auto tables = permutation_tables(space.points());
  const std::uint64_t code = space.family_code();
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& t : tables) best = std::min(best, remap_code(code, t));
  return best;
}

}  // namespace topolab
