#pragma once

#include <cstdint>
#include <vector>

#include "topolab/space.hpp"

namespace topolab {

enum class DedupMode { Labeled, UpToHomeomorphism };

struct SpaceCatalogue {
  DedupMode dedup = DedupMode::Labeled;
  std::vector<FiniteSpace> spaces;
};

// Every topology on {0..n-1}, ordered by ascending family code. In
// up-to-homeomorphism mode, one representative per class: the relabeling
// with the minimum family code. Enumeration walks specialization preorders;
// work is partitioned across workers by the first neighborhood row.
SpaceCatalogue enumerate_topologies(int n, DedupMode mode,
                                    const Limits& limits = {}, int workers = 1);

// All topologies with point counts 1..max_points concatenated in order.
std::vector<FiniteSpace> spaces_up_to(int max_points, const Limits& limits = {},
                                      int workers = 1);

// Minimum family code over all point permutations (n <= 6).
std::uint64_t canonical_family_code(const FiniteSpace& space);

}  // namespace topolab
