#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "topolab/filter.hpp"
#include "topolab/omega.hpp"
#include "topolab/space.hpp"

namespace topolab {

// Values indexed by an IndexSet, aligned with its label order.
struct IndexedSequence {
  IndexSet index;
  std::vector<int> points;
};

// An eventually periodic omega-sequence of points; the ambient space is
// supplied per operation.
struct OmegaSequence {
  std::vector<int> prefix;
  std::vector<int> cycle;  // nonempty
};

struct SetSequence {
  IndexSet index;
  std::vector<Mask> sets;
};

struct Verdict {
  bool value = false;
  nlohmann::json witness = nullptr;
  std::string method;  // definitional | shortcut | EP-restricted
  std::uint64_t checked = 0;
};

// F-limit points of the sequence. Always computes both the definitional set
// (every open neighborhood pulls an index set belonging to F) and the
// principal-core route (intersection of the core values' closures); a
// mismatch raises InternalError.
Mask limit_set(const FiniteSpace& X, const IndexedSequence& seq,
               const FiniteFilter& F);
Mask limit_set_definitional(const FiniteSpace& X, const IndexedSequence& seq,
                            const FiniteFilter& F);
Mask limit_set_core(const FiniteSpace& X, const IndexedSequence& seq,
                    const FiniteFilter& F);

// Every sequence over F's index has an F-limit point; false verdicts carry
// the first refuting sequence in enumeration order.
Verdict is_f_compact(const FiniteSpace& X, const FiniteFilter& F,
                     const Limits& limits = {});

// Some F in P admits a limit, sequence by sequence.
Verdict is_p_compact(const FiniteSpace& X, const FilterFamily& P,
                     const Limits& limits = {});

// F_Z-limit points of an eventually periodic sequence: the points whose
// minimal neighborhood covers every value occurring infinitely often along
// Z. Cross-checked against the definitional evaluation on an unrolled
// window of length prefix + 3*lcm.
Mask omega_limit_set(const FiniteSpace& X, const OmegaSequence& seq,
                     const OmegaFilter& F);
Mask omega_limit_set_unrolled(const FiniteSpace& X, const OmegaSequence& seq,
                              const OmegaFilter& F);

// Values occurring infinitely often along Z.
Mask recurrent_values(const FiniteSpace& X, const OmegaSequence& seq,
                      const OmegaFilter& F);

// True for every finite space; the verdict records how many eventually
// periodic sequences were verified to admit a converging EP subsequence.
Verdict is_sequentially_compact(const FiniteSpace& X, int max_cycle_length = 3);

// Every omega-sequence has an F_omega-limit; decided by the finite
// criterion (some point whose minimal neighborhood is the whole space),
// cross-checked by brute force over recurrent value sets.
Verdict every_sequence_converges(const FiniteSpace& X);

// F-limit points of a sequence of nonempty open sets (meets-U test).
Mask set_limit_set(const FiniteSpace& X, const SetSequence& seq,
                   const FiniteFilter& F);

Verdict is_p_pseudocompact(const FiniteSpace& X, const FilterFamily& P,
                           const Limits& limits = {});

// --- admitting-set machinery ----------------------------------------------
// For a fixed index size k, filters on the index are identified with their
// core masks; bit (core-1) of an admitting set records that the sequence has
// a limit under that filter. Products combine these by intersection, which
// is what the projection law licenses.

using OkMask = std::uint32_t;

OkMask ok_mask_of_sequence(const FiniteSpace& X, const std::vector<int>& values,
                           int index_size);

// Minimal achievable admitting sets over all sequences of X, sorted.
std::vector<OkMask> minimal_ok_profile(const FiniteSpace& X, int index_size);

// Bits of P's filters within the canonical filter enumeration of its index.
OkMask family_ok_bits(const FilterFamily& P);

}  // namespace topolab
