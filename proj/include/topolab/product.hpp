#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "topolab/convergence.hpp"

namespace topolab {

// Box(k) keeps rectangles proper in fewer than k coordinates; k = omega
// admits every rectangle, which for finitely many factors is the product
// topology.
struct ProductMode {
  bool box = false;
  bool omega = true;  // only meaningful when box
  int k = 0;

  static ProductMode product() { return {false, true, 0}; }
  static ProductMode box_omega() { return {true, true, 0}; }
  static ProductMode box_k(int k) { return {true, false, k}; }
};

// Finite product with mixed-radix point encoding, first factor most
// significant. Materializes the open family from the rectangle base within
// the configured resource bounds.
class ProductSpace {
 public:
  static ProductSpace build(std::vector<FiniteSpace> factors, ProductMode mode,
                            const Limits& limits = {});

  const std::vector<FiniteSpace>& factors() const { return factors_; }
  const FiniteSpace& space() const { return space_; }
  const ProductMode& mode() const { return mode_; }
  int points() const { return space_.points(); }

  int encode(const std::vector<int>& tuple) const;
  std::vector<int> decode(int point) const;
  int project(int point, int factor) const;
  IndexedSequence project_sequence(const IndexedSequence& seq, int factor) const;

 private:
  ProductSpace(std::vector<FiniteSpace> factors, ProductMode mode,
               FiniteSpace space, std::vector<int> strides);

  std::vector<FiniteSpace> factors_;
  ProductMode mode_;
  FiniteSpace space_;
  std::vector<int> strides_;
};

// Whether (the sequence has an F-limit in the product) iff (each projection
// has an F-limit in its factor). Always expected true; false is a soundness
// alarm.
bool projection_law_check(const ProductSpace& product, const IndexedSequence& seq,
                          const FiniteFilter& F);

// Sequencewise P-compactness of a product without materializing it: factor
// sequences are scanned definitionally, then their admitting sets are
// combined by intersection, which is exactly what the projection law grants.
// Falls back to the materialized definitional scan when the product is small
// enough. False verdicts carry an explicit product sequence, re-verified.
Verdict product_is_p_compact(const std::vector<FiniteSpace>& factors,
                             const FilterFamily& P, const Limits& limits = {});

// Every omega-sequence in the product converges iff that holds per factor.
bool product_every_sequence_converges(const std::vector<FiniteSpace>& factors);

// The diagonal construction: one refuting sequence per filter, assembled
// into a product sequence with no F-limit for any F in the family.
struct DiagonalWitness {
  FilterFamily family;
  std::vector<FiniteSpace> factors;        // one per filter, family order
  std::vector<IndexedSequence> part_seqs;  // seq_F without an F-limit in X_F
  IndexedSequence diagonal;                // encoded product points
};

DiagonalWitness diagonal_counterexample(
    const FilterFamily& P,
    const std::vector<std::pair<FiniteSpace, IndexedSequence>>& witnesses,
    const Limits& limits = {});

// A sequence with empty F-limit built from a non-ultrafilter partition and a
// disjoint closed pair; verified before returning.
IndexedSequence non_ultra_witness_sequence(const FiniteSpace& X,
                                           const FiniteFilter& F, Mask c1,
                                           Mask c2);

// The union subspace of a disjoint nonempty closed pair together with its
// continuous surjection onto the two-point discrete space.
struct SplitWitness {
  FiniteSpace subspace;
  std::vector<int> map;  // into discrete(2): 0 on C, 1 on C'
};

SplitWitness split_to_discrete(const FiniteSpace& X, Mask c, Mask c_prime);

// f(x) = number of chain sets containing x, continuous into iit(k+1);
// continuity is verified before returning.
std::vector<int> chain_function(const FiniteSpace& X,
                                const std::vector<Mask>& chain);

}  // namespace topolab
