#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topolab/enumerate.hpp"
#include "topolab/product.hpp"

namespace topolab {

// Comfort preorder relative to a catalogue: F <= G iff every G-compact
// member is F-compact. Filters may live over different index sets.
bool comfort_leq(const FiniteFilter& F, const FiniteFilter& G,
                 const SpaceCatalogue& K, const Limits& limits = {},
                 const FiniteSpace** witness = nullptr);

struct ComfortReport {
  std::vector<FiniteFilter> filters;
  std::size_t catalogue_size = 0;
  std::vector<std::vector<bool>> relation;  // relation[i][j]: filter i <= filter j
  std::vector<std::vector<int>> classes;    // symmetric quotient, by least member
  std::optional<int> minimum;               // index into classes, when one exists
};

ComfortReport comfort_report(const std::vector<FiniteFilter>& filters,
                             const SpaceCatalogue& K, const Limits& limits = {},
                             int workers = 1);

// One bounded product check: which multiset of factors, and the verdict.
struct ProductCheck {
  std::vector<int> members;  // indices into the space list, nondecreasing
  bool p_compact = false;
  bool skipped = false;  // over the resource bound
};

struct Thm21Report {
  std::optional<FiniteFilter> cond3_filter;  // first equivalence witness in P
  std::vector<bool> pcompact_members;        // per space of K
  std::vector<ProductCheck> cond2_products;  // exactly |P| factors
  std::vector<ProductCheck> cond1_products;  // 1..product_bound factors
  bool cond2_ok = true;
  bool cond1_ok = true;
  bool bounded = false;  // some product exceeded the resource bound
  bool ultrafilter_clause_triggered = false;
  bool ultrafilter_clause_ok = true;
  std::optional<DiagonalWitness> counterexample;
};

Thm21Report thm21_check(const SpaceCatalogue& K, const FilterFamily& P,
                        int product_bound, const Limits& limits = {});

struct Cor22Report {
  std::optional<FiniteFilter> cond3_filter;  // some F with every member F-compact
  std::vector<ProductCheck> cond2_products;
  std::vector<ProductCheck> cond1_products;
  bool cond2_ok = true;
  bool cond1_ok = true;
  bool bounded = false;
};

Cor22Report cor22_check(const SpaceCatalogue& K, const FilterFamily& P,
                        int product_bound, const Limits& limits = {});

struct Cor23Report {
  bool power_p_compact = false;              // X^|P|
  std::optional<FiniteFilter> compact_via;   // first F in P with X F-compact
  bool has_disjoint_closed_pair = false;
  bool ultrafilter_clause_triggered = false;
  bool ultrafilter_clause_ok = true;
  std::string method;  // definitional | shortcut (factored power)
};

Cor23Report cor23_check(const FiniteSpace& X, const FilterFamily& P,
                        const Limits& limits = {});

struct Cor54Report {
  std::vector<bool> all_sequences_converge;  // condition (3), per member
  bool cond3 = false;
  bool cond4_bounded = true;   // every sequence converges in bounded products
  bool cond1_bounded = true;   // bounded products sequentially compact
  std::vector<ProductCheck> power_checks;  // X^power_bound, the finite stand-in
  bool finite_scale_artifact = false;  // cond1 holds while cond3 fails
  std::string note;
  bool bounded = false;
};

Cor54Report cor54_check(const SpaceCatalogue& T, int power_bound,
                        const Limits& limits = {});

// Every open cover of size <= n has a subcover of size < m.
bool covering_compact(const FiniteSpace& X, int m, int n,
                      const Limits& limits = {});

}  // namespace topolab
