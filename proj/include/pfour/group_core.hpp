#ifndef PFOUR_GROUP_CORE_HPP
#define PFOUR_GROUP_CORE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

/**
 * @file group_core.hpp
 * @brief Finite groups stored as full multiplication tables.
 *
 * Every invariant here is a brute-force scan over the table. That is the
 * intended scale: groups of order up to a few thousand.
 */

namespace pfour {

using ElementIndex = std::uint32_t;
using Count = std::uint64_t;

/// Largest group build_group and the catalog constructors will materialize.
inline constexpr std::size_t kMaxMaterializedOrder = 4096;

class FiniteGroup {
 public:
  /**
   * @p table is row-major, table[a * order + b] = a * b. Entries and the
   * identity must be in range; the group axioms are not checked here (see
   * verify_group_axioms).
   */
  FiniteGroup(std::size_t order, std::vector<ElementIndex> table, ElementIndex identity,
              std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  ElementIndex identity() const { return identity_; }
  ElementIndex mul(ElementIndex a, ElementIndex b) const { return table_[a * order_ + b]; }
  /// Right inverse found by scanning the row; kNoInverse when missing.
  ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }
  ElementIndex power(ElementIndex a, Count k) const;
  std::span<const ElementIndex> table() const { return table_; }
  std::string label(ElementIndex a) const;
  bool has_labels() const { return !labels_.empty(); }

  static constexpr ElementIndex kNoInverse = static_cast<ElementIndex>(-1);

 private:
  std::size_t order_;
  std::vector<ElementIndex> table_;
  ElementIndex identity_;
  std::vector<std::string> labels_;
  std::vector<ElementIndex> inverses_;
};

struct AxiomReport {
  bool ok = true;
  /// "associativity", "identity" or "inverse" when !ok.
  std::string failure;
  /// Offending triple (associativity) or element.
  std::vector<ElementIndex> witness;

  explicit operator bool() const { return ok; }
};

AxiomReport verify_group_axioms(const FiniteGroup& g);
/// Identity and inverses exhaustively, associativity on @p samples random triples.
AxiomReport verify_group_axioms_sampled(const FiniteGroup& g, std::size_t samples,
                                        std::uint64_t seed);

/// Subgroup as a sorted element list with a small generating set.
struct Subgroup {
  std::vector<ElementIndex> elements;
  std::vector<ElementIndex> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(ElementIndex e) const;
};

Count element_order(const FiniteGroup& g, ElementIndex i);
std::vector<Count> element_orders(const FiniteGroup& g);
std::map<Count, Count> order_census(const FiniteGroup& g);
/// Number of elements x with x^k = identity.
Count count_power_trivial(const FiniteGroup& g, Count k);
Count exponent(const FiniteGroup& g);
/// Smallest prime factor of |g| (1 for the trivial group).
Count smallest_prime_factor(Count n);

bool elements_commute(const FiniteGroup& g, ElementIndex a, ElementIndex b);
bool is_abelian(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g, const Subgroup& s);
bool is_normal(const FiniteGroup& g, const Subgroup& s);

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const ElementIndex> seeds);
/// Wraps a closed element set; generators chosen greedily.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<ElementIndex> elements);
Subgroup whole_group(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, ElementIndex a);
/// Subgroup generated by all commutators a b a^-1 b^-1.
Subgroup derived_subgroup(const FiniteGroup& g);
/// Subgroup generated by { x^k : x in g }.
Subgroup power_subgroup(const FiniteGroup& g, Count k);

/**
 * Greedy generating sequence: repeatedly add the element outside the current
 * closure that enlarges it most, preferring larger order and then smaller
 * index.
 */
std::vector<ElementIndex> generating_sequence(const FiniteGroup& g);

/// Invariant factors d1 | d2 | ... (ascending). Throws std::invalid_argument if s is not abelian.
std::vector<Count> abelian_invariants(const FiniteGroup& g, const Subgroup& s);
std::vector<Count> abelian_invariants(const FiniteGroup& g);

/// Group of cosets x*n; cosets are numbered by their least element. Throws if n is not normal.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n);

struct Fingerprint {
  Count group_order = 0;
  std::vector<Count> center_invariants;
  Count census_le_p = 0;
  Count derived_order = 0;
  std::vector<Count> abelianization_invariants;
  Count exponent = 0;
  bool power_quotient_abelian = false;
  bool low_order_commute = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

struct IsomorphismResult {
  bool isomorphic = false;
  /// witness[i] = image in g2 of element i of g1, when isomorphic.
  std::vector<ElementIndex> witness;

  explicit operator bool() const { return isomorphic; }
};

/// True iff @p map is a bijective homomorphism g1 -> g2.
bool is_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2,
                    std::span<const ElementIndex> map);

/**
 * Brute-force isomorphism test. Fingerprints are compared first; on a tie the
 * generating sequence of g1 is mapped into g2 by backtracking over images
 * with matching element invariants. The witness is the one whose generator
 * images are lexicographically least, and is re-verified before returning.
 */
IsomorphismResult isomorphic(const FiniteGroup& g1, const FiniteGroup& g2);

/// Direct product of cyclic groups; elements in lexicographic coordinate order.
FiniteGroup abelian_group(std::span<const Count> cyclic_orders);

}  // namespace pfour

#endif
