#ifndef PFOUR_CLASSIFY_HPP
#define PFOUR_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pfour/extension.hpp"
#include "pfour/group_core.hpp"
#include "pfour/residue_algebra.hpp"

/**
 * @file classify.hpp
 * @brief Groups of order p^4, p odd, as extensions of C_{p^2} x C_p or C_p^3
 * by C_p, plus the five abelian groups.
 *
 * Candidates are (tau, v) pairs with tau from a fixed catalog of order-p
 * automorphisms and v from N^tau modulo the image of the norm map. The
 * candidate groups are folded into isomorphism classes by fingerprint and
 * then by the brute-force oracle.
 */

namespace pfour {

struct ClassifyConfig {
  Int p;
  /// Least quadratic nonresidue mod p.
  Int epsilon;
};

/// Least positive nonsquare mod p, found by squaring every residue. p odd prime.
Int least_nonresidue(Int p);

/// Throws std::invalid_argument unless p is an odd prime <= kMaxPrime.
ClassifyConfig make_config(Int p);

struct CatalogTau {
  /// "r1".."r5" on C_{p^2} x C_p, "J2", "J3" on C_p^3.
  std::string name;
  MixedModulusMatrix tau;
};

/// All seven catalog automorphisms: r1..r5 then J2, J3.
std::vector<CatalogTau> tau_catalog(const ClassifyConfig& cfg);
std::vector<MixedModulusMatrix> tau_candidates(const ClassifyConfig& cfg,
                                               const ModulusProfile& profile);

/**
 * Zero first, then one representative of each nontrivial class of
 * N^tau / im(norm) up to prime-to-p multiples. Representatives are the
 * lexicographically least elements of their class.
 */
std::vector<AbelianElement> v_candidates(const ClassifyConfig& cfg, const MixedModulusMatrix& tau);

/// "v0", "v-e2" for a unit vector, otherwise "v-" and the coordinates joined by '_'.
std::string v_label(const AbelianElement& v);
/// e.g. "2x2-r1-v0", "3x3-J3-v-e1".
std::string candidate_label(const std::string& tau_name, const AbelianElement& v);

struct CandidateType {
  ExtensionType ext;
  std::string table_row_label;
  std::string tau_name;
};

/// Every catalog tau with every v candidate, in catalog order.
std::vector<CandidateType> enumerate_candidates(const ClassifyConfig& cfg);

/// Number of elements of order <= p in the extension, from the norm map alone. Requires n = p.
Count census_closed_form(const ExtensionType& t);

struct AbelianDescriptor {
  /// Cyclic factor orders, ascending.
  std::vector<Count> invariants;
  std::string label;
};

std::vector<AbelianDescriptor> abelian_catalog_types(const ClassifyConfig& cfg);
std::vector<FiniteGroup> abelian_catalog(const ClassifyConfig& cfg);

struct ClassEntry {
  std::string label;
  /// Set for nonabelian classes.
  std::optional<CandidateType> representative;
  /// Set for abelian classes.
  std::optional<AbelianDescriptor> abelian;
  Fingerprint fingerprint;
  /// Labels of candidates found isomorphic to the representative.
  std::vector<std::string> merged_labels;
};

struct ClassificationResult {
  Int p = 0;
  std::vector<ClassEntry> classes;
  std::size_t abelian_count = 0;
  std::size_t nonabelian_count = 0;
  std::size_t total = 0;
  /// Number of oracle calls made during the fold.
  std::size_t oracle_calls = 0;
  /// Empty when the class structure is the expected one.
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

/**
 * Folds @p candidates (sorted by label first, so their order is irrelevant)
 * into isomorphism classes and appends the abelian catalog.
 */
ClassificationResult classify_candidates(const ClassifyConfig& cfg,
                                         std::vector<CandidateType> candidates);
ClassificationResult classify_p4(const ClassifyConfig& cfg);

/// Abelian subgroup of order >= |g|/p, if one exists.
std::optional<Subgroup> find_large_abelian_subgroup(const FiniteGroup& g);
bool verify_prop_abelian_subgroup(const FiniteGroup& g);

/// A subgroup isomorphic to C_{p^2} x C_p, p the least prime dividing |g|.
std::optional<Subgroup> find_cp2_times_cp(const FiniteGroup& g);
/// No element of order p^3, or a C_{p^2} x C_p subgroup exists.
bool verify_prop_no_cyclic(const FiniteGroup& g);

}  // namespace pfour

#endif
