#ifndef PFOUR_TABLES_HPP
#define PFOUR_TABLES_HPP

#include <string>
#include <vector>

#include "pfour/classify.hpp"

namespace pfour {

struct Table1Row {
  std::string tau_name;
  /// "p=3" or "p>3" on rows whose entries depend on p = 3, else empty.
  std::string condition;
  MixedModulusMatrix tau;
  std::vector<AbelianElement> fixed_generators;
  MixedModulusMatrix norm;
  std::vector<AbelianElement> image_generators;
  std::vector<AbelianElement> v_choices;
};

struct Table1 {
  Int p = 0;
  Int epsilon = 0;
  std::vector<Table1Row> rows;
};

/**
 * One row per catalog tau. v_choices keeps zero plus those raw v candidates
 * whose group has no C_{p^2} x C_p subgroup; the others are isomorphic to an
 * extension of C_{p^2} x C_p and are dropped for C_p^3.
 */
Table1 emit_table1(const ClassifyConfig& cfg);

struct Table2Row {
  /// 1..11 in the fixed layout; rows absent at this p are skipped.
  int row = 0;
  std::string label;
  std::string tau_name;
  MixedModulusMatrix tau;
  AbelianElement v;
  /// Invariant factors of fixed_points(tau).
  std::vector<Count> center;
  Count census = 0;
  /// "*", "**", ... shared by rows with equal (center, census).
  std::string mark;
  /// center(build_group) matched and brute-force census matched.
  bool verified = false;
};

struct Table2 {
  Int p = 0;
  std::vector<Table2Row> rows;
};

/// Rows are the nonabelian class representatives of @p result.
Table2 emit_table2(const ClassifyConfig& cfg, const ClassificationResult& result);
Table2 emit_table2(const ClassifyConfig& cfg);

std::string render_table1(const Table1& t);
std::string render_table2(const Table2& t);

}  // namespace pfour

#endif
