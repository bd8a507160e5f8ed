#include "pfour/tables.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pfour {

namespace {

std::string join_elements(const std::vector<AbelianElement>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? ", " : "") + xs[i].to_string();
  return s;
}

std::string span_text(const std::vector<AbelianElement>& gens) {
  return gens.empty() ? "0" : "<" + join_elements(gens) + ">";
}

std::string cyclic_product(const std::vector<Count>& invariants) {
  if (invariants.empty())
    return "1";
  std::string s;
  for (auto it = invariants.rbegin(); it != invariants.rend(); ++it)
    s += (it != invariants.rbegin() ? "xC" : "C") + std::to_string(*it);
  return s;
}

std::string aligned(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      line += cells[r][c];
      if (c + 1 < cells[r].size())
        line += std::string(width[c] - cells[r][c].size() + 2, ' ');
    }
    out += line + "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c)
        total += width[c] + (c + 1 < width.size() ? 2 : 0);
      out += std::string(total, '-') + "\n";
    }
  }
  return out;
}

// Position of (tau, v) in the full eleven-row layout.
int layout_row(const std::string& tau_name, bool v_zero) {
  static const std::map<std::pair<std::string, bool>, int> rows = {
      {{"r1", true}, 1}, {{"r1", false}, 2}, {{"r2", true}, 3},  {{"r2", false}, 4},
      {{"r3", true}, 5}, {{"r4", true}, 6},  {{"r5", true}, 7},  {{"r5", false}, 8},
      {{"J2", true}, 9}, {{"J3", true}, 10}, {{"J3", false}, 11}};
  const auto it = rows.find({tau_name, v_zero});
  return it == rows.end() ? 0 : it->second;
}

}  // namespace

Table1 emit_table1(const ClassifyConfig& cfg) {
  Table1 t{cfg.p, cfg.epsilon, {}};
  for (const auto& entry : tau_catalog(cfg)) {
    const MixedModulusMatrix norm = norm_matrix(entry.tau, cfg.p);
    std::vector<AbelianElement> choices;
    for (const auto& v : v_candidates(cfg, entry.tau)) {
      if (entry.tau.dim() == 3 && !v.is_zero() &&
          find_cp2_times_cp(build_group({entry.tau.profile(), cfg.p, entry.tau, v})))
        continue;
      choices.push_back(v);
    }
    std::string condition;
    if (entry.name == "r5" || entry.name == "J3")
      condition = cfg.p == 3 ? "p=3" : "p>3";
    t.rows.push_back({entry.name, condition, entry.tau, fixed_points(entry.tau).generators, norm,
                      image_subgroup(norm).generators, std::move(choices)});
  }
  return t;
}

Table2 emit_table2(const ClassifyConfig& cfg, const ClassificationResult& result) {
  if (result.p != cfg.p)
    throw std::invalid_argument("emit_table2: classification is for a different p");
  Table2 t{cfg.p, {}};
  for (const auto& c : result.classes) {
    if (!c.representative)
      continue;
    const CandidateType& rep = *c.representative;
    const AbelianSubgroup fixed = fixed_points(rep.ext.tau);
    std::vector<Count> center_type;
    for (Int d : invariant_factors(fixed))
      center_type.push_back(static_cast<Count>(d));
    const Count census = census_closed_form(rep.ext);

    const FiniteGroup g = build_group(rep.ext);
    const bool center_ok = abelian_invariants(g, center(g)) == center_type;
    const bool census_ok = count_power_trivial(g, static_cast<Count>(cfg.p)) == census;
    t.rows.push_back({layout_row(rep.tau_name, rep.ext.v.is_zero()), c.label, rep.tau_name,
                      rep.ext.tau, rep.ext.v, center_type, census, "", center_ok && census_ok});
  }
  std::stable_sort(t.rows.begin(), t.rows.end(),
                   [](const Table2Row& a, const Table2Row& b) { return a.row < b.row; });

  // Rows whose (center, census) coincide get a shared mark.
  std::map<std::pair<std::vector<Count>, Count>, std::vector<std::size_t>> groups;
  std::vector<std::pair<std::vector<Count>, Count>> first_seen;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    auto key = std::make_pair(t.rows[i].center, t.rows[i].census);
    if (!groups.contains(key))
      first_seen.push_back(key);
    groups[key].push_back(i);
  }
  std::string mark;
  for (const auto& key : first_seen) {
    const auto& members = groups[key];
    if (members.size() < 2)
      continue;
    mark += "*";
    for (std::size_t i : members)
      t.rows[i].mark = mark;
  }
  return t;
}

Table2 emit_table2(const ClassifyConfig& cfg) { return emit_table2(cfg, classify_p4(cfg)); }

std::string render_table1(const Table1& t) {
  std::vector<std::vector<std::string>> cells = {
      {"tau", "", "matrix", "N^tau", "norm", "im(norm)", "v choices"}};
  for (const auto& r : t.rows)
    cells.push_back({r.tau_name, r.condition, r.tau.to_string(), span_text(r.fixed_generators),
                     r.norm.to_string(), span_text(r.image_generators),
                     "{" + join_elements(r.v_choices) + "}"});
  return "Table 1 (p=" + std::to_string(t.p) + ", epsilon=" + std::to_string(t.epsilon) + ")\n" +
         aligned(cells);
}

std::string render_table2(const Table2& t) {
  std::vector<std::vector<std::string>> cells = {
      {"row", "tau", "matrix", "v", "center", "order<=p", "", "label"}};
  for (const auto& r : t.rows)
    cells.push_back({std::to_string(r.row), r.tau_name, r.tau.to_string(), r.v.to_string(),
                     cyclic_product(r.center), std::to_string(r.census), r.mark, r.label});
  return "Table 2 (p=" + std::to_string(t.p) + ")\n" + aligned(cells);
}

}  // namespace pfour
