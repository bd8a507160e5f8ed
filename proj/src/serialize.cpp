#include "pfour/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pfour {

namespace {

template <typename T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad field \"") + key + "\": " + e.what());
  }
}

Json coords_json(const AbelianElement& x) {
  return Json(std::vector<Int>(x.coords().begin(), x.coords().end()));
}

AbelianElement element_from(const ModulusProfile& profile, const std::vector<Int>& coords) {
  if (coords.size() != profile.dim())
    throw std::invalid_argument("v has " + std::to_string(coords.size()) + " coordinates, expected " +
                                std::to_string(profile.dim()));
  return AbelianElement(profile, coords);
}

Json elements_json(const std::vector<AbelianElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs)
    out.push_back(coords_json(x));
  return out;
}

}  // namespace

Json to_json(const ExtensionType& t) {
  return Json{{"p", t.profile.p()},
              {"shape", std::string(to_string(t.profile.shape()))},
              {"n", t.n},
              {"tau", t.tau.rows()},
              {"v", coords_json(t.v)}};
}

ExtensionType extension_type_from_json(const Json& j) {
  const auto p = required<Int>(j, "p");
  const auto shape = parse_shape(required<std::string>(j, "shape"));
  const ModulusProfile profile(p, shape);
  const Int n = j.contains("n") ? required<Int>(j, "n") : p;
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  const auto rows = required<MixedModulusMatrix::Rows>(j, "tau");
  return {profile, n, MixedModulusMatrix(profile, rows),
          element_from(profile, required<std::vector<Int>>(j, "v"))};
}

ExtensionType read_extension_type(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return extension_type_from_json(j);
}

Json to_json(const Fingerprint& f) {
  return Json{{"group_order", f.group_order},
              {"center_invariants", f.center_invariants},
              {"census_le_p", f.census_le_p},
              {"derived_order", f.derived_order},
              {"abelianization_invariants", f.abelianization_invariants},
              {"exponent", f.exponent},
              {"power_quotient_abelian", f.power_quotient_abelian},
              {"low_order_commute", f.low_order_commute}};
}

Fingerprint fingerprint_from_json(const Json& j) {
  Fingerprint f;
  f.group_order = required<Count>(j, "group_order");
  f.center_invariants = required<std::vector<Count>>(j, "center_invariants");
  f.census_le_p = required<Count>(j, "census_le_p");
  f.derived_order = required<Count>(j, "derived_order");
  f.abelianization_invariants = required<std::vector<Count>>(j, "abelianization_invariants");
  f.exponent = required<Count>(j, "exponent");
  f.power_quotient_abelian = required<bool>(j, "power_quotient_abelian");
  f.low_order_commute = required<bool>(j, "low_order_commute");
  return f;
}

Json census_to_json(const FiniteGroup& g) {
  Json orders = Json::object();
  for (const auto& [order, count] : order_census(g))
    orders[std::to_string(order)] = count;
  const Count p = smallest_prime_factor(g.order());
  return Json{{"group_order", g.order()},
              {"orders", orders},
              {"census_le_p", count_power_trivial(g, p)}};
}

std::string cayley_csv(const FiniteGroup& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (b)
        out += ',';
      out += std::to_string(g.mul(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b)));
    }
    out += '\n';
  }
  return out;
}

FiniteGroup cayley_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("empty Cayley table");
  std::size_t order = 0;
  try {
    order = std::stoul(line);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad Cayley header: " + line);
  }
  if (order == 0 || order > kMaxMaterializedOrder)
    throw std::invalid_argument("bad Cayley table order " + line);
  std::vector<ElementIndex> table;
  table.reserve(order * order);
  for (std::size_t r = 0; r < order; ++r) {
    if (!std::getline(in, line))
      throw std::invalid_argument("Cayley table has too few rows");
    std::istringstream row(line);
    std::string cell;
    std::size_t cols = 0;
    while (std::getline(row, cell, ',')) {
      try {
        table.push_back(static_cast<ElementIndex>(std::stoul(cell)));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad Cayley entry: " + cell);
      }
      ++cols;
    }
    if (cols != order)
      throw std::invalid_argument("Cayley row " + std::to_string(r) + " has " +
                                  std::to_string(cols) + " entries");
  }
  for (std::size_t e = 0; e < order; ++e) {
    bool is_identity = true;
    for (std::size_t b = 0; b < order && is_identity; ++b)
      is_identity = table[e * order + b] == b && table[b * order + e] == b;
    if (is_identity)
      return FiniteGroup(order, std::move(table), static_cast<ElementIndex>(e));
  }
  throw std::invalid_argument("Cayley table has no identity");
}

Json to_json(const ClassificationResult& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json entry{{"label", c.label}};
    if (c.representative) {
      entry["tau"] = c.representative->ext.tau.rows();
      entry["v"] = coords_json(c.representative->ext.v);
    } else {
      entry["tau"] = nullptr;
      entry["v"] = nullptr;
      entry["invariants"] = c.abelian->invariants;
    }
    entry["fingerprint"] = to_json(c.fingerprint);
    entry["merged_labels"] = c.merged_labels;
    classes.push_back(std::move(entry));
  }
  return Json{{"p", r.p},
              {"classes", classes},
              {"counts", {{"abelian", r.abelian_count},
                          {"nonabelian", r.nonabelian_count},
                          {"total", r.total}}},
              {"problems", r.problems}};
}

ClassificationResult classification_from_json(const Json& j) {
  ClassificationResult r;
  r.p = required<Int>(j, "p");
  const Json& counts = j.at("counts");
  r.abelian_count = required<std::size_t>(counts, "abelian");
  r.nonabelian_count = required<std::size_t>(counts, "nonabelian");
  r.total = required<std::size_t>(counts, "total");
  if (j.contains("problems"))
    r.problems = required<std::vector<std::string>>(j, "problems");
  for (const Json& c : j.at("classes")) {
    ClassEntry entry;
    entry.label = required<std::string>(c, "label");
    entry.fingerprint = fingerprint_from_json(c.at("fingerprint"));
    entry.merged_labels = required<std::vector<std::string>>(c, "merged_labels");
    if (c.at("tau").is_null()) {
      entry.abelian = AbelianDescriptor{required<std::vector<Count>>(c, "invariants"), entry.label};
    } else {
      const auto rows = required<MixedModulusMatrix::Rows>(c, "tau");
      const ModulusProfile profile(r.p, rows.size() == 2 ? Shape::p2xp : Shape::pxpxp);
      const MixedModulusMatrix tau(profile, rows);
      const AbelianElement v = element_from(profile, required<std::vector<Int>>(c, "v"));
      // Label layout: "<d>x<d>-<tau name>-<v>".
      const auto first = entry.label.find('-');
      const auto second = entry.label.find('-', first + 1);
      if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("bad class label " + entry.label);
      entry.representative =
          CandidateType{ExtensionType{profile, r.p, tau, v}, entry.label,
                        entry.label.substr(first + 1, second - first - 1)};
    }
    r.classes.push_back(std::move(entry));
  }
  return r;
}

std::string fingerprint_csv(const ClassificationResult& r) {
  auto joined = [](const std::vector<Count>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
      s += (i ? ";" : "") + std::to_string(xs[i]);
    return s;
  };
  std::string out =
      "label,group_order,center_invariants,census_le_p,derived_order,abelianization_invariants,"
      "exponent,power_quotient_abelian,low_order_commute\n";
  for (const auto& c : r.classes) {
    const Fingerprint& f = c.fingerprint;
    out += c.label + "," + std::to_string(f.group_order) + "," + joined(f.center_invariants) + "," +
           std::to_string(f.census_le_p) + "," + std::to_string(f.derived_order) + "," +
           joined(f.abelianization_invariants) + "," + std::to_string(f.exponent) + "," +
           (f.power_quotient_abelian ? "true" : "false") + "," +
           (f.low_order_commute ? "true" : "false") + "\n";
  }
  return out;
}

Json to_json(const Table1& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back(Json{{"tau_name", r.tau_name},
                        {"condition", r.condition},
                        {"tau", r.tau.rows()},
                        {"fixed_generators", elements_json(r.fixed_generators)},
                        {"norm", r.norm.rows()},
                        {"image_generators", elements_json(r.image_generators)},
                        {"v_choices", elements_json(r.v_choices)}});
  return Json{{"p", t.p}, {"epsilon", t.epsilon}, {"rows", rows}};
}

Json to_json(const Table2& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back(Json{{"row", r.row},
                        {"label", r.label},
                        {"tau_name", r.tau_name},
                        {"tau", r.tau.rows()},
                        {"v", coords_json(r.v)},
                        {"center", r.center},
                        {"census_le_p", r.census},
                        {"mark", r.mark},
                        {"verified", r.verified}});
  return Json{{"p", t.p}, {"rows", rows}};
}

}  // namespace pfour
