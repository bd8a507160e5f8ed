// pfour: construct cyclic extensions, compare them, and classify groups of order p^4.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pfour/classify.hpp"
#include "pfour/serialize.hpp"
#include "pfour/tables.hpp"
#include "pfour/verification.hpp"

namespace {

using namespace pfour;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kNegative = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_odd_prime(Int p) {
  if (p < 3 || !is_prime(p))
    throw UsageError("p = " + std::to_string(p) + " is not an odd prime");
  if (p > kMaxPrime)
    throw UsageError("p = " + std::to_string(p) + " exceeds " + std::to_string(kMaxPrime));
}

std::string invariants_text(const std::vector<Count>& xs) {
  if (xs.empty())
    return "1";
  std::string s;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it)
    s += (it != xs.rbegin() ? "xC" : "C") + std::to_string(*it);
  return s;
}

std::string classification_table(const ClassificationResult& r) {
  std::string out = "p=" + std::to_string(r.p) + "\n";
  std::size_t width = 5;
  for (const auto& c : r.classes)
    width = std::max(width, c.label.size());
  for (const auto& c : r.classes) {
    const Fingerprint& f = c.fingerprint;
    std::string line = c.label + std::string(width - c.label.size() + 2, ' ');
    line += "center=" + invariants_text(f.center_invariants) +
            " census=" + std::to_string(f.census_le_p) +
            " derived=" + std::to_string(f.derived_order) +
            " exponent=" + std::to_string(f.exponent);
    if (!c.merged_labels.empty()) {
      line += " merged:";
      for (const auto& m : c.merged_labels)
        line += " " + m;
    }
    out += line + "\n";
  }
  out += "abelian=" + std::to_string(r.abelian_count) +
         " nonabelian=" + std::to_string(r.nonabelian_count) +
         " total=" + std::to_string(r.total) + "\n";
  return out;
}

// Parses and validates; prints the diagnostic and returns nullopt on failure.
std::optional<ExtensionType> load_type(const std::string& path) {
  std::optional<ExtensionType> out;
  try {
    out = read_extension_type(path);
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    std::cerr << "error: " << path << ": ";
    if (what.find("divisible by p") != std::string::npos)
      std::cerr << to_string(TypeDefect::not_an_automorphism) << ": ";
    std::cerr << what << "\n";
    return std::nullopt;
  }
  if (const TypeCheck check = validate_type(*out); !check) {
    std::cerr << "error: " << path << ": " << check.message << "\n";
    return std::nullopt;
  }
  return out;
}

int cmd_classify(Int p, const std::string& format, bool force) {
  require_odd_prime(p);
  if (p > 7 && !force)
    throw UsageError("classification above p = 7 needs --force");
  const ClassificationResult r = classify_p4(make_config(p));
  if (format == "json")
    std::cout << to_json(r).dump(2) << "\n";
  else if (format == "csv")
    std::cout << fingerprint_csv(r);
  else
    std::cout << classification_table(r);
  if (!r.ok()) {
    for (const auto& problem : r.problems)
      std::cerr << "error: " << problem << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_construct(const std::string& path, const std::string& emit) {
  const auto t = load_type(path);
  if (!t)
    return kFailure;
  const FiniteGroup g = build_group(*t);
  if (emit == "cayley")
    std::cout << cayley_csv(g);
  else if (emit == "census")
    std::cout << census_to_json(g).dump(2) << "\n";
  else
    std::cout << to_json(fingerprint(g)).dump(2) << "\n";
  return kOk;
}

int cmd_iso(const std::string& path_a, const std::string& path_b) {
  const auto a = load_type(path_a);
  if (!a)
    return kFailure;
  const auto b = load_type(path_b);
  if (!b)
    return kFailure;
  const FiniteGroup ga = build_group(*a);
  const FiniteGroup gb = build_group(*b);
  const IsomorphismResult r = isomorphic(ga, gb);
  if (!r) {
    std::cout << Json{{"isomorphic", false}}.dump(2) << "\n";
    return kNegative;
  }
  Json witness = Json::object();
  for (std::size_t i = 0; i < ga.order(); ++i)
    witness[ga.label(static_cast<ElementIndex>(i))] = gb.label(r.witness[i]);
  std::cout << Json{{"isomorphic", true}, {"witness", witness}}.dump(2) << "\n";
  return kOk;
}

int cmd_tables(Int p, const std::string& format) {
  require_odd_prime(p);
  if (p > 7)
    throw UsageError("tables above p = 7 are not supported");
  const ClassifyConfig cfg = make_config(p);
  const Table1 t1 = emit_table1(cfg);
  const Table2 t2 = emit_table2(cfg);
  if (format == "json") {
    std::cout << Json{{"table1", to_json(t1)}, {"table2", to_json(t2)}}.dump(2) << "\n";
  } else {
    std::cout << render_table1(t1) << "\n" << render_table2(t2);
  }
  for (const auto& row : t2.rows)
    if (!row.verified) {
      std::cerr << "error: row " << row.row << " (" << row.label
                << ") disagrees with the built group\n";
      return kFailure;
    }
  return kOk;
}

int cmd_verify(Int p, std::uint64_t seed) {
  require_odd_prime(p);
  if (p > 5)
    throw UsageError("verify supports p = 3 and p = 5");
  const VerificationReport report = run_verification(p, seed);
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (!c.passed)
      std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  return report.ok() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic extensions and the groups of order p^4"};
  app.require_subcommand(1);

  Int p = 0;
  std::string format = "table";
  bool force = false;
  auto* classify = app.add_subcommand("classify", "Classify the groups of order p^4");
  classify->add_option("--p", p, "Odd prime")->required();
  classify->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  classify->add_flag("--force", force, "Allow p > 7");

  std::string type_path, emit = "fingerprint";
  auto* construct = app.add_subcommand("construct", "Build the group of an extension type");
  construct->add_option("--type", type_path, "Extension type JSON file")->required();
  construct->add_option("--emit", emit, "Artifact to print")
      ->check(CLI::IsMember({"cayley", "fingerprint", "census"}));

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "Decide whether two extension types give isomorphic groups");
  iso->add_option("A", iso_a, "First type JSON file")->required();
  iso->add_option("B", iso_b, "Second type JSON file")->required();

  std::string tables_format = "table";
  auto* tables = app.add_subcommand("tables", "Print the tau/v table and the nonabelian class table");
  tables->add_option("--p", p, "Odd prime")->required();
  tables->add_option("--format", tables_format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("--p", p, "Odd prime")->required();
  verify->add_option("--seed", seed, "Seed for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify)
      return cmd_classify(p, format, force);
    if (*construct)
      return cmd_construct(type_path, emit);
    if (*iso)
      return cmd_iso(iso_a, iso_b);
    if (*tables)
      return cmd_tables(p, tables_format);
    if (*verify)
      return cmd_verify(p, seed);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
