#include "wittcurve/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "wittcurve/errors.hpp"
#include "wittcurve/form_syntax.hpp"
#include "wittcurve/group_ring_model.hpp"
#include "wittcurve/witt_engine.hpp"

namespace wittcurve::cli {

namespace {

using nlohmann::json;

enum class Format { kText, kJson, kCsv };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  return Format::kText;
}

json line_bits(const CurveConfig& cfg, PicTorsionClass line) {
  json bits = json::array();
  for (int k = 1; k <= cfg.picard_rank(); ++k) bits.push_back(line.coordinate(k) ? 1 : 0);
  return bits;
}

json to_json(const CurveConfig& cfg, const GlobalSquareClass& c) {
  return {{"unit", c.unit.bit() ? 1 : 0}, {"pi_exp", c.pi_exp ? 1 : 0}, {"line", line_bits(cfg, c.line)}};
}

json to_json(const CurveConfig& cfg, const BrauerClass& b) {
  return {{"unit", b.unit.bit() ? 1 : 0}, {"line", line_bits(cfg, b.line)}};
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<Check> run_verification(const CurveConfig& cfg) {
  std::vector<Check> checks;
  {
    const auto r = verify_quaternion_distinctness(cfg);
    checks.push_back({"quaternion-distinctness", r.passed(),
                      std::to_string(r.forms) + " norm forms, " + std::to_string(r.trivial) + " trivial"});
  }
  {
    const auto r = rank_one_group_structure(cfg);
    checks.push_back({"rank-one-structure", r.passed(),
                      "order " + std::to_string(r.order) + ", exponent " + std::to_string(r.exponent)});
  }
  {
    const auto r = verify_residue_relations(cfg);
    checks.push_back({"residue-relations", r.passed(), std::to_string(r.cases) + " cases"});
  }
  {
    const auto r = verify_reduction_identities(cfg);
    checks.push_back({"reduction-identities", r.passed(), std::to_string(r.cases) + " cases"});
  }
  if (cfg.picard_rank() <= kCensusMaxRank) {
    const auto r = enumerate_classes(cfg);
    checks.push_back({"census", r.passed(), "total " + std::to_string(r.total)});
  } else {
    checks.push_back({"census", true, "skipped: picard rank above " + std::to_string(kCensusMaxRank)});
  }
  if (cfg.picard_rank() <= kRingIsoMaxRank) {
    const auto iso = check_ring_iso(cfg);
    checks.push_back({"ring-isomorphism", iso.passed(),
                      std::to_string(iso.add_pairs) + " sums, " + std::to_string(iso.mul_pairs) + " products"});
    const auto split = check_splitting(cfg);
    checks.push_back({"splitting", split.passed(), std::to_string(split.elements) + " classes"});
  } else {
    const std::string why = "skipped: picard rank above " + std::to_string(kRingIsoMaxRank);
    checks.push_back({"ring-isomorphism", true, why});
    checks.push_back({"splitting", true, why});
  }
  return checks;
}

int cmd_reduce(const CurveConfig& cfg, const std::string& text, Format format, std::ostream& out) {
  const CanonicalShape c = canonical_form(parse_form(text, cfg));
  const std::string shape(shape_label(c.shape));
  const std::string payload = format_form(c.payload);
  switch (format) {
    case Format::kJson: out << json{{"shape", shape}, {"payload", payload}}.dump(2) << '\n'; break;
    case Format::kCsv: out << "shape,payload\n" << csv_quote(shape) << ',' << csv_quote(payload) << '\n'; break;
    case Format::kText: out << "shape: " << shape << "\npayload: " << payload << '\n'; break;
  }
  return kExitSuccess;
}

int cmd_equal(const CurveConfig& cfg, const std::string& lhs, const std::string& rhs, Format format,
              std::ostream& out) {
  const bool result = equals(parse_form(lhs, cfg), parse_form(rhs, cfg));
  switch (format) {
    case Format::kJson: out << json{{"equal", result}}.dump(2) << '\n'; break;
    case Format::kCsv: out << "equal\n" << (result ? "true" : "false") << '\n'; break;
    case Format::kText: out << (result ? "true" : "false") << '\n'; break;
  }
  return result ? kExitSuccess : kExitFalse;
}

int cmd_invariants(const CurveConfig& cfg, const std::string& text, Format format, std::ostream& out) {
  const InvariantProfile p = invariant_profile(parse_form(text, cfg));
  switch (format) {
    case Format::kJson: {
      json j{{"rank_parity", p.rank_parity ? 1 : 0}, {"signed_disc", to_json(cfg, p.signed_disc)}};
      if (p.witt_inv) j["witt_inv"] = to_json(cfg, *p.witt_inv);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "rank_parity,signed_disc,witt_inv\n"
          << (p.rank_parity ? 1 : 0) << ',' << csv_quote(format_square_class(p.signed_disc)) << ','
          << (p.witt_inv ? csv_quote(format_brauer_class(*p.witt_inv)) : "") << '\n';
      break;
    case Format::kText:
      out << "rank_parity: " << (p.rank_parity ? 1 : 0) << "\nsigned_disc: " << format_square_class(p.signed_disc)
          << "\nwitt_inv: " << (p.witt_inv ? format_brauer_class(*p.witt_inv) : "-") << '\n';
      break;
  }
  return kExitSuccess;
}

int cmd_enumerate(const CurveConfig& cfg, Format format, std::ostream& out) {
  const CensusReport r = enumerate_classes(cfg);
  switch (format) {
    case Format::kJson: {
      json shapes = json::array();
      for (const auto& s : r.shapes) shapes.push_back({{"shape", std::string(shape_label(s.shape))}, {"count", s.count}});
      out << json{{"q_mod_4", r.q_mod_4},   {"picard_rank", r.picard_rank}, {"n", r.n},
                  {"shapes", shapes},       {"nontrivial", r.nontrivial},   {"total", r.total},
                  {"passed", r.passed()}}
                 .dump(2)
          << '\n';
      break;
    }
    case Format::kCsv:
      out << "shape,count\n";
      for (const auto& s : r.shapes) out << csv_quote(std::string(shape_label(s.shape))) << ',' << s.count << '\n';
      out << "nontrivial," << r.nontrivial << "\ntotal," << r.total << '\n';
      break;
    case Format::kText:
      out << "q mod 4 = " << r.q_mod_4 << ", picard rank = " << r.picard_rank << ", n = " << r.n << '\n';
      for (const auto& s : r.shapes) {
        out << std::left << std::setw(18) << shape_label(s.shape) << s.count << '\n';
      }
      out << std::left << std::setw(18) << "nontrivial" << r.nontrivial << '\n'
          << std::left << std::setw(18) << "total" << r.total << '\n';
      break;
  }
  return r.passed() ? kExitSuccess : kExitFalse;
}

int cmd_verify(const CurveConfig& cfg, Format format, std::ostream& out) {
  const auto checks = run_verification(cfg);
  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  switch (format) {
    case Format::kJson: {
      json arr = json::array();
      for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      out << json{{"checks", arr}, {"passed", all}}.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "name,passed,detail\n";
      for (const auto& c : checks) {
        out << c.name << ',' << (c.passed ? "true" : "false") << ',' << csv_quote(c.detail) << '\n';
      }
      break;
    case Format::kText:
      for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
      break;
  }
  return all ? kExitSuccess : kExitFalse;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt equivalence calculator for curves over local fields", "wittc"};
  app.fallthrough();
  app.require_subcommand(1);

  int q_mod_4 = 3;
  int picard_rank = 1;
  std::string format_name = "text";
  std::string out_path;
  app.add_option("--q-mod-4", q_mod_4, "Residue field cardinality mod 4 (1 or 3)");
  app.add_option("--picard-rank", picard_rank, "Dimension r of 2Pic(C) over F_2");
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  std::string form_a;
  std::string form_b;
  auto* reduce = app.add_subcommand("reduce", "Canonical representative of a form");
  reduce->add_option("form", form_a)->required();
  auto* equal = app.add_subcommand("equal", "Decide Witt equivalence of two forms");
  equal->add_option("lhs", form_a)->required();
  equal->add_option("rhs", form_b)->required();
  auto* invariants = app.add_subcommand("invariants", "Rank parity, signed discriminant and Witt invariant");
  invariants->add_option("form", form_a)->required();
  auto* enumerate = app.add_subcommand("enumerate", "Census of canonical classes by shape");
  auto* verify = app.add_subcommand("verify", "Run the structural verification suites");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitSuccess;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitSuccess;
  try {
    const CurveConfig cfg = make_config(q_mod_4, picard_rank);
    const Format format = parse_format(format_name);
    if (reduce->parsed()) {
      code = cmd_reduce(cfg, form_a, format, buffer);
    } else if (equal->parsed()) {
      code = cmd_equal(cfg, form_a, form_b, format, buffer);
    } else if (invariants->parsed()) {
      code = cmd_invariants(cfg, form_a, format, buffer);
    } else if (enumerate->parsed()) {
      code = cmd_enumerate(cfg, format, buffer);
    } else if (verify->parsed()) {
      code = cmd_verify(cfg, format, buffer);
    }
  } catch (const std::invalid_argument& e) {  // ParseError, ConfigError, ConfigMismatch
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path);
    if (!(file << buffer.str())) {
      err << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace wittcurve::cli
