#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "artin/error.hpp"
#include "artin/family_io.hpp"
#include "artin/report.hpp"

namespace artin {

using json = nlohmann::ordered_json;

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::Cohomology: return "cohomology";
    case Command::Milnor: return "milnor";
    case Command::Verify: return "verify";
    case Command::Family: return "family";
  }
  return "?";
}

bool in_range(const RunConfig& config, int k) { return !config.degrees || config.degrees->contains(k); }

std::string group_text(const InvariantFactors& h) {
  std::string out;
  if (h.free_rank > 0) out = h.free_rank == 1 ? "R" : "R^" + std::to_string(h.free_rank);
  for (const auto& f : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "R/(" + f.to_string() + ")";
  }
  return out.empty() ? "0" : out;
}

std::string eigen_text(const MonodromyDegree& m) {
  if (!m.eigenvalues) return "-";
  std::string out;
  for (const auto& [n, mult] : m.eigenvalues->factors) {
    if (!out.empty()) out += " ";
    out += "Phi_" + std::to_string(n);
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  const auto& rest = m.eigenvalues->remainder;
  if (!(rest.is_monomial() && rest.valuation() == 0 && rest.leading() == 1)) {
    if (!out.empty()) out += " ";
    out += "(" + rest.to_string() + ")";
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// JSON

json to_json(const InvariantFactors& h) {
  json torsion = json::array();
  for (const auto& f : h.torsion) torsion.push_back(f.to_string());
  return {{"free_rank", h.free_rank}, {"torsion", torsion}, {"dimension", h.torsion_dimension()}};
}

json to_json(const std::vector<InvariantFactors>& groups, const RunConfig& config, const char* prefix) {
  json out = json::object();
  for (const auto& h : groups) {
    if (in_range(config, h.degree)) out[std::string(prefix) + std::to_string(h.degree)] = to_json(h);
  }
  return out;
}

json to_json(const MonodromyDegree& m) {
  json out = {{"charpoly", m.charpoly.to_string()}};
  if (m.eigenvalues) {
    json factors = json::array();
    for (const auto& [n, mult] : m.eigenvalues->factors) factors.push_back({{"n", n}, {"multiplicity", mult}});
    out["cyclotomic"] = {{"unit", m.eigenvalues->unit.to_string()},
                         {"factors", factors},
                         {"remainder", m.eigenvalues->remainder.to_string()}};
  }
  return out;
}

json to_json(const VerifyReport& r, const RunConfig& config) {
  json out = {{"d_squared_zero", r.d_squared},
              {"well_filtered", r.well_filtered.ok},
              {"well_filtered_detail", r.well_filtered.describe()}};
  if (!r.error.empty()) out["error"] = r.error;
  if (r.shift) {
    json rows = json::array();
    for (const auto& d : r.shift->degrees) {
      if (!in_range(config, d.k)) continue;
      rows.push_back({{"k", d.k},
                      {"m_dimension", d.m_dimension},
                      {"r_dimension", d.r_dimension},
                      {"free_rank_k", d.free_rank_k},
                      {"free_rank_next", d.free_rank_next},
                      {"radius", d.radius},
                      {"match", d.match}});
    }
    out["shift"] = rows;
    out["rationally_acyclic"] = r.acyclic();
  }
  out["passed"] = r.passed();
  return out;
}

json to_json(const MilnorReport& r, const RunConfig& config) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    if (!in_range(config, row.degree)) continue;
    json j = {{"degree", row.degree},
              {"betti", row.betti},
              {"source", "torsion of H^" + std::to_string(row.degree + 1) + "(G_W; R) from the Salvetti complex"}};
    j["monodromy"] = to_json(row.monodromy);
    rows.push_back(std::move(j));
  }
  json out = {{"domain", r.domain.name()}, {"irreducible", r.irreducible}, {"flags", r.flags}};
  out["cohomology"] = to_json(r.cohomology, config, "H^");
  out["milnor_fiber"] = rows;
  if (r.verification) out["verification"] = to_json(*r.verification, config);
  return out;
}

// ---------------------------------------------------------------------------
// Pretty and CSV

void pretty_verify(std::ostream& os, const VerifyReport& r, const RunConfig& config) {
  os << "  d^2 = 0: " << (r.d_squared ? "yes" : "no") << "\n";
  os << "  " << r.well_filtered.describe() << "\n";
  if (!r.error.empty()) os << "  shift check not run: " << r.error << "\n";
  if (r.shift) {
    os << "  shift check  k: M-side dim / R-side dim (free ranks) radius\n";
    for (const auto& d : r.shift->degrees) {
      if (!in_range(config, d.k)) continue;
      os << "    k = " << d.k << ": " << d.m_dimension << " / " << d.r_dimension << " (" << d.free_rank_k << ", "
         << d.free_rank_next << ") " << (d.k >= 0 ? std::to_string(d.radius) : "-") << "  "
         << (d.match ? "ok" : "MISMATCH") << "\n";
    }
  }
  os << "  verdict: " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

void pretty_milnor(std::ostream& os, const MilnorReport& r, const RunConfig& config) {
  os << "Milnor fiber of " << r.label << " over " << r.domain.name() << "\n";
  for (const auto& flag : r.flags) os << "  flag: " << flag << "\n";
  for (const auto& row : r.rows) {
    if (!in_range(config, row.degree)) continue;
    os << "  b_" << row.degree << " = " << row.betti << "   monodromy charpoly " << row.monodromy.charpoly.to_string()
       << "   eigenvalues " << eigen_text(row.monodromy) << "\n";
  }
  if (r.verification) pretty_verify(os, *r.verification, config);
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void csv_groups(std::ostream& os, const std::string& domain, const std::vector<InvariantFactors>& groups,
                const RunConfig& config) {
  for (const auto& h : groups) {
    if (!in_range(config, h.degree)) continue;
    std::string torsion;
    for (const auto& f : h.torsion) torsion += (torsion.empty() ? "" : ";") + f.to_string();
    os << domain << "," << h.degree << "," << h.free_rank << "," << csv_quote(torsion) << ","
       << h.torsion_dimension() << "\n";
  }
}

void csv_verify(std::ostream& os, const std::string& domain, const VerifyReport& r, const RunConfig& config) {
  if (!r.shift) {
    os << domain << ",,,,,,,false\n";
    return;
  }
  for (const auto& d : r.shift->degrees) {
    if (!in_range(config, d.k)) continue;
    os << domain << "," << d.k << "," << d.m_dimension << "," << d.r_dimension << "," << d.free_rank_k << ","
       << d.free_rank_next << "," << d.radius << "," << (d.match ? "true" : "false") << "\n";
  }
}

constexpr const char* kCsvGroupsHeader = "domain,degree,free_rank,torsion,dimension\n";
constexpr const char* kCsvVerifyHeader =
    "domain,k,m_dimension,r_dimension,free_rank_k,free_rank_next,radius,match\n";
constexpr const char* kCsvMilnorHeader = "domain,degree,betti,charpoly,eigenvalues\n";

// ---------------------------------------------------------------------------
// Commands

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::InputError:
    case Errc::ParseError:
    case Errc::InvalidLabel:
    case Errc::InvalidRank:
    case Errc::NotFiniteType:
    case Errc::MissingEntry:
    case Errc::CocycleViolation:
    case Errc::NonInvertibleExtremes:
    case Errc::UnsupportedDomain:
    case Errc::DomainMismatch:
      return true;
    default:
      return false;
  }
}

struct Input {
  CochainComplex complex;
  bool salvetti = false;
  std::string label;
};

Input load_input(const RunConfig& config, Domain domain) {
  if (!config.type.empty()) {
    const CoxeterSystem system = parse_coxeter_system(config.type);
    return {build_salvetti_complex(system, domain), true, system.name()};
  }
  const PolynomialFamily family = load_family_file(config.family, domain);
  if (family.generators() == 0) {
    throw Error(Errc::InputError, config.family.string() + ": the family has no generators");
  }
  return {build_generic_complex(family), false, config.family.string()};
}

json input_json(const RunConfig& config) {
  if (!config.type.empty()) return {{"type", config.type}};
  return {{"family", config.family.string()}};
}

class Runner {
 public:
  Runner(const RunConfig& config, std::ostream& os) : config_(config), os_(os) {}

  int run() {
    doc_ = {{"schema", 1}, {"command", command_name(config_.command)}, {"input", input_json(config_)}};
    doc_["results"] = json::array();
    if (config_.format == OutputFormat::Csv) os_ << header();
    for (const Domain& domain : config_.domains()) {
      switch (config_.command) {
        case Command::Cohomology: cohomology_for(domain); break;
        case Command::Milnor: milnor_for(domain); break;
        case Command::Verify: verify_for(domain, false); break;
        case Command::Family: verify_for(domain, true); break;
      }
    }
    if (config_.format == OutputFormat::Json) os_ << doc_.dump(2) << "\n";
    os_.flush();
    return exit_;
  }

 private:
  const char* header() const {
    switch (config_.command) {
      case Command::Cohomology: return kCsvGroupsHeader;
      case Command::Milnor: return kCsvMilnorHeader;
      default: return kCsvVerifyHeader;
    }
  }

  void cohomology_for(Domain domain) {
    const Input in = load_input(config_, domain);
    const bool pretty = config_.format == OutputFormat::Pretty;
    if (pretty) os_ << "H^*(G_W; R) for " << in.label << " over " << domain.name() << "\n";
    const auto groups = cohomology(in.complex, [&](const InvariantFactors& h) {
      if (pretty && in_range(config_, h.degree)) os_ << "  H^" << h.degree << " = " << group_text(h) << std::endl;
    });
    if (config_.format == OutputFormat::Json) {
      doc_["results"].push_back({{"domain", domain.name()}, {"cohomology", to_json(groups, config_, "H^")}});
    } else if (config_.format == OutputFormat::Csv) {
      csv_groups(os_, domain.name(), groups, config_);
    }
  }

  void milnor_for(Domain domain) {
    const MilnorReport r = milnor_report(parse_coxeter_system(config_.type), config_, domain);
    if (r.verification && !r.verification->passed()) exit_ = std::max(exit_, r.verification->error.empty() ? 1 : 3);
    switch (config_.format) {
      case OutputFormat::Pretty: pretty_milnor(os_, r, config_); break;
      case OutputFormat::Json: doc_["results"].push_back(to_json(r, config_)); break;
      case OutputFormat::Csv:
        for (const auto& row : r.rows) {
          if (!in_range(config_, row.degree)) continue;
          os_ << domain.name() << "," << row.degree << "," << row.betti << ","
              << csv_quote(row.monodromy.charpoly.to_string()) << "," << csv_quote(eigen_text(row.monodromy))
              << "\n";
        }
        break;
    }
    os_.flush();
  }

  void verify_for(Domain domain, bool full) {
    const Input in = load_input(config_, domain);
    const VerifyReport r = verify_complex(in.complex, in.salvetti, config_.window);
    note_exit(r, in.salvetti);
    std::vector<InvariantFactors> groups;
    std::vector<MonodromyDegree> monodromy;
    if (full) {
      groups = r.shift ? r.shift->cohomology : cohomology(in.complex);
      monodromy = monodromy_char_poly(groups, domain);
    }
    switch (config_.format) {
      case OutputFormat::Pretty:
        os_ << (full ? "family " : "verify ") << in.label << " over " << domain.name() << "\n";
        for (const auto& h : groups) {
          if (in_range(config_, h.degree)) os_ << "  H^" << h.degree << " = " << group_text(h) << "\n";
        }
        for (const auto& m : monodromy) {
          if (in_range(config_, m.degree)) {
            os_ << "  q on tors H^" << m.degree + 1 << ": charpoly " << m.charpoly.to_string() << "   eigenvalues "
                << eigen_text(m) << "\n";
          }
        }
        pretty_verify(os_, r, config_);
        break;
      case OutputFormat::Json: {
        json j = {{"domain", domain.name()}};
        if (full) {
          j["cohomology"] = to_json(groups, config_, "H^");
          json mono = json::array();
          for (const auto& m : monodromy) {
            if (!in_range(config_, m.degree)) continue;
            json entry = {{"degree", m.degree}};
            entry.update(to_json(m));
            mono.push_back(std::move(entry));
          }
          j["monodromy"] = mono;
        }
        j["verification"] = to_json(r, config_);
        doc_["results"].push_back(std::move(j));
        break;
      }
      case OutputFormat::Csv: csv_verify(os_, domain.name(), r, config_); break;
    }
    os_.flush();
  }

  void note_exit(const VerifyReport& r, bool salvetti) {
    if (r.passed()) return;
    if (!salvetti && r.d_squared && (!r.well_filtered.ok || r.well_filtered.by_convention)) {
      exit_ = std::max(exit_, 2);
    } else if (!r.error.empty() && r.d_squared && r.well_filtered.ok) {
      exit_ = std::max(exit_, 3);
    } else {
      exit_ = std::max(exit_, 1);
    }
  }

  const RunConfig& config_;
  std::ostream& os_;
  json doc_;
  int exit_ = 0;
};

}  // namespace

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                            std::ostream& err, int& exit_code) {
  CLI::App app{"Cohomology of finite-type Artin groups with coefficients in A[q, q^-1]"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "pretty";
  std::string degrees;
  std::string primes;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", config.type, "Coxeter type, e.g. A3, B4, I2(7), A1xA2");
    sub->add_option("--family", config.family, "custom polynomial family file");
    sub->add_option("--coeff", config.coeff, "coefficients: Q, Zp:<p>, or Z (Q plus each prime)");
    sub->add_option("--primes", primes, "primes used by --coeff Z (default 2,3,5,7)");
    sub->add_option("--window-radius", config.window.initial_radius,
                    "initial window radius for the series side (0 = automatic)");
    sub->add_option("--format", format, "pretty, json or csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    sub->add_option("--degrees", degrees, "degree filter: k, a:b or a-b");
    sub->add_option("--out", config.out, "write the report to this file");
  };
  CLI::App* coh = app.add_subcommand("cohomology", "invariant factors of H^*(G_W; R)");
  CLI::App* mil = app.add_subcommand("milnor", "Betti numbers and monodromy of the Milnor fiber");
  CLI::App* ver = app.add_subcommand("verify", "well-filtered check and series-side shift comparison");
  CLI::App* fam = app.add_subcommand("family", "load a custom family and run the whole pipeline");
  for (CLI::App* sub : {coh, mil, ver, fam}) add_common(sub);
  mil->add_flag("--skip-verify", config.skip_verify, "omit the shift comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    exit_code = code == 0 ? 0 : 2;
    return std::nullopt;
  }
  config.command = coh->parsed()   ? Command::Cohomology
                   : mil->parsed() ? Command::Milnor
                   : ver->parsed() ? Command::Verify
                                   : Command::Family;
  config.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Pretty;
  try {
    if (!degrees.empty()) config.degrees = DegreeRange::parse(degrees);
    if (!primes.empty()) {
      config.primes.clear();
      std::stringstream ss(primes);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const Domain d = Domain::parse("Zp:" + item);
        config.primes.push_back(d.characteristic());
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    exit_code = 2;
    return std::nullopt;
  }
  exit_code = 0;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    std::ofstream file;
    if (!config.out.empty()) {
      file.open(config.out);
      if (!file) throw Error(Errc::InputError, "cannot write " + config.out.string());
    }
    std::ostream& os = config.out.empty() ? out : file;
    const int code = Runner(config, os).run();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace artin
