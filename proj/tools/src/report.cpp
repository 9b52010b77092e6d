#include "artin/report.hpp"

#include <algorithm>
#include <cctype>

#include "artin/error.hpp"

namespace artin {

DegreeRange DegreeRange::parse(const std::string& text) {
  const auto sep = text.find_first_of(":-", 1);
  auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(Errc::InputError, "bad degree range '" + text + "' (expected k, a:b or a-b)");
    }
    return std::stoi(s);
  };
  DegreeRange r;
  if (sep == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, sep));
    r.hi = number(text.substr(sep + 1));
  }
  if (r.hi < r.lo) throw Error(Errc::InputError, "empty degree range '" + text + "'");
  return r;
}

std::vector<Domain> RunConfig::domains() const {
  if (coeff == "Z") {
    std::vector<Domain> out{Domain::rationals()};
    for (unsigned p : primes) out.push_back(Domain::prime_field(p));
    return out;
  }
  const Domain d = Domain::parse(coeff);
  if (!d.is_field()) throw Error(Errc::InputError, "unsupported coefficient selector '" + coeff + "'");
  return {d};
}

void RunConfig::validate() const {
  const bool has_type = !type.empty();
  const bool has_family = !family.empty();
  if (has_type == has_family) {
    throw Error(Errc::InputError, "give exactly one of --type and --family");
  }
  if (command == Command::Milnor && !has_type) {
    throw Error(Errc::InputError, "milnor needs --type (a finite Coxeter type)");
  }
  if (command == Command::Family && !has_family) {
    throw Error(Errc::InputError, "family needs --family <file>");
  }
  if (window.initial_radius < 0) throw Error(Errc::InputError, "--window-radius must be positive");
  if (coeff == "Z" && primes.empty()) throw Error(Errc::InputError, "--coeff Z needs at least one prime");
}

bool VerifyReport::acyclic() const {
  if (!shift) return false;
  return std::all_of(shift->cohomology.begin(), shift->cohomology.end(),
                     [](const InvariantFactors& h) { return h.free_rank == 0; });
}

bool VerifyReport::passed() const {
  return d_squared && well_filtered.ok && error.empty() && shift && shift->all_match();
}

VerifyReport verify_complex(const CochainComplex& c, bool salvetti, const WindowPolicy& policy) {
  VerifyReport r;
  r.domain = c.domain();
  r.salvetti = salvetti;
  r.d_squared = check_d_squared(c);
  if (!r.d_squared) {
    r.error = "d^2 != 0";
    return r;
  }
  r.well_filtered = is_well_filtered(c);
  if (!r.well_filtered.ok) return r;
  try {
    r.shift = verify_shift_theorem(c, policy);
  } catch (const Error& e) {
    if (e.code() != Errc::NotWellFiltered && e.code() != Errc::NotStabilized) throw;
    r.error = e.what();
  }
  return r;
}

MilnorReport milnor_report(const CoxeterSystem& system, const RunConfig& config, Domain domain) {
  MilnorReport report;
  report.label = system.name();
  report.domain = domain;
  report.irreducible = system.is_irreducible();
  if (!report.irreducible) report.flags.emplace_back("outside irreducible hypothesis");

  const CochainComplex c = build_salvetti_complex(system, domain);
  report.cohomology = cohomology(c);
  for (auto& m : monodromy_char_poly(report.cohomology, domain)) {
    MilnorRow row;
    row.degree = m.degree;
    row.betti = m.charpoly.span();
    row.monodromy = std::move(m);
    report.rows.push_back(std::move(row));
  }
  if (report.irreducible && (report.rows.empty() || report.rows.front().betti != 1)) {
    report.flags.emplace_back("b_0 differs from 1 for an irreducible type");
  }
  if (!config.skip_verify) report.verification = verify_complex(c, true, config.window);
  return report;
}

}  // namespace artin
