#include "artin/family_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "artin/error.hpp"

namespace artin {

namespace {

std::string trim(std::string_view s) {
  std::size_t lo = 0, hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  return std::string(s.substr(lo, hi - lo));
}

int parse_index(const std::string& text, const std::string& where) {
  if (text.empty() || text.size() > 2 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(Errc::InputError, where + ": bad generator index '" + text + "'");
  }
  const int g = std::stoi(text);
  if (g < 1 || g > kMaxGenerators) {
    throw Error(Errc::InputError, where + ": generator index " + text + " outside 1.." +
                                      std::to_string(kMaxGenerators));
  }
  return g;
}

struct Record {
  SubsetMask subset;
  int w;
  LaurentPoly p;
  int line;
};

}  // namespace

PolynomialFamily parse_family(std::string_view text, Domain domain, const std::string& source) {
  std::vector<Record> records;
  std::map<std::pair<SubsetMask, int>, int> seen;
  int n = 0;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto first = line.find(';');
    const auto second = first == std::string::npos ? first : line.find(';', first + 1);
    if (second == std::string::npos) {
      throw Error(Errc::InputError, where + ": expected 'D ; w ; polynomial'");
    }
    const std::string subset_text = trim(std::string_view(line).substr(0, first));
    const std::string w_text = trim(std::string_view(line).substr(first + 1, second - first - 1));
    const std::string poly_text = trim(std::string_view(line).substr(second + 1));

    SubsetMask subset = 0;
    if (subset_text != "-") {
      std::size_t start = 0;
      while (start <= subset_text.size()) {
        auto comma = subset_text.find(',', start);
        if (comma == std::string::npos) comma = subset_text.size();
        const int g = parse_index(trim(std::string_view(subset_text).substr(start, comma - start)), where);
        if (contains(subset, g)) throw Error(Errc::InputError, where + ": repeated generator in D");
        subset |= generator_bit(g);
        n = std::max(n, g);
        start = comma + 1;
      }
    }
    const int w = parse_index(w_text, where);
    n = std::max(n, w);
    if (contains(subset, w)) {
      throw Error(Errc::InputError, where + ": w = " + w_text + " lies in D");
    }
    LaurentPoly p;
    try {
      p = LaurentPoly::parse(poly_text, domain);
    } catch (const Error& e) {
      throw Error(Errc::InputError, where + ": " + e.what());
    }
    if (auto [it, inserted] = seen.emplace(std::make_pair(subset, w), line_no); !inserted) {
      throw Error(Errc::InputError, where + ": duplicate record for D = " + format_subset(subset) +
                                        ", w = " + w_text + " (first at line " +
                                        std::to_string(it->second) + ")");
    }
    records.push_back({subset, w, std::move(p), line_no});
  }

  PolynomialFamily family(n, domain);
  for (auto& r : records) {
    if (!extremes_invertible(r.p)) {
      throw Error(Errc::NonInvertibleExtremes,
                  source + ":" + std::to_string(r.line) + ": " + r.p.to_string() +
                      " needs nonzero extreme coefficients that are units of " + domain.name());
    }
    family.set(r.subset, r.w, std::move(r.p), r.line);
  }
  const SubsetMask all = full_set(n);
  for (SubsetMask s = 0;; ++s) {
    for (int w = 1; w <= n; ++w) {
      if (!contains(s, w) && !family.has(s, w)) {
        throw Error(Errc::MissingEntry, source + ": no record for D = " + format_subset(s) +
                                            ", w = " + std::to_string(w));
      }
    }
    if (s == all) break;
  }
  if (auto bad = find_cocycle_violation(family)) {
    throw Error(Errc::CocycleViolation,
                source + ":" + std::to_string(bad->line) +
                    ": p_{D,w} p_{D+w,w'} + p_{D,w'} p_{D+w',w} != 0 for D = " +
                    format_subset(bad->subset) + ", w = " + std::to_string(bad->w) +
                    ", w' = " + std::to_string(bad->w_prime));
  }
  return family;
}

PolynomialFamily load_family_file(const std::filesystem::path& path, Domain domain) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InputError, "cannot read family file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str(), domain, path.string());
}

std::string format_family(const PolynomialFamily& family) {
  std::string out;
  const int n = family.generators();
  const SubsetMask all = full_set(n);
  for (SubsetMask s = 0;; ++s) {
    for (int w = 1; w <= n; ++w) {
      if (contains(s, w) || !family.has(s, w)) continue;
      out += format_subset(s) + " ; " + std::to_string(w) + " ; " + family.at(s, w).to_string() + "\n";
    }
    if (s == all) break;
  }
  return out;
}

}  // namespace artin
