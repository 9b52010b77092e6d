#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "artin/complex.hpp"

namespace artin {

/// Reads a custom polynomial family. One record per line:
///
///     <D as comma list, or "-" for the empty set> ; <w> ; <polynomial>
///
/// e.g. "- ; 1 ; 1 - q" or "1 ; 2 ; -(1 - q + q^2)". Blank lines and lines
/// starting with '#' are ignored. The generator count is the largest index
/// mentioned. The family must be total, every entry must have invertible
/// extreme coefficients, and the cocycle relation must hold; failures throw
/// InputError, MissingEntry, NonInvertibleExtremes or CocycleViolation with
/// the offending line number.
PolynomialFamily parse_family(std::string_view text, Domain domain,
                              const std::string& source = "<family>");
PolynomialFamily load_family_file(const std::filesystem::path& path, Domain domain);

/// Inverse of parse_family (records in subset then generator order).
std::string format_family(const PolynomialFamily& family);

}  // namespace artin
