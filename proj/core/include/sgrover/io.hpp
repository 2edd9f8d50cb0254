#pragma once

#include <string>
#include <vector>

#include "sgrover/bloch.hpp"
#include "sgrover/checks.hpp"
#include "sgrover/spectra.hpp"
#include "sgrover/walk.hpp"

namespace sgrover {

/// Dense complex matrix with labeled row/column bases, the exchange form
/// used by the serializers.
struct LinearMap {
  std::string row_space;
  std::string col_space;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  Matrix mat;
};

std::string to_json(const SpectrumReport& r);
std::string to_csv(const SpectrumReport& r);

std::string to_json(const ProbabilityTable& t);
std::string to_csv(const ProbabilityTable& t);

std::string to_json(const BandReport& r);
std::string to_csv(const BandReport& r);

/// Basis labels plus row-major complex entries.
std::string to_json(const LinearMap& m);
/// Row-major real/imag pairs, one row per line.
std::string to_csv(const LinearMap& m);

std::string to_json(const std::vector<CheckResult>& results);
std::string to_text(const std::vector<CheckResult>& results);

std::string to_json(const ValidationReport& r);

}  // namespace sgrover
