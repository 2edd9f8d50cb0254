#include "sgrover/io.hpp"

#include <sstream>

#include <json.hpp>

namespace sgrover {

namespace {

using json = nlohmann::ordered_json;

json complex_value(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_json(const SpectrumReport& r) {
  json j;
  j["basis"] = r.basis;
  j["dimension"] = r.dimension();
  j["cluster_tolerance"] = r.cluster_tol;
  j["eigenvalues"] = json::array();
  for (const auto& z : r.eigenvalues) j["eigenvalues"].push_back(complex_value(z));
  j["clusters"] = json::array();
  for (const auto& [z, mult] : r.clusters)
    j["clusters"].push_back(json{{"value", complex_value(z)}, {"multiplicity", mult}});
  return j.dump(2) + "\n";
}

std::string to_csv(const SpectrumReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "re,im\n";
  for (const auto& z : r.eigenvalues) out << z.real() << ',' << z.imag() << '\n';
  return out.str();
}

std::string to_json(const ProbabilityTable& t) {
  json j;
  j["simplices"] = t.labels;
  j["rows"] = json::array();
  for (int n = 0; n < t.rows.rows(); ++n) {
    json row = json::array();
    for (int i = 0; i < t.rows.cols(); ++i) row.push_back(t.rows(n, i));
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const ProbabilityTable& t) {
  std::ostringstream out;
  out.precision(17);
  out << "n";
  for (const auto& label : t.labels) out << ',' << csv_quote(label);
  out << '\n';
  for (int n = 0; n < t.rows.rows(); ++n) {
    out << n;
    for (int i = 0; i < t.rows.cols(); ++i) out << ',' << t.rows(n, i);
    out << '\n';
  }
  return out.str();
}

std::string to_json(const BandReport& r) {
  json j;
  j["dq"] = r.dq;
  j["samples"] = static_cast<int>(r.thetas.size());
  j["min"] = r.min;
  j["max"] = r.max;
  j["closed_form_max_dev"] = r.closed_form_max_dev;
  j["flat_bands"] = r.flat_bands;
  j["curves"] = json::array();
  for (int k = 0; k < r.curves.rows(); ++k) {
    json row = json::array();
    row.push_back(r.thetas[k]);
    for (int i = 0; i < r.curves.cols(); ++i) row.push_back(r.curves(k, i));
    j["curves"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const BandReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "theta";
  for (int i = 0; i < r.curves.cols(); ++i) out << ",lambda" << i;
  out << '\n';
  for (int k = 0; k < r.curves.rows(); ++k) {
    out << r.thetas[k];
    for (int i = 0; i < r.curves.cols(); ++i) out << ',' << r.curves(k, i);
    out << '\n';
  }
  return out.str();
}

std::string to_json(const LinearMap& m) {
  json j;
  j["row_space"] = m.row_space;
  j["col_space"] = m.col_space;
  j["row_labels"] = m.row_labels;
  j["col_labels"] = m.col_labels;
  j["entries"] = json::array();  // row-major
  for (int i = 0; i < m.mat.rows(); ++i)
    for (int k = 0; k < m.mat.cols(); ++k) j["entries"].push_back(complex_value(m.mat(i, k)));
  return j.dump(2) + "\n";
}

std::string to_csv(const LinearMap& m) {
  std::ostringstream out;
  out.precision(17);
  for (int i = 0; i < m.mat.rows(); ++i) {
    for (int k = 0; k < m.mat.cols(); ++k) {
      if (k) out << ',';
      out << m.mat(i, k).real() << ',' << m.mat(i, k).imag();
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const std::vector<CheckResult>& results) {
  json j = json::array();
  for (const auto& r : results) {
    json item;
    item["name"] = r.name;
    item["pass"] = r.pass;
    item["value"] = r.value;
    if (!r.note.empty()) item["note"] = r.note;
    j.push_back(std::move(item));
  }
  return j.dump(2) + "\n";
}

std::string to_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.pass ? "PASS  " : "FAIL  ") << r.name;
    if (r.value != 0.0) out << "  (" << r.value << ")";
    if (!r.note.empty()) out << "  [" << r.note << "]";
    out << '\n';
  }
  return out.str();
}

std::string to_json(const ValidationReport& r) {
  json j;
  j["dim"] = r.dim;
  j["pure"] = r.pure;
  j["strongly_connected"] = r.strongly_connected;
  j["max_cofacet_count"] = r.max_cofacet_count;
  j["simplex_counts"] = r.simplex_counts;
  j["facet_counts"] = r.facet_counts;
  return j.dump(2) + "\n";
}

}  // namespace sgrover
