#include "hinv/io.hpp"

#include <fstream>
#include <sstream>

namespace hinv {

namespace {

std::string key(int k, int j) { return std::to_string(k) + "," + std::to_string(j); }

Rational entry(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw std::invalid_argument("expected a rational string, got " + v.dump());
}

json zero_residuals(int n) {
  json out = json::object();
  for (int m = 1; m < n; ++m) out[std::to_string(m)] = "0";
  return out;
}

json matrix_json(const MatrixQ& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json to_json(const HMatrix& h) {
  json rows = json::array();
  for (int k = 1; k <= h.size(); ++k) {
    json row = json::array();
    for (int j = 1; j <= k; ++j) row.push_back(to_string(h(k, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", h.size()}, {"rows", rows}};
}

HMatrix hmatrix_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows"))
    throw std::invalid_argument("HMatrix document needs \"n\" and \"rows\"");
  if (!doc["n"].is_number_integer()) throw std::invalid_argument("\"n\" must be an integer");
  const long long n = doc["n"].get<long long>();
  const json& rows = doc["rows"];
  if (n < 0 || !rows.is_array() || static_cast<long long>(rows.size()) != n)
    throw std::invalid_argument("\"rows\" must hold exactly n rows");
  HMatrix h(static_cast<int>(n));
  for (int k = 1; k <= n; ++k) {
    const json& row = rows[k - 1];
    if (!row.is_array() || static_cast<int>(row.size()) != k)
      throw std::invalid_argument("row " + std::to_string(k) + " must have " + std::to_string(k) +
                                  " entries");
    for (int j = 1; j <= k; ++j) h.set(k, j, entry(row[j - 1]));
  }
  return h;
}

json to_json(const QProfile& q) {
  json table = json::object();
  for (int j = 1; j < q.n(); ++j)
    for (int k = 1; k + j <= q.n(); ++k)
      if (!is_zero(q(k, j))) table[key(k, j)] = to_string(q(k, j));
  return {{"n", q.n()}, {"q", table}};
}

QProfile qprofile_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("q") || !doc["q"].is_object())
    throw std::invalid_argument("QProfile document needs \"n\" and object \"q\"");
  if (!doc["n"].is_number_integer()) throw std::invalid_argument("\"n\" must be an integer");
  QProfile q(doc["n"].get<int>());
  for (const auto& [name, value] : doc["q"].items()) {
    int k = 0, j = 0;
    char comma = 0;
    std::istringstream is(name);
    if (!(is >> k >> comma >> j) || comma != ',' || !is.eof())
      throw std::invalid_argument("bad Q key '" + name + "'");
    if (k < 1 || j < 1 || k + j > q.n()) throw std::invalid_argument("Q key out of range '" + name + "'");
    q.set(k, j, entry(value));
  }
  return q;
}

json to_json(const CertificateSet& lambda) {
  json out = json::object();
  for (int k = 2; k <= lambda.n(); ++k)
    for (int j = 1; j < k; ++j) out[key(k, j)] = to_string(lambda(k, j));
  return out;
}

json to_json(const InvarianceReport& report) {
  json out = json::object();
  for (int m = 1; m < report.n; ++m) out[std::to_string(m)] = to_string(report.residual(m));
  return out;
}

json to_json(const Verdict& v) {
  json out = {{"status", status_name(v)}};
  json negative = json::array();
  if (auto* o = std::get_if<Optimal>(&v)) {
    out["residuals"] = zero_residuals(o->certificates.n());
    out["lambda"] = to_json(o->certificates);
  } else if (auto* iv = std::get_if<InvarianceViolated>(&v)) {
    out["residuals"] = to_json(iv->report);
    out["lambda"] = json::object();
  } else {
    const auto& cv = std::get<CertificateViolated>(v);
    out["residuals"] = zero_residuals(cv.certificates.n());
    out["lambda"] = to_json(cv.certificates);
    for (auto [k, j] : cv.negative) negative.push_back({k, j});
  }
  out["negative"] = negative;
  return out;
}

json to_json(const GramWitness& w, bool with_vectors) {
  json out = {{"n", w.n},
              {"epsilon", to_string(w.epsilon)},
              {"gram", matrix_json(w.gram)},
              {"violated_pair", {w.violated_pair.first, w.violated_pair.second}},
              {"residual_sq", to_string(w.residual_sq)},
              {"bound_sq", to_string(w.bound_sq())}};
  if (with_vectors) out["vectors"] = witness_vectors(w);
  return out;
}

HMatrix read_hmatrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return hmatrix_from_json(doc);
}

}  // namespace hinv
