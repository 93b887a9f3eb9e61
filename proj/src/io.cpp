#include "hankelcert/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hankelcert::io {

json set_to_json(const LacunarySet& set) { return json(set.indices()); }

LacunarySet set_from_json(const json& j) {
  if (!j.is_array())
    throw std::invalid_argument("set_from_json: expected a JSON array");
  return LacunarySet(j.get<std::vector<std::int64_t>>());
}

json hankel_to_json(const HankelOperator& H) {
  return json{{"a", H.coeffs().values()}};
}

HankelOperator hankel_from_json(const json& j) {
  if (j.contains("a"))
    return make_hankel(CoefficientSequence(j.at("a").get<std::vector<double>>()));
  if (j.contains("K") && j.contains("v"))
    return make_paley_hankel(
        set_from_json(j.at("K")),
        CoefficientSequence(j.at("v").get<std::vector<double>>()));
  throw std::invalid_argument(
      "hankel_from_json: expected {\"a\": [...]} or {\"K\": [...], \"v\": [...]}");
}

json certificate_to_json(const SchurCertificate& cert,
                         const CertificateReport& rep) {
  return json{{"u", cert.u},
              {"w", cert.w},
              {"T", cert.T},
              {"N", cert.range},
              {"ok", rep.ok},
              {"worst_row_ratio", rep.worst_row_ratio},
              {"slack", rep.slack}};
}

json fold_profile_to_json(const FoldProfile& prof) {
  return json{{"K", prof.set.indices()},
              {"v", prof.weights.values()},
              {"gap_strategy",
               prof.gap_strategy == GapStrategy::mirror ? "mirror" : "constant"},
              {"gap_value", prof.gap_value},
              {"u", prof.u}};
}

json trig_to_json(const TrigPolynomial& poly) {
  json out = json::array();
  for (const auto& [freq, c] : poly.terms())
    out.push_back(json::array({freq, c.real(), c.imag()}));
  return out;
}

json sharpness_rows_to_json(const std::vector<SharpnessRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row{{"J", r.J},
             {"l2", r.l2},
             {"norm", r.norm},
             {"ratio", r.ratio},
             {"verified", r.verified}};
    row["residual"] = std::isnan(r.residual) ? json() : json(r.residual);
    out.push_back(row);
  }
  return out;
}

void write_sharpness_csv(std::ostream& os, const std::vector<SharpnessRow>& rows) {
  os << "J,l2,norm,ratio,verified\n";
  os.precision(17);
  for (const auto& r : rows)
    os << r.J << ',' << r.l2 << ',' << r.norm << ',' << r.ratio << ','
       << (r.verified ? 1 : 0) << '\n';
}

void write_matrix_csv(std::ostream& os, const Matrix& m) {
  os.precision(17);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << '\n';
  }
}

std::vector<double> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sequence file: " + path);
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    try {
      std::size_t used = 0;
      double value = std::stod(line.substr(pos), &used);
      std::size_t rest = line.find_first_not_of(" \t\r", pos + used);
      if (rest != std::string::npos) throw std::invalid_argument("trailing text");
      out.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected one numeric value per line");
    }
  }
  return out;
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, ',')) parts.push_back(cur);
  if (!text.empty() && text.back() == ',') parts.push_back("");
  return parts;
}

}  // namespace

LacunarySet parse_set_list(const std::string& text) {
  std::vector<std::int64_t> ks;
  for (const auto& part : split_commas(text)) {
    try {
      std::size_t used = 0;
      ks.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_set_list: bad integer '" + part + "'");
    }
  }
  return LacunarySet(std::move(ks));
}

LacunarySet set_from_rule(const std::string& rule, std::size_t terms) {
  // Accepted shapes: "B^j", "B^j-D", "B^j+D" with positive integer base B.
  std::size_t caret = rule.find("^j");
  if (caret == std::string::npos || caret == 0)
    throw std::invalid_argument("set_from_rule: expected a rule like '2^j-1'");
  std::int64_t base = 0;
  std::int64_t offset = 0;
  try {
    std::size_t used = 0;
    base = std::stoll(rule.substr(0, caret), &used);
    if (used != caret) throw std::invalid_argument("bad base");
    const std::string tail = rule.substr(caret + 2);
    if (!tail.empty()) {
      if (tail[0] != '+' && tail[0] != '-')
        throw std::invalid_argument("bad offset");
      offset = std::stoll(tail, &used);
      if (used != tail.size()) throw std::invalid_argument("bad offset");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("set_from_rule: expected a rule like '2^j-1'");
  }
  if (base < 2)
    throw std::invalid_argument("set_from_rule: base must be at least 2");
  std::vector<std::int64_t> ks;
  std::int64_t power = 1;
  for (std::size_t j = 0; j < terms; ++j) {
    ks.push_back(power + offset);
    if (j + 1 < terms) {
      if (power > (std::int64_t(1) << 62) / base)
        throw std::invalid_argument("set_from_rule: rule exceeds 64-bit range");
      power *= base;
    }
  }
  return LacunarySet(std::move(ks));
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split_commas(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_double_list: bad number '" + part + "'");
    }
  }
  return out;
}

}  // namespace hankelcert::io
