#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hankelcert/best_constant.hpp"
#include "hankelcert/folding.hpp"
#include "hankelcert/hankel.hpp"
#include "hankelcert/schur.hpp"

namespace hankelcert::io {

using nlohmann::json;

json set_to_json(const LacunarySet& set);
LacunarySet set_from_json(const json& j);

/// {"a": [...]} for a plain symbol.
json hankel_to_json(const HankelOperator& H);
/// Accepts {"a": [...]} or the sparse form {"K": [...], "v": [...]}.
HankelOperator hankel_from_json(const json& j);

json certificate_to_json(const SchurCertificate& cert, const CertificateReport& rep);

json fold_profile_to_json(const FoldProfile& prof);

/// Sorted [frequency, re, im] triples.
json trig_to_json(const TrigPolynomial& poly);

json sharpness_rows_to_json(const std::vector<SharpnessRow>& rows);
void write_sharpness_csv(std::ostream& os, const std::vector<SharpnessRow>& rows);

void write_matrix_csv(std::ostream& os, const Matrix& m);

/// One value per line; blank lines and lines starting with '#' are skipped.
std::vector<double> read_sequence_file(const std::string& path);

/// "0,1,3,7" -> LacunarySet.
LacunarySet parse_set_list(const std::string& text);
/// Rules of the form "B^j", "B^j-D", "B^j+D" evaluated at j = 0..terms-1.
LacunarySet set_from_rule(const std::string& rule, std::size_t terms);
std::vector<double> parse_double_list(const std::string& text);

}  // namespace hankelcert::io
