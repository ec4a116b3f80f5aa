#pragma once

#include <json.hpp>

#include "hilbalg/algebra.hpp"
#include "hilbalg/bounds.hpp"
#include "hilbalg/isotype.hpp"

namespace hilbio {

using nlohmann::json;

json base_to_json(const finalg::BaseRing& b);
finalg::BaseRing base_from_json(const json& j);

/// {"base": .., "rank": d, "unit": [..], "mult": [[[..]]]} with coefficients
/// in the polynomial string grammar; mult[i][j][k] = coefficient of e_k in
/// e_i * e_j. Families are the same schema with base kind "poly_t".
json algebra_to_json(const finalg::Algebra& a);
finalg::Algebra algebra_from_json(const json& j);

json matrix_to_json(const finalg::Vec& m, size_t rows, size_t cols);
finalg::Vec matrix_from_json(const json& j, const finalg::BaseRing& base, size_t rows, size_t cols);

json isotype_to_json(const finalg::IsotypeReport& r);
finalg::IsotypeReport isotype_from_json(const json& j);
json connectivity_to_json(const bounds::ConnectivityReport& r);
bounds::ConnectivityReport connectivity_from_json(const json& j);
json count_to_json(const bounds::CountReport& r);
bounds::CountReport count_from_json(const json& j);

}  // namespace hilbio
