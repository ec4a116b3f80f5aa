#include "hilbalg/json_io.hpp"

namespace hilbio {

using finalg::Algebra;
using finalg::BaseRing;
using finalg::RingEl;
using finalg::Vec;

json base_to_json(const BaseRing& b) {
    json j;
    if (b.over_t) {
        j["kind"] = "poly_t";
        j["inner"] = base_to_json(b.inner());
        return j;
    }
    switch (b.leaf) {
        case BaseRing::Leaf::Z: j["kind"] = "Z"; break;
        case BaseRing::Leaf::Q: j["kind"] = "Q"; break;
        case BaseRing::Leaf::Fp:
            j["kind"] = "Fp";
            j["p"] = b.p.get_si();
            break;
    }
    return j;
}

BaseRing base_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Z") return BaseRing::Z();
    if (kind == "Q") return BaseRing::Q();
    if (kind == "Fp") return BaseRing::Fp(mpz_class(j.at("p").get<long>()));
    if (kind == "poly_t") {
        BaseRing inner = base_from_json(j.at("inner"));
        if (inner.over_t) throw std::invalid_argument("base: nested poly_t is not supported");
        return inner.with_t();
    }
    throw std::invalid_argument("base: unknown kind \"" + kind + "\"");
}

json algebra_to_json(const Algebra& a) {
    json j;
    j["base"] = base_to_json(a.base);
    j["rank"] = a.rank;
    json unit = json::array();
    for (const auto& e : a.unit) unit.push_back(e.str());
    j["unit"] = unit;
    json mult = json::array();
    for (size_t i = 0; i < a.rank; ++i) {
        json ji = json::array();
        for (size_t jj = 0; jj < a.rank; ++jj) {
            json jk = json::array();
            for (size_t k = 0; k < a.rank; ++k) jk.push_back(a.c(i, jj, k).str());
            ji.push_back(jk);
        }
        mult.push_back(ji);
    }
    j["mult"] = mult;
    return j;
}

Algebra algebra_from_json(const json& j) {
    BaseRing base = base_from_json(j.at("base"));
    size_t rank = j.at("rank").get<size_t>();
    Algebra a(base, rank);
    const json& unit = j.at("unit");
    if (unit.size() != rank) throw std::invalid_argument("algebra: unit length != rank");
    for (size_t i = 0; i < rank; ++i)
        a.unit[i] = finalg::ring_parse(base, unit.at(i).get<std::string>());
    const json& mult = j.at("mult");
    if (mult.size() != rank) throw std::invalid_argument("algebra: mult tensor shape mismatch");
    for (size_t i = 0; i < rank; ++i) {
        if (mult.at(i).size() != rank) throw std::invalid_argument("algebra: mult tensor shape mismatch");
        for (size_t jj = 0; jj < rank; ++jj) {
            if (mult.at(i).at(jj).size() != rank)
                throw std::invalid_argument("algebra: mult tensor shape mismatch");
            for (size_t k = 0; k < rank; ++k)
                a.c(i, jj, k) = finalg::ring_parse(base, mult.at(i).at(jj).at(k).get<std::string>());
        }
    }
    return a;
}

json matrix_to_json(const Vec& m, size_t rows, size_t cols) {
    json j = json::array();
    for (size_t i = 0; i < rows; ++i) {
        json row = json::array();
        for (size_t c = 0; c < cols; ++c) row.push_back(m[i * cols + c].str());
        j.push_back(row);
    }
    return j;
}

Vec matrix_from_json(const json& j, const BaseRing& base, size_t rows, size_t cols) {
    if (j.size() != rows) throw std::invalid_argument("matrix: row count mismatch");
    Vec m;
    m.reserve(rows * cols);
    for (size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw std::invalid_argument("matrix: column count mismatch");
        for (size_t c = 0; c < cols; ++c)
            m.push_back(finalg::ring_parse(base, j.at(i).at(c).get<std::string>()));
    }
    return m;
}

json isotype_to_json(const finalg::IsotypeReport& r) {
    json j;
    json factors = json::array();
    for (const auto& f : r.factors) {
        json jf;
        jf["residue_degree"] = std::to_string(f.residue_degree);
        json hf = json::array();
        for (size_t h : f.hilbert) hf.push_back(std::to_string(h));
        jf["hilbert_function"] = hf;
        factors.push_back(jf);
    }
    j["factors"] = factors;
    j["lci"] = r.lci;
    return j;
}

finalg::IsotypeReport isotype_from_json(const json& j) {
    finalg::IsotypeReport r;
    for (const auto& jf : j.at("factors")) {
        finalg::FactorReport f;
        f.residue_degree = std::stoul(jf.at("residue_degree").get<std::string>());
        for (const auto& h : jf.at("hilbert_function"))
            f.hilbert.push_back(std::stoul(h.get<std::string>()));
        r.factors.push_back(std::move(f));
    }
    r.lci = j.at("lci").get<bool>();
    return r;
}

json connectivity_to_json(const bounds::ConnectivityReport& r) {
    json j;
    j["n"] = std::to_string(r.n);
    j["d"] = std::to_string(r.d);
    j["complex_connectivity"] = std::to_string(r.complex_connectivity);
    j["real_connectivity"] = std::to_string(r.real_connectivity);
    j["suspension_a1_connectivity"] = std::to_string(r.suspension_a1_connectivity);
    j["very_effective_index"] = std::to_string(r.very_effective_index);
    j["motivic_weight_iso_bound"] = std::to_string(r.motivic_weight_iso_bound);
    return j;
}

bounds::ConnectivityReport connectivity_from_json(const json& j) {
    auto get = [&](const char* k) { return std::stol(j.at(k).get<std::string>()); };
    bounds::ConnectivityReport r;
    r.n = get("n");
    r.d = get("d");
    r.complex_connectivity = get("complex_connectivity");
    r.real_connectivity = get("real_connectivity");
    r.suspension_a1_connectivity = get("suspension_a1_connectivity");
    r.very_effective_index = get("very_effective_index");
    r.motivic_weight_iso_bound = get("motivic_weight_iso_bound");
    return r;
}

json count_to_json(const bounds::CountReport& r) {
    json j;
    j["n"] = std::to_string(r.n);
    j[r.algebra_homs ? "d" : "r"] = std::to_string(r.second);
    j["p"] = std::to_string(r.p);
    j["algebra_homs"] = r.algebra_homs;
    j["total"] = r.total.get_str();
    j["non_surjective"] = r.non_surjective.get_str();
    j["expected_dimension"] = std::to_string(r.expected_dimension);
    j["formula_value"] = r.formula_value.get_str();
    return j;
}

bounds::CountReport count_from_json(const json& j) {
    bounds::CountReport r;
    r.n = std::stol(j.at("n").get<std::string>());
    r.algebra_homs = j.at("algebra_homs").get<bool>();
    r.second = std::stol(j.at(r.algebra_homs ? "d" : "r").get<std::string>());
    r.p = std::stol(j.at("p").get<std::string>());
    r.total = mpz_class(j.at("total").get<std::string>());
    r.non_surjective = mpz_class(j.at("non_surjective").get<std::string>());
    r.expected_dimension = std::stol(j.at("expected_dimension").get<std::string>());
    r.formula_value = mpz_class(j.at("formula_value").get<std::string>());
    return r;
}

}  // namespace hilbio
