#pragma once

// JSON and text forms for the public types. Structure-constant tables use
// {"dim": D, "basis": [...], "f": [[[...]]]}, row-major in (A, B, C).

#include <sstream>
#include <string>

#include <json.hpp>

#include "gcalg/dirac.hpp"
#include "gcalg/gc.hpp"
#include "gcalg/matrix.hpp"
#include "gcalg/structure_constants.hpp"
#include "gcalg/verify.hpp"

namespace gcalg {

inline nlohmann::json table_to_json(const StructureConstantsTable& t) {
    nlohmann::json f = nlohmann::json::array();
    for (std::size_t a = 0; a < t.dim(); ++a) {
        nlohmann::json fa = nlohmann::json::array();
        for (std::size_t b = 0; b < t.dim(); ++b) {
            nlohmann::json fb = nlohmann::json::array();
            for (std::size_t c = 0; c < t.dim(); ++c) fb.push_back(t.at(a, b, c));
            fa.push_back(fb);
        }
        f.push_back(fa);
    }
    return {{"dim", t.dim()}, {"basis", t.basis_names()}, {"f", f}};
}

inline TablePtr table_from_json(const nlohmann::json& j) {
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> names;
    if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
    const auto& f = j.at("f");
    if (f.size() != dim) throw std::invalid_argument("table json: f has wrong shape");
    std::vector<double> flat;
    flat.reserve(dim * dim * dim);
    for (std::size_t a = 0; a < dim; ++a) {
        if (f[a].size() != dim)
            throw std::invalid_argument("table json: f has wrong shape");
        for (std::size_t b = 0; b < dim; ++b) {
            if (f[a][b].size() != dim)
                throw std::invalid_argument("table json: f has wrong shape");
            for (std::size_t c = 0; c < dim; ++c)
                flat.push_back(f[a][b][c].get<double>());
        }
    }
    return std::make_shared<StructureConstantsTable>(dim, std::move(flat),
                                                     std::move(names));
}

inline nlohmann::json to_json(GcNumber q) {
    return {{"a", q.a}, {"b", q.b}, {"c", q.c}};
}

inline nlohmann::json to_json(const PolarGc& p) {
    return {{"R", p.R}, {"theta", p.theta}, {"phi", p.phi}};
}

// "a + bi - cj" style display.
inline std::string format_gc(GcNumber q) {
    std::ostringstream os;
    os << q.a;
    os << (q.b < 0 ? " - " : " + ") << std::abs(q.b) << "i";
    os << (q.c < 0 ? " - " : " + ") << std::abs(q.c) << "j";
    return os.str();
}

inline nlohmann::json to_json(const PostulateVerdict& v) {
    nlohmann::json j = {{"holds", v.holds}};
    if (!v.holds) {
        j["witness"] = v.witness;
        j["discrepancy"] = v.discrepancy;
    }
    return j;
}

inline nlohmann::json to_json(const AdlerReport& r) {
    return {{"postulate_1", to_json(r.p1)},
            {"postulate_2", to_json(r.p2)},
            {"postulate_3", to_json(r.p3)},
            {"postulate_4", to_json(r.p4)},
            {"postulate_5", to_json(r.p5_gc)},
            {"postulate_5_sgc", to_json(r.p5_sgc)}};
}

inline nlohmann::json to_json(const ResidualReport& r) {
    nlohmann::json samples = nlohmann::json::array();
    for (const ResidualSample& s : r.samples)
        samples.push_back({{"x", s.x},
                           {"t", s.t},
                           {"analytic", s.analytic},
                           {"fd", s.fd},
                           {"fd_half", s.fd_half}});
    return {{"h", r.h},
            {"samples", samples},
            {"max_analytic", r.max_analytic},
            {"max_fd", r.max_fd},
            {"max_fd_half", r.max_fd_half},
            {"convergence_ratio", r.convergence_ratio()}};
}

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"expected_failure", c.expected_failure},
                          {"as_predicted", c.as_predicted},
                          {"detail", c.detail}});
    return {{"checks", checks}, {"all_ok", r.all_ok()}};
}

}  // namespace gcalg
