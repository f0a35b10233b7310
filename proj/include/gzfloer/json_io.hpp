#pragma once

#include "gzfloer/face.hpp"
#include "gzfloer/ladder.hpp"
#include "gzfloer/novikov.hpp"
#include "gzfloer/polytope.hpp"
#include "gzfloer/potential.hpp"
#include "gzfloer/rational.hpp"
#include "gzfloer/strata.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace gzfloer {

using Json = nlohmann::ordered_json;

inline Json to_json(const NovikovElement& x) {
    Json terms = Json::array();
    for (const auto& t : x.terms()) {
        Json jt;
        jt["exp"] = frac_string(t.exp);
        jt["re"] = frac_string(t.coeff.re);
        jt["im"] = frac_string(t.coeff.im);
        terms.push_back(std::move(jt));
    }
    Json j;
    j["terms"] = std::move(terms);
    j["trunc"] = frac_string(x.truncation());
    return j;
}

inline NovikovElement novikov_from_json(const Json& j) {
    if (!j.contains("terms") || !j.contains("trunc"))
        throw std::invalid_argument("novikov element json needs 'terms' and 'trunc'");
    std::vector<NovikovTerm> terms;
    for (const auto& jt : j.at("terms")) {
        NovikovTerm t;
        t.exp = parse_rational(jt.at("exp").get<std::string>());
        t.coeff.re = parse_rational(jt.at("re").get<std::string>());
        t.coeff.im = parse_rational(jt.at("im").get<std::string>());
        terms.push_back(std::move(t));
    }
    return NovikovElement(std::move(terms), parse_rational(j.at("trunc").get<std::string>()));
}

inline Json to_json(const LadderSubgraph& s) {
    Json names = Json::array();
    for (const auto& e : s.edges()) names.push_back(e.name());
    Json j;
    j["n"] = s.n();
    j["edges"] = std::move(names);
    return j;
}

inline Json to_json(const GZPoint& u) {
    Json row = Json::array(), col = Json::array();
    for (const auto& x : u.u_row) row.push_back(frac_string(x));
    for (const auto& x : u.u_col) col.push_back(frac_string(x));
    Json j;
    j["u_row"] = std::move(row);
    j["u_col"] = std::move(col);
    return j;
}

inline GZPoint point_from_json(const Json& j) {
    GZPoint u;
    for (const auto& s : j.at("u_row")) u.u_row.push_back(parse_rational(s.get<std::string>()));
    for (const auto& s : j.at("u_col")) u.u_col.push_back(parse_rational(s.get<std::string>()));
    return u;
}

inline Json to_json(const FiberType& ft) {
    Json j;
    j["sphere_dim"] = ft.sphere_dim;
    j["torus_rank"] = ft.torus_rank;
    j["lagrangian"] = ft.is_lagrangian;
    j["description"] = ft.description();
    return j;
}

inline Json to_json(const FaceDescriptor& f) {
    Json classes = Json::array();
    for (const auto& cls : f.classes) {
        Json names = Json::array();
        for (int id : cls) names.push_back(face_node_name(f.n, id));
        classes.push_back(std::move(names));
    }
    Json j;
    j["equalities"] = std::move(classes);
    j["dimension"] = f.dimension;
    return j;
}

inline Json to_json(const LaurentPotential& W) {
    Json monos = Json::array();
    for (const auto& m : W.monomials) {
        Json exps;
        for (const auto& [v, e] : m.exponents) exps[v.name()] = e;
        Json jm;
        jm["coeff"] = to_json(m.coeff);
        jm["exponents"] = std::move(exps);
        monos.push_back(std::move(jm));
    }
    Json j;
    j["n"] = W.n;
    j["t"] = frac_string(W.t);
    j["trunc"] = frac_string(W.trunc);
    j["monomials"] = std::move(monos);
    return j;
}

inline Json to_json(const CriticalCertificate& cert) {
    Json assign;
    for (const auto& [v, x] : cert.assignment) assign[v.name()] = to_json(x);
    Json resid;
    for (const auto& [v, rv] : cert.residual_valuations)
        resid[v.name()] = rv ? frac_string(*rv) : "inf";
    Json j;
    j["n"] = cert.n;
    j["t"] = frac_string(cert.t);
    j["trunc"] = frac_string(cert.threshold);
    j["assignment"] = std::move(assign);
    j["c"] = to_json(cert.bulk.c);
    j["c_under"] = to_json(cert.bulk.c_under);
    j["residual_valuations"] = std::move(resid);
    j["valid"] = cert.valid;
    return j;
}

inline CriticalCertificate certificate_from_json(const Json& j) {
    std::map<VarId, NovikovElement> assign;
    for (auto it = j.at("assignment").begin(); it != j.at("assignment").end(); ++it)
        assign.emplace(var_from_name(it.key()), novikov_from_json(it.value()));
    std::map<VarId, std::optional<Rational>> resid;
    if (j.contains("residual_valuations")) {
        for (auto it = j.at("residual_valuations").begin();
             it != j.at("residual_valuations").end(); ++it) {
            auto s = it.value().get<std::string>();
            resid.emplace(var_from_name(it.key()),
                          s == "inf" ? std::optional<Rational>{} : parse_rational(s));
        }
    }
    BulkParams bulk{novikov_from_json(j.at("c")), novikov_from_json(j.at("c_under"))};
    return CriticalCertificate{j.at("n").get<int>(),
                               parse_rational(j.at("t").get<std::string>()),
                               parse_rational(j.at("trunc").get<std::string>()),
                               std::move(assign),
                               std::move(bulk),
                               std::move(resid),
                               j.value("valid", false)};
}

inline Json to_json(const CheckItem& c) {
    Json j;
    j["name"] = c.name;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["relation"] = c.relation;
    j["pass"] = c.pass;
    return j;
}

inline Json to_json(const std::vector<CheckItem>& cs) {
    Json j = Json::array();
    for (const auto& c : cs) j.push_back(to_json(c));
    return j;
}

inline Json to_json(const StratumReport& s) {
    Json j;
    j["name"] = s.name;
    j["i"] = s.i;
    j["sphere_dim"] = s.sphere_dim;
    j["torus_rank"] = s.torus_rank;
    j["total_fiber_dim"] = s.total_fiber_dim;
    j["face"] = to_json(s.face);
    j["witness"] = to_json(s.witness);
    return j;
}

inline Json to_json(const BoundaryReport& r) {
    Json j;
    j["n"] = r.n;
    j["dim_M"] = r.dim_M;
    j["dim_f"] = r.dim_f;
    j["dim_g"] = r.dim_g;
    j["preimage_dim"] = r.preimage_dim;
    j["codim"] = r.codim;
    j["checks"] = to_json(r.checks);
    j["all_pass"] = r.all_pass;
    return j;
}

inline Json to_json(const StrataReport& r) {
    Json j;
    j["n"] = r.n;
    j["boundary"] = to_json(r.boundary);
    Json strata = Json::array();
    for (const auto& s : r.strata) strata.push_back(to_json(s));
    j["strata"] = std::move(strata);
    j["intersection"] = to_json(r.intersection);
    j["kunneth"] = to_json(r.kunneth);
    j["all_pass"] = r.all_pass;
    return j;
}

} // namespace gzfloer
