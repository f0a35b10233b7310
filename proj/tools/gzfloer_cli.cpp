// Command-line front end: polytope membership and faces, fiber types,
// boundary strata reports, disk potentials, and critical-point certificates.

#include <CLI11.hpp>

#include "gzfloer/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gzfloer;
using Json = nlohmann::ordered_json;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        out.push_back(s.substr(start, comma == std::string::npos ? comma : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Rational parse_rat(const std::string& s, const std::string& flag) {
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(flag + ": cannot parse rational '" + s + "'");
    }
}

Weight parse_lambda(const std::string& flag, int n) {
    if (flag.empty()) return Weight::standard(n);
    auto parts = split_csv(flag);
    if (parts.size() != 3)
        throw std::invalid_argument("--lambda expects three values A,B,C");
    return Weight(parse_rat(parts[0], "--lambda"), parse_rat(parts[1], "--lambda"),
                  parse_rat(parts[2], "--lambda"));
}

// Coordinates arrive in the order u_{1,1}, ..., u_{1,n}, u_{2,1}, ..., u_{n,1}.
GZPoint parse_point(const std::string& csv, int n) {
    auto parts = split_csv(csv);
    if (static_cast<int>(parts.size()) != 2 * n - 1)
        throw std::invalid_argument("--point expects " + std::to_string(2 * n - 1) +
                                    " coordinates for n = " + std::to_string(n));
    GZPoint u;
    for (int k = 0; k < n; ++k) u.u_row.push_back(parse_rat(parts[k], "--point"));
    for (int k = n; k < 2 * n - 1; ++k) u.u_col.push_back(parse_rat(parts[k], "--point"));
    return u;
}

// Plucker entries are "re" or "re:im".
ComplexRational parse_complex(const std::string& s, const std::string& flag) {
    auto colon = s.find(':');
    ComplexRational z;
    z.re = parse_rat(s.substr(0, colon), flag);
    if (colon != std::string::npos) z.im = parse_rat(s.substr(colon + 1), flag);
    return z;
}

std::vector<ComplexRational> parse_complex_list(const std::string& csv, const std::string& flag,
                                                int expect) {
    auto parts = split_csv(csv);
    if (static_cast<int>(parts.size()) != expect)
        throw std::invalid_argument(flag + " expects " + std::to_string(expect) + " entries");
    std::vector<ComplexRational> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(parse_complex(p, flag));
    return out;
}

// Truncation order: explicit flag, then GZ_FLOER_TRUNC, then a default deep
// enough to expose both exponent levels of the potential past the threshold.
Rational default_trunc(int n, const Rational& t) {
    Rational a = Rational(4 * n) * t;
    Rational b = Rational(n - 1) + t + Rational(n) * t;
    return a > b ? a : b;
}

Rational resolve_trunc(const std::string& flag, int n, const Rational& t) {
    if (!flag.empty()) return parse_rat(flag, "--trunc");
    if (const char* env = std::getenv("GZ_FLOER_TRUNC"))
        if (*env) return parse_rat(env, "GZ_FLOER_TRUNC");
    return default_trunc(n, t);
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("--out: cannot open '" + out_path + "'");
    f << payload;
}

std::string json_payload(const Json& j) { return j.dump(2) + "\n"; }

Json lambda_json(const Weight& w) {
    return Json::array({frac_string(w.lambda1), frac_string(w.lambda2), frac_string(w.lambda3)});
}

Json complex_json(const ComplexRational& z) {
    Json j;
    j["re"] = frac_string(z.re);
    j["im"] = frac_string(z.im);
    return j;
}

std::string classes_text(const FaceDescriptor& f) {
    std::string s;
    for (std::size_t c = 0; c < f.classes.size(); ++c) {
        if (c) s += "; ";
        for (std::size_t k = 0; k < f.classes[c].size(); ++k) {
            if (k) s += " = ";
            s += face_node_name(f.n, f.classes[c][k]);
        }
    }
    return s.empty() ? "(none)" : s;
}

std::string monomial_text(const LaurentMonomial& m) {
    std::string s = "(" + to_string(m.coeff) + ")";
    for (const auto& [v, e] : m.exponents) {
        s += " " + v.name();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

struct FaceRow {
    FaceDescriptor face;
    std::vector<int> active;
    GZPoint witness;
    FiberType fiber;
};

// Exhaustive face table via the ladder-subgraph lattice; practical for n <= 8.
constexpr int kMaxEnumN = 8;

std::vector<FaceRow> face_table(int n, const Weight& w) {
    GZPolytope poly(n, w);
    std::vector<FaceRow> rows;
    for (const auto& s : enumerate_subgraphs(LadderGraph::build(n))) {
        FaceRow r;
        r.face = face_of(s);
        r.active = poly.active_from_face(r.face);
        auto u = poly.relint_point(r.active);
        if (!u) throw std::logic_error("face lattice produced an infeasible active set");
        r.witness = *u;
        r.fiber = poly.fiber_type(r.witness);
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), [](const FaceRow& a, const FaceRow& b) {
        if (a.face.dimension != b.face.dimension) return a.face.dimension < b.face.dimension;
        return a.active < b.active;
    });
    return rows;
}

struct Report {
    int exit_code = 0;
    std::string payload;
};

Report cmd_polytope(int n, const Weight& w, const std::string& format) {
    GZPolytope poly(n, w);
    bool enumerate = n <= kMaxEnumN;
    std::vector<FaceRow> rows;
    if (enumerate) rows = face_table(n, w);

    std::map<int, int> by_dim;
    int lagrangian = 0;
    for (const auto& r : rows) {
        ++by_dim[r.face.dimension];
        if (r.fiber.is_lagrangian) ++lagrangian;
    }

    if (format == "json") {
        Json j;
        j["n"] = n;
        j["lambda"] = lambda_json(w);
        j["dimension"] = 2 * n - 1;
        j["inequalities"] = poly.num_inequalities();
        j["faces_enumerated"] = enumerate;
        if (enumerate) {
            j["face_count"] = static_cast<int>(rows.size());
            Json counts;
            for (const auto& [d, c] : by_dim) counts[std::to_string(d)] = c;
            j["face_counts_by_dim"] = std::move(counts);
            j["lagrangian_faces"] = lagrangian;
        }
        return {0, json_payload(j)};
    }

    std::ostringstream os;
    os << "Gelfand-Zeitlin polytope for Fl(1," << n << ";" << n + 1 << ")\n";
    os << "lambda = " << frac_string(w.lambda1) << ", " << frac_string(w.lambda2) << ", "
       << frac_string(w.lambda3) << "\n";
    os << "dimension = " << 2 * n - 1 << "\n";
    os << "inequalities = " << poly.num_inequalities() << "\n";
    if (enumerate) {
        os << "faces = " << rows.size() << "\n";
        for (const auto& [d, c] : by_dim) os << "  dim " << d << ": " << c << "\n";
        os << "Lagrangian fiber faces = " << lagrangian << "\n";
    } else {
        os << "faces = (enumeration skipped for n > " << kMaxEnumN << ")\n";
    }
    return {0, os.str()};
}

Report cmd_faces(int n, const Weight& w, const std::string& format) {
    if (n > kMaxEnumN)
        throw std::invalid_argument("faces: exhaustive enumeration supported for n <= " +
                                    std::to_string(kMaxEnumN));
    auto rows = face_table(n, w);
    int lagrangian = 0;
    for (const auto& r : rows)
        if (r.fiber.is_lagrangian) ++lagrangian;

    if (format == "json") {
        Json faces = Json::array();
        for (const auto& r : rows) {
            Json jf = to_json(r.face);
            jf["active"] = r.active;
            jf["witness"] = to_json(r.witness);
            jf["fiber"] = to_json(r.fiber);
            faces.push_back(std::move(jf));
        }
        Json j;
        j["n"] = n;
        j["lambda"] = lambda_json(w);
        j["count"] = static_cast<int>(rows.size());
        j["lagrangian_count"] = lagrangian;
        j["faces"] = std::move(faces);
        return {0, json_payload(j)};
    }

    std::ostringstream os;
    os << rows.size() << " faces (" << lagrangian << " with Lagrangian fiber)\n";
    for (const auto& r : rows)
        os << "dim " << r.face.dimension << "  " << r.fiber.description() << "  "
           << classes_text(r.face) << "\n";
    return {0, os.str()};
}

Report cmd_fiber(int n, const Weight& w, const GZPoint& u, const std::string& format) {
    GZPolytope poly(n, w);
    auto active = poly.active_set(u);
    auto face = poly.face_from_active(active);
    auto fiber = poly.fiber_type(u);
    auto j_cond = poly.condition_j(u);

    if (format == "json") {
        Json j;
        j["n"] = n;
        j["lambda"] = lambda_json(w);
        j["point"] = to_json(u);
        j["active"] = active;
        j["face"] = to_json(face);
        if (j_cond)
            j["condition_j"] = *j_cond;
        else
            j["condition_j"] = nullptr;
        j["fiber"] = to_json(fiber);
        return {0, json_payload(j)};
    }
    return {0, fiber.description() + "\n"};
}

Report cmd_strata(int n, const std::string& format) {
    auto report = full_strata_report(n);
    int code = report.all_pass ? 0 : 1;
    if (format == "json") return {code, json_payload(to_json(report))};

    std::ostringstream os;
    os << "dim M = " << report.boundary.dim_M << ", dim f(M) = " << report.boundary.dim_f
       << ", dim g = " << report.boundary.dim_g << ", dim Phi^-1(g) = "
       << report.boundary.preimage_dim << ", codim = " << report.boundary.codim << "\n";
    os << report.strata.size() << " strata over g:\n";
    for (const auto& s : report.strata) {
        std::string sphere = s.sphere_dim > 0 ? "S^" + std::to_string(s.sphere_dim) : "pt";
        os << "  " << s.name << ": " << sphere << " x T^" << s.torus_rank << " (fiber dim "
           << s.total_fiber_dim << ")\n";
    }
    auto print_checks = [&os](const char* label, const std::vector<CheckItem>& items) {
        os << label << ":\n";
        for (const auto& c : items)
            os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.lhs << " "
               << c.relation << " " << c.rhs << ")\n";
    };
    print_checks("boundary checks", report.boundary.checks);
    print_checks("intersection bounds", report.intersection);
    print_checks("Kunneth checks", report.kunneth);
    os << (report.all_pass ? "ALL CHECKS PASS" : "CHECK FAILURES PRESENT") << "\n";
    return {code, os.str()};
}

Report cmd_potential(int n, const Rational& t, const Rational& trunc, const std::string& format) {
    auto W = build_potential(n, t, BulkParams::trivial(trunc), trunc);
    if (format == "json") return {0, json_payload(to_json(W))};

    std::ostringstream os;
    os << "W on Fl(1," << n << ";" << n + 1 << "), t = " << frac_string(t) << ", truncated at T^("
       << frac_string(trunc) << "): " << W.monomials.size() << " monomials\n";
    for (const auto& m : W.monomials) os << "  " << monomial_text(m) << "\n";
    return {0, os.str()};
}

void solve_text(std::ostringstream& os, const CriticalCertificate& cert) {
    os << "critical point certificate: " << (cert.valid ? "VALID" : "INVALID") << "\n";
    os << "n = " << cert.n << ", t = " << frac_string(cert.t) << ", threshold = T^("
       << frac_string(cert.threshold) << ")\n";
    for (const auto& [v, x] : cert.assignment) {
        auto it = cert.residual_valuations.find(v);
        std::string resid = it != cert.residual_valuations.end() && it->second
                                ? frac_string(*it->second)
                                : "inf";
        os << "  " << v.name() << " = " << to_string(x) << "   [residual val " << resid << "]\n";
    }
    os << "  c = " << to_string(cert.bulk.c) << "\n";
    os << "  c_under = " << to_string(cert.bulk.c_under) << "\n";
}

Report cmd_solve(int n, const Rational& t, const Rational& trunc, const std::string& format) {
    auto cert = extend_to_critical_point(n, t, trunc);
    int code = cert.valid ? 0 : 1;
    if (format == "json") return {code, json_payload(to_json(cert))};
    std::ostringstream os;
    solve_text(os, cert);
    return {code, os.str()};
}

Report cmd_certify(const std::string& cert_path, const std::string& format) {
    if (cert_path.empty()) throw std::invalid_argument("certify: --cert PATH is required");
    std::ifstream f(cert_path);
    if (!f) throw std::invalid_argument("--cert: cannot open '" + cert_path + "'");
    Json j;
    try {
        j = Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("--cert: " + std::string(e.what()));
    }
    auto cert = certificate_from_json(j);
    auto W = build_potential(cert.n, cert.t, cert.bulk, cert.threshold);
    auto result = certify(W, cert);
    int code = result.valid ? 0 : 1;

    if (format == "json") {
        Json out;
        out["n"] = cert.n;
        out["t"] = frac_string(cert.t);
        out["trunc"] = frac_string(cert.threshold);
        out["valid"] = result.valid;
        Json resid;
        for (const auto& [v, rv] : result.residuals)
            resid[v.name()] = rv ? frac_string(*rv) : "inf";
        out["residual_valuations"] = std::move(resid);
        out["failures"] = result.failures;
        return {code, json_payload(out)};
    }

    std::ostringstream os;
    os << "certificate " << cert_path << ": " << (result.valid ? "VALID" : "INVALID") << "\n";
    for (const auto& [v, rv] : result.residuals)
        os << "  " << v.name() << "  residual val " << (rv ? frac_string(*rv) : "inf") << "\n";
    for (const auto& msg : result.failures) os << "  FAIL: " << msg << "\n";
    return {code, os.str()};
}

Report cmd_moment_map(int n, const Weight& w, const std::string& p_csv, const std::string& pu_csv,
                      const std::string& format) {
    PluckerVector v;
    v.p = parse_complex_list(p_csv, "--p", n + 1);
    v.p_under = parse_complex_list(pu_csv, "--p-under", n + 1);

    auto residual_p = plucker_residual(v);
    auto residual_c = degeneration_residual(v, Rational(0));
    auto u = moment_map_eval(v, w);
    GZPolytope poly(n, w);
    bool inside = poly.contains(u);

    if (format == "json") {
        Json j;
        j["n"] = n;
        j["lambda"] = lambda_json(w);
        j["point"] = to_json(u);
        j["plucker_residual"] = complex_json(residual_p);
        j["central_residual"] = complex_json(residual_c);
        j["inside"] = inside;
        if (inside) j["fiber"] = to_json(poly.fiber_type(u));
        return {0, json_payload(j)};
    }

    std::ostringstream os;
    os << "point:";
    for (const auto& x : u.u_row) os << " " << frac_string(x);
    for (const auto& x : u.u_col) os << " " << frac_string(x);
    os << "\n";
    os << "plucker residual = " << frac_string(residual_p.re) << " + " << frac_string(residual_p.im)
       << "i\n";
    os << "central residual = " << frac_string(residual_c.re) << " + " << frac_string(residual_c.im)
       << "i\n";
    os << "inside polytope: " << (inside ? "yes" : "no") << "\n";
    if (inside) os << "fiber: " << poly.fiber_type(u).description() << "\n";
    return {0, os.str()};
}

Report cmd_sweep(int n, const std::string& t_csv, const std::string& trunc_flag,
                 const std::string& format) {
    auto parts = split_csv(t_csv);
    if (parts.empty()) throw std::invalid_argument("sweep: --t expects a nonempty list of values");
    std::vector<Rational> ts;
    for (const auto& p : parts) {
        Rational t = parse_rat(p, "--t");
        if (!(t > 0 && t <= 1))
            throw std::invalid_argument("sweep: every t must lie in (0,1], got " + frac_string(t));
        ts.push_back(t);
    }

    struct Run {
        Rational t;
        Rational trunc;
        GZPoint point;
        CriticalCertificate cert;
    };
    std::vector<Run> runs;
    std::string error;
    Rational error_t;
    for (const auto& t : ts) {
        try {
            Rational trunc = resolve_trunc(trunc_flag, n, t);
            runs.push_back(Run{t, trunc, segment_point(n, t),
                               extend_to_critical_point(n, t, trunc)});
        } catch (const std::exception& e) {
            error = e.what();
            error_t = t;
            break;
        }
    }
    bool aborted = !error.empty();
    bool all_valid = !aborted;
    for (const auto& r : runs) all_valid = all_valid && r.cert.valid;
    int code = aborted || !all_valid ? 1 : 0;

    if (format == "json") {
        Json jr = Json::array();
        for (const auto& r : runs) {
            Json one;
            one["t"] = frac_string(r.t);
            one["trunc"] = frac_string(r.trunc);
            one["segment_point"] = to_json(r.point);
            one["valid"] = r.cert.valid;
            one["certificate"] = to_json(r.cert);
            jr.push_back(std::move(one));
        }
        Json j;
        j["n"] = n;
        j["runs"] = std::move(jr);
        if (aborted) {
            j["aborted_at_t"] = frac_string(error_t);
            j["error"] = error;
        }
        j["valid"] = all_valid;
        return {code, json_payload(j)};
    }

    std::ostringstream os;
    for (const auto& r : runs) {
        os << "t = " << frac_string(r.t) << ": " << (r.cert.valid ? "VALID" : "INVALID")
           << " (trunc " << frac_string(r.trunc) << ", segment point";
        for (const auto& x : r.point.u_row) os << " " << frac_string(x);
        for (const auto& x : r.point.u_col) os << " " << frac_string(x);
        os << ")\n";
    }
    if (aborted) os << "aborted at t = " << frac_string(error_t) << ": " << error << "\n";
    os << "sweep: " << (all_valid ? "VALID" : "INVALID") << "\n";
    return {code, os.str()};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gelfand-Zeitlin polytopes, torus fibers, and disk potentials for Fl(1,n;n+1)"};
    app.require_subcommand(1);

    int n = 0;
    std::string t_str, lambda_str, trunc_str, point_str, p_str, pu_str, cert_path, out_path;
    std::string format = "text";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->transform(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", out_path, "Write the report to this path instead of stdout");
    };
    auto add_n = [&](CLI::App* cmd) { cmd->add_option("--n", n, "Flag size n >= 2")->required(); };
    auto add_lambda = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", lambda_str, "Weight A,B,C (default: monotone values for n)");
    };
    auto add_t = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--t", t_str, "Interpolation parameter in (0,1], as p/q");
        if (required) opt->required();
    };
    auto add_trunc = [&](CLI::App* cmd) {
        cmd->add_option("--trunc", trunc_str,
                        "Novikov truncation order p/q (default: GZ_FLOER_TRUNC or computed)");
    };

    auto* c_polytope = app.add_subcommand("polytope", "Describe the polytope and its face counts");
    add_n(c_polytope);
    add_lambda(c_polytope);
    add_common(c_polytope);

    auto* c_faces = app.add_subcommand("faces", "List all faces with fiber types");
    add_n(c_faces);
    add_lambda(c_faces);
    add_common(c_faces);

    auto* c_fiber = app.add_subcommand("fiber", "Fiber type over a point of the polytope");
    add_n(c_fiber);
    add_lambda(c_fiber);
    c_fiber->add_option("--point", point_str, "Coordinates u_{1,1},...,u_{1,n},u_{2,1},...,u_{n,1}")
        ->required();
    add_common(c_fiber);

    auto* c_strata = app.add_subcommand("strata", "Boundary-divisor stratification report");
    add_n(c_strata);
    add_common(c_strata);

    auto* c_potential = app.add_subcommand("potential", "Build the bulk-deformed disk potential");
    add_n(c_potential);
    add_t(c_potential, true);
    add_trunc(c_potential);
    add_common(c_potential);

    auto* c_solve = app.add_subcommand("solve", "Solve for a critical point and certify it");
    add_n(c_solve);
    add_t(c_solve, true);
    add_trunc(c_solve);
    add_common(c_solve);

    auto* c_certify = app.add_subcommand("certify", "Re-check a stored certificate");
    c_certify->add_option("--cert", cert_path, "Path to a certificate JSON file")->required();
    add_common(c_certify);

    auto* c_moment = app.add_subcommand("moment-map", "Evaluate the moment map on Plucker vectors");
    add_n(c_moment);
    add_lambda(c_moment);
    c_moment->add_option("--p", p_str, "n+1 entries, each re or re:im")->required();
    c_moment->add_option("--p-under", pu_str, "n+1 entries, each re or re:im")->required();
    add_common(c_moment);

    auto* c_sweep = app.add_subcommand("sweep", "Certify critical points for a list of t values");
    add_n(c_sweep);
    add_t(c_sweep, true);
    add_trunc(c_sweep);
    add_common(c_sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Report report;
        if (*c_polytope) {
            report = cmd_polytope(n, parse_lambda(lambda_str, n), format);
        } else if (*c_faces) {
            report = cmd_faces(n, parse_lambda(lambda_str, n), format);
        } else if (*c_fiber) {
            report = cmd_fiber(n, parse_lambda(lambda_str, n), parse_point(point_str, n), format);
        } else if (*c_strata) {
            report = cmd_strata(n, format);
        } else if (*c_potential) {
            Rational t = parse_rat(t_str, "--t");
            report = cmd_potential(n, t, resolve_trunc(trunc_str, n, t), format);
        } else if (*c_solve) {
            Rational t = parse_rat(t_str, "--t");
            report = cmd_solve(n, t, resolve_trunc(trunc_str, n, t), format);
        } else if (*c_certify) {
            report = cmd_certify(cert_path, format);
        } else if (*c_moment) {
            report = cmd_moment_map(n, parse_lambda(lambda_str, n), p_str, pu_str, format);
        } else if (*c_sweep) {
            report = cmd_sweep(n, t_str, trunc_str, format);
        }
        emit(out_path, report.payload);
        return report.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
