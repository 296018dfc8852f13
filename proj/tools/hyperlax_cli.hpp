#pragma once

// Command-line front end. Every subcommand reads JSON files and writes one
// JSON document {"status", "payload", "diagnostics"}; the exit code is 0 for
// ok, 1 for a mathematical refutation, 2 for any error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperlax/hyperlax.hpp"
#include "hyperlax/json_io.hpp"

namespace hyperlax::cli {

using Json = json::Json;

enum class Status { ok, refuted, error };

struct CommandResult {
    Status status = Status::ok;
    Json payload = Json::object();
    std::vector<std::string> diagnostics;

    int exit_code() const {
        switch (status) {
            case Status::ok:
                return 0;
            case Status::refuted:
                return 1;
            case Status::error:
                break;
        }
        return 2;
    }
};

inline std::string render(const CommandResult& r) {
    Json j;
    j["status"] = r.status == Status::ok ? "ok" : (r.status == Status::refuted ? "refuted" : "error");
    j["payload"] = r.payload;
    j["diagnostics"] = r.diagnostics;
    return j.dump(2) + "\n";
}

namespace detail {

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline Polynomial read_poly(const std::string& path) { return json::polynomial_from_json(read_json_file(path)); }
inline Vector read_vector(const std::string& path) { return json::vector_from_json(read_json_file(path)); }
inline SymMatrix read_matrix(const std::string& path) { return json::sym_matrix_from_json(read_json_file(path)); }
inline Pencil read_pencil(const std::string& path) { return json::pencil_from_json(read_json_file(path)); }

inline CommandResult verdict_result(const Verdict& v, const std::string& refuted_note) {
    CommandResult r;
    r.payload = json::to_json(v);
    if (!v.passed()) {
        r.status = Status::refuted;
        r.diagnostics.push_back(refuted_note);
    }
    return r;
}

struct Options {
    std::string poly, dir, point, pencil, b, c, q, p;
    std::size_t trials = 1000;
    int radius = 10;
    std::uint64_t seed = 42;
    std::string width = "1/1000000";
    std::optional<std::size_t> degree;
    std::size_t n = 0;
    std::size_t d = 0;

    SamplerConfig sampler() const { return {radius, trials, seed}; }
};

}  // namespace detail

/// Parses args (args[0] is the program name) and runs one subcommand. Help
/// output goes to `help` and yields status ok with an empty payload.
inline CommandResult run(const std::vector<std::string>& args, std::string* help = nullptr) {
    detail::Options o;
    std::function<CommandResult()> action;

    CLI::App app{"Exact hyperbolic polynomials, hyperbolicity cones and determinantal representations", "hyperlax"};
    app.require_subcommand(1);

    auto add_sampling = [&o](CLI::App* cmd, bool with_radius) {
        cmd->add_option("--trials", o.trials, "number of sample points")->check(CLI::PositiveNumber);
        if (with_radius) cmd->add_option("--radius", o.radius, "integer grid radius")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", o.seed, "sampler seed");
    };

    auto* hyperbolic = app.add_subcommand("hyperbolic", "hyperbolicity testing")->require_subcommand(1);
    auto* hcheck = hyperbolic->add_subcommand("check", "sample line restrictions t -> p(w - t e)");
    hcheck->add_option("--poly", o.poly)->required();
    hcheck->add_option("--dir", o.dir)->required();
    add_sampling(hcheck, true);
    hcheck->callback([&] {
        action = [&] {
            const Polynomial p = detail::read_poly(o.poly);
            const Vector e = detail::read_vector(o.dir);
            return detail::verdict_result(test_hyperbolic(p, e, o.sampler()),
                                          "restriction at the witness has non-real roots");
        };
    });

    auto* cone = app.add_subcommand("cone", "hyperbolicity cone queries")->require_subcommand(1);
    auto* member = cone->add_subcommand("member", "exact membership of a point");
    member->add_option("--poly", o.poly)->required();
    member->add_option("--dir", o.dir)->required();
    member->add_option("--point", o.point)->required();
    member->callback([&] {
        action = [&] {
            const Polynomial p = detail::read_poly(o.poly);
            const Vector e = detail::read_vector(o.dir);
            const Vector w = detail::read_vector(o.point);
            CommandResult r;
            switch (classify_point(p, e, w)) {
                case Membership::member:
                    r.payload["member"] = true;
                    break;
                case Membership::non_member:
                    r.payload["member"] = false;
                    break;
                case Membership::not_hyperbolic:
                    r.status = Status::refuted;
                    r.payload["member"] = nullptr;
                    r.payload["witness"] = json::to_json(w);
                    r.diagnostics.push_back("not hyperbolic here: restriction at the point has non-real roots");
                    break;
            }
            return r;
        };
    });
    auto* convexity = cone->add_subcommand("convexity", "sample midpoints and scalings of members");
    convexity->add_option("--poly", o.poly)->required();
    convexity->add_option("--dir", o.dir)->required();
    add_sampling(convexity, false);
    convexity->callback([&] {
        action = [&] {
            const Polynomial p = detail::read_poly(o.poly);
            const Vector e = detail::read_vector(o.dir);
            return detail::verdict_result(cone_convexity_probe(p, e, o.sampler()),
                                          "convexity violated by the witness pair (u, v)");
        };
    });

    auto* realzero = app.add_subcommand("realzero", "real zero polynomials")->require_subcommand(1);
    auto* rcheck = realzero->add_subcommand("check", "sample restrictions t -> q(t y, t z)");
    rcheck->add_option("--poly", o.poly)->required();
    add_sampling(rcheck, false);
    rcheck->callback([&] {
        action = [&] {
            return detail::verdict_result(is_real_zero(detail::read_poly(o.poly), o.sampler()),
                                          "restriction at the witness has non-real roots");
        };
    });

    auto* det = app.add_subcommand("det", "determinant expansion")->require_subcommand(1);
    auto* expand = det->add_subcommand("expand", "det(sum_j w_j G_j) as a polynomial");
    expand->add_option("--pencil", o.pencil)->required();
    expand->callback([&] {
        action = [&] {
            const Polynomial p = expand_det(detail::read_pencil(o.pencil));
            CommandResult r;
            r.payload["poly"] = json::to_json(p);
            r.payload["text"] = format_polynomial(p);
            return r;
        };
    });

    auto* lax = app.add_subcommand("lax", "determinantal certificates")->require_subcommand(1);
    auto* verify = lax->add_subcommand("verify", "check p = det(sum_j w_j G_j) or p = det(xI + yB + zC)");
    verify->add_option("--poly", o.poly)->required();
    auto* pencil_opt = verify->add_option("--pencil", o.pencil);
    auto* b_opt = verify->add_option("--B", o.b);
    auto* c_opt = verify->add_option("--C", o.c);
    pencil_opt->excludes(b_opt)->excludes(c_opt);
    b_opt->needs(c_opt);
    c_opt->needs(b_opt);
    verify->callback([&] {
        action = [&] {
            const Polynomial p = detail::read_poly(o.poly);
            bool ok = false;
            if (!o.pencil.empty()) {
                ok = verify_representation(p, detail::read_pencil(o.pencil));
            } else if (!o.b.empty()) {
                const LaxTriple t(detail::read_matrix(o.b), detail::read_matrix(o.c));
                ok = verify_lax_form(p, t);
            } else {
                throw PreconditionViolated("lax verify needs --pencil or both --B and --C");
            }
            CommandResult r;
            r.payload["verified"] = ok;
            if (!ok) {
                r.status = Status::refuted;
                r.diagnostics.push_back("the certificate does not expand to the polynomial");
            }
            return r;
        };
    });

    auto* rep = app.add_subcommand("rep", "explicit representations")->require_subcommand(1);
    auto* bivariate = rep->add_subcommand("bivariate", "p(x,y) = det(xI + yG), G diagonal");
    bivariate->add_option("--poly", o.poly)->required();
    bivariate->add_option("--width", o.width, "isolating interval width, \"num/den\"");
    bivariate->callback([&] {
        action = [&] {
            CommandResult r;
            r.payload = json::to_json(bivariate_representation(detail::read_poly(o.poly), parse_rational(o.width)));
            return r;
        };
    });

    auto* bridge = app.add_subcommand("bridge", "between R^3 hyperbolic and R^2 real zero polynomials")
                       ->require_subcommand(1);
    auto* hom = bridge->add_subcommand("homogenize", "p(x,y,z) = x^d q(y/x, z/x)");
    hom->add_option("--poly", o.poly)->required();
    hom->add_option("--degree", o.degree)->required();
    hom->callback([&] {
        action = [&] {
            CommandResult r;
            r.payload["poly"] = json::to_json(homogenize(detail::read_poly(o.poly), static_cast<unsigned>(*o.degree)));
            return r;
        };
    });
    auto* dehom = bridge->add_subcommand("dehomogenize", "q(y,z) = p(1,y,z)");
    dehom->add_option("--poly", o.poly)->required();
    dehom->callback([&] {
        action = [&] {
            CommandResult r;
            r.payload["poly"] = json::to_json(dehomogenize(detail::read_poly(o.poly)));
            return r;
        };
    });
    auto* transport = bridge->add_subcommand("transport", "move a (B, C) certificate between q and p");
    auto* q_opt = transport->add_option("--q", o.q);
    auto* p_opt = transport->add_option("--p", o.p);
    transport->add_option("--B", o.b)->required();
    transport->add_option("--C", o.c)->required();
    transport->add_option("--degree", o.degree, "target size for q -> p (zero-pads the triple)");
    q_opt->excludes(p_opt);
    transport->callback([&] {
        action = [&] {
            const LaxTriple t(detail::read_matrix(o.b), detail::read_matrix(o.c));
            Certified out = [&] {
                if (!o.q.empty()) return transport_rz_to_lax(detail::read_poly(o.q), t, o.degree);
                if (!o.p.empty()) return transport_lax_to_rz(detail::read_poly(o.p), t);
                throw PreconditionViolated("bridge transport needs --q or --p");
            }();
            CommandResult r;
            r.payload["poly"] = json::to_json(out.poly);
            r.payload["B"] = json::to_json(out.triple.b);
            r.payload["C"] = json::to_json(out.triple.c);
            return r;
        };
    });

    auto* counter = app.add_subcommand("counterexample", "the Lorentz polynomial for n > 3")->require_subcommand(1);
    auto* refute = counter->add_subcommand("refute", "witness that a 2x2 pencil does not represent it");
    refute->add_option("--pencil", o.pencil)->required();
    refute->callback([&] {
        action = [&] {
            const LorentzRefutation ref = refute_lorentz_representation(detail::read_pencil(o.pencil));
            CommandResult r;
            r.payload["witness"] = json::to_json(ref.witness);
            r.payload["det_value"] = format_rational(ref.det_value);
            r.payload["lorentz_value"] = format_rational(ref.lorentz_value);
            return r;
        };
    });
    auto* lorentz = counter->add_subcommand("lorentz", "w1^2 - w2^2 - ... - wn^2");
    lorentz->add_option("--n", o.n)->required();
    lorentz->callback([&] {
        action = [&] {
            const Polynomial p = lorentz_polynomial(o.n);
            CommandResult r;
            r.payload["poly"] = json::to_json(p);
            r.payload["text"] = format_polynomial(p);
            return r;
        };
    });

    auto* dims = app.add_subcommand("dims", "dimension count of determinantal vs all forms");
    dims->add_option("--n", o.n)->required();
    dims->add_option("--d", o.d)->required();
    dims->callback([&] {
        action = [&] {
            CommandResult r;
            r.payload = json::to_json(dimension_report(o.n, o.d));
            return r;
        };
    });

    CommandResult result;
    try {
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        if (help) *help = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.status = Status::error;
        result.diagnostics.push_back(std::string("usage: ") + e.what());
        return result;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        result.status = Status::error;
        result.diagnostics.push_back(e.what());
        return result;
    }
}

}  // namespace hyperlax::cli
