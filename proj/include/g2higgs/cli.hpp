#ifndef G2HIGGS_CLI_HPP
#define G2HIGGS_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "g2higgs/genus2.hpp"
#include "g2higgs/kummer.hpp"
#include "g2higgs/localhiggs.hpp"
#include "g2higgs/numeric.hpp"

namespace g2higgs::cli {

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// One invocation's structured result; key=value lines or one JSON object.
struct Record {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> outputs;
    std::vector<std::string> diagnostics;
    std::string status = "ok";

    void in(const std::string& k, const std::string& v) { inputs.emplace_back(k, v); }
    void out(const std::string& k, const std::string& v) { outputs.emplace_back(k, v); }

    void print(std::ostream& os, bool json) const {
        if (!json) {
            os << "command=" << command << "\n";
            for (const auto& [k, v] : inputs) os << k << "=" << v << "\n";
            for (const auto& [k, v] : outputs) os << k << "=" << v << "\n";
            for (size_t i = 0; i < diagnostics.size(); ++i)
                os << "diagnostic" << i << "=" << diagnostics[i] << "\n";
            os << "status=" << status << "\n";
            return;
        }
        nlohmann::ordered_json j;
        j["command"] = command;
        nlohmann::ordered_json ji, jo;
        for (const auto& [k, v] : inputs) ji[k] = v;
        for (const auto& [k, v] : outputs) jo[k] = v;
        j["inputs"] = ji;
        j["outputs"] = jo;
        if (!diagnostics.empty()) j["diagnostics"] = diagnostics;
        j["status"] = status;
        os << j.dump(2) << "\n";
    }
};

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline Rational parse_rational(const std::string& s, const std::string& what) {
    auto r = Rational::parse(s);
    if (!r) throw precondition_error("cannot parse " + what + ": '" + s + "'");
    return *r;
}

inline CurveParams parse_curve(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 3) throw precondition_error("--curve needs r,s,t");
    CurveParams c{parse_rational(parts[0], "r"), parse_rational(parts[1], "s"),
                  parse_rational(parts[2], "t")};
    c.validate();
    return c;
}

struct ParsedPoint {
    bool exact;
    PhasePointQ q;      // valid when exact
    PhasePointD d;      // always valid
};

inline ParsedPoint parse_point(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 6) throw precondition_error("--point needs u0,u1,u2,e0,e1,e2");
    ParsedPoint p;
    p.exact = true;
    std::array<Rational, 6> q;
    std::array<double, 6> d;
    for (int i = 0; i < 6; ++i) {
        auto r = Rational::parse(parts[i]);
        if (r) {
            q[i] = *r;
            d[i] = r->to_double();
        } else {
            p.exact = false;
            try {
                d[i] = std::stod(parts[i]);
            } catch (...) {
                throw precondition_error("cannot parse point coordinate '" + parts[i] + "'");
            }
        }
    }
    p.q = {q[0], q[1], q[2], q[3], q[4], q[5]};
    p.d = {d[0], d[1], d[2], d[3], d[4], d[5]};
    return p;
}

inline HVariant parse_variant_flag(const std::string& s) {
    auto v = parse_variant(s);
    if (!v) throw precondition_error("--variant must be 'printed' or 'corrected'");
    return *v;
}

// Matrix grammar: [[a(z), b(z)],[c(z), d(z)]] with d = -a; entries are
// polynomials in z with rational coefficients, e.g. "1 - 2z + 3/2 z^2".
inline MatPoly2<Rational> parse_matpoly(const std::string& text, int trunc_override = -1,
                                        int min_trunc = 1) {
    std::vector<std::string> entries;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '[') {
            ++depth;
            continue;
        }
        if (c == ']' || (c == ',' && depth == 2)) {
            if (c == ']') --depth;
            if (!cur.empty()) {
                entries.push_back(cur);
                cur.clear();
            }
            continue;
        }
        if (c == ',' && depth == 1) continue;
        if (depth == 2) cur += c;
    }
    if (depth != 0 || entries.size() != 4)
        throw precondition_error("matrix must be [[a,b],[c,d]] with polynomial entries");
    auto to_upoly = [&](const std::string& e) {
        MPoly p = MPoly::parse(e);
        for (const auto& v : p.vars())
            if (v != "z") throw precondition_error("matrix entries must be polynomials in z only");
        std::vector<Rational> coeffs;
        for (int k = 0; k <= p.degree("z"); ++k)
            coeffs.push_back(p.coeff_of("z", k).constant_value());
        return UPoly<Rational>(std::move(coeffs));
    };
    UPoly<Rational> a = to_upoly(entries[0]), b = to_upoly(entries[1]), c = to_upoly(entries[2]),
                    d = to_upoly(entries[3]);
    if (!(d == -a)) throw precondition_error("matrix must be traceless: d = -a");
    int trunc = trunc_override;
    if (trunc < 0) {
        trunc = min_trunc;
        for (const auto* p : {&a, &b, &c}) trunc = std::max(trunc, p->degree());
    }
    return MatPoly2<Rational>(a, b, c, trunc);
}

inline std::string point_to_string(const PhasePointD& p) {
    return fmt_double(p.u0) + "," + fmt_double(p.u1) + "," + fmt_double(p.u2) + "," +
           fmt_double(p.e0) + "," + fmt_double(p.e1) + "," + fmt_double(p.e2);
}
inline std::string point_to_string(const PhasePointQ& p) {
    return p.u0.to_string() + "," + p.u1.to_string() + "," + p.u2.to_string() + "," +
           p.e0.to_string() + "," + p.e1.to_string() + "," + p.e2.to_string();
}

namespace detail_cli {

struct Flags {
    std::string curve, point, variant = "corrected", target, u, alpha, phi, psi1, psi2;
    std::string slice, range, zeros, ab;
    double tol = -1;
    int seeds = -1;
    std::uint64_t seed = 0;
    int k = 1, i = 0, g = 2, trunc = -1, z1_index = 1;
    double step = 0.1;
    bool json = false;
};

}  // namespace detail_cli

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using detail_cli::Flags;
    Flags fl;

    CLI::App app{"exact and numeric computations for a genus-2 integrable system"};
    app.require_subcommand(1);
    app.fallthrough(false);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", fl.json, "emit one JSON object instead of key=value lines");
    };
    auto add_curve = [&](CLI::App* cmd, bool required = true) {
        auto* o = cmd->add_option("--curve", fl.curve, "branch points r,s,t (rationals, p/q ok)");
        if (required) o->required();
    };
    auto add_variant = [&](CLI::App* cmd) {
        cmd->add_option("--variant", fl.variant, "h-formula variant: printed|corrected");
    };

    // ---- g2 group -----------------------------------------------------
    CLI::App* g2 = app.add_subcommand("g2", "genus-2 integrable system operations");
    g2->require_subcommand(1);

    CLI::App* c_eval = g2->add_subcommand("eval", "evaluate F = (h0,h1,h2) at a point");
    add_curve(c_eval);
    c_eval->add_option("--point", fl.point, "u0,u1,u2,e0,e1,e2")->required();
    add_variant(c_eval);
    add_common(c_eval);

    CLI::App* c_comm = g2->add_subcommand("commute", "expand the brackets {h_i,h_j}");
    add_variant(c_comm);
    add_common(c_comm);

    CLI::App* c_rank = g2->add_subcommand("rank", "rank of DF at a point");
    add_curve(c_rank);
    c_rank->add_option("--point", fl.point)->required();
    add_variant(c_rank);
    c_rank->add_option("--tol", fl.tol, "singular value tolerance for floating points");
    add_common(c_rank);

    CLI::App* c_solve = g2->add_subcommand("solve", "numeric fiber solve for F = target");
    add_curve(c_solve);
    c_solve->add_option("--target", fl.target, "a0,a1,a2")->required();
    c_solve->add_option("--seeds", fl.seeds, "number of random restarts");
    c_solve->add_option("--tol", fl.tol, "residual tolerance");
    c_solve->add_option("--seed", fl.seed, "RNG seed");
    add_variant(c_solve);
    add_common(c_solve);

    CLI::App* c_inv = g2->add_subcommand("involution", "apply the sign involution to a point");
    c_inv->add_option("--point", fl.point)->required();
    add_common(c_inv);

    CLI::App* c_invar = g2->add_subcommand("invariance", "check h_i are involution-invariant");
    add_variant(c_invar);
    add_common(c_invar);

    CLI::App* c_hp = g2->add_subcommand("hpolys", "print the symbolic h polynomials");
    add_variant(c_hp);
    add_common(c_hp);

    CLI::App* c_c1 = g2->add_subcommand("c1", "companion-curve branch points for a d=1 value");
    add_curve(c_c1);
    c_c1->add_option("--z1-index", fl.z1_index, "which branch point carries the double zero (1..6)");
    c_c1->add_option("--ab", fl.ab, "a,b of the factor a z + b")->required();
    add_common(c_c1);

    // ---- g2 kummer ----------------------------------------------------
    CLI::App* kum = g2->add_subcommand("kummer", "Kummer quartic surface operations");
    kum->require_subcommand(1);

    CLI::App* k_eval = kum->add_subcommand("eval", "evaluate the quartic at u");
    add_curve(k_eval);
    k_eval->add_option("--u", fl.u, "u0,u1,u2")->required();
    add_common(k_eval);

    CLI::App* k_coeffs = kum->add_subcommand("coeffs", "structural coefficients of the quartic");
    add_curve(k_coeffs, false);
    add_common(k_coeffs);

    CLI::App* k_pencil = kum->add_subcommand("pencil-check", "degree in r (pencil linearity)");
    add_common(k_pencil);

    CLI::App* k_sing = kum->add_subcommand("singular-search", "numeric search for nodes");
    add_curve(k_sing);
    k_sing->add_option("--seeds", fl.seeds);
    k_sing->add_option("--tol", fl.tol);
    k_sing->add_option("--seed", fl.seed);
    add_common(k_sing);

    CLI::App* k_disc = kum->add_subcommand("disc", "elliptic-fiber quartic discriminant identity");
    add_common(k_disc);

    CLI::App* k_mesh = kum->add_subcommand("mesh", "CSV mesh of the quartic on a slice");
    add_curve(k_mesh);
    k_mesh->add_option("--slice", fl.slice, "u2=c")->required();
    k_mesh->add_option("--range", fl.range, "lo:hi for u0 and u1")->required();
    k_mesh->add_option("--step", fl.step, "grid step");

    // ---- local group ----------------------------------------------------
    CLI::App* loc = app.add_subcommand("local", "local models of Higgs fields near zeros");
    loc->require_subcommand(1);
    auto add_phi = [&](CLI::App* cmd, const char* name, std::string& slot) {
        cmd->add_option(name, slot, "matrix [[a,b],[c,-a]], entries polynomial in z")->required();
    };

    CLI::App* l_cls = loc->add_subcommand("classify", "zero order and derivative type");
    add_phi(l_cls, "--phi", fl.phi);
    l_cls->add_option("--trunc", fl.trunc, "truncation degree");
    add_common(l_cls);

    CLI::App* l_pair = loc->add_subcommand("pairing", "symplectic pairing residue");
    add_phi(l_pair, "--phi", fl.phi);
    add_phi(l_pair, "--psi1", fl.psi1);
    add_phi(l_pair, "--psi2", fl.psi2);
    l_pair->add_option("--k", fl.k, "zero order");
    l_pair->add_option("--trunc", fl.trunc);
    add_common(l_pair);

    CLI::App* l_hess = loc->add_subcommand("hessian", "Hessian residue");
    add_phi(l_hess, "--phi", fl.phi);
    add_phi(l_hess, "--psi1", fl.psi1);
    add_phi(l_hess, "--psi2", fl.psi2);
    l_hess->add_option("--k", fl.k);
    l_hess->add_option("--i", fl.i, "power of z in the localized class");
    l_hess->add_option("--trunc", fl.trunc);
    add_common(l_hess);

    CLI::App* l_nd = loc->add_subcommand("nondeg", "Cartan-subalgebra nondegeneracy test");
    add_phi(l_nd, "--phi", fl.phi);
    l_nd->add_option("--k", fl.k);
    l_nd->add_option("--trunc", fl.trunc);
    add_common(l_nd);

    CLI::App* l_hecke = loc->add_subcommand("hecke", "Hecke transform at a direction alpha");
    add_phi(l_hecke, "--phi", fl.phi);
    l_hecke->add_option("--alpha", fl.alpha, "u,v (rationals)")->required();
    l_hecke->add_option("--trunc", fl.trunc);
    add_common(l_hecke);

    CLI::App* l_hc = loc->add_subcommand("hecke-critical", "critical directions of the Hecke curve");
    add_phi(l_hc, "--phi", fl.phi);
    l_hc->add_option("--trunc", fl.trunc);
    add_common(l_hc);

    CLI::App* l_dims = loc->add_subcommand("dims", "dimension bookkeeping for a zero divisor");
    l_dims->add_option("--g", fl.g, "genus")->required();
    l_dims->add_option("--zeros", fl.zeros, "comma list m:ss|m:nil (empty for none)");
    add_common(l_dims);

    // ---------------------------------------------------------------------
    std::vector<const char*> argv;
    std::string prog = "g2";
    argv.push_back(prog.c_str());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << "run with --help for usage\n";
        return 2;
    }

    auto echo_common = [&](Record& rec) {
        if (!fl.curve.empty()) rec.in("curve", fl.curve);
        if (!fl.point.empty()) rec.in("point", fl.point);
    };

    try {
        if (*c_eval) {
            Record rec;
            rec.command = "g2 eval";
            echo_common(rec);
            rec.in("variant", fl.variant);
            CurveParams curve = parse_curve(fl.curve);
            ParsedPoint pt = parse_point(fl.point);
            HVariant variant = parse_variant_flag(fl.variant);
            if (!pt.exact) throw precondition_error("g2 eval needs exact rational coordinates");
            QuadDiff q = eval_F(curve, pt.q, variant);
            rec.out("h0", q.a0.to_string());
            rec.out("h1", q.a1.to_string());
            rec.out("h2", q.a2.to_string());
            rec.print(out, fl.json);
        } else if (*c_comm) {
            Record rec;
            rec.command = "g2 commute";
            rec.in("variant", fl.variant);
            CommutationReport rep = commutation_report(parse_variant_flag(fl.variant));
            rec.out("all_zero", rep.all_zero ? "true" : "false");
            for (const auto& p : rep.pairs)
                rec.out("bracket_h" + std::to_string(p.i) + "_h" + std::to_string(p.j),
                        p.bracket.is_zero() ? "0" : p.bracket.to_string());
            rec.diagnostics = rep.diagnostics;
            rec.print(out, fl.json);
        } else if (*c_rank) {
            Record rec;
            rec.command = "g2 rank";
            echo_common(rec);
            rec.in("variant", fl.variant);
            CurveParams curve = parse_curve(fl.curve);
            ParsedPoint pt = parse_point(fl.point);
            HVariant variant = parse_variant_flag(fl.variant);
            RankResult rr;
            if (pt.exact) {
                rr = jacobian_rank(curve, pt.q, variant);
                rec.out("mode", "exact");
            } else {
                double tol = fl.tol > 0 ? fl.tol : 1e-8;
                rr = jacobian_rank_numeric(curve, pt.d, variant, tol);
                rec.out("mode", "numeric");
                rec.out("tol", fmt_double(tol));
            }
            rec.out("rank", std::to_string(rr.rank));
            rec.out("d", std::to_string(rr.d));
            rec.out("dim_ker", std::to_string(6 - rr.rank));
            rec.print(out, fl.json);
        } else if (*c_solve) {
            Record rec;
            rec.command = "g2 solve";
            echo_common(rec);
            rec.in("target", fl.target);
            CurveParams curve = parse_curve(fl.curve);
            auto parts = split(fl.target, ',');
            if (parts.size() != 3) throw precondition_error("--target needs a0,a1,a2");
            std::array<double, 3> target;
            for (int i = 0; i < 3; ++i) {
                auto r = Rational::parse(parts[i]);
                target[i] = r ? r->to_double() : std::stod(parts[i]);
            }
            FiberSolveOptions opt;
            if (fl.seeds > 0) opt.seeds = fl.seeds;
            if (fl.tol > 0) opt.tol = fl.tol;
            opt.seed = fl.seed;
            rec.in("seeds", std::to_string(opt.seeds));
            rec.in("tol", fmt_double(opt.tol));
            rec.in("seed", std::to_string(opt.seed));
            HVariant variant = parse_variant_flag(fl.variant);
            auto pts = fiber_solve(curve, target, opt, variant);
            rec.out("count", std::to_string(pts.size()));
            for (size_t i = 0; i < pts.size(); ++i) {
                rec.out("point" + std::to_string(i), point_to_string(pts[i]));
                RankResult rr = jacobian_rank_numeric(curve, pts[i], variant, 1e-6);
                rec.out("corank" + std::to_string(i), std::to_string(rr.d));
            }
            rec.print(out, fl.json);
        } else if (*c_inv) {
            Record rec;
            rec.command = "g2 involution";
            echo_common(rec);
            ParsedPoint pt = parse_point(fl.point);
            if (pt.exact)
                rec.out("image", point_to_string(involution_apply(pt.q)));
            else
                rec.out("image", point_to_string(involution_apply(pt.d)));
            rec.print(out, fl.json);
        } else if (*c_invar) {
            Record rec;
            rec.command = "g2 invariance";
            rec.in("variant", fl.variant);
            rec.out("invariant", invariance_check(parse_variant_flag(fl.variant)) ? "true" : "false");
            rec.print(out, fl.json);
        } else if (*c_hp) {
            Record rec;
            rec.command = "g2 hpolys";
            rec.in("variant", fl.variant);
            const auto& h = h_polynomials(parse_variant_flag(fl.variant));
            rec.out("h0", h[0].to_string());
            rec.out("h1", h[1].to_string());
            rec.out("h2", h[2].to_string());
            rec.print(out, fl.json);
        } else if (*c_c1) {
            Record rec;
            rec.command = "g2 c1";
            echo_common(rec);
            rec.in("z1_index", std::to_string(fl.z1_index));
            rec.in("ab", fl.ab);
            CurveParams curve = parse_curve(fl.curve);
            auto parts = split(fl.ab, ',');
            if (parts.size() != 2) throw precondition_error("--ab needs a,b");
            auto pts = c1_companion_branch_points(fl.z1_index, parse_rational(parts[0], "a"),
                                                  parse_rational(parts[1], "b"), curve);
            std::string s;
            for (const auto& b : pts) {
                if (!s.empty()) s += ",";
                s += branch_to_string(b);
            }
            rec.out("branch_points", s);
            rec.print(out, fl.json);
        } else if (*k_eval) {
            Record rec;
            rec.command = "g2 kummer eval";
            rec.in("curve", fl.curve);
            rec.in("u", fl.u);
            CurveParams curve = parse_curve(fl.curve);
            auto parts = split(fl.u, ',');
            if (parts.size() != 3) throw precondition_error("--u needs u0,u1,u2");
            std::array<Rational, 3> u{parse_rational(parts[0], "u0"), parse_rational(parts[1], "u1"),
                                      parse_rational(parts[2], "u2")};
            rec.out("value", kummer_eval(curve, u).to_string());
            rec.print(out, fl.json);
        } else if (*k_coeffs) {
            Record rec;
            rec.command = "g2 kummer coeffs";
            MPoly q = kummer_polynomial();
            std::map<std::string, Rational> assign;
            if (!fl.curve.empty()) {
                rec.in("curve", fl.curve);
                CurveParams curve = parse_curve(fl.curve);
                assign = {{"r", curve.r}, {"s", curve.s}, {"t", curve.t}};
                q = q.eval_partial(assign);
            }
            rec.out("polynomial", q.to_string());
            auto coeff_of_monomial = [&](int a, int b, int c) {
                return q.coeff_of("u0", a).coeff_of("u1", b).coeff_of("u2", c).to_string();
            };
            rec.out("coeff_u0^4", coeff_of_monomial(4, 0, 0));
            rec.out("coeff_u0u1u2", coeff_of_monomial(1, 1, 1));
            rec.out("coeff_u0^2", coeff_of_monomial(2, 0, 0));
            rec.out("coeff_u1^2u2^2", coeff_of_monomial(0, 2, 2));
            rec.print(out, fl.json);
        } else if (*k_pencil) {
            Record rec;
            rec.command = "g2 kummer pencil-check";
            int deg = kummer_polynomial().degree("r");
            rec.out("degree_in_r", std::to_string(deg));
            rec.out("linear_pencil", deg == 1 ? "true" : "false");
            rec.print(out, fl.json);
        } else if (*k_sing) {
            Record rec;
            rec.command = "g2 kummer singular-search";
            rec.in("curve", fl.curve);
            CurveParams curve = parse_curve(fl.curve);
            SingularSearchOptions opt;
            if (fl.seeds > 0) opt.seeds = fl.seeds;
            if (fl.tol > 0) opt.tol = fl.tol;
            opt.seed = fl.seed;
            rec.in("seeds", std::to_string(opt.seeds));
            rec.in("tol", fmt_double(opt.tol));
            rec.in("seed", std::to_string(opt.seed));
            auto pts = kummer_singular_search(curve, opt);
            rec.out("count", std::to_string(pts.size()));
            for (size_t i = 0; i < pts.size(); ++i) {
                rec.out("node" + std::to_string(i), fmt_double(pts[i].u[0]) + "," +
                                                        fmt_double(pts[i].u[1]) + "," +
                                                        fmt_double(pts[i].u[2]));
                rec.out("residuals" + std::to_string(i),
                        fmt_double(pts[i].q_residual) + "," + fmt_double(pts[i].grad_residual));
            }
            rec.print(out, fl.json);
        } else if (*k_disc) {
            Record rec;
            rec.command = "g2 kummer disc";
            DiscriminantIdentity id = c2_discriminant_identity();
            rec.out("equal", id.equal ? "true" : "false");
            rec.out("lhs", id.lhs.to_string());
            rec.out("rhs", id.rhs.to_string());
            EllipticQuartic q35 = c2_fiber_quartic(Rational(3), Rational(5));
            rec.out("quartic_at_s3_t5", q35.a.to_string() + "," + q35.b.to_string() + "," +
                                            q35.c.to_string() + "," + q35.d.to_string() + "," +
                                            q35.e.to_string());
            rec.out("disc_at_s3_t5",
                    id.lhs.eval({{"s", Rational(3)}, {"t", Rational(5)}}).to_string());
            rec.print(out, fl.json);
        } else if (*k_mesh) {
            CurveParams curve = parse_curve(fl.curve);
            auto eq = split(fl.slice, '=');
            if (eq.size() != 2 || eq[0] != "u2")
                throw precondition_error("--slice must be u2=<value>");
            double u2 = std::stod(eq[1]);
            auto rng = split(fl.range, ':');
            if (rng.size() != 2) throw precondition_error("--range must be lo:hi");
            double lo = std::stod(rng[0]), hi = std::stod(rng[1]);
            if (fl.step <= 0 || hi < lo) throw precondition_error("bad mesh range/step");
            CompiledPoly q(kummer_polynomial(), {"u0", "u1", "u2"},
                           {{"r", curve.r}, {"s", curve.s}, {"t", curve.t}});
            out << "u0,u1,Q\n";
            for (double x = lo; x <= hi + 1e-12; x += fl.step)
                for (double y = lo; y <= hi + 1e-12; y += fl.step) {
                    double v[3] = {x, y, u2};
                    out << fmt_double(x) << "," << fmt_double(y) << "," << fmt_double(q.eval(v))
                        << "\n";
                }
        } else if (*l_cls) {
            Record rec;
            rec.command = "local classify";
            rec.in("phi", fl.phi);
            auto m = parse_matpoly(fl.phi, fl.trunc);
            auto c = classify_zero(m);
            rec.out("order", std::to_string(c.order));
            rec.out("derivative_type", c.derivative_type ? to_string(*c.derivative_type) : "undefined");
            rec.out("det_phi0", c.det_phi0.to_string());
            rec.out("ord_det", c.ord_det ? std::to_string(*c.ord_det)
                                         : (">" + std::to_string(m.truncation())));
            rec.print(out, fl.json);
        } else if (*l_pair) {
            Record rec;
            rec.command = "local pairing";
            rec.in("k", std::to_string(fl.k));
            int tr = fl.trunc > 0 ? fl.trunc : 2 * fl.k + 2;
            auto phi = parse_matpoly(fl.phi, tr);
            auto p1 = parse_matpoly(fl.psi1, tr);
            auto p2 = parse_matpoly(fl.psi2, tr);
            rec.out("value", symplectic_pairing(phi, p1, p2, fl.k).to_string());
            rec.print(out, fl.json);
        } else if (*l_hess) {
            Record rec;
            rec.command = "local hessian";
            rec.in("k", std::to_string(fl.k));
            rec.in("i", std::to_string(fl.i));
            int tr = fl.trunc > 0 ? fl.trunc : 2 * fl.k + 2;
            auto phi = parse_matpoly(fl.phi, tr);
            auto p1 = parse_matpoly(fl.psi1, tr);
            auto p2 = parse_matpoly(fl.psi2, tr);
            rec.out("value", hessian_residue(phi, fl.i, fl.k, p1, p2).to_string());
            rec.print(out, fl.json);
        } else if (*l_nd) {
            Record rec;
            rec.command = "local nondeg";
            rec.in("k", std::to_string(fl.k));
            rec.in("phi", fl.phi);
            int tr = fl.trunc > 0 ? fl.trunc : 2 * fl.k + 2;
            auto phi = parse_matpoly(fl.phi, tr);
            auto rep = nondegeneracy_check(phi, fl.k);
            rec.out("cartan", rep.cartan ? "true" : "false");
            rec.out("commuting", rep.commuting ? "true" : "false");
            rec.out("span_dim", std::to_string(rep.span_dim));
            for (size_t i = 0; i < rep.operators.size(); ++i) {
                std::string m = "[";
                for (size_t r = 0; r < rep.operators[i].rows(); ++r) {
                    m += (r ? ";[" : "[");
                    for (size_t c = 0; c < rep.operators[i].cols(); ++c)
                        m += (c ? "," : "") + rep.operators[i](r, c).to_string();
                    m += "]";
                }
                m += "]";
                rec.out("operator" + std::to_string(i), m);
                rec.out("semisimple" + std::to_string(i), rep.semisimple[i] ? "true" : "false");
            }
            rec.print(out, fl.json);
        } else if (*l_hecke) {
            Record rec;
            rec.command = "local hecke";
            rec.in("phi", fl.phi);
            rec.in("alpha", fl.alpha);
            auto Phi = parse_matpoly(fl.phi, fl.trunc, 2);
            auto parts = split(fl.alpha, ',');
            if (parts.size() != 2) throw precondition_error("--alpha needs u,v");
            std::pair<Rational, Rational> alpha{parse_rational(parts[0], "alpha_u"),
                                                parse_rational(parts[1], "alpha_v")};
            auto Phi2 = hecke_transform(Phi, alpha);
            rec.out("result", Phi2.to_string());
            auto c = classify_zero(Phi2);
            rec.out("order", std::to_string(c.order));
            rec.out("derivative_type", c.derivative_type ? to_string(*c.derivative_type) : "undefined");
            UPoly<Rational> tr1 = trace_product(Phi, Phi), tr2 = trace_product(Phi2, Phi2);
            rec.out("tr_phi_sq", tr1.to_string());
            rec.out("tr_preserved", tr1 == tr2 ? "true" : "false");
            rec.print(out, fl.json);
        } else if (*l_hc) {
            Record rec;
            rec.command = "local hecke-critical";
            rec.in("phi", fl.phi);
            auto phi = parse_matpoly(fl.phi, fl.trunc);
            auto hc = hecke_critical_alphas(phi);
            rec.out("quadratic_v2_uv_u2", hc.quadratic[0].to_string() + "," +
                                              hc.quadratic[1].to_string() + "," +
                                              hc.quadratic[2].to_string());
            rec.out("disc", hc.disc.to_string());
            rec.out("disc_is_square", hc.disc_is_square ? "true" : "false");
            if (!hc.disc_is_square) rec.out("extension", "sqrt(" + hc.disc.to_string() + ")");
            for (size_t i = 0; i < hc.roots.size(); ++i)
                rec.out("root" + std::to_string(i),
                        "(" + hc.roots[i].first.to_string() + ":" + hc.roots[i].second.to_string() + ")");
            rec.print(out, fl.json);
        } else if (*l_dims) {
            Record rec;
            rec.command = "local dims";
            rec.in("g", std::to_string(fl.g));
            rec.in("zeros", fl.zeros);
            ZeroDataset data;
            data.genus = fl.g;
            if (!fl.zeros.empty()) {
                for (const auto& item : split(fl.zeros, ',')) {
                    auto mk = split(item, ':');
                    if (mk.size() != 2) throw precondition_error("--zeros items must be m:ss or m:nil");
                    DerivativeType ty;
                    if (mk[1] == "ss" || mk[1] == "semisimple")
                        ty = DerivativeType::semisimple;
                    else if (mk[1] == "nil" || mk[1] == "nilpotent")
                        ty = DerivativeType::nilpotent;
                    else
                        throw precondition_error("zero type must be ss or nil");
                    data.zeros.emplace_back(std::stoi(mk[0]), ty);
                }
            }
            DimReport rep = validate_zero_data(data);
            rec.out("degD", std::to_string(rep.degD));
            rec.out("rank", std::to_string(rep.rank));
            rec.out("dim_ker", std::to_string(rep.dim_ker));
            rec.out("dim_critical_locus", std::to_string(rep.dim_critical_locus));
            rec.out("ok", rep.ok ? "true" : "false");
            if (!rep.ok) rec.out("violation", rep.violation);
            rec.print(out, fl.json);
        }
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace g2higgs::cli

#endif
