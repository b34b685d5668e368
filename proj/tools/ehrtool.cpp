// ehrtool: exact Ehrhart quasi-polynomials of translated rational polytopes.
//
// Subcommands: count, tl, ehrhart, cells, plot, verify, hilbert.
// Exit codes: 0 success / consistent verdict, 1 failed check,
//             2 parse error, 3 precondition violation.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ehrhart/ehrhart.hpp"

namespace {

using namespace ehr;

struct GlobalOptions {
    std::string format = "text";
    std::size_t max_dim = 4;
    std::size_t max_facets = 8;
    bool structured() const { return format == "structured"; }
};

Polytope load(const std::string& path, const GlobalOptions& g) {
    Polytope P = load_polytope(path);
    if (P.dimension() > g.max_dim)
        throw limit_error("polytope dimension " + std::to_string(P.dimension()) +
                          " exceeds --max-dim " + std::to_string(g.max_dim));
    return P;
}

RatVec translation(const std::string& literal, const Polytope& P) {
    if (literal.empty()) return RatVec(P.dimension(), Rational(0));
    RatVec v = parse_rational_vector(literal);
    if (v.size() != P.dimension())
        throw precondition_error("--translate has " + std::to_string(v.size()) +
                                 " coordinates for a dimension-" +
                                 std::to_string(P.dimension()) + " polytope");
    return v;
}

void print_quasipoly(const QuasiPolynomial& f, const GlobalOptions& g) {
    if (g.structured()) {
        std::cout << quasipoly_to_json(f).dump(2) << "\n";
    } else {
        std::cout << "period " << f.period() << "\n" << congruence_display(f);
    }
}

int report_exit(const std::vector<CheckReport>& reports, const GlobalOptions& g) {
    bool all = true;
    if (g.structured()) {
        Json out;
        Json checks = Json::array();
        for (const auto& r : reports) {
            Json c;
            c["name"] = r.name;
            c["passed"] = r.passed;
            c["detail"] = r.lines;
            checks.push_back(c);
            all = all && r.passed;
        }
        out["checks"] = checks;
        out["passed"] = all;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
            for (const auto& line : r.lines) std::cout << "  " << line << "\n";
            all = all && r.passed;
        }
    }
    return all ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Ehrhart quasi-polynomials of translated rational polytopes"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--format", g.format, "output format: text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--max-dim", g.max_dim, "soft limit on the polytope dimension");
    app.add_option("--max-facets", g.max_facets, "soft limit for cell enumeration");

    std::string file, vlit, file2, out_path = "cells.svg", kind = "delta";
    long dilate = 1, kmax = 0, tmax = -1, sample_den = 0, entry_bound = 2;
    bool minimize = false, interior = false;
    std::vector<std::string> checks;

    auto* c_count = app.add_subcommand("count", "#((tP+v) ∩ Z^d) by brute force");
    c_count->add_option("file", file)->required();
    c_count->add_option("--translate", vlit, "rational vector p/q,p/q,...");
    c_count->add_option("--dilate", dilate, "dilation t >= 0");

    auto* c_tl = app.add_subcommand("tl", "translated lattice-point enumerator TL_{P,v}");
    c_tl->add_option("file", file)->required();
    c_tl->add_option("--translate", vlit, "rational vector p/q,p/q,...");
    c_tl->add_flag("--interior", interior, "enumerator of the open polytope");

    auto* c_ehr = app.add_subcommand("ehrhart", "Ehrhart quasi-polynomial of P+v");
    c_ehr->add_option("file", file)->required();
    c_ehr->add_option("--translate", vlit, "rational vector p/q,p/q,...");
    c_ehr->add_flag("--minimize-period", minimize);

    auto* c_cells = app.add_subcommand("cells", "cells of the toric arrangement with their TLs");
    c_cells->add_option("file", file)->required();
    c_cells->add_option("--kind", kind)->check(CLI::IsMember({"delta", "lambda"}));

    auto* c_plot = app.add_subcommand("plot", "SVG of the d=2 cell map with an orbit overlay");
    c_plot->add_option("file", file)->required();
    c_plot->add_option("--translate", vlit, "rational vector p/q,p/q,...");
    c_plot->add_option("--kmax", kmax, "orbit points [k v] for k = 0..kmax");
    c_plot->add_option("--out", out_path, "output SVG path");

    auto* c_verify = app.add_subcommand("verify", "run theorem checks");
    c_verify->add_option("file", file)->required();
    c_verify
        ->add_option("--checks", checks,
                     "comma-separated: reciprocity,cs-parity,symmetry,projection,"
                     "minkowski,automorphisms,fingerprint")
        ->delimiter(',');
    c_verify->add_option("--against", file2, "second polytope (fingerprint)");
    c_verify->add_option("--sample-denominator", sample_den);
    c_verify->add_option("--t-max", tmax);
    c_verify->add_option("--entry-bound", entry_bound);

    auto* c_hilb = app.add_subcommand("hilbert", "Hilbert series numerator of (P, v)");
    c_hilb->add_option("file", file)->required();
    c_hilb->add_option("--translate", vlit, "rational vector p/q,p/q,...");

    for (auto* sub : {c_count, c_tl, c_ehr, c_cells, c_plot, c_verify, c_hilb})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (c_count->parsed()) {
        Polytope P = load(file, g);
        RatVec v = translation(vlit, P);
        if (dilate < 0) throw precondition_error("--dilate must be nonnegative");
        Int n = count(P, v, Int(dilate));
        if (g.structured()) {
            Json j;
            j["count"] = n.get_str();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << n.get_str() << "\n";
        }
        return 0;
    }

    if (c_tl->parsed()) {
        Polytope P = load(file, g);
        RatVec v = translation(vlit, P);
        print_quasipoly(interior ? tl_interior(P, v) : tl(P, v), g);
        return 0;
    }

    if (c_ehr->parsed()) {
        Polytope P = load(file, g);
        RatVec v = translation(vlit, P);
        QuasiPolynomial f = ehr_translated(P, v);
        if (minimize) f = f.minimized();
        print_quasipoly(f, g);
        return 0;
    }

    if (c_cells->parsed()) {
        Polytope P = load(file, g);
        CellKind ck = kind == "lambda" ? CellKind::lambda : CellKind::delta;
        auto cx = enumerate_cells(P, ck, g.max_facets, std::min<std::size_t>(g.max_dim, 3));
        CellTable table(P);
        if (g.structured()) {
            Json arr = Json::array();
            for (const auto& cell : cx.cells())
                arr.push_back(cell_to_json(cell, table.tl_for_point(cell.representative)));
            Json j;
            j["kind"] = kind;
            j["cells"] = arr;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << cx.size() << " " << kind << " cells\n";
            for (const auto& cell : cx.cells()) {
                std::cout << "dim " << cell.dimension << "  " << cell.key.str()
                          << "  rep=" << vector_str(cell.representative) << "\n";
                const QuasiPolynomial& f = table.tl_for_point(cell.representative);
                std::cout << "  TL: period " << f.period();
                for (long k = 0; k < f.period(); ++k)
                    std::cout << (k ? "; " : "  ") << f.constituent(k).str();
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (c_plot->parsed()) {
        Polytope P = load(file, g);
        RatVec v = translation(vlit, P);
        SvgOptions opt;
        opt.k_max = kmax;
        opt.max_facets = g.max_facets;
        write_text_file(out_path, render_cell_map_svg(P, v, opt));
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }

    if (c_hilb->parsed()) {
        Polytope P = load(file, g);
        RatVec v = translation(vlit, P);
        HilbertSeriesData h = hilbert_numerator(P, v);
        if (g.structured()) {
            std::cout << hilbert_to_json(h).dump(2) << "\n";
        } else {
            std::cout << "alpha " << h.alpha.get_str() << "\nperiod " << h.q << "\ndimension "
                      << h.d << "\nnumerator";
            for (const auto& c : h.numerator) std::cout << " " << c.get_str();
            std::cout << "\n";
        }
        return 0;
    }

    if (c_verify->parsed()) {
        Polytope P = load(file, g);
        if (checks.empty()) checks = {"reciprocity", "symmetry", "projection", "minkowski"};
        long q = to_long(P.denominator());
        long sden = sample_den > 0 ? sample_den : 2 * q;
        long tm = tmax >= 0 ? tmax : 3 * q;
        std::vector<CheckReport> reports;
        for (const std::string& c : checks) {
            if (c == "reciprocity") {
                reports.push_back(check_maximal_cell_reciprocity(P, g.max_facets));
            } else if (c == "cs-parity") {
                reports.push_back(check_cs_parity(P, g.max_facets));
            } else if (c == "symmetry") {
                auto v = check_symmetry_characterization(P, sden);
                CheckReport r{"symmetry-characterization"};
                r.note(true, std::string("geometric predicate: ") +
                                 (v.predicate_geometric ? "symmetric" : "not symmetric"));
                r.note(true, std::string("sampled ehrhart symmetry: ") +
                                 (v.sampled_symmetric ? "all symmetric" : "witness found"));
                if (v.witness) r.note(true, "witness v = " + vector_str(*v.witness));
                r.note(v.consistent, "predicates agree");
                reports.push_back(std::move(r));
            } else if (c == "projection") {
                for (std::size_t axis = 0; axis < P.dimension(); ++axis) {
                    auto r = check_projection_identity(P, axis, RatVec(P.dimension(), Rational(0)),
                                                       std::min(tm, 6L));
                    r.name += "-axis" + std::to_string(axis);
                    reports.push_back(std::move(r));
                    auto rc = check_projection_identity(P, axis, P.centroid(), std::min(tm, 6L));
                    rc.name += "-axis" + std::to_string(axis) + "-centroid";
                    reports.push_back(std::move(rc));
                }
            } else if (c == "minkowski") {
                auto r = check_facet_difference(P, g.max_facets);
                for (const auto& [a, vol] : minkowski_data(P, false)) {
                    std::string s = "normal (";
                    for (std::size_t j = 0; j < a.size(); ++j) s += (j ? "," : "") + a[j].get_str();
                    r.note(true, s + "), relative volume " + vol.str());
                }
                reports.push_back(std::move(r));
            } else if (c == "automorphisms") {
                auto auts = automorphisms(P, entry_bound);
                CheckReport r{"automorphisms"};
                r.note(!auts.empty(), std::to_string(auts.size()) + " automorphisms found");
                std::vector<RatVec> samples;
                for (long i = 0; i < 4; ++i)
                    for (long j = 0; j < 4; ++j) {
                        RatVec s(P.dimension(), Rational(0));
                        s[0] = Rational(i, 4);
                        if (P.dimension() > 1) s[1] = Rational(j, 4);
                        samples.push_back(std::move(s));
                    }
                for (const auto& gm : auts) {
                    auto ri = check_automorphism_invariance(P, gm, samples);
                    r.note(ri.passed, "TL invariance under one automorphism");
                }
                reports.push_back(std::move(r));
            } else if (c == "fingerprint") {
                if (file2.empty()) throw precondition_error("fingerprint check needs --against FILE");
                Polytope Q = load(file2, g);
                auto eq = equivalent_up_to_integer_translation(P, Q);
                auto fp = fingerprint_distinguishes(P, Q, sden, tm);
                CheckReport r{"fingerprint"};
                r.note(true, eq ? "polytopes are integer translates" : "not integer translates");
                if (fp.separated)
                    r.note(true, "separating pair v = " + vector_str(fp.witness_v) +
                                     ", t = " + std::to_string(fp.witness_t));
                r.note(eq.has_value() != fp.separated,
                       "translation equivalence agrees with the fingerprint scan");
                reports.push_back(std::move(r));
            } else {
                throw parse_error("unknown check: " + c);
            }
        }
        return report_exit(reports, g);
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ehr::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ehr::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
