// Command-line driver: parse a bivariate Laurent polynomial, run the
// Newton-polytope zeta pipeline, and render tables, JSON, pole data,
// non-degeneracy reports, or formula-vs-oracle comparisons.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lzeta/json_io.hpp"
#include "lzeta/oracle.hpp"
#include "lzeta/zetafun.hpp"

using namespace lzeta;

namespace {

constexpr int kExitDegenerate = 2;
constexpr int kExitParse = 3;
constexpr int kExitBadPrime = 4;

struct Options {
    std::string poly;
    long long prime = 7;
    std::string mode = "table";
    double s = 0.2;
    bool s_given = false;
    int trunc = 40;
    int depth = 4;
    std::string min_val = "0,0";
    std::string fan = "partition";
    bool raw = false;
};

std::pair<int, int> parse_min_val(const std::string& text) {
    int m = 0, n = 0;
    char comma = 0;
    std::istringstream is(text);
    if (!(is >> m >> comma >> n) || comma != ',' || m < 0 || n < 0)
        throw Error("--min-val expects M,N with nonnegative integers");
    return {m, n};
}

void warn_small_prime(const LaurentPolynomial& f, long long p) {
    long long max_exp = 0;
    ClearedPolynomial cl = clear_denominators(f);
    for (const auto& [e, c] : cl.poly.terms()) max_exp = std::max({max_exp, e.i, e.j});
    if (p <= max_exp)
        std::cerr << "warning: p = " << p << " does not exceed the largest cleared exponent "
                  << max_exp << "; 'q big enough' hypotheses may fail\n";
}

std::string l_term_string(long long N, const std::string& symbol, bool raw) {
    if (N == 0) return raw ? "(1-q^-1)^2" : "(1-q^{-1})^2";
    if (raw) return "q^-2((q-1)^2+" + symbol + "(t-1)/(1-q^-1*t))";
    return "q^{-2}((q-1)^2+" + symbol + "(q^{-s}-1)/(1-q^{-s-1}))";
}

std::string band_string(const Band& b) {
    return "beta = " + to_string(b.beta) +
           ", alpha = " + (b.alpha ? to_string(*b.alpha) : "+inf");
}

std::string poles_string(const std::vector<PoleData>& poles) {
    std::string out;
    for (std::size_t k = 0; k < poles.size(); ++k) {
        if (k) out += ", ";
        out += to_string(poles[k].real_part);
    }
    return out;
}

void print_table(const ZetaFunction& Z, bool raw) {
    std::cout << "f = " << Z.poly_text << "\n";
    std::cout << "p = " << Z.p << "\n\n";
    std::cout << "Z0(s,f) = L0(q^{-s}) + sum over cones of L_D(q^{-s}) S_D(q^{-s})\n\n";
    std::cout << "L0 = " << l_term_string(Z.N0, "N_0", raw);
    if (Z.N0 != 0) std::cout << "   with N_0 = " << Z.N0;
    std::cout << "\n\n";

    std::vector<std::array<std::string, 4>> rows;
    rows.push_back({"cone generators", "corresponding face", "L_D(q^{-s})", "S_D(q^{-s})"});
    std::vector<std::string> legend;
    for (const auto& d : Z.details) {
        std::string sym = "N_{" + d.cone.label + "}";
        rows.push_back({d.cone.label, d.cone.face.name(),
                        l_term_string(d.N, sym, raw), d.S.to_string(raw)});
        if (d.N != 0)
            legend.push_back(sym + " = " + std::to_string(d.N) + "   (torus zeros of " +
                             clear_denominators(face_function(parse(Z.poly_text), d.cone.face))
                                 .poly.to_string() +
                             " over F_" + std::to_string(Z.p) + ")");
    }
    std::array<std::size_t, 4> width{};
    for (const auto& r : rows)
        for (int k = 0; k < 4; ++k) width[k] = std::max(width[k], r[k].size());
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        for (int k = 0; k < 4; ++k) {
            std::cout << rows[ri][k] << std::string(width[k] - rows[ri][k].size(), ' ');
            std::cout << (k < 3 ? " | " : "\n");
        }
        if (ri == 0) {
            for (int k = 0; k < 4; ++k)
                std::cout << std::string(width[k], '-') << (k < 3 ? "-+-" : "\n");
        }
    }
    std::cout << "\n";
    for (const std::string& l : legend) std::cout << l << "\n";
    if (!legend.empty()) std::cout << "\n";
}

void print_report(const NondegeneracyReport& rep, const std::string& what) {
    std::cout << what << " over F_" << rep.p << ": "
              << (rep.overall ? "non-degenerate" : "DEGENERATE") << "\n";
    for (const auto& e : rep.entries) {
        std::cout << "  [" << e.label << "] " << e.face.name() << ": cleared "
                  << e.cleared.to_string() << " -> "
                  << (e.degenerate ? "degenerate" : "ok");
        if (e.witness)
            std::cout << ", witness (" << e.witness->x << "," << e.witness->y << ")";
        std::cout << "\n";
    }
}

int run(const Options& opt) {
    if (!is_prime(opt.prime)) {
        std::cerr << "error[badprime]: p = " << opt.prime << " is not prime\n";
        return kExitBadPrime;
    }
    LaurentPolynomial f = parse(opt.poly);
    if (f.is_zero()) {
        std::cerr << "error[parse]: polynomial is zero\n";
        return kExitParse;
    }
    warn_small_prime(f, opt.prime);
    auto min_val = parse_min_val(opt.min_val);
    bool want_fan = opt.fan == "simple";

    if (opt.mode == "check") {
        NewtonPolytope P = newton_polytope(f);
        ConicalPartition part = conical_partition(P);
        NondegeneracyReport weak = check_weak_nondegeneracy(f, part, opt.prime);
        NondegeneracyReport khov = check_khovanskii_nondegeneracy(f, opt.prime);
        print_report(weak, "weak non-degeneracy (faces met by the positive quadrant)");
        std::cout << "\n";
        print_report(khov, "Khovanskii non-degeneracy (all proper faces)");
        return weak.overall ? 0 : kExitDegenerate;
    }

    if (opt.mode == "oracle") {
        if (!opt.s_given) throw Error("--mode oracle requires --s");
        IntegralEstimate est =
            truncated_Z0(f, opt.prime, opt.s, opt.trunc, opt.depth, min_val);
        double formula;
        std::string formula_kind;
        if (min_val == std::pair<int, int>{0, 0}) {
            ZetaFunction Z = assemble(f, opt.prime);
            formula = evaluate(Z, rational(opt.prime), opt.s);
            formula_kind = "explicit formula";
        } else {
            IntegralEstimate sp =
                stationary_phase_sum(f, opt.prime, opt.s, opt.trunc, min_val);
            formula = sp.value;
            formula_kind = "stationary-phase stratum sum";
        }
        double diff = std::fabs(formula - est.value);
        std::printf("formula (%s) = %.12g\n", formula_kind.c_str(), formula);
        std::printf("oracle          = %.12g +- %.3g\n", est.value, est.error_bound);
        std::printf("|difference|    = %.3g (%s certified bound)\n", diff,
                    diff <= est.error_bound ? "within" : "OUTSIDE");
        std::cout << estimate_json(est) << "\n";
        return diff <= est.error_bound ? 0 : 1;
    }

    // table / poles / json need the assembled pipeline.
    ZetaFunction Z = assemble(f, opt.prime);
    SimpleFan fan = make_simple(Z.partition, /*force_nontrivial=*/true);
    GeneratorClasses classes = classify_generators(fan, Z.polytope);
    std::vector<PoleData> poles_part = candidate_poles(Z.partition.rays, Z.polytope);
    std::vector<PoleData> poles_fan = candidate_poles(fan.rays, Z.polytope);
    Band band_part = convergence_band(Z.partition.rays, Z.polytope);
    Band band_fan = convergence_band(fan.rays, Z.polytope);

    if (opt.mode == "poles") {
        std::cout << "partition generators: " << cone_label(Z.partition.rays) << "\n";
        std::cout << "candidate pole real parts: " << poles_string(poles_part) << "\n";
        std::cout << "convergence band: " << band_string(band_part) << "\n\n";
        std::cout << "simple fan rays: " << cone_label(fan.rays) << "\n";
        std::cout << "candidate pole real parts: " << poles_string(poles_fan) << "\n";
        std::cout << "convergence band: " << band_string(band_fan) << "\n";
        return 0;
    }

    if (opt.mode == "json") {
        NondegeneracyReport weak = check_weak_nondegeneracy(f, Z.partition, opt.prime);
        NondegeneracyReport khov = check_khovanskii_nondegeneracy(f, opt.prime);
        PipelineData data;
        data.zeta = &Z;
        data.weak = &weak;
        data.khovanskii = &khov;
        if (want_fan) {
            data.fan = &fan;
            data.classes = &classes;
        }
        data.poles_partition = poles_part;
        data.poles_fan = poles_fan;
        data.band_partition = band_part;
        data.band_fan = band_fan;
        std::cout << pipeline_json(data) << "\n";
        return 0;
    }

    if (opt.mode == "table") {
        print_table(Z, opt.raw);
        if (opt.s_given)
            std::printf("Z0(%.6g, f) at q = %lld: %.12g\n\n", opt.s, opt.prime,
                        evaluate(Z, rational(opt.prime), opt.s));
        std::cout << "candidate pole real parts (partition): " << poles_string(poles_part)
                  << "\n";
        std::cout << "convergence band (partition): " << band_string(band_part) << "\n";
        if (want_fan) {
            std::cout << "\nsimple fan rays: " << cone_label(fan.rays) << "\n";
            std::cout << "candidate pole real parts (simple fan): "
                      << poles_string(poles_fan) << "\n";
            std::cout << "convergence band (simple fan): " << band_string(band_fan) << "\n";
        }
        return 0;
    }

    throw Error("unknown mode: " + opt.mode);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local zeta functions of bivariate Laurent polynomials over Q_p"};
    Options opt;
    app.add_option("--poly", opt.poly, "Laurent polynomial, e.g. \"x^-3+y^-2+y^4\"")
        ->required();
    app.add_option("--prime", opt.prime, "residue field size (prime)");
    app.add_option("--mode", opt.mode, "table|json|poles|check|oracle")
        ->check(CLI::IsMember({"table", "json", "poles", "check", "oracle"}));
    auto* sopt = app.add_option("--s", opt.s, "real s for evaluation / oracle runs");
    app.add_option("--trunc", opt.trunc, "oracle lattice truncation M");
    app.add_option("--depth", opt.depth, "oracle coset refinement depth");
    app.add_option("--min-val", opt.min_val, "minimal valuations M,N of the domain");
    app.add_option("--fan", opt.fan, "partition|simple")
        ->check(CLI::IsMember({"partition", "simple"}));
    app.add_flag("--raw", opt.raw, "print (q,t) monomials instead of s-notation");
    CLI11_PARSE(app, argc, argv);
    opt.s_given = sopt->count() > 0;

    try {
        return run(opt);
    } catch (const ParseError& e) {
        std::cerr << "error[parse]: " << e.what() << "\n";
        return kExitParse;
    } catch (const DegeneracyError& e) {
        std::cerr << "error[degenerate]: " << e.what() << "\n";
        for (const auto& entry : e.report.entries)
            if (entry.degenerate && entry.witness)
                std::cerr << "error[degenerate]: face " << entry.face.name() << " witness ("
                          << entry.witness->x << "," << entry.witness->y << ")\n";
        return kExitDegenerate;
    } catch (const HullDimensionError& e) {
        std::cerr << "error[degenerate]: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const BadPrime& e) {
        std::cerr << "error[badprime]: " << e.what() << "\n";
        return kExitBadPrime;
    } catch (const Error& e) {
        std::cerr << "error[runtime]: " << e.what() << "\n";
        return 1;
    }
}
