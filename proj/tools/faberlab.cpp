// faberlab: generate Faber polynomials, check curve/weight conditions, solve
// Riemann boundary problems, and run expansion/convergence studies.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "faberlab/expansion.hpp"
#include "faberlab/io.hpp"

namespace fs = std::filesystem;
using namespace faberlab;

namespace {

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::Config:
    case ErrorKind::Sizing:
    case ErrorKind::Data:
        return 2;
    case ErrorKind::Condition:
        return 3;
    default:
        return 4;
    }
}

CurveSpec parse_curve(const std::string& text) {
    if (!text.empty() && text.front() == '{') return curve_from_json(Json::parse(text));
    std::string name = text, args;
    if (auto pos = text.find(':'); pos != std::string::npos) {
        name = text.substr(0, pos);
        args = text.substr(pos + 1);
    }
    if (name == "circle") return CurveSpec::circle(args.empty() ? 1.0 : std::stod(args));
    if (name == "ellipse") {
        auto comma = args.find(',');
        if (comma == std::string::npos)
            throw Error(ErrorKind::Config, "ellipse needs two semi-axes, e.g. ellipse:2,1");
        return CurveSpec::ellipse(std::stod(args.substr(0, comma)),
                                  std::stod(args.substr(comma + 1)));
    }
    throw Error(ErrorKind::Config, "unknown curve '" + text + "'");
}

std::function<Complex(Complex)> parse_sample(const std::string& text, unsigned seed) {
    std::string name = text, args;
    if (auto pos = text.find(':'); pos != std::string::npos) {
        name = text.substr(0, pos);
        args = text.substr(pos + 1);
    }
    if (name == "sample") return parse_sample(args, seed);
    if (name == "runge") return [](Complex z) { return 1.0 / (z - 3.0); };
    if (name == "poly") {
        const int k = args.empty() ? 1 : std::stoi(args);
        return [k](Complex z) { return std::pow(z, double(k)); };
    }
    if (name == "laurent") {
        const int k = args.empty() ? 1 : std::stoi(args);
        return [k](Complex z) { return std::pow(z, -double(k)); };
    }
    if (name == "random-band") {
        // seeded band-limited combination sum c_n z^n, |n| <= 10
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        auto cs = std::make_shared<std::vector<Complex>>();
        for (int n = -10; n <= 10; ++n) cs->emplace_back(u(rng), u(rng));
        return [cs](Complex z) {
            Complex v(0.0, 0.0);
            for (int n = -10; n <= 10; ++n) v += (*cs)[n + 10] * std::pow(z, double(n));
            return v;
        };
    }
    throw Error(ErrorKind::Config, "unknown sample function '" + text + "'");
}

// FNV-1a over the canonical config string; embedded in every artifact
std::string config_hash(const Json& config) {
    const std::string s = config.dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Config, "cannot write " + path.string());
    out << content;
}

struct Common {
    std::string curve = "circle";
    std::string weight;
    std::string outdir = ".";
    double p = 2.0;
    int N = 1024;
    bool strict = false;
};

WeightSpec parse_weight(const Common& c) {
    WeightSpec w = c.weight.empty() ? WeightSpec::unit(c.p)
                                    : weight_from_json(Json::parse(c.weight));
    w.p = c.p;
    return w;
}

int threads_cap() {
    if (const char* env = std::getenv("FABERLAB_THREADS")) return std::max(1, std::atoi(env));
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Faber polynomials, Riemann boundary problems, and double-system expansions"};
    app.require_subcommand(1);

    Common c;
    int n_index = 5;
    std::string side = "plus";
    std::string fspec = "runge";
    double phase_alpha = 0.0;
    bool use_phase = false;
    int M1 = -1, M2 = -1, Mmax = 32;
    unsigned seed = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--curve", c.curve, "circle[:R], ellipse:a,b, or JSON");
        cmd->add_option("--weight", c.weight, "weight JSON, e.g. {\"points\":[3.14],\"alphas\":[0.5]}");
        cmd->add_option("--p", c.p, "L^p exponent (1 < p)");
        cmd->add_option("--N", c.N, "grid size (power of two)");
        cmd->add_option("--out", c.outdir, "output directory");
        cmd->add_flag("--strict", c.strict, "turn condition warnings into failures");
    };

    auto* gen = app.add_subcommand("gen", "generate a Faber polynomial");
    add_common(gen);
    gen->add_option("--n", n_index, "polynomial index");
    gen->add_option("--side", side, "plus or minus");

    auto* check = app.add_subcommand("check", "curve regularity and weight admissibility report");
    add_common(check);

    auto* solve = app.add_subcommand("solve", "solve A F+ + B F- = f");
    add_common(solve);
    solve->add_option("--f", fspec, "runge | poly:k | laurent:k | random-band");
    solve->add_option("--phase-alpha", phase_alpha, "use A=e^{i a arg xi}, B=e^{-i a arg xi}")
        ->each([&](const std::string&) { use_phase = true; });
    solve->add_option("--seed", seed, "seed for random-band data");

    auto* expand = app.add_subcommand("expand", "double-system expansion of f");
    add_common(expand);
    expand->add_option("--f", fspec, "runge | poly:k | laurent:k | random-band");
    expand->add_option("--M1", M1, "plus truncation (default N/8)");
    expand->add_option("--M2", M2, "minus truncation (default N/8)");
    expand->add_option("--phase-alpha", phase_alpha, "phase-system parameter")
        ->each([&](const std::string&) { use_phase = true; });
    expand->add_option("--seed", seed, "seed for random-band data");

    auto* study = app.add_subcommand("study", "convergence study over truncations");
    add_common(study);
    study->add_option("--f", fspec, "runge | poly:k | laurent:k | random-band");
    study->add_option("--phase-alpha", phase_alpha, "phase-system parameter")
        ->each([&](const std::string&) { use_phase = true; });
    study->add_option("--Mmax", Mmax, "largest truncation");
    study->add_option("--seed", seed, "seed for random-band data");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!is_power_of_two(c.N) || !(c.p > 1.0))
            throw Error(ErrorKind::Config, "need power-of-two N and p > 1");
        fs::create_directories(c.outdir);
        const fs::path out(c.outdir);
        (void)threads_cap(); // parallelism cap, recorded below

        Json config{{"curve", c.curve}, {"weight", c.weight},  {"p", c.p},
                    {"N", c.N},         {"strict", c.strict},  {"threads", threads_cap()}};

        if (*gen) {
            config["command"] = "gen";
            config["n"] = n_index;
            config["side"] = side;
            const std::string hash = config_hash(config);
            const auto spec = parse_curve(c.curve);
            FaberPolynomial poly;
            if (side == "plus") {
                poly = faber_plus_checked(build_map(spec, MapDirection::Phi), c.p, n_index);
            } else if (side == "minus") {
                poly = faber_minus_checked(build_map(spec, MapDirection::Psi), c.p, n_index);
            } else {
                throw Error(ErrorKind::Config, "side must be plus or minus");
            }
            write_file(out / "faber.csv", faber_to_csv(poly, "config " + hash));
            Json report = faber_to_json(poly);
            report["config_hash"] = hash;
            write_file(out / "faber.json", report.dump(2) + "\n");
        } else if (*check) {
            config["command"] = "check";
            const std::string hash = config_hash(config);
            const auto spec = parse_curve(c.curve);
            const auto w = parse_weight(c);
            w.validate(spec.length());
            const auto carleson = check_regular(spec, c.N);
            const auto scan = muckenhoupt_scan(w, spec, std::min(c.N, 512));
            const auto adm = beta_exponents(w, {}, c.p, spec.length());
            Json report{{"config_hash", hash},
                        {"curve", curve_to_json(spec)},
                        {"weight", weight_to_json(w)},
                        {"carleson_sup_ratio", carleson.sup_ratio},
                        {"is_regular", carleson.is_regular},
                        {"ap_estimate", scan.ap_estimate},
                        {"in_class", scan.in_class},
                        {"betas", adm.betas},
                        {"window_ok", adm.window_ok}};
            if (c.strict && (!scan.in_class || !adm.window_ok))
                throw Error(ErrorKind::Condition, "weight fails the admissibility checks:\n" +
                                                      report.dump(2));
            write_file(out / "check.json", report.dump(2) + "\n");
        } else if (*solve || *expand || *study) {
            config["command"] = (*solve) ? "solve" : (*expand) ? "expand" : "study";
            config["f"] = fspec;
            config["phase_alpha"] = use_phase ? phase_alpha : 0.0;
            config["seed"] = seed;
            const std::string hash = config_hash(config);
            const auto spec = parse_curve(c.curve);
            const auto w = parse_weight(c);
            auto sp = make_space(spec, c.N, c.p, w);
            auto f = BoundaryFunction::from_callable(sp.curve, parse_sample(fspec, seed));

            CoefficientPair pair;
            if (use_phase) {
                std::vector<Complex> av(c.N), bv(c.N);
                for (int j = 0; j < c.N; ++j) {
                    av[j] = std::exp(Complex(0.0, phase_alpha * sp.arg_xi[j]));
                    bv[j] = std::exp(Complex(0.0, -phase_alpha * sp.arg_xi[j]));
                }
                pair.A = BoundaryFunction(sp.curve, av);
                pair.B = BoundaryFunction(sp.curve, bv);
                pair.jump_sites = {0.0};
                pair.jump_sizes = {4.0 * kPi * phase_alpha};
            } else {
                pair = CoefficientPair::from_callables(
                    sp.curve, [](Complex) { return Complex(1.0, 0.0); },
                    [](Complex) { return Complex(-1.0, 0.0); });
            }

            if (*solve) {
                auto sol = solve_nonhomogeneous(pair, w, c.p, f, -1, true, c.strict);
                write_file(out / "plus_trace.csv",
                           boundary_to_csv(sol.plus_trace, "config " + hash));
                write_file(out / "minus_trace.csv",
                           boundary_to_csv(sol.minus_trace, "config " + hash));
                Json report{{"config_hash", hash},
                            {"boundary_residual", sol.boundary_residual},
                            {"m", sol.m},
                            {"warnings", sol.warnings}};
                write_file(out / "solve.json", report.dump(2) + "\n");
            } else {
                const int m1 = M1 >= 0 ? M1 : c.N / 8;
                const int m2 = M2 >= 0 ? M2 : c.N / 8;
                const int mm = (*study) ? Mmax : std::max(m1, m2);
                auto ex = expand_double(f, pair, sp, (*study) ? mm : m1, (*study) ? mm : m2,
                                        c.strict);
                std::ostringstream coeffs;
                coeffs.precision(17);
                coeffs << "# config " << hash << "\ndegree,re,im\n";
                for (size_t n = 0; n < ex.plus_coeffs.size(); ++n)
                    coeffs << n << ',' << ex.plus_coeffs[n].real() << ','
                           << ex.plus_coeffs[n].imag() << '\n';
                for (size_t k = 1; k <= ex.minus_coeffs.size(); ++k)
                    coeffs << -static_cast<long>(k) << ',' << ex.minus_coeffs[k - 1].real()
                           << ',' << ex.minus_coeffs[k - 1].imag() << '\n';
                write_file(out / "coefficients.csv", coeffs.str());
                write_file(out / "residuals.csv",
                           residuals_to_csv(ex.residual_history, "config " + hash));
                const double slope = decay_slope(ex.residual_history);
                Json report{{"config_hash", hash},
                            {"residual_final", ex.residual_history.back()},
                            {"decay_slope", slope},
                            {"convergent", slope < -0.05},
                            {"plus_purity", ex.plus_purity},
                            {"minus_purity", ex.minus_purity},
                            {"g0_defect", ex.g0_defect},
                            {"warnings", ex.warnings}};
                write_file(out / ((*study) ? "study.json" : "expand.json"), report.dump(2) + "\n");
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
