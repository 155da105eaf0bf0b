#include "superbialg/algebra.hpp"
#include "superbialg/bialgebra.hpp"
#include "superbialg/cohomology.hpp"
#include "superbialg/errors.hpp"
#include "superbialg/parse.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace superbialg;

/// Exit status for inputs that parse but fail a mathematical check.
constexpr int exit_check_failed = 1;
/// Exit status for malformed input, bad arguments, or unreadable files.
constexpr int exit_usage = 2;

/// Resolves an expression argument: either inline text or `@path` naming a
/// file whose contents hold the expression.
std::string read_expression_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    const std::string path = arg.substr(1);
    std::ifstream in(path);
    if (!in) throw Error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.pop_back();
    return text;
}

/// Emits one `key: value` (human) or `key=value` (porcelain) line.
void emit(bool porcelain, const std::string& key, const std::string& value) {
    if (porcelain)
        std::cout << key << '=' << value << '\n';
    else
        std::cout << key << ": " << value << '\n';
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

/// Window bound taken from SUPERBIALG_WINDOW when set, else the fallback.
HalfInt env_window_or(HalfInt fallback) {
    const char* env = std::getenv("SUPERBIALG_WINDOW");
    if (env == nullptr || *env == '\0') return fallback;
    return parse_halfint(env);
}

/// Largest |index| appearing in the support of a 2-tensor (0 if empty).
HalfInt max_support_index(const Tensor2& t) {
    HalfInt best(0);
    for (const auto& [key, coeff] : t.terms()) {
        (void)coeff;
        if (key.first.index.abs() > best) best = key.first.index.abs();
        if (key.second.index.abs() > best) best = key.second.index.abs();
    }
    return best;
}

int run_parse(const std::string& arg, bool porcelain) {
    const std::string text = read_expression_arg(arg);
    const Expression expr = parse_expression(text);
    std::string canonical;
    std::string rank;
    std::string parity_text = "mixed";
    std::string degree_text = "mixed";
    std::visit(
        [&](const auto& value) {
            canonical = to_text(value);
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Element>)
                rank = "1";
            else if constexpr (std::is_same_v<T, Tensor2>)
                rank = "2";
            else
                rank = "3";
            if (auto p = value.parity()) parity_text = *p == 0 ? "even" : "odd";
            if (value.is_zero())
                degree_text = "0";
            else if (auto d = value.degree())
                degree_text = d->to_string();
        },
        expr);
    if (!porcelain) {
        std::cout << canonical << '\n';
        return 0;
    }
    emit(porcelain, "canonical", canonical);
    emit(porcelain, "rank", rank);
    emit(porcelain, "parity", parity_text);
    emit(porcelain, "degree", degree_text);
    return 0;
}

int run_check_algebra(HalfInt window, bool porcelain) {
    const auto gens = generators_up_to(window);
    long pair_count = 0;
    for (const Generator& a : gens) {
        for (const Generator& b : gens) {
            const Element br = bracket_basis(a, b);
            // Symmetry: [a,b] + (-1)^{[a][b]} [b,a] = 0, i.e. odd-odd
            // brackets are symmetric (subtract the flip) and all others
            // antisymmetric (add it).
            Element sym = br;
            sym.add_scaled(bracket_basis(b, a),
                           (a.parity() && b.parity()) ? Rational(-1)
                                                      : Rational(1));
            if (!sym.is_zero()) {
                emit(porcelain, "result", "fail");
                emit(porcelain, "reason",
                     "symmetry failed for (" + a.to_string() + ", " +
                         b.to_string() + "): defect " + to_text(sym));
                return exit_check_failed;
            }
            // Grading: every term of [a,b] sits in degree deg a + deg b and
            // parity [a] + [b].
            const HalfInt want_degree = a.degree() + b.degree();
            const int want_parity = (a.parity() + b.parity()) % 2;
            for (const auto& [g, c] : br.terms()) {
                (void)c;
                if (g.degree() != want_degree || g.parity() != want_parity) {
                    emit(porcelain, "result", "fail");
                    emit(porcelain, "reason",
                         "grading failed for (" + a.to_string() + ", " +
                             b.to_string() + ")");
                    return exit_check_failed;
                }
            }
            ++pair_count;
        }
    }
    // bracket(L[0], x) = -degree(x) * x on every window generator.
    const Generator l0 = make_generator(Kind::L, HalfInt(0));
    for (const Generator& g : gens) {
        Element got = bracket_basis(l0, g);
        Element want = Element::single(g, -Rational(g.degree()));
        if (!(got == want)) {
            emit(porcelain, "result", "fail");
            emit(porcelain, "reason",
                 "degree operator failed for " + g.to_string());
            return exit_check_failed;
        }
    }
    long triple_count = 0;
    for (const Generator& a : gens) {
        const Element ea = Element::single(a, Rational(1));
        for (const Generator& b : gens) {
            const Element eb = Element::single(b, Rational(1));
            for (const Generator& c : gens) {
                const Element ec = Element::single(c, Rational(1));
                const Element defect = jacobi_defect(ea, eb, ec);
                if (!defect.is_zero()) {
                    emit(porcelain, "result", "fail");
                    emit(porcelain, "reason",
                         "jacobi failed for (" + a.to_string() + ", " +
                             b.to_string() + ", " + c.to_string() +
                             "): defect " + to_text(defect));
                    return exit_check_failed;
                }
                ++triple_count;
            }
        }
    }
    emit(porcelain, "window", window.to_string());
    emit(porcelain, "generators", std::to_string(gens.size()));
    emit(porcelain, "pairs", std::to_string(pair_count));
    emit(porcelain, "triples", std::to_string(triple_count));
    emit(porcelain, "result", "pass");
    return 0;
}

int run_classify(const std::string& arg, std::optional<HalfInt> window_opt,
                 bool porcelain) {
    const Tensor2 tensor = parse_tensor2(read_expression_arg(arg));
    const RMatrix r = make_rmatrix(tensor);
    HalfInt window(0);
    if (window_opt) {
        window = *window_opt;
    } else {
        window = env_window_or(max_support_index(tensor) + HalfInt(2));
    }
    const ClassifyReport report = classify_r(r, WindowSpec{window});
    emit(porcelain, "skew", bool_text(report.skew));
    emit(porcelain, "cybe_zero", bool_text(report.cybe_zero));
    emit(porcelain, "mybe_window_clean", bool_text(report.mybe_window_clean));
    emit(porcelain, "witness",
         report.witness ? report.witness->first.to_string() : "none");
    emit(porcelain, "window", report.window.bound.to_string());
    return 0;
}

int run_delta(const std::string& r_arg, const std::string& x_arg,
              bool porcelain) {
    const RMatrix r = make_rmatrix(parse_tensor2(read_expression_arg(r_arg)));
    const Element x = parse_element(read_expression_arg(x_arg));
    const Tensor2 result = delta_r(r, x);
    if (!porcelain) {
        std::cout << to_text(result) << '\n';
        return 0;
    }
    emit(porcelain, "delta", to_text(result));
    return 0;
}

int run_cybe(const std::string& arg, bool porcelain) {
    const RMatrix r = make_rmatrix(parse_tensor2(read_expression_arg(arg)));
    const Tensor3 result = cybe(r);
    if (!porcelain) {
        std::cout << to_text(result) << '\n';
        return 0;
    }
    emit(porcelain, "cybe", to_text(result));
    emit(porcelain, "zero", bool_text(result.is_zero()));
    return 0;
}

/// Renders one kernel vector as a sum of `coeff d(gen)[key]` contributions.
std::string derivation_text(const LinearSystem& system,
                            const std::vector<std::pair<int, Rational>>& vec) {
    if (vec.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [col, coeff] : vec) {
        const auto& [gen, key] = system.unknowns[static_cast<size_t>(col)];
        Rational mag = coeff;
        if (first) {
            if (coeff.sign() < 0) {
                out += "-";
                mag = -coeff;
            }
            first = false;
        } else {
            out += coeff.sign() < 0 ? " - " : " + ";
            if (coeff.sign() < 0) mag = -coeff;
        }
        out += mag.to_string() + " d(" + gen.to_string() + ")[" +
               key.first.to_string() + " (x) " + key.second.to_string() + "]";
    }
    return out;
}

int run_h1(int parity, HalfInt degree, long domain, long target, long eq,
           bool verbose, bool porcelain) {
    DerivationSpec spec;
    spec.parity = parity;
    spec.degree = degree;
    spec.domain_bound = domain;
    spec.target_bound = target;
    spec.equation_bound = eq;
    const H1Computation comp = compute_h1(spec);
    const H1Report& rep = comp.report;
    emit(porcelain, "parity", rep.spec.parity == 0 ? "even" : "odd");
    emit(porcelain, "degree", rep.spec.degree.to_string());
    emit(porcelain, "domain", std::to_string(rep.spec.domain_bound));
    emit(porcelain, "target", std::to_string(rep.spec.target_bound));
    emit(porcelain, "eq", std::to_string(rep.spec.equation_bound));
    emit(porcelain, "der_dim", std::to_string(rep.der_dim));
    emit(porcelain, "inn_dim", std::to_string(rep.inn_dim));
    emit(porcelain, "quotient_dim", std::to_string(rep.quotient_dim));
    emit(porcelain, "residuals", std::to_string(rep.residuals.size()));
    if (verbose) {
        for (size_t i = 0; i < comp.derivations.basis.size(); ++i) {
            emit(porcelain, "kernel" + std::to_string(i),
                 derivation_text(comp.system, comp.derivations.basis[i]));
        }
    }
    return rep.quotient_dim == 0 ? 0 : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact-arithmetic calculator for a centerless twisted superconformal "
        "Lie superalgebra: brackets, coboundary cobrackets, Yang-Baxter "
        "obstructions, and windowed first-cohomology checks."};
    app.require_subcommand(1);
    app.fallthrough();

    bool porcelain = false;
    app.add_flag("--porcelain", porcelain,
                 "Machine-readable key=value output");

    auto* cmd_parse =
        app.add_subcommand("parse", "Parse an expression and echo it in "
                                    "canonical form with rank/parity/degree");
    std::string parse_arg;
    cmd_parse->add_option("expr", parse_arg, "Expression text, or @file")
        ->required();

    auto* cmd_check = app.add_subcommand(
        "check-algebra", "Verify bracket symmetry, grading, and the Jacobi "
                         "identity on a finite index window");
    std::string check_window_arg;
    cmd_check->add_option("window", check_window_arg,
                          "Max |index| to test (default 3, or "
                          "SUPERBIALG_WINDOW)");
    bool corrupt = false;
    cmd_check
        ->add_flag("--corrupt-structure-constants", corrupt,
                   "Perturb one structure constant (self-test hook)")
        ->group("");

    auto* cmd_classify = app.add_subcommand(
        "classify", "Classify a candidate r-matrix: skewness, classical "
                    "Yang-Baxter, and windowed modified Yang-Baxter");
    std::string classify_arg;
    cmd_classify->add_option("r", classify_arg, "2-tensor text, or @file")
        ->required();
    std::string classify_window_arg;
    cmd_classify->add_option("-N,--window", classify_window_arg,
                             "Max |index| for the modified Yang-Baxter scan");

    auto* cmd_delta = app.add_subcommand(
        "delta", "Apply the coboundary cobracket induced by r to an element");
    std::string delta_r_arg;
    std::string delta_x_arg;
    cmd_delta->add_option("r", delta_r_arg, "2-tensor text, or @file")
        ->required();
    cmd_delta->add_option("x", delta_x_arg, "Homogeneous element text, or "
                                            "@file")
        ->required();

    auto* cmd_cybe = app.add_subcommand(
        "cybe", "Evaluate the classical Yang-Baxter obstruction of r");
    std::string cybe_arg;
    cmd_cybe->add_option("r", cybe_arg, "2-tensor text, or @file")->required();

    auto* cmd_h1 = app.add_subcommand(
        "h1", "Compute a windowed derivation/inner-derivation comparison in "
              "one parity-degree block");
    std::string h1_parity = "even";
    cmd_h1->add_option("--parity", h1_parity, "even or odd")
        ->check(CLI::IsMember({"even", "odd"}));
    std::string h1_degree = "0";
    cmd_h1->add_option("--degree", h1_degree,
                       "Block degree, an integer or half-integer like 3/2");
    long h1_domain = 5;
    cmd_h1->add_option("--domain", h1_domain, "Domain index bound");
    long h1_target = 6;
    cmd_h1->add_option("--target", h1_target, "Target index bound");
    long h1_eq = 2;
    cmd_h1->add_option("--eq", h1_eq, "Equation index bound");
    bool h1_verbose = false;
    cmd_h1->add_flag("--verbose", h1_verbose,
                     "Also list kernel basis vectors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*cmd_parse) return run_parse(parse_arg, porcelain);
        if (*cmd_check) {
            superbialg::set_corrupt_structure_constants(corrupt);
            HalfInt window(3);
            if (!check_window_arg.empty())
                window = parse_halfint(check_window_arg);
            else
                window = env_window_or(HalfInt(3));
            return run_check_algebra(window, porcelain);
        }
        if (*cmd_classify) {
            std::optional<HalfInt> window;
            if (!classify_window_arg.empty())
                window = parse_halfint(classify_window_arg);
            return run_classify(classify_arg, window, porcelain);
        }
        if (*cmd_delta) return run_delta(delta_r_arg, delta_x_arg, porcelain);
        if (*cmd_cybe) return run_cybe(cybe_arg, porcelain);
        if (*cmd_h1) {
            return run_h1(h1_parity == "even" ? 0 : 1, parse_halfint(h1_degree),
                          h1_domain, h1_target, h1_eq, h1_verbose, porcelain);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
