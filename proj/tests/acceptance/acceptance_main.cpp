#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "superbialg/algebra.hpp"
#include "superbialg/bialgebra.hpp"
#include "superbialg/cohomology.hpp"
#include "superbialg/errors.hpp"
#include "superbialg/linsys.hpp"
#include "superbialg/parse.hpp"
#include "superbialg/tensor.hpp"

using namespace superbialg;

namespace {

Generator L(long i) { return make_generator(Kind::L, HalfInt(i)); }
Generator T2(long twice) {
    return make_generator(Kind::T, HalfInt::from_twice(twice));
}
Generator G2(long twice) {
    return make_generator(Kind::G, HalfInt::from_twice(twice));
}

Element one(const Generator& g) { return Element::single(g, Rational(1)); }

Tensor2 t2(const Generator& a, const Generator& b, Rational c) {
    return Tensor2::single({a, b}, std::move(c));
}

/// Result of one acceptance criterion: verdict plus a short human detail
/// (the failure counterexample, or a summary of what was covered).
struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

/// Pseudo-random even 2-tensor built from parity-matched factor pairs with
/// |index| <= 2, at most `max_terms` support terms, coefficients in
/// {-3..3}\{0}.
Tensor2 random_even_tensor(std::mt19937& rng, int max_terms) {
    const std::vector<Generator> gens = generators_up_to(HalfInt(2));
    std::vector<Generator> evens;
    std::vector<Generator> odds;
    for (const Generator& g : gens)
        (g.parity() == 0 ? evens : odds).push_back(g);
    std::uniform_int_distribution<int> n_terms(1, max_terms);
    std::uniform_int_distribution<int> pick_parity(0, 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    Tensor2 t;
    const int n = n_terms(rng);
    for (int i = 0; i < n; ++i) {
        const auto& pool = pick_parity(rng) ? odds : evens;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        const Generator a = pool[pick(rng)];
        const Generator b = pool[pick(rng)];
        int c = coeff(rng);
        if (c == 0) c = 1;
        t.add_term({a, b}, Rational(c));
    }
    return t;
}

/// Largest |index| among the tensor factors in the support of t.
HalfInt max_support_index(const Tensor2& t) {
    HalfInt best(0);
    for (const auto& [k, c] : t.terms()) {
        (void)c;
        if (k.first.index.abs() > best) best = k.first.index.abs();
        if (k.second.index.abs() > best) best = k.second.index.abs();
    }
    return best;
}

// --- criterion 1: bracket goldens --------------------------------------

Outcome bracket_goldens() {
    struct Golden {
        Generator a, b;
        Element want;
    };
    const std::vector<Golden> named = {
        {L(1), L(-1), Element::single(L(0), Rational(2))},
        {L(2), L(-1), Element::single(L(1), Rational(3))},
        {L(1), L(-2), Element::single(L(-1), Rational(3))},
        {G2(0), G2(0), Element::single(L(0), Rational(2))},
        {G2(0), G2(1), Element::single(T2(1), Rational(1, 2))},
    };
    for (const Golden& g : named) {
        if (bracket_basis(g.a, g.b) != g.want) {
            return fail("[" + g.a.to_string() + ", " + g.b.to_string() +
                        "] = " + to_text(bracket_basis(g.a, g.b)) +
                        ", wanted " + to_text(g.want));
        }
    }

    // Re-derive the whole relation table from its closed forms and compare.
    long checked = static_cast<long>(named.size());
    for (long m = -3; m <= 3; ++m) {
        for (long n = -3; n <= 3; ++n) {
            const Element want =
                Element::single(L(m + n), Rational(m - n));
            if (bracket_basis(L(m), L(n)) != want)
                return fail("[L,L] table mismatch at m=" +
                            std::to_string(m) + " n=" + std::to_string(n));
            ++checked;
        }
    }
    for (long tr = -5; tr <= 5; tr += 2) {
        for (long ts = -5; ts <= 5; ts += 2) {
            if (!bracket_basis(T2(tr), T2(ts)).is_zero())
                return fail("[T,T] not zero at 2r=" + std::to_string(tr) +
                            " 2s=" + std::to_string(ts));
            ++checked;
        }
        for (long m = -3; m <= 3; ++m) {
            const Element want =
                Element::single(T2(tr + 2 * m), Rational(-tr, 2));
            if (bracket_basis(L(m), T2(tr)) != want)
                return fail("[L,T] table mismatch at m=" +
                            std::to_string(m) + " 2r=" + std::to_string(tr));
            ++checked;
        }
        for (long tp = -4; tp <= 4; ++tp) {
            const Element want = Element::single(G2(tp + tr), Rational(1));
            if (bracket_basis(T2(tr), G2(tp)) != want)
                return fail("[T,G] table mismatch at 2r=" +
                            std::to_string(tr) + " 2p=" + std::to_string(tp));
            ++checked;
        }
    }
    for (long m = -3; m <= 3; ++m) {
        for (long tp = -4; tp <= 4; ++tp) {
            const Element want =
                Element::single(G2(tp + 2 * m), Rational(m - tp, 2));
            if (bracket_basis(L(m), G2(tp)) != want)
                return fail("[L,G] table mismatch at m=" + std::to_string(m) +
                            " 2p=" + std::to_string(tp));
            ++checked;
        }
    }
    for (long tp = -4; tp <= 4; ++tp) {
        for (long tq = -4; tq <= 4; ++tq) {
            Element want;
            if ((tp + tq) % 2 == 0) {
                // Integer total index: 2 (-1)^{2p} L_{p+q}.
                const long sign = (tp % 2 == 0) ? 1 : -1;
                want = Element::single(
                    make_generator(Kind::L, HalfInt((tp + tq) / 2)),
                    Rational(2 * sign));
            } else {
                // Half-odd total index: (-1)^{2p+1} (p - q) T_{p+q}.
                const long sign = (tp % 2 == 0) ? -1 : 1;
                want = Element::single(T2(tp + tq),
                                       Rational(sign * (tp - tq), 2));
            }
            if (bracket_basis(G2(tp), G2(tq)) != want)
                return fail("[G,G] table mismatch at 2p=" +
                            std::to_string(tp) + " 2q=" + std::to_string(tq));
            ++checked;
        }
    }
    return ok(std::to_string(checked) + " exact bracket values");
}

// --- criterion 2: axiom suite ------------------------------------------

Outcome axiom_suite() {
    const std::vector<Generator> gens = generators_up_to(HalfInt(3));
    long pairs = 0;
    for (const Generator& a : gens) {
        for (const Generator& b : gens) {
            Element defect = bracket_basis(a, b);
            defect.add_scaled(bracket_basis(b, a),
                              (a.parity() && b.parity()) ? Rational(-1)
                                                         : Rational(1));
            if (!defect.is_zero())
                return fail("symmetry defect for (" + a.to_string() + ", " +
                            b.to_string() + "): " + to_text(defect));
            ++pairs;
        }
    }
    long triples = 0;
    for (const Generator& a : gens) {
        for (const Generator& b : gens) {
            for (const Generator& c : gens) {
                if (!jacobi_defect(one(a), one(b), one(c)).is_zero())
                    return fail("Jacobi defect for (" + a.to_string() +
                                ", " + b.to_string() + ", " + c.to_string() +
                                ")");
                ++triples;
            }
        }
    }
    return ok(std::to_string(pairs) + " pairs, " + std::to_string(triples) +
              " triples, all exact");
}

// --- criterion 3: closed-form diagonal action ---------------------------

Outcome action_closed_forms() {
    const Generator l1 = L(1);
    const Rational half(1, 2);
    long checked = 0;
    auto expect = [&](const Key2& k, const Tensor2& want,
                      const char* label) -> std::optional<Outcome> {
        if (act2_basis(l1, k) != want)
            return fail(std::string(label) + " mismatch at (" +
                        k.first.to_string() + ", " + k.second.to_string() +
                        ")");
        ++checked;
        return std::nullopt;
    };
    for (long tw = -4; tw <= 4; ++tw) {
        const Rational r(tw, 2);
        if (tw % 2 != 0) {
            Tensor2 want = t2(T2(tw), T2(2 - tw), r);
            want.add_term({T2(2 + tw), T2(-tw)}, -r);
            if (auto f = expect({T2(tw), T2(-tw)}, want, "L1 * T (x) T"))
                return *f;

            want = t2(T2(tw), G2(2 - tw), half + r);
            want.add_term({T2(2 + tw), G2(-tw)}, -r);
            if (auto f = expect({T2(tw), G2(-tw)}, want, "L1 * T (x) G"))
                return *f;

            want = t2(G2(tw), T2(2 - tw), r);
            want.add_term({G2(2 + tw), T2(-tw)}, -(r - half));
            if (auto f = expect({G2(tw), T2(-tw)}, want, "L1 * G (x) T"))
                return *f;
        } else {
            const long i = tw / 2;
            const Rational ri(i);
            Tensor2 want = t2(L(i), L(1 - i), ri + Rational(1));
            want.add_term({L(1 + i), L(-i)}, -(ri - Rational(1)));
            if (auto f = expect({L(i), L(-i)}, want, "L1 * L (x) L"))
                return *f;

            want = t2(L(i), G2(2 - tw), ri + half);
            want.add_term({L(1 + i), G2(-tw)}, -(ri - Rational(1)));
            if (auto f = expect({L(i), G2(-tw)}, want, "L1 * L (x) G"))
                return *f;

            want = t2(G2(tw), L(1 - i), ri + Rational(1));
            want.add_term({G2(2 + tw), L(-i)}, -(ri - half));
            if (auto f = expect({G2(tw), L(-i)}, want, "L1 * G (x) L"))
                return *f;
        }
        Tensor2 want = t2(G2(tw), G2(2 - tw), r + half);
        want.add_term({G2(2 + tw), G2(-tw)}, -(r - half));
        if (auto f = expect({G2(tw), G2(-tw)}, want, "L1 * G (x) G"))
            return *f;
    }
    return ok(std::to_string(checked) +
              " closed-form values across all seven factor-kind families");
}

// --- criterion 4: co-Jacobi identity on random skew r -------------------

Outcome cojacobi_random(int want_samples) {
    std::mt19937 rng(8811u);
    const std::vector<Generator> xs = generators_up_to(HalfInt(2));
    int made = 0;
    for (int attempt = 0; attempt < 200 && made < want_samples; ++attempt) {
        Tensor2 t = skew_project(random_even_tensor(rng, 4));
        if (t.is_zero()) continue;
        const RMatrix r = make_rmatrix(std::move(t));
        for (const Generator& x : xs) {
            if (!cojacobi_identity_defect(r, one(x)).is_zero())
                return fail("nonzero defect for r = " + to_text(r.value) +
                            ", x = " + x.to_string());
        }
        ++made;
    }
    if (made < want_samples)
        return fail("only " + std::to_string(made) +
                    " usable samples generated");
    return ok(std::to_string(made) + " skew r-matrices x " +
              std::to_string(xs.size()) + " generators, all defects zero");
}

// --- criterion 5: triangular instance -----------------------------------

Outcome triangular_instance() {
    Tensor2 t = t2(L(1), L(0), Rational(1));
    t.add_term({L(0), L(1)}, Rational(-1));
    const RMatrix r = make_rmatrix(std::move(t));
    if (!cybe(r).is_zero()) return fail("cybe(r) != 0");
    const ClassifyReport rep = classify_r(r, WindowSpec{HalfInt(3)});
    if (!rep.skew) return fail("classify: not reported super-skew");
    if (!rep.cybe_zero) return fail("classify: cybe not reported zero");
    if (!rep.mybe_window_clean)
        return fail("classify: window not reported clean");
    if (rep.witness) return fail("classify: unexpected witness");
    return ok("cybe(r) = 0 and classify reports skew/triangular/clean");
}

// --- criterion 6: windowed witnesses for nonzero cybe -------------------

Outcome windowed_witnesses(int want_samples) {
    std::mt19937 rng(9127u);
    int found = 0;
    for (int attempt = 0; attempt < 400 && found < want_samples; ++attempt) {
        Tensor2 t = skew_project(random_even_tensor(rng, 4));
        if (t.is_zero()) continue;
        const RMatrix r = make_rmatrix(std::move(t));
        if (cybe(r).is_zero()) continue;
        ++found;
        const WindowSpec window{max_support_index(r.value) + HalfInt(2)};
        if (mybe_defects(r, window).empty())
            return fail("no witness at window " +
                        window.bound.to_string() + " for r = " +
                        to_text(r.value));
    }
    if (found < want_samples)
        return fail("only " + std::to_string(found) +
                    " nonzero-cybe samples generated");
    return ok(std::to_string(found) +
              " samples with cybe != 0, every one produced a witness");
}

// --- criteria 7 and 8: cohomology sweep + kernel anchor ------------------

/// Criteria 7 and 8 share one sweep (the kernels are too large to keep all
/// eighteen at once); criterion 8's verdict is recorded while criterion 7
/// walks the windows.
struct SweepState {
    bool ran = false;
    std::string anchor_failure;
    long vectors = 0;
    int systems = 0;
};

Outcome cohomology_sweep(SweepState& state) {
    for (int parity = 0; parity <= 1; ++parity) {
        for (long twice = -4; twice <= 4; ++twice) {
            const DerivationSpec spec{parity, HalfInt::from_twice(twice), 5,
                                      6, 2};
            const H1Computation comp = compute_h1(spec);
            if (comp.report.quotient_dim != 0)
                return fail("quotient_dim = " +
                            std::to_string(comp.report.quotient_dim) +
                            " at parity " + std::to_string(parity) +
                            ", degree " + spec.degree.to_string());
            if (spec.degree != HalfInt(0)) {
                ++state.systems;
                for (const SparseVec& v : comp.derivations.basis) {
                    ++state.vectors;
                    if (!check_claim1(spec, v) &&
                        state.anchor_failure.empty()) {
                        state.anchor_failure =
                            "kernel vector outside the inner form at parity " +
                            std::to_string(parity) + ", degree " +
                            spec.degree.to_string();
                    }
                }
            }
        }
    }
    state.ran = true;
    return ok("18 windows at bounds (5, 6, 2), every quotient dimension 0");
}

Outcome kernel_anchor(const SweepState& state) {
    if (!state.ran) return fail("cohomology sweep did not complete");
    if (!state.anchor_failure.empty()) return fail(state.anchor_failure);
    return ok(std::to_string(state.vectors) + " kernel vectors across " +
              std::to_string(state.systems) +
              " nonzero-degree systems, all reconstructed");
}

// --- criterion 9: solver property ----------------------------------------

Outcome solver_property(int matrices) {
    std::mt19937 rng(4242u);
    std::uniform_int_distribution<int> mdist(1, 20);
    std::uniform_int_distribution<int> ndist(1, 30);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::bernoulli_distribution filled(0.35);
    long kernel_vectors = 0;
    for (int trial = 0; trial < matrices; ++trial) {
        const int m = mdist(rng);
        const int n = ndist(rng);
        std::vector<SparseVec> rows(m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                if (!filled(rng)) continue;
                const int p = num(rng);
                if (p == 0) continue;
                rows[i].emplace_back(j, Rational(p, den(rng)));
            }
        }
        const Rref r = rref(rows, n);
        const std::vector<SparseVec> kernel = kernel_basis(r, n);
        if (r.rank() + static_cast<int>(kernel.size()) != n)
            return fail("rank + nullity != columns on trial " +
                        std::to_string(trial));
        for (const SparseVec& row : rows) {
            for (const SparseVec& v : kernel) {
                if (!dot(row, v).is_zero())
                    return fail("A v != 0 on trial " + std::to_string(trial));
            }
        }
        kernel_vectors += static_cast<long>(kernel.size());
    }
    return ok(std::to_string(matrices) + " matrices, " +
              std::to_string(kernel_vectors) +
              " kernel vectors verified exactly");
}

// --- criterion 10: command-line goldens ----------------------------------

struct CliResult {
    int code = -1;
    std::string out;
};

/// Run the tool with the given arguments, capturing stdout and the exit
/// code; stderr is discarded (exit codes carry the failure contract).
std::optional<CliResult> run_cli(const std::string& cli,
                                 const std::string& args) {
    const std::string command = "'" + cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return std::nullopt;
    CliResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

Outcome cli_goldens(const std::string& cli) {
    if (cli.empty()) return fail("tool path not supplied on the command line");
    int checks = 0;
    auto run = [&](const std::string& args) { return run_cli(cli, args); };

    // Round-trip: parsing a canonical form must echo it unchanged.
    const std::vector<std::string> canonical = {
        "1 L[0]",
        "2 L[0] - 1/2 T[3/2]",
        "1 L[2] - 3 G[-1/2]",
        "0",
        "-1 L[0] (x) L[1] + 1 L[1] (x) L[0]",
        "1 G[1/2] (x) G[1/2]",
        "1 L[0] (x) T[1/2] (x) G[-1/2]",
    };
    for (const std::string& text : canonical) {
        const auto r = run("parse \"" + text + "\"");
        if (!r || r->code != 0 || r->out != text + "\n")
            return fail("round-trip broke on: " + text);
        ++checks;
    }

    // Exit-code goldens.
    const auto algebra = run("check-algebra 3");
    if (!algebra || algebra->code != 0)
        return fail("check-algebra 3 did not exit 0");
    ++checks;

    const auto corrupted =
        run("check-algebra 2 --corrupt-structure-constants");
    if (!corrupted || corrupted->code != 1)
        return fail("corrupted structure constants did not exit 1");
    ++checks;

    const auto triangular =
        run("cybe \"1 L[1] (x) L[0] - 1 L[0] (x) L[1]\"");
    if (!triangular || triangular->code != 0 || triangular->out != "0\n")
        return fail("cybe on the triangular instance did not print 0");
    ++checks;

    const auto report =
        run("h1 --parity even --degree 1 --domain 5 --target 6 --eq 2");
    if (!report || report->code != 0 ||
        report->out.find("quotient_dim: 0\n") == std::string::npos)
        return fail("h1 report did not show quotient_dim 0 with exit 0");
    ++checks;

    for (const std::string& bad :
         {std::string("parse \"1 Q[0]\""), std::string("parse \"1 T[1]\""),
          std::string("parse \"1 L[0] +\"")}) {
        const auto r = run(bad);
        if (!r || r->code != 2)
            return fail("expected exit 2 from: " + bad);
        ++checks;
    }

    // Byte-identical machine-readable output across two consecutive runs.
    const std::vector<std::string> stable = {
        "classify \"1 L[1] (x) L[-1] - 1 L[-1] (x) L[1]\" -N 3 --porcelain",
        "h1 --parity odd --degree 1/2 --domain 3 --target 4 --eq 1 "
        "--porcelain",
    };
    for (const std::string& args : stable) {
        const auto first = run(args);
        const auto second = run(args);
        if (!first || !second || first->code != 0 || second->code != 0 ||
            first->out != second->out || first->out.empty())
            return fail("porcelain output not byte-stable for: " + args);
        ++checks;
    }
    return ok(std::to_string(checks) + " command checks passed");
}

// --- harness --------------------------------------------------------------

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;  // 0 = no pinned budget
    std::function<Outcome()> body;
};

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    SweepState sweep;

    const std::vector<Criterion> criteria = {
        {1, "bracket structure-constant goldens", 1.0,
         [] { return bracket_goldens(); }},
        {2, "super-antisymmetry and graded Jacobi, all |index| <= 3", 60.0,
         [] { return axiom_suite(); }},
        {3, "closed-form action of L[1], indices in {-2..2}", 0.0,
         [] { return action_closed_forms(); }},
        {4, "co-Jacobi identity on random even super-skew r", 120.0,
         [] { return cojacobi_random(20); }},
        {5, "triangular r-matrix: zero cybe, clean classification", 0.0,
         [] { return triangular_instance(); }},
        {6, "every sampled nonzero cybe yields a windowed witness", 0.0,
         [] { return windowed_witnesses(50); }},
        {7, "windowed first cohomology vanishes on 18 windows", 600.0,
         [&sweep] { return cohomology_sweep(sweep); }},
        {8, "every nonzero-degree kernel vector is an inner form", 0.0,
         [&sweep] { return kernel_anchor(sweep); }},
        {9, "exact kernel solver on random rational matrices", 0.0,
         [] { return solver_property(100); }},
        {10, "command-line round-trip, exit codes, stable output", 0.0,
         [&cli] { return cli_goldens(cli); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (outcome.pass && c.budget_seconds > 0.0 &&
            seconds > c.budget_seconds) {
            outcome = fail("exceeded the " +
                           std::to_string(c.budget_seconds) +
                           " s budget");
        }
        char timing[64];
        if (c.budget_seconds > 0.0) {
            std::snprintf(timing, sizeof timing, "(%.2f s, budget %.0f s)",
                          seconds, c.budget_seconds);
        } else {
            std::snprintf(timing, sizeof timing, "(%.2f s)", seconds);
        }
        std::printf("criterion %2d: %s - %s %s - %s\n", c.id,
                    outcome.pass ? "pass" : "FAIL", c.label, timing,
                    outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    if (failures == 0) {
        std::printf("all 10 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
