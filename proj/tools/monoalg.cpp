#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mono/expr.hpp"
#include "mono/fock.hpp"
#include "mono/states.hpp"
#include "mono/symmetry.hpp"
#include "mono/wick.hpp"

namespace {

using namespace mono;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitSuiteFailure = 3;

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream os(out_file);
    os << text << '\n';
}

Element parse_element(const std::string& src) {
    return eval_ast(*parse(src));
}

StateSpec parse_state(const std::string& spec) {
    if (spec == "vacuum") return StateSpec::vacuum();
    if (spec == "infinity") return StateSpec::infinity();
    if (spec.rfind("mixed:", 0) == 0) {
        auto x = parse_scalar(spec.substr(6));
        if (!x) throw std::invalid_argument("bad mixing weight: " + spec);
        return StateSpec::mixed(*x);
    }
    throw std::invalid_argument("unknown state: " + spec);
}

nlohmann::ordered_json trace_json(const RewriteTrace& trace) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const RewriteStep& s : trace.steps) {
        nlohmann::ordered_json j;
        j["rule"] = s.rule;
        j["position"] = s.position;
        j["before"] = to_string(s.before);
        if (s.terminal) {
            j["emit"] = {{"l1", s.emitted.lambda1()},
                         {"l2", s.emitted.lambda2()},
                         {"coeff", to_string(s.emitted_coeff)}};
        } else {
            nlohmann::ordered_json after = nlohmann::ordered_json::array();
            for (const auto& [c, w] : s.after)
                after.push_back({{"coeff", to_string(c)}, {"word", to_string(w)}});
            j["after"] = std::move(after);
        }
        steps.push_back(std::move(j));
    }
    return {{"steps", std::move(steps)}};
}

LetterWord flatten_letters(const std::string& src) {
    // for --trace: normalize wants the raw letter word of a pure product
    Element unused = parse_element(src);
    (void)unused;
    LetterWord w;
    std::size_t pos = 0;
    while (pos < src.size()) {
        char c = src[pos];
        if (c == 'c' || c == 'a') {
            std::size_t open = src.find('(', pos);
            std::size_t close = src.find(')', open);
            Index i = std::stoll(src.substr(open + 1, close - open - 1));
            w.push_back(c == 'c' ? creator(i) : annihilator(i));
            pos = close + 1;
        } else if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
            ++pos;
        } else {
            throw std::invalid_argument(
                "--trace requires a plain product of generators");
        }
    }
    return w;
}

// Named verification suites, runnable without the test harness.
int run_suite(const std::string& name) {
    std::mt19937_64 rng(20240811);
    auto rand_index = [&](Index lo, Index hi) {
        return lo + static_cast<Index>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    std::size_t failures = 0;
    auto report = [&](const std::string& what, bool ok) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << what << '\n';
        if (!ok) ++failures;
    };

    if (name == "sigen" || name == "all") {
        bool ok = true;
        for (Index i = -10; i <= 10; ++i) {
            Element lhs = normalize_word({creator(i), annihilator(i)});
            Element rhs(BasisIndex({i - 1}, {i - 1}));
            rhs -= Element(BasisIndex({i}, {i}));
            if (lhs != rhs) ok = false;
        }
        report("sigen(b): c(i)a(i) = a(i-1)c(i-1) - a(i)c(i) for i in [-10,10]", ok);
    }
    if (name == "closed-form" || name == "all") {
        bool ok = true;
        auto window = basis_index_window(-2, 2, 3);
        for (const auto& b1 : window)
            for (const auto& b2 : window)
                if (product_closed_form(b1, b2) != multiply(Element(b1), Element(b2)))
                    ok = false;
        report("closed-form product agrees with normalize on a basis window", ok);
    }
    if (name == "oracle" || name == "all") {
        bool ok = true;
        for (int trial = 0; trial < 200 && ok; ++trial) {
            LetterWord w;
            std::size_t len = rng() % 6;
            for (std::size_t i = 0; i < len; ++i)
                w.push_back(rng() % 2 ? creator(rand_index(-4, 4))
                                      : annihilator(rand_index(-4, 4)));
            Element x = normalize_word(w);
            for (const auto& e : basis_window(-6, 6, 3)) {
                FockVector v(e);
                if (apply_word(w, v) != apply_element(x, v)) ok = false;
            }
        }
        report("normalize agrees with direct word action on the Fock space", ok);
    }
    if (name == "invariance" || name == "all") {
        bool ok = true;
        for (Index k = -2; k <= 2; ++k) {
            for (const StateSpec& s :
                 {StateSpec::vacuum(), StateSpec::infinity(), StateSpec::mixed(Scalar(1, 2))}) {
                auto r1 = check_invariance(
                    s, [k](const Element& x) { return beta(k, x); }, -3, 3, 3);
                auto r2 = check_invariance(
                    s, [k](const Element& x) { return gamma(k, x); }, -3, 3, 3);
                if (!r1.ok() || !r2.ok()) ok = false;
            }
        }
        report("vacuum, infinity, and mixed states are partial-shift invariant", ok);
    }
    if (failures == 0 && name != "sigen" && name != "closed-form" &&
        name != "oracle" && name != "invariance" && name != "all") {
        std::cerr << "unknown suite: " << name
                  << " (expected sigen|closed-form|oracle|invariance|all)\n";
        return kExitPrecondition;
    }
    return failures == 0 ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic kernel for the monotone creation/annihilation algebra"};
    app.require_subcommand(1);

    std::string expr_src, out_file, state_spec = "vacuum", vector_lit, perm_str;
    bool json_out = false, trace_out = false;
    Index theta_h = 0, psi_h = 0, tau_k = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json_out, "emit JSON instead of text");
        cmd->add_option("--out", out_file, "write output to a file");
    };

    auto* normalize = app.add_subcommand("normalize", "normal-order an expression");
    normalize->add_option("expr", expr_src, "operator expression")->required();
    normalize->add_flag("--trace", trace_out, "emit the rewrite trace (plain products only)");
    add_common(normalize);

    auto* eval = app.add_subcommand("eval", "evaluate a state on an expression");
    eval->add_option("expr", expr_src)->required();
    eval->add_option("--state", state_spec, "vacuum|infinity|mixed:x");
    add_common(eval);

    auto* apply = app.add_subcommand("apply", "apply an expression to a Fock basis vector");
    apply->add_option("expr", expr_src)->required();
    apply->add_option("--vector", vector_lit, "basis vector literal, e.g. (0,2)")->required();
    add_common(apply);

    auto* act = app.add_subcommand("act", "apply a symmetry map to an expression");
    act->add_option("expr", expr_src)->required();
    auto* opt_theta = act->add_option("--theta", theta_h, "beta_h (forward partial shift)");
    auto* opt_psi = act->add_option("--psi", psi_h, "gamma_h (backward partial shift)");
    auto* opt_tau = act->add_option("--tau", tau_k, "alpha^k (shift power)");
    auto* opt_perm = act->add_option("--perm", perm_str, "T_sigma for a cycle string");
    add_common(act);

    std::vector<Index> w_interval;
    std::string targets_str;
    auto* witness = app.add_subcommand("witness", "partial-shift word matching increasing targets");
    witness->add_option("--interval", w_interval, "interval bounds m n")
        ->expected(2)
        ->required();
    witness->add_option("--targets", targets_str, "comma-separated l(m),...,l(n)")->required();
    add_common(witness);

    std::string suite_name;
    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("suite", suite_name, "sigen|closed-form|oracle|invariance|all")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (normalize->parsed()) {
            if (trace_out) {
                LetterWord w = flatten_letters(expr_src);
                RewriteTrace trace;
                Element x = normalize_word(w, &trace);
                nlohmann::ordered_json j;
                j["result"] = nlohmann::ordered_json::parse(
                    format_element(x, FormatMode::Json));
                j["trace"] = trace_json(trace);
                emit(j.dump(), out_file);
                return kExitOk;
            }
            Element x = parse_element(expr_src);
            emit(format_element(x, json_out ? FormatMode::Json : FormatMode::Text),
                 out_file);
            return kExitOk;
        }
        if (eval->parsed()) {
            StateSpec s = parse_state(state_spec);
            Scalar v = evaluate(s, parse_element(expr_src));
            emit(json_out ? "{\"value\":\"" + to_string(v) + "\"}" : to_string(v),
                 out_file);
            return kExitOk;
        }
        if (apply->parsed()) {
            FockBasisVector e = parse_fock_basis_vector(vector_lit);
            FockVector v = apply_element(parse_element(expr_src), FockVector(e));
            emit(format_fock_vector(v), out_file);
            return kExitOk;
        }
        if (act->parsed()) {
            Element x = parse_element(expr_src);
            Element y;
            int chosen = (*opt_theta ? 1 : 0) + (*opt_psi ? 1 : 0) +
                         (*opt_tau ? 1 : 0) + (*opt_perm ? 1 : 0);
            if (chosen != 1) {
                std::cerr << "act: choose exactly one of --theta/--psi/--tau/--perm\n";
                return kExitPrecondition;
            }
            if (*opt_theta) y = beta(theta_h, x);
            else if (*opt_psi) y = gamma(psi_h, x);
            else if (*opt_tau) y = alpha(tau_k, x);
            else y = t_sigma(Permutation::parse_cycles(perm_str), x);
            emit(format_element(y, json_out ? FormatMode::Json : FormatMode::Text),
                 out_file);
            return kExitOk;
        }
        if (witness->parsed()) {
            const Index w_m = w_interval[0], w_n = w_interval[1];
            std::vector<Index> targets;
            std::size_t pos = 0;
            while (pos <= targets_str.size()) {
                std::size_t comma = targets_str.find(',', pos);
                std::string piece = targets_str.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                if (!piece.empty()) targets.push_back(std::stoll(piece));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            MonoidElement r = spread_witness(w_m, w_n, targets);
            if (json_out) {
                nlohmann::ordered_json j;
                j["word"] = r.to_string();
                nlohmann::ordered_json vals = nlohmann::ordered_json::array();
                for (Index k = w_m; k <= w_n; ++k) vals.push_back(r(k));
                j["values"] = std::move(vals);
                emit(j.dump(), out_file);
            } else {
                emit(r.to_string(), out_file);
            }
            return kExitOk;
        }
        if (check->parsed()) return run_suite(suite_name);
    } catch (const ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    return kExitOk;
}
