#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "schubert/core.hpp"
#include "schubert/cylindric.hpp"
#include "schubert/lr.hpp"
#include "schubert/output.hpp"
#include "schubert/quantum.hpp"
#include "schubert/render.hpp"
#include "schubert/slide.hpp"
#include "schubert/verify.hpp"

// Exit codes: 0 success (including empty products and reported conjecture
// counterexamples), 1 usage error, 2 proposition-check failure, 3 internal
// consistency failure.

namespace {

using namespace schubert;

Partition parse_partition(const std::string& text) {
    if (text.empty())
        return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string token;
    int index = 0;
    while (std::getline(ss, token, ',')) {
        ++index;
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != token.size() || token.empty())
            throw std::invalid_argument("partition: part " + std::to_string(index) + " ('" +
                                        token + "') is not a nonnegative integer");
        if (value < 0)
            throw std::invalid_argument("partition: part " + std::to_string(index) + " ('" +
                                        token + "') is negative");
        if (!parts.empty() && value > parts.back())
            throw std::invalid_argument("partition: part " + std::to_string(index) + " ('" +
                                        token + "') increases after " +
                                        std::to_string(parts.back()));
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

std::string sigma(const Partition& p) {
    return "sigma" + to_string(p);
}

std::string render_class_sum(const ClassSum& sum) {
    if (sum.terms.empty())
        return "0";
    std::string out;
    for (const auto& [nu, c] : sum.terms) {
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += std::to_string(c) + "*";
        out += sigma(nu);
    }
    return out;
}

std::string render_quantum_sum(const QuantumClassSum& sum) {
    if (sum.terms.empty())
        return "0";
    std::string out;
    for (const auto& [key, c] : sum.terms) {
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += std::to_string(c) + "*";
        if (key.first > 0)
            out += "q^" + std::to_string(key.first) + "*";
        out += sigma(key.second);
    }
    return out;
}

std::string render_tableau_text(const SkewTableau& t) {
    std::string out;
    for (size_t r = 0; r < t.n_rows(); ++r) {
        for (int c = 0; c < t.row_end(r); ++c) {
            if (c < t.row_begin(r))
                out += "  .";
            else {
                const std::string v = std::to_string(t.at(r, c));
                out += std::string(3 - v.size(), ' ') + v;
            }
        }
        out += '\n';
    }
    return out;
}

struct CommonArgs {
    int k = 0;
    int n = 0;
    std::string format = "text";
    int jobs = 1;
};

struct Failure {
    int code;
    std::string message;
};

int run(int argc, char** argv) {
    CLI::App app{"Exact classical and quantum Schubert calculus on Grassmannians"};
    app.require_subcommand(1);

    CommonArgs common;
    app.add_option("-k,--rows", common.k, "number of rows k of the rectangle")->group("Context");
    app.add_option("-n,--ambient", common.n, "ambient dimension n")->group("Context");
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->group("Context");
    app.add_option("--jobs", common.jobs, "worker threads for verify")->group("Context");
    app.fallthrough();

    std::string lambda_arg, mu_arg, nu_arg;
    std::optional<int> degree;
    bool with_trace = false;

    auto add_pair_options = [&](CLI::App* cmd, bool need_mu = true) {
        cmd->add_option("--lambda", lambda_arg, "first partition (comma separated, '' = empty)");
        if (need_mu)
            cmd->add_option("--mu", mu_arg, "second partition");
    };

    CLI::App* product = app.add_subcommand("product", "classical product sigma_lambda . sigma_mu");
    add_pair_options(product);
    CLI::App* qproduct = app.add_subcommand("qproduct", "quantum product sigma_lambda * sigma_mu");
    add_pair_options(qproduct);
    CLI::App* bounds = app.add_subcommand("bounds", "extremal q-degrees and rotated partitions");
    add_pair_options(bounds);
    CLI::App* nu_cmd = app.add_subcommand("nu", "multiplicity-one class from the slide");
    add_pair_options(nu_cmd);
    nu_cmd->add_option("-d,--degree", degree, "quantum degree (omit for the classical class)");
    nu_cmd->add_flag("--trace", with_trace, "include the three slide panels");
    CLI::App* lrcoef = app.add_subcommand("lrcoef", "single Littlewood-Richardson coefficient");
    add_pair_options(lrcoef);
    lrcoef->add_option("--nu", nu_arg, "target partition");

    CLI::App* verify = app.add_subcommand("verify", "exhaustive checks over one rectangle");
    std::vector<std::string> checks{"all"};
    bool unordered = false;
    verify->add_option("--checks", checks,
                       "comma separated: all, classical, extremal, support, chain, conjecture")
        ->delimiter(',');
    verify->add_flag("--unordered", unordered, "enumerate unordered pairs only");

    CLI::App* render = app.add_subcommand("render", "diagram documents");
    std::string kind, render_format = "ascii";
    render->add_option("--kind", kind, "loops, toric, slide or frames")
        ->required()
        ->check(CLI::IsMember({"loops", "toric", "slide", "frames"}));
    render->add_option("--format", render_format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    add_pair_options(render);
    CLI::Option* render_mu = render->get_option("--mu");
    render->add_option("-d,--degree", degree, "shift / frame offset, per kind");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const bool structured = common.format == "structured";
    try {
        auto context = [&]() { return make_context(common.k, common.n); };
        auto bounded = [&](const std::string& text) {
            return BoundedPartition(parse_partition(text), context());
        };

        if (product->parsed()) {
            const BoundedPartition lam = bounded(lambda_arg), mu = bounded(mu_arg);
            const ClassSum sum = schubert_product(lam, mu);
            if (structured)
                std::cout << dump_record(make_product_record(lam, mu, sum)) << '\n';
            else
                std::cout << sigma(lam.partition()) << " . " << sigma(mu.partition()) << " = "
                          << render_class_sum(sum) << '\n';
            return 0;
        }
        if (qproduct->parsed()) {
            const BoundedPartition lam = bounded(lambda_arg), mu = bounded(mu_arg);
            const QuantumClassSum sum = quantum_product(lam, mu);
            if (structured)
                std::cout << dump_record(make_qproduct_record(lam, mu, sum)) << '\n';
            else
                std::cout << sigma(lam.partition()) << " * " << sigma(mu.partition()) << " = "
                          << render_quantum_sum(sum) << '\n';
            return 0;
        }
        if (bounds->parsed()) {
            const BoundedPartition lam = bounded(lambda_arg), mu = bounded(mu_arg);
            const ExtremalData ex = extremal_data(lam, mu);
            if (structured) {
                std::cout << dump_record(make_bounds_record(lam, mu, ex)) << '\n';
            } else {
                std::cout << "d_min = " << ex.d_min << " (a = " << ex.a << ")\n"
                          << "d_max = " << ex.d_max << " (b = " << ex.b << ")\n"
                          << "lambda_min = " << to_string(ex.lambda_min.partition()) << '\n'
                          << "mu_min = " << to_string(ex.mu_min.partition()) << '\n'
                          << "lambda_max = " << to_string(ex.lambda_max.partition()) << '\n'
                          << "mu_max = " << to_string(ex.mu_max.partition()) << '\n';
            }
            return 0;
        }
        if (nu_cmd->parsed()) {
            const BoundedPartition lam = bounded(lambda_arg), mu = bounded(mu_arg);
            if (degree) {
                const BoundedPartition result = nu_quantum(lam, mu, *degree);
                if (structured) {
                    std::cout << dump_record(
                                     make_nu_record(lam, mu, degree, result, nullptr, nullptr))
                              << '\n';
                } else {
                    std::cout << "nu(lambda, mu, " << *degree
                              << ") = " << to_string(result.partition()) << '\n';
                    if (with_trace)
                        std::cout << render_slide(lam, mu, degree, DiagramFormat::ascii);
                }
                return 0;
            }
            const SlideResult result = slide(lam, mu);
            if (structured) {
                std::cout << dump_record(make_nu_record(lam, mu, std::nullopt, result.nu,
                                                        &result.witness,
                                                        with_trace ? &result.trace : nullptr))
                          << '\n';
            } else {
                std::cout << "nu(lambda, mu) = " << to_string(result.nu.partition()) << '\n'
                          << "witness filling of nu/lambda:\n"
                          << render_tableau_text(result.witness);
                if (with_trace)
                    std::cout << render_slide(lam, mu, std::nullopt, DiagramFormat::ascii);
            }
            return 0;
        }
        if (lrcoef->parsed()) {
            const Partition lam = parse_partition(lambda_arg), mu = parse_partition(mu_arg),
                            nu = parse_partition(nu_arg);
            RectContext ctx{0, 0};
            if (common.k != 0 || common.n != 0) {
                ctx = context();
                BoundedPartition{lam, ctx};
                BoundedPartition{mu, ctx};
                BoundedPartition{nu, ctx};
            }
            const long long c = lr_coefficient(lam, mu, nu);
            if (structured)
                std::cout << dump_record(make_lrcoef_record(ctx, lam, mu, nu, c)) << '\n';
            else
                std::cout << "c = " << c << '\n';
            return 0;
        }
        if (verify->parsed()) {
            const RectContext ctx = context();
            const VerifyOptions opt{common.jobs, unordered};
            std::vector<std::string> selected;
            for (const auto& c : checks) {
                if (c == "all") {
                    selected = {"classical", "extremal", "support", "chain", "conjecture"};
                    break;
                }
                if (c != "classical" && c != "extremal" && c != "support" && c != "chain" &&
                    c != "conjecture")
                    throw CLI::ValidationError("--checks", "unknown check '" + c + "'");
                selected.push_back(c);
            }
            bool proposition_failed = false;
            for (const std::string& name : selected) {
                VerificationReport report;
                if (name == "classical")
                    report = verify_classical(ctx, opt);
                else if (name == "extremal")
                    report = verify_extremal(ctx, opt);
                else if (name == "support")
                    report = verify_support(ctx, opt);
                else if (name == "chain")
                    report = verify_chain(ctx, opt);
                else
                    report = verify_conjecture(ctx, opt);

                if (structured) {
                    std::cout << dump_record(make_verify_record(report)) << '\n';
                } else {
                    std::cout << "[" << (report.status == CheckStatus::pass ? "PASS" : "FAIL")
                              << "] " << report.check_name << ": " << report.cases_run
                              << " cases";
                    if (report.cases_skipped > 0)
                        std::cout << " (+" << report.cases_skipped << " skipped)";
                    std::cout << ", " << report.failures.size() << " failures, "
                              << report.anomalies.size() << " anomalies\n";
                    for (const auto& f : report.failures)
                        std::cout << "    " << f.inputs << ": expected " << f.expected
                                  << ", got " << f.actual << '\n';
                    for (const auto& a : report.anomalies)
                        std::cout << "    anomaly " << a.inputs << ": " << a.actual << '\n';
                    for (const auto& note : report.notes)
                        std::cout << "    note: " << note << '\n';
                }
                // Conjecture outcomes are data; propositions must hold.
                if (name != "conjecture" && report.status != CheckStatus::pass)
                    proposition_failed = true;
            }
            return proposition_failed ? 2 : 0;
        }
        if (render->parsed()) {
            const DiagramFormat fmt =
                render_format == "svg" ? DiagramFormat::svg : DiagramFormat::ascii;
            if ((kind == "toric" || kind == "slide") && render_mu->count() == 0)
                throw CLI::ValidationError("--mu", "required for kind '" + kind + "'");
            const BoundedPartition lam = bounded(lambda_arg);
            if (kind == "loops") {
                std::cout << render_loops(lam, degree.value_or(2), fmt);
            } else if (kind == "toric") {
                std::cout << render_toric(lam, bounded(mu_arg), degree.value_or(0), fmt);
            } else if (kind == "slide") {
                std::cout << render_slide(lam, bounded(mu_arg), degree, fmt);
            } else {
                std::cout << render_frames(lam, degree.value_or(0), fmt);
            }
            return 0;
        }
    } catch (const internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return 3;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
