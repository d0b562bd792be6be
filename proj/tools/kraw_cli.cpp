// kraw: generate, transform and verify exact Krawtchouk-family matrices.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input
// errors (bad flags, malformed files, resource caps).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kraw/condensation.hpp"
#include "kraw/core_matrices.hpp"
#include "kraw/errors.hpp"
#include "kraw/matrix.hpp"
#include "kraw/multivariate.hpp"
#include "kraw/numeric.hpp"
#include "kraw/order.hpp"
#include "kraw/serialize.hpp"
#include "kraw/symtensor.hpp"
#include "kraw/walks.hpp"

namespace {

using kraw::CheckReport;
using kraw::ExactMatrix;
using kraw::Int;
using kraw::Order;
using kraw::Rat;
using kraw::RationalMatrix;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw kraw::DomainError("cannot open output file: " + out_path);
    }
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw kraw::DomainError("cannot open input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string render(const ExactMatrix& m, const std::string& format) {
    if (format == "json") return kraw::to_json(m);
    if (format == "csv") return kraw::to_csv(m);
    return kraw::pretty(m);
}

std::string render(const RationalMatrix& m, const std::string& format) {
    if (format == "json") return kraw::to_json(m);
    if (format == "csv") return kraw::to_csv(m);
    return kraw::pretty(m);
}

// ---- verify checks ----------------------------------------------------
//
// Every check validates one exact identity at the given order.  --input
// replaces the matrix the identity is about, so external data can be
// screened; the remaining operands are always rebuilt from scratch.

struct VerifyContext {
    Order order;
    std::optional<ExactMatrix> input;
    std::optional<kraw::SiteDistribution> dist;
    int jobs = 1;
};

ExactMatrix input_or(const VerifyContext& ctx, ExactMatrix fallback) {
    if (!ctx.input) return fallback;
    if (ctx.input->rows() != fallback.rows() || ctx.input->cols() != fallback.cols()) {
        throw kraw::DomainError("input matrix has the wrong shape for this check");
    }
    return *ctx.input;
}

CheckReport report_mismatch(const std::string& check, const ExactMatrix& lhs,
                            const ExactMatrix& rhs, const char* lhs_key,
                            const char* rhs_key) {
    if (auto pos = kraw::first_mismatch(lhs, rhs)) {
        return kraw::fail_report(
            check, {{"row", std::to_string(pos->first)},
                    {"col", std::to_string(pos->second)},
                    {lhs_key, kraw::to_string(lhs(pos->first, pos->second))},
                    {rhs_key, kraw::to_string(rhs(pos->first, pos->second))}});
    }
    return kraw::pass_report(check);
}

CheckReport check_square(const VerifyContext& ctx) {
    const ExactMatrix k = input_or(ctx, kraw::krawtchouk_matrix(ctx.order));
    const ExactMatrix square = k * k;
    const ExactMatrix expected = ExactMatrix::identity(ctx.order.dim())
                                     .scaled(kraw::pow2(ctx.order.value()));
    return report_mismatch("square", square, expected, "square", "expected");
}

CheckReport check_condense(const VerifyContext& ctx) {
    const ExactMatrix condensed = kraw::condense_hadamard(ctx.order, ctx.jobs);
    const ExactMatrix expected = input_or(ctx, kraw::symmetric_krawtchouk(ctx.order));
    return report_mismatch("condense", condensed, expected, "condensed", "expected");
}

CheckReport check_recursion_s(const VerifyContext& ctx) {
    const ExactMatrix s = input_or(ctx, kraw::symmetric_krawtchouk(ctx.order));
    const ExactMatrix grown = kraw::symmetric_recursion_step(s);
    const ExactMatrix expected =
        kraw::symmetric_krawtchouk(Order(ctx.order.value() + 1));
    return report_mismatch("recursion-s", grown, expected, "grown", "expected");
}

CheckReport check_recursion_k(const VerifyContext& ctx) {
    const ExactMatrix k = input_or(ctx, kraw::krawtchouk_matrix(ctx.order));
    ExactMatrix grown(1, 1);
    try {
        grown = kraw::krawtchouk_recursion_step(k, ctx.order);
    } catch (const kraw::ConsistencyError& e) {
        return kraw::fail_report("recursion-k", {{"error", e.what()}});
    }
    const ExactMatrix expected =
        kraw::krawtchouk_matrix(Order(ctx.order.value() + 1));
    return report_mismatch("recursion-k", grown, expected, "grown", "expected");
}

CheckReport check_hbar(const VerifyContext& ctx) {
    if (!ctx.input) return kraw::hbar_transpose_check(ctx.order);
    const ExactMatrix induced =
        kraw::symmetric_representation(kraw::hadamard_operator(), ctx.order);
    const ExactMatrix expected = input_or(ctx, induced).transpose();
    return report_mismatch("hbar", induced, expected, "induced", "transposed");
}

CheckReport check_spectral(const VerifyContext& ctx) {
    const ExactMatrix k = input_or(ctx, kraw::krawtchouk_matrix(ctx.order));
    const ExactMatrix a = kraw::kac_matrix(ctx.order);
    const ExactMatrix l = kraw::lambda_matrix(ctx.order);
    CheckReport r = report_mismatch("spectral", a * k, k * l, "ladder", "scaled");
    if (!r.pass) return r;
    return report_mismatch("spectral", k * a, l * k, "ladder", "scaled");
}

CheckReport check_so21(const VerifyContext& ctx) {
    const ExactMatrix a = input_or(ctx, kraw::kac_matrix(ctx.order));
    const ExactMatrix l = kraw::lambda_matrix(ctx.order);
    ExactMatrix half = a * l - l * a;
    for (std::size_t i = 0; i < half.rows(); ++i) {
        for (std::size_t j = 0; j < half.cols(); ++j) {
            Int& cell = half(i, j);
            if (mpz_odd_p(cell.get_mpz_t())) {
                return kraw::fail_report("so21",
                                         {{"row", std::to_string(i)},
                                          {"col", std::to_string(j)},
                                          {"commutator", kraw::to_string(cell)},
                                          {"error", "entry not even"}});
            }
            mpz_divexact_ui(cell.get_mpz_t(), cell.get_mpz_t(), 2);
        }
    }
    CheckReport r = report_mismatch("so21", a * half - half * a, l.scaled(2),
                                    "bracket", "expected");
    if (!r.pass) return r;
    r = report_mismatch("so21", half * l - l * half, a.scaled(2), "bracket",
                        "expected");
    if (!r.pass) return r;
    return report_mismatch("so21", l * a - a * l, half.scaled(-2), "bracket",
                           "expected");
}

CheckReport check_martingale(const VerifyContext& ctx) {
    const ExactMatrix k = input_or(ctx, kraw::krawtchouk_matrix(ctx.order));
    const ExactMatrix next = kraw::krawtchouk_matrix(Order(ctx.order.value() + 1));
    const std::size_t dim = ctx.order.dim();
    // Averaging rule: each entry is the mean of the two entries below it.
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const Int sum = next(i, j + 1) + next(i, j);
            const Int doubled = k(i, j) * 2;
            if (doubled != sum) {
                return kraw::fail_report(
                    "martingale", {{"row", std::to_string(i)},
                                   {"col", std::to_string(j)},
                                   {"doubled", kraw::to_string(doubled)},
                                   {"pair-sum", kraw::to_string(sum)}});
            }
        }
    }
    // Additive rule: stacked row pairs rebuild the larger matrix.
    for (std::size_t i = 0; i <= dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Int sum = 0;
            if (i > 0) sum += k(i - 1, j);
            if (i < dim) sum += k(i, j);
            if (sum != next(i, j)) {
                return kraw::fail_report(
                    "martingale", {{"row", std::to_string(i)},
                                   {"col", std::to_string(j)},
                                   {"stacked", kraw::to_string(sum)},
                                   {"expected", kraw::to_string(next(i, j))}});
            }
        }
    }
    return kraw::pass_report("martingale");
}

CheckReport check_ortho_binomial(const VerifyContext& ctx) {
    if (!ctx.input) return kraw::binomial_orthogonality_check(ctx.order);
    const ExactMatrix k = input_or(ctx, kraw::krawtchouk_matrix(ctx.order));
    const ExactMatrix wts = kraw::binomial_diag(ctx.order);
    const Int scale = kraw::pow2(ctx.order.value());
    for (std::size_t alpha = 0; alpha < k.rows(); ++alpha) {
        for (std::size_t beta = alpha; beta < k.rows(); ++beta) {
            Int sum = 0;
            for (std::size_t j = 0; j < k.cols(); ++j) {
                sum += wts(j, j) * k(alpha, j) * k(beta, j);
            }
            const Int expected =
                (alpha == beta) ? Int(scale * wts(alpha, alpha)) : Int(0);
            if (sum != expected) {
                return kraw::fail_report("ortho-binomial",
                                         {{"alpha", std::to_string(alpha)},
                                          {"beta", std::to_string(beta)},
                                          {"expected", kraw::to_string(expected)},
                                          {"actual", kraw::to_string(sum)}});
            }
        }
    }
    return kraw::pass_report("ortho-binomial");
}

kraw::SiteDistribution default_sites() {
    return kraw::SiteDistribution({Rat(0), Rat(1), Rat(2)},
                                  {Rat(1, 4), Rat(1, 2), Rat(1, 4)});
}

// Two equiprobable sites at 0 and 1: the degree-alpha values coincide with
// the order-N matrix column picked by the count at site 0, scaled by 2^-alpha.
kraw::SiteDistribution binary_sites() {
    return kraw::SiteDistribution({Rat(0), Rat(1)}, {Rat(1, 2), Rat(1, 2)});
}

CheckReport check_ortho_multinomial(const VerifyContext& ctx) {
    if (ctx.input) {
        const ExactMatrix k = input_or(ctx, kraw::krawtchouk_matrix(ctx.order));
        const kraw::SiteDistribution sites = binary_sites();
        const std::size_t dim = ctx.order.dim();
        const unsigned long n_val = ctx.order.value();
        const Int scale = kraw::pow2(n_val);
        for (std::size_t alpha = 0; alpha < dim; ++alpha) {
            for (std::size_t beta = alpha; beta < dim; ++beta) {
                Rat sum = 0;
                for (std::size_t n0 = 0; n0 < dim; ++n0) {
                    Rat weight(kraw::binomial(n_val, n0), scale);
                    weight.canonicalize();
                    // Scaled matrix entries stand in for the degree values.
                    Rat va = Rat(k(alpha, n0)) / Rat(kraw::pow2(alpha));
                    Rat vb = Rat(k(beta, n0)) / Rat(kraw::pow2(beta));
                    sum += weight * va * vb;
                }
                Rat expected = 0;
                if (alpha == beta) {
                    expected = kraw::rpow(sites.variance(), alpha) *
                               Rat(kraw::binomial(n_val, alpha));
                }
                if (sum != expected) {
                    return kraw::fail_report(
                        "ortho-multinomial",
                        {{"alpha", std::to_string(alpha)},
                         {"beta", std::to_string(beta)},
                         {"expected", kraw::to_string(expected)},
                         {"actual", kraw::to_string(sum)}});
                }
            }
        }
        return kraw::pass_report("ortho-multinomial");
    }
    const kraw::SiteDistribution sites = ctx.dist ? *ctx.dist : default_sites();
    return kraw::multinomial_orthogonality_check(ctx.order, sites);
}

CheckReport check_lauricella(const VerifyContext& ctx) {
    const unsigned total = static_cast<unsigned>(ctx.order.value());
    if (ctx.input) {
        // Binary reduction: compare the hypergeometric route against the
        // supplied matrix, column indexed by the count at site 0.
        const ExactMatrix k = input_or(ctx, kraw::krawtchouk_matrix(ctx.order));
        const kraw::SiteDistribution sites = binary_sites();
        for (unsigned alpha = 0; alpha <= total; ++alpha) {
            for (unsigned n0 = 0; n0 <= total; ++n0) {
                kraw::MultiIndex n{{n0, total - n0}};
                const Rat via = kraw::gk_via_lauricella(alpha, n, sites);
                Rat direct = Rat(k(alpha, n0)) / Rat(kraw::pow2(alpha));
                if (via != direct) {
                    return kraw::fail_report(
                        "lauricella", {{"alpha", std::to_string(alpha)},
                                       {"n0", std::to_string(n0)},
                                       {"series", kraw::to_string(via)},
                                       {"matrix", kraw::to_string(direct)}});
                }
            }
        }
        return kraw::pass_report("lauricella");
    }
    const kraw::SiteDistribution sites = ctx.dist ? *ctx.dist : default_sites();
    if (sites.values()[0] != 0) {
        throw kraw::DomainError("lauricella check needs the first site value 0");
    }
    for (const kraw::MultiIndex& n : kraw::compositions(total, sites.sites())) {
        for (unsigned alpha = 0; alpha <= total; ++alpha) {
            const Rat via = kraw::gk_via_lauricella(alpha, n, sites);
            const Rat direct = kraw::gk_polynomial(alpha, n, sites);
            if (via != direct) {
                std::string counts;
                for (std::size_t j = 0; j < n.size(); ++j) {
                    if (j) counts += ",";
                    counts += std::to_string(n.parts[j]);
                }
                return kraw::fail_report("lauricella",
                                         {{"alpha", std::to_string(alpha)},
                                          {"n", counts},
                                          {"series", kraw::to_string(via)},
                                          {"direct", kraw::to_string(direct)}});
            }
        }
    }
    return kraw::pass_report("lauricella");
}

CheckReport check_hypergeo(const VerifyContext& ctx) {
    const ExactMatrix k = input_or(ctx, kraw::krawtchouk_matrix(ctx.order));
    const long n_val = ctx.order.value();
    for (long alpha = 0; alpha <= n_val; ++alpha) {
        for (long j = 0; j <= n_val; ++j) {
            const Rat series =
                Rat(kraw::binomial(n_val, alpha)) *
                kraw::gauss_2f1_terminating(-alpha, Rat(-j), Rat(-n_val), Rat(2));
            const Rat entry = Rat(k(alpha, j));
            if (series != entry) {
                return kraw::fail_report("hypergeo",
                                         {{"alpha", std::to_string(alpha)},
                                          {"col", std::to_string(j)},
                                          {"series", kraw::to_string(series)},
                                          {"entry", kraw::to_string(entry)}});
            }
        }
    }
    return kraw::pass_report("hypergeo");
}

CheckReport run_check(const std::string& name, const VerifyContext& ctx) {
    if (name == "square") return check_square(ctx);
    if (name == "condense") return check_condense(ctx);
    if (name == "recursion-s") return check_recursion_s(ctx);
    if (name == "recursion-k") return check_recursion_k(ctx);
    if (name == "hbar") return check_hbar(ctx);
    if (name == "spectral") return check_spectral(ctx);
    if (name == "so21") return check_so21(ctx);
    if (name == "martingale") return check_martingale(ctx);
    if (name == "ortho-binomial") return check_ortho_binomial(ctx);
    if (name == "ortho-multinomial") return check_ortho_multinomial(ctx);
    if (name == "lauricella") return check_lauricella(ctx);
    if (name == "hypergeo") return check_hypergeo(ctx);
    throw kraw::DomainError("unknown check: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Krawtchouk matrix toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named matrix");
    std::string gen_kind;
    int gen_order = 0;
    gen->add_option("--kind", gen_kind,
                    "k | s | b | h | kac | lambda | abar | urn-step | hbar | xf | xg")
        ->required();
    gen->add_option("--order", gen_order, "matrix order N")->required();
    gen->add_option("--format", format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    gen->add_option("--out", out_path, "write to file instead of stdout");

    // condense
    auto* condense = app.add_subcommand(
        "condense", "sum the order-N Hadamard matrix over weight classes");
    int condense_order = 0;
    int jobs = 1;
    condense->add_option("--order", condense_order, "Hadamard order N")->required();
    condense->add_option("--jobs", jobs, "worker threads for the row sweep")
        ->check(CLI::PositiveNumber);
    condense->add_option("--format", format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    condense->add_option("--out", out_path, "write to file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "check an exact identity");
    std::string check_name;
    int verify_order = 0;
    std::string input_path;
    std::string dist_path;
    verify->add_option("--check", check_name,
                       "square | condense | recursion-s | recursion-k | hbar | "
                       "spectral | so21 | martingale | ortho-binomial | "
                       "ortho-multinomial | lauricella | hypergeo")
        ->required();
    verify->add_option("--order", verify_order, "order N the identity is about")
        ->required();
    verify->add_option("--input", input_path,
                       "matrix file (JSON or CSV) replacing the default operand");
    verify->add_option("--dist", dist_path,
                       "site distribution JSON for the multivariate checks");
    verify->add_option("--jobs", jobs, "worker threads where supported")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", out_path, "write the report to a file");

    // urn
    auto* urn = app.add_subcommand("urn", "simulate or evolve the urn chain");
    int urn_order = 0;
    std::uint64_t urn_steps = 0;
    std::uint64_t urn_seed = 1;
    int urn_start = 0;
    bool urn_evolve = false;
    urn->add_option("--order", urn_order, "number of balls N")->required();
    urn->add_option("--steps", urn_steps, "transitions to take")->required();
    urn->add_option("--seed", urn_seed, "RNG seed (simulation only)");
    urn->add_option("--start", urn_start, "start state, default 0");
    urn->add_flag("--evolve", urn_evolve,
                  "output the exact distribution after --steps instead of a path");
    urn->add_option("--out", out_path, "write to file instead of stdout");

    // transform
    auto* transform = app.add_subcommand("transform", "apply the matrix to a vector");
    int transform_order = 0;
    std::string direction = "forward";
    std::string vector_arg;
    std::string vector_path;
    transform->add_option("--order", transform_order, "matrix order N")->required();
    transform->add_option("--direction", direction, "forward | inverse")
        ->check(CLI::IsMember({"forward", "inverse"}));
    transform->add_option("--vector", vector_arg, "comma-separated integers");
    transform->add_option("--in", vector_path, "file with comma-separated integers");
    transform->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    transform->add_option("--out", out_path, "write to file instead of stdout");

    // ortho
    auto* ortho = app.add_subcommand("ortho", "run an orthogonality sweep");
    int ortho_order = 0;
    std::string ortho_dist_path;
    ortho->add_option("--order", ortho_order, "order N")->required();
    ortho->add_option("--dist", ortho_dist_path,
                      "site distribution JSON; default is the binomial weight");
    ortho->add_option("--out", out_path, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            const Order n(gen_order);
            std::string text;
            if (gen_kind == "k") text = render(kraw::krawtchouk_matrix(n), format);
            else if (gen_kind == "s") text = render(kraw::symmetric_krawtchouk(n), format);
            else if (gen_kind == "b") text = render(kraw::binomial_diag(n), format);
            else if (gen_kind == "h") text = render(kraw::sylvester_hadamard(n), format);
            else if (gen_kind == "kac") text = render(kraw::kac_matrix(n), format);
            else if (gen_kind == "lambda") text = render(kraw::lambda_matrix(n), format);
            else if (gen_kind == "abar") text = render(kraw::abar_matrix(n), format);
            else if (gen_kind == "urn-step") text = render(kraw::urn_step_matrix(n), format);
            else if (gen_kind == "hbar")
                text = render(kraw::symmetric_representation(kraw::hadamard_operator(), n), format);
            else if (gen_kind == "xf") text = render(kraw::xf_bar(n), format);
            else if (gen_kind == "xg") text = render(kraw::xg_bar(n), format);
            else throw kraw::DomainError("unknown kind: " + gen_kind);
            emit(text, out_path);
            return 0;
        }

        if (condense->parsed()) {
            const Order n(condense_order);
            emit(render(kraw::condense_hadamard(n, jobs), format), out_path);
            return 0;
        }

        if (verify->parsed()) {
            VerifyContext ctx{Order(verify_order), std::nullopt, std::nullopt, jobs};
            if (!input_path.empty()) {
                ctx.input = kraw::exact_matrix_from_text(slurp(input_path));
            }
            if (!dist_path.empty()) {
                ctx.dist = kraw::site_distribution_from_json(slurp(dist_path));
            }
            const CheckReport report = run_check(check_name, ctx);
            nlohmann::json j = kraw::json_of(report);
            j["order"] = verify_order;
            emit(j.dump(), out_path);
            return report.pass ? 0 : 1;
        }

        if (urn->parsed()) {
            const Order n(urn_order);
            if (urn_evolve) {
                const auto start =
                    kraw::FiniteDistribution::point_mass(n, static_cast<std::size_t>(urn_start));
                emit(kraw::to_json(kraw::evolve_distribution(start, urn_steps)), out_path);
            } else {
                emit(kraw::to_csv(kraw::simulate_urn(n, urn_steps, urn_seed, urn_start)),
                     out_path);
            }
            return 0;
        }

        if (transform->parsed()) {
            const Order n(transform_order);
            std::string source = vector_arg;
            if (source.empty() && !vector_path.empty()) source = slurp(vector_path);
            if (source.empty()) {
                throw kraw::DomainError("transform needs --vector or --in");
            }
            std::vector<Int> x;
            std::string token;
            for (char c : source) {
                if (c == ',' || c == '\n' || c == ' ' || c == '\t' || c == '\r') {
                    if (!token.empty()) x.push_back(kraw::parse_int(token));
                    token.clear();
                } else {
                    token += c;
                }
            }
            if (!token.empty()) x.push_back(kraw::parse_int(token));
            const auto dir = direction == "forward"
                                 ? kraw::TransformDirection::forward
                                 : kraw::TransformDirection::inverse;
            const std::vector<Rat> y = kraw::krawtchouk_transform(x, n, dir);
            emit(format == "csv" ? kraw::to_csv(y) : kraw::to_json(y), out_path);
            return 0;
        }

        if (ortho->parsed()) {
            const Order n(ortho_order);
            CheckReport report = kraw::pass_report("");
            if (ortho_dist_path.empty()) {
                report = kraw::binomial_orthogonality_check(n);
            } else {
                report = kraw::multinomial_orthogonality_check(
                    n, kraw::site_distribution_from_json(slurp(ortho_dist_path)));
            }
            nlohmann::json j = kraw::json_of(report);
            j["order"] = ortho_order;
            emit(j.dump(), out_path);
            return report.pass ? 0 : 1;
        }
    } catch (const kraw::ConsistencyError& e) {
        std::cerr << "inconsistent data: " << e.what() << '\n';
        return 1;
    } catch (const kraw::ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return 2;
    } catch (const kraw::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
