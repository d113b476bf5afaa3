#include <CLI11.hpp>

#include <mmock/report_json.hpp>

#include <iostream>

using namespace mmock;

namespace {

struct Global {
    unsigned bits = 256;
    double quad_tol = 1e-25;
    long kmax = 200;
    unsigned threads = 1;
    std::string format = "json";
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void emit_rows(const Global& g, const std::string& key, json head, const std::vector<std::pair<std::string, std::string>>& rows)
{
    if (g.format == "csv") {
        std::cout << key << ",value\n";
        for (const auto& [a, b] : rows) std::cout << a << ',' << b << '\n';
        return;
    }
    json out = json::array();
    for (const auto& [a, b] : rows) out.push_back({{key, a}, {"value", b}});
    head["rows"] = std::move(out);
    emit(head);
}

QuadratureSpec quad_of(const Global& g)
{
    QuadratureSpec q;
    q.abs_tol = g.quad_tol;
    return q;
}

// A suite runs checks in order and stops at the first failure.
class Suite {
public:
    explicit Suite(json& checks) : checks_(checks) {}

    bool add(json check)
    {
        const bool ok = check.at("passed").get<bool>();
        checks_.push_back(std::move(check));
        if (!ok) failed_ = true;
        return ok;
    }
    bool failed() const { return failed_; }

private:
    json& checks_;
    bool failed_ = false;
};

bool run_identities(Suite& s, long order)
{
    for (const auto& r : verify_identities(order))
        if (!s.add(to_json(r))) return false;
    return true;
}

bool run_sheaf(Suite& s, long order, long bi_order)
{
    for (int c1 : {-1, 0})
        if (!s.add(to_json(verify_euler_series(c1, order)))) return false;
    for (int c1 : {-1, 0})
        if (!s.add(to_json(verify_prop22(c1, bi_order)))) return false;
    for (const auto& r : verify_parshift(bi_order))
        if (!s.add(to_json(r))) return false;
    return true;
}

bool run_transforms(Suite& s, const Global& g)
{
    PrecisionScope p(g.bits);
    const BigFloat tol("1e-15");
    const QuadratureSpec quad = quad_of(g);
    const std::vector<std::pair<long, long>> grid = {{0, 1}, {1, 3}, {2, 5}, {1, 2}, {1, 6}, {1, 4}, {3, 8}};
    const BigComplex z(BigFloat("0.7"), BigFloat("0.2"));
    for (auto [h, k] : grid)
        for (const BigComplex& w : {BigComplex(1), z})
            if (!s.add(to_json(verify_eta_transformation(h, k, w), tol))) return false;
    for (auto [h, k] : grid)
        for (int j = 0; j < 2; ++j)
            if (!s.add(to_json(verify_theta_transformation(j, h, k, z), tol))) return false;
    for (auto [h, k] : grid)
        for (int j = 0; j < 2; ++j)
            if (!s.add(to_json(verify_fj_transformation(j, h, k, z, quad), tol))) return false;
    for (auto [h, k] : grid)
        for (const BigComplex& x : {BigComplex(BigFloat("0.8"), BigFloat("0.3")), BigComplex(BigFloat(2), BigFloat(-1))})
            for (int j = 0; j < 2; ++j)
                if (!s.add(to_json(verify_eichler_forms(j, x, select_hprime(h, k).value, k, quad), tol))) return false;
    return true;
}

bool run_rademacher(Suite& s, const Global& g)
{
    const BigFloat tol("1e-2");
    for (int j = 0; j < 2; ++j)
        for (long n = 1; n <= 3; ++n) {
            RademacherReport r = rademacher_sum(j, n, g.kmax, quad_of(g), g.bits, PhaseVariant::theorem, g.threads);
            PrecisionScope p(g.bits);
            const Rational lift = integral_lift(j, n);
            const BigFloat nearest = boost::multiprecision::round(3 * r.value() + to_big(lift - 3 * r.exact));
            const bool rounds = nearest == to_big(lift);
            json c{{"name", "rademacher"},
                   {"j", std::to_string(j)},
                   {"n", std::to_string(n)},
                   {"kmax", std::to_string(g.kmax)},
                   {"exact", to_string(r.exact)},
                   {"integral_lift", to_string(lift)},
                   {"value", big_json(r.value())},
                   {"abs_error", to_decimal(r.abs_error(), 6)},
                   {"tolerance", to_decimal(tol, 3)},
                   {"passed", r.abs_error() < tol && rounds}};
            if (!s.add(std::move(c))) return false;
        }
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coefficients of the class-number mock modular forms f_j = h_j / eta^6 and their Rademacher sums"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--bits", g.bits, "working precision in bits")->check(CLI::Range(64u, 1u << 20));
    app.add_option("--quad-tol", g.quad_tol, "absolute quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--kmax", g.kmax, "number of Rademacher terms")->check(CLI::Range(1L, 1L << 20));
    app.add_option("--threads", g.threads, "worker cap; results do not depend on it")->check(CLI::Range(1u, 1024u));
    app.add_option("--format", g.format, "tabular output format")->check(CLI::IsMember({"json", "csv"}));

    long max = 20;
    int j = 0, l = 0, c1 = -1, rank = 2;
    long n = 1, m = 0, k = 1;

    auto* hurwitz_cmd = app.add_subcommand("hurwitz", "Hurwitz class numbers H(0..max)");
    hurwitz_cmd->add_option("--max", max)->required()->check(CLI::Range(0L, 10000000L));

    auto* alpha_cmd = app.add_subcommand("alpha", "coefficients alpha_j(0..max) of f_j");
    alpha_cmd->add_option("--j", j)->required()->check(CLI::IsMember({0, 1}));
    alpha_cmd->add_option("--max", max)->required()->check(CLI::Range(0L, 100000L));

    auto* euler_cmd = app.add_subcommand("euler", "Euler numbers of rank 2 moduli spaces below q-order max");
    euler_cmd->add_option("--c1", c1)->required()->check(CLI::IsMember({-1, 0}));
    euler_cmd->add_option("--max", max)->required()->check(CLI::Range(1L, 10000L));

    auto* poincare_cmd = app.add_subcommand("poincare", "Betti numbers of M(rank, c1, c2) for c2 <= max");
    poincare_cmd->add_option("--rank", rank)->required()->check(CLI::IsMember({1, 2}));
    poincare_cmd->add_option("--c1", c1)->required()->check(CLI::IsMember({-1, 0}));
    poincare_cmd->add_option("--max", max)->required()->check(CLI::Range(0L, 1000L));

    std::string variant = "theorem";
    bool detail = false;
    auto* rademacher_cmd = app.add_subcommand("rademacher", "truncated Rademacher sum for alpha_j(n)");
    rademacher_cmd->add_option("--j", j)->required()->check(CLI::IsMember({0, 1}));
    rademacher_cmd->add_option("--n", n)->required()->check(CLI::Range(0L, 1000000L));
    rademacher_cmd->add_option("--phase-variant", variant)->check(CLI::IsMember({"theorem", "derivation"}));
    rademacher_cmd->add_flag("--detail", detail, "include per-(l, g) terms");

    auto* asympt_cmd = app.add_subcommand("asympt", "leading asymptotic terms of alpha_j(n)");
    asympt_cmd->add_option("--j", j)->required()->check(CLI::IsMember({0, 1}));
    asympt_cmd->add_option("--n", n)->required()->check(CLI::Range(1L, 1000000L));

    auto* kloosterman_cmd = app.add_subcommand("kloosterman", "generalized Kloosterman sum K_{j,l,k}(n, m)");
    kloosterman_cmd->add_option("--j", j)->required()->check(CLI::IsMember({0, 1}));
    kloosterman_cmd->add_option("--l", l)->required()->check(CLI::IsMember({0, 1}));
    kloosterman_cmd->add_option("--n", n)->required();
    kloosterman_cmd->add_option("--m", m)->required();
    kloosterman_cmd->add_option("--k", k)->required()->check(CLI::Range(1L, 10000000L));

    std::string suite = "all";
    long order = 30, bi_order = 8;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"identities", "sheaf", "transforms", "rademacher", "all"}));
    verify_cmd->add_option("--order", order, "q-order of univariate identities")->check(CLI::Range(1L, 10000L));
    verify_cmd->add_option("--bi-order", bi_order, "q-order of bivariate identities")->check(CLI::Range(1L, 100L));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n";
        const auto used = app.get_subcommands();
        std::cerr << (used.empty() ? app.help() : used.front()->help());
        return 2;
    }

    try {
        if (*hurwitz_cmd) {
            std::vector<std::pair<std::string, std::string>> rows;
            for (long i = 0; i <= max; ++i) rows.emplace_back(std::to_string(i), to_string(hurwitz(i)));
            emit_rows(g, "n", json::object(), rows);
        } else if (*alpha_cmd) {
            std::vector<std::pair<std::string, std::string>> rows;
            const auto t = alpha_table(j, max);
            for (long i = 0; i <= max; ++i) rows.emplace_back(std::to_string(i), to_string(t[i]));
            emit_rows(g, "n", {{"j", std::to_string(j)}}, rows);
        } else if (*euler_cmd) {
            const FracSeries e = euler_series(c1, max);
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& [x, c] : e.terms()) rows.emplace_back(to_string(make_rational(x, e.den())), to_string(c));
            emit_rows(g, "exponent", {{"c1", std::to_string(c1)}}, rows);
        } else if (*poincare_cmd) {
            const PoincareTable t = poincare_table(rank, c1, max + 1);
            if (g.format == "csv") {
                std::cout << "c2,dimension,betti\n";
                for (const auto& [c2, p] : t) {
                    std::cout << c2 << ',' << moduli_dimension({rank, c1, c2}) << ',';
                    for (int d = 0; d <= (p.empty() ? -1 : p.max_key()); ++d) std::cout << (d ? " " : "") << to_string(p.coeff(d));
                    std::cout << '\n';
                }
            } else {
                json rows = json::array();
                for (const auto& [c2, p] : t) {
                    json betti = json::array();
                    for (int d = 0; d <= (p.empty() ? -1 : p.max_key()); ++d) betti.push_back(to_string(p.coeff(d)));
                    rows.push_back({{"c2", std::to_string(c2)},
                                    {"dimension", std::to_string(moduli_dimension({rank, c1, c2}))},
                                    {"betti", std::move(betti)}});
                }
                emit({{"rank", std::to_string(rank)}, {"c1", std::to_string(c1)}, {"rows", std::move(rows)}});
            }
        } else if (*rademacher_cmd) {
            const PhaseVariant v = variant == "theorem" ? PhaseVariant::theorem : PhaseVariant::derivation;
            RademacherReport r = rademacher_sum(j, n, g.kmax, quad_of(g), g.bits, v, g.threads);
            PrecisionScope p(g.bits);
            emit(to_json(r, detail));
        } else if (*asympt_cmd) {
            PrecisionScope p(g.bits);
            const Rational exact = alpha(j, n);
            const BigFloat a = asymptotic_main_terms(j, n);
            emit({{"j", std::to_string(j)},
                  {"n", std::to_string(n)},
                  {"asymptotic", big_json(a)},
                  {"exact", to_string(exact)},
                  {"ratio", big_json(to_big(exact) / a)}});
        } else if (*kloosterman_cmd) {
            PrecisionScope p(g.bits);
            const BigComplex K = kloosterman(j, l, n, m, k);
            emit({{"j", std::to_string(j)},
                  {"l", std::to_string(l)},
                  {"n", std::to_string(n)},
                  {"m", std::to_string(m)},
                  {"k", std::to_string(k)},
                  {"bits", std::to_string(g.bits)},
                  {"re", big_json(K.re)},
                  {"im", big_json(K.im)}});
        } else if (*verify_cmd) {
            json checks = json::array();
            Suite s(checks);
            const bool all = suite == "all";
            bool ok = true;
            if (ok && (all || suite == "identities")) ok = run_identities(s, order);
            if (ok && (all || suite == "sheaf")) ok = run_sheaf(s, order, bi_order);
            if (ok && (all || suite == "transforms")) ok = run_transforms(s, g);
            if (ok && (all || suite == "rademacher")) ok = run_rademacher(s, g);
            json out{{"suite", suite}, {"passed", !s.failed()}, {"checks", checks}};
            out["first_failure"] = s.failed() ? checks.back() : json(nullptr);
            emit(out);
            return s.failed() ? 1 : 0;
        }
    } catch (const error& e) {
        emit({{"error", errc_name(e.code())}, {"message", e.what()}});
        const bool usage = e.code() == errc::domain_error || e.code() == errc::not_coprime || e.code() == errc::non_positive_order;
        return usage ? 2 : 1;
    }
    return 0;
}
