#include <qforms/mu_solver.hpp>

#include <algorithm>
#include <chrono>

#include <qforms/divisor.hpp>
#include <qforms/exact.hpp>

namespace qforms
{

namespace
{

void require_s(int s, const char *who)
{
    if (s < 2) {
        throw std::invalid_argument(std::string(who) + ": s must be >= 2, got " + std::to_string(s));
    }
}

void require_table(int s, const MuTable &mu, const char *who)
{
    if (mu.s != s || static_cast<int>(mu.mu.size()) != s - 1) {
        throw std::invalid_argument(std::string(who) + ": mu table is for s = " + std::to_string(mu.s)
                                    + ", requested s = " + std::to_string(s));
    }
}

BigInt integral_or_throw(const Rational &v, const std::string &what)
{
    if (!v.is_integer()) {
        throw NonIntegerResult(what + " evaluated to non-integer " + v.to_string());
    }
    return v.num();
}

} // namespace

std::vector<RSeries> mu_basis(int s, int order)
{
    require_s(s, "mu_basis");
    std::vector<RSeries> out;
    for (int l = 2; l <= s; ++l) {
        out.push_back(to_rational(G_0(static_cast<unsigned>(2 * l), order))
                      * to_rational(G_0(static_cast<unsigned>(4 * s - 2 * l), order)));
    }
    return out;
}

RSeries T8_power(int s, int order)
{
    return pow(T8(order), static_cast<unsigned>(s));
}

LinearSystem mu_system(int s, int extra_rows)
{
    require_s(s, "mu_system");
    const int last = s + extra_rows;
    const auto basis = mu_basis(s, last);
    const RSeries target = T8_power(s, last);
    LinearSystem sys;
    for (int n = 2; n <= last; ++n) {
        std::vector<Rational> row;
        for (const auto &b : basis) {
            row.push_back(b[n]);
        }
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(target[n]);
        sys.provenance.push_back(n);
    }
    return sys;
}

MuTable solve_mu(int s, int verify_order, int extra_rows)
{
    require_s(s, "solve_mu");
    if (verify_order < 2 * s - 1) {
        throw std::invalid_argument("solve_mu: verify order must be >= 2s - 1 = " + std::to_string(2 * s - 1));
    }
    if (extra_rows < 0) {
        throw std::invalid_argument("solve_mu: extra_rows must be >= 0");
    }
    const LinearSystem sys = mu_system(s, extra_rows);
    const LinearSolution sol = solve_fraction_free(sys);

    MuTable table;
    table.s = s;
    table.system_rows = static_cast<int>(sys.rows());
    table.rank = static_cast<int>(sol.rank);
    table.row_exponents = sys.provenance;
    for (int l = 2; l <= s; ++l) {
        table.mu.emplace(l, sol.x[static_cast<std::size_t>(l - 2)]);
    }

    const auto basis = mu_basis(s, verify_order);
    RSeries combo(verify_order);
    for (int l = 2; l <= s; ++l) {
        combo += scale(basis[static_cast<std::size_t>(l - 2)], table.mu.at(l));
    }
    const auto cmp = certify_equal(T8_power(s, verify_order), combo);
    if (!cmp.equal()) {
        throw VerificationFailed(*cmp.first_mismatch,
                                 "T^" + std::to_string(8 * s) + " identity fails at q^"
                                     + std::to_string(*cmp.first_mismatch) + ": "
                                     + cmp.mismatch_values->first.to_string() + " != "
                                     + cmp.mismatch_values->second.to_string());
    }
    table.verified_order = verify_order;
    return table;
}

std::vector<BigInt> r8s_table(int s, long n_max, const MuTable &mu)
{
    require_s(s, "r8s_table");
    require_table(s, mu, "r8s_table");
    const auto u = static_cast<unsigned>(s);
    const Rational front = pow2(4 * s) / Rational(factorial(4 * u - 2));
    std::vector<Rational> acc(static_cast<std::size_t>(n_max) + 1u);
    for (int l = 2; l <= s; ++l) {
        const auto rho = rho_iinf_table(4 * u - 2 * l - 1, 2 * l - 1, n_max);
        const Rational w = mu.at(l) * Rational(binomial(4 * u - 2, 2 * l - 1));
        for (long n = 0; n <= n_max; ++n) {
            acc[static_cast<std::size_t>(n)] += w * rho[static_cast<std::size_t>(n)];
        }
    }
    std::vector<BigInt> out;
    for (long n = 0; n <= n_max; ++n) {
        Rational v = front * acc[static_cast<std::size_t>(n)];
        if (n % 2 == 1) {
            v = -v;
        }
        out.push_back(integral_or_throw(v, "r_" + std::to_string(8 * s) + "(" + std::to_string(n) + ")"));
    }
    return out;
}

std::vector<BigInt> t8s_table(int s, long m_max, const MuTable &mu)
{
    require_s(s, "t8s_table");
    require_table(s, mu, "t8s_table");
    const auto u = static_cast<unsigned>(s);
    const long n_max = m_max + s;
    const Rational front = Rational(1) / Rational(factorial(4 * u - 2));
    std::vector<Rational> acc(static_cast<std::size_t>(n_max) + 1u);
    for (int l = 2; l <= s; ++l) {
        const auto rho = rho_0_table(4 * u - 2 * l - 1, 2 * l - 1, n_max);
        const Rational w = mu.at(l) * Rational(binomial(4 * u - 2, 2 * l - 1));
        for (long n = 0; n <= n_max; ++n) {
            acc[static_cast<std::size_t>(n)] += w * Rational(rho[static_cast<std::size_t>(n)]);
        }
    }
    std::vector<BigInt> out;
    for (long m = 0; m <= m_max; ++m) {
        out.push_back(integral_or_throw(front * acc[static_cast<std::size_t>(m + s)],
                                        "t_" + std::to_string(8 * s) + "(" + std::to_string(m) + ")"));
    }
    return out;
}

BigInt r8s_formula(int s, long n, const MuTable &mu)
{
    require_s(s, "r8s_formula");
    require_table(s, mu, "r8s_formula");
    if (n < 0) {
        throw std::invalid_argument("r8s_formula: n must be >= 0");
    }
    const auto u = static_cast<unsigned>(s);
    Rational acc;
    for (int l = 2; l <= s; ++l) {
        acc += mu.at(l) * Rational(binomial(4 * u - 2, 2 * l - 1)) * rho_iinf(4 * u - 2 * l - 1, 2 * l - 1, n);
    }
    Rational v = pow2(4 * s) / Rational(factorial(4 * u - 2)) * acc;
    if (n % 2 == 1) {
        v = -v;
    }
    return integral_or_throw(v, "r_" + std::to_string(8 * s) + "(" + std::to_string(n) + ")");
}

BigInt t8s_formula(int s, long m, const MuTable &mu)
{
    require_s(s, "t8s_formula");
    require_table(s, mu, "t8s_formula");
    if (m < 0) {
        throw std::invalid_argument("t8s_formula: m must be >= 0");
    }
    const auto u = static_cast<unsigned>(s);
    const long n = m + s;
    Rational acc;
    for (int l = 2; l <= s; ++l) {
        acc += mu.at(l) * Rational(binomial(4 * u - 2, 2 * l - 1)) * Rational(rho_0(4 * u - 2 * l - 1, 2 * l - 1, n));
    }
    return integral_or_throw(acc / Rational(factorial(4 * u - 2)),
                             "t_" + std::to_string(8 * s) + "(" + std::to_string(m) + ")");
}

VerificationReport theta_identity_check(int s, const MuTable &mu, int order)
{
    const auto start = std::chrono::steady_clock::now();
    require_s(s, "theta_identity_check");
    require_table(s, mu, "theta_identity_check");
    VerificationReport rep;
    rep.identity = "theta_identity";
    rep.parameters = {{"s", std::to_string(s)}, {"order", std::to_string(order)}};

    const RSeries lhs = pow(theta_unit(order), static_cast<unsigned>(8 * s));
    RSeries rhs(order);
    for (int l = 2; l <= s; ++l) {
        const RSeries a = subst_neg_q(to_rational(G_iinf(static_cast<unsigned>(2 * l), order)));
        const RSeries b = subst_neg_q(to_rational(G_iinf(static_cast<unsigned>(4 * s - 2 * l), order)));
        rhs += scale(a * b, mu.at(l));
    }
    rhs = scale(rhs, pow2(8 * s));
    record_comparison(rep, certify_equal(lhs, rhs));
    rep.passed = !rep.first_mismatch.has_value();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace qforms
