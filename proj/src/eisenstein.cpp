#include <qforms/eisenstein.hpp>

#include <stdexcept>

#include <qforms/divisor.hpp>
#include <qforms/exact.hpp>

namespace qforms
{

namespace
{

void require_k(unsigned k, unsigned min, const char *who)
{
    if (k < min) {
        throw std::invalid_argument(std::string(who) + ": index must be >= " + std::to_string(min));
    }
}

void require_parity(ParityClass p, const char *who)
{
    if (p == ParityClass::all) {
        throw std::invalid_argument(std::string(who) + ": parity must be even or odd");
    }
}

BigInt ipow(long base, unsigned e)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

RSeries integer_series(const std::vector<BigInt> &coeffs, const Rational &factor, int order)
{
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        out.push_back(is_zero(c) ? Rational(0) : Rational(c) * factor);
    }
    return RSeries(std::move(out), order);
}

} // namespace

bool in_class(ParityClass c, long m)
{
    switch (c) {
        case ParityClass::even:
            return m % 2 == 0;
        case ParityClass::odd:
            return m % 2 != 0;
        case ParityClass::all:
            return true;
    }
    return false;
}

char parity_letter(ParityClass c)
{
    switch (c) {
        case ParityClass::even:
            return 'e';
        case ParityClass::odd:
            return 'o';
        case ParityClass::all:
            return 'Z';
    }
    return '?';
}

ESeries to_ext(const RSeries &a)
{
    return a.map([](const Rational &c) { return ExtScalar(c); });
}

RSeries to_rational(const ESeries &a)
{
    return a.map([](const ExtScalar &c) { return c.as_rational(); });
}

RSeries phi(unsigned k, int order)
{
    require_k(k, 1, "phi");
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1u);
    for (int u = 1; u <= order; ++u) {
        c[static_cast<std::size_t>(u)] = ipow(u, k - 1);
    }
    return integer_series(c, Rational((k % 2 == 0) ? 1 : -1) / Rational(factorial(k - 1)), order);
}

RSeries f_parity(ParityClass parity, unsigned r, int order)
{
    require_k(r, 1, "f_parity");
    require_parity(parity, "f_parity");
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1u);
    for (long m = 1; m <= order; ++m) {
        if (!in_class(parity, m)) {
            continue;
        }
        for (long u = 1; u * m <= order; ++u) {
            c[static_cast<std::size_t>(u * m)] += ipow(u, r - 1);
        }
    }
    return integer_series(c, Rational((r % 2 == 0) ? 1 : -1) / Rational(factorial(r - 1)), order);
}

RSeries fbar_parity(ParityClass parity, unsigned s, int order)
{
    require_parity(parity, "fbar_parity");
    // -m (-1)^{s+1} u^s / s! = (-1)^s m u^s / s!
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1u);
    for (long m = 1; m <= order; ++m) {
        if (!in_class(parity, m)) {
            continue;
        }
        for (long u = 1; u * m <= order; ++u) {
            c[static_cast<std::size_t>(u * m)] += BigInt(m) * ipow(u, s);
        }
    }
    return integer_series(c, Rational((s % 2 == 0) ? 1 : -1) / Rational(factorial(s)), order);
}

ESeries G(unsigned k, int order)
{
    require_k(k, 1, "G");
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1u);
    for (long n = 1; n <= order; ++n) {
        c[static_cast<std::size_t>(n)] = sigma(k - 1, n);
    }
    ESeries out = to_ext(integer_series(c, Rational((k % 2 == 0) ? 1 : -1) / Rational(factorial(k - 1)), order));
    out.set(0, zeta_tilde(k));
    return out;
}

ESeries G_two_tau(unsigned k, int order)
{
    return subst_q_squared(G(k, order));
}

ESeries G_iinf(unsigned k, int order)
{
    const ESeries g = G(k, order);
    return subst_q_squared(g) - scale(g, pow2(-static_cast<long>(k)));
}

ESeries G_0(unsigned k, int order)
{
    const ESeries g = G(k, order);
    return g - subst_q_squared(g);
}

RSeries theta_unit(int order)
{
    RSeries out = RSeries::one(order);
    for (long n = 1; n * n <= order; ++n) {
        out.set(static_cast<int>(n * n), Rational(2));
    }
    return out;
}

RSeries T8(int order)
{
    if (order == 0) {
        return RSeries(0);
    }
    RSeries tri(order - 1);
    for (long n = 0; n * (n + 1) / 2 <= order - 1; ++n) {
        tri.set(static_cast<int>(n * (n + 1) / 2), Rational(1));
    }
    const RSeries p = pow(tri, 8);
    RSeries out(order);
    for (int n = 0; n <= order - 1; ++n) {
        out.set(n + 1, p[n]);
    }
    return out;
}

const std::vector<std::string> &named_series_list()
{
    static const std::vector<std::string> names{"phi", "f_o",     "f_e",    "fbar_o", "fbar_e", "G",
                                                "G_2tau", "G_iinf", "G_0", "theta",  "T8"};
    return names;
}

ESeries build_named_series(std::string_view name, unsigned k, int order)
{
    if (name == "phi") {
        return to_ext(phi(k, order));
    }
    if (name == "f_o" || name == "f_e") {
        return to_ext(f_parity(name == "f_o" ? ParityClass::odd : ParityClass::even, k, order));
    }
    if (name == "fbar_o" || name == "fbar_e") {
        return to_ext(fbar_parity(name == "fbar_o" ? ParityClass::odd : ParityClass::even, k, order));
    }
    if (name == "G") {
        return G(k, order);
    }
    if (name == "G_2tau") {
        return G_two_tau(k, order);
    }
    if (name == "G_iinf") {
        return G_iinf(k, order);
    }
    if (name == "G_0") {
        return G_0(k, order);
    }
    if (name == "theta") {
        return to_ext(theta_unit(order));
    }
    if (name == "T8") {
        return to_ext(T8(order));
    }
    throw std::invalid_argument("unknown series name '" + std::string(name) + "'");
}

std::shared_ptr<const ESeries> SeriesCatalog::get(const SeriesKey &key, const Builder &build)
{
    {
        std::lock_guard lock(m_mutex);
        if (auto it = m_memo.find(key); it != m_memo.end()) {
            return it->second;
        }
    }
    auto fresh = std::make_shared<const ESeries>(build());
    std::lock_guard lock(m_mutex);
    return m_memo.try_emplace(key, std::move(fresh)).first->second;
}

std::shared_ptr<const ESeries> SeriesCatalog::named(std::string_view name, unsigned k, int order)
{
    return get(SeriesKey{std::string(name), {static_cast<int>(k)}, order},
               [&] { return build_named_series(name, k, order); });
}

std::size_t SeriesCatalog::size() const
{
    std::lock_guard lock(m_mutex);
    return m_memo.size();
}

void SeriesCatalog::clear()
{
    std::lock_guard lock(m_mutex);
    m_memo.clear();
}

SeriesCatalog &SeriesCatalog::global()
{
    static SeriesCatalog instance;
    return instance;
}

} // namespace qforms
