#include <qforms/double_eisenstein.hpp>

#include <stdexcept>
#include <vector>

#include <qforms/exact.hpp>

namespace qforms
{

namespace
{

void require_rs(unsigned r, unsigned s, const char *who)
{
    if (r < 1 || s < 1) {
        throw std::invalid_argument(std::string(who) + ": r and s must be >= 1");
    }
}

BigInt ipow(long base, unsigned e)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

Rational sign(long e)
{
    return Rational(e % 2 == 0 ? 1 : -1);
}

} // namespace

ParityPair ParityPair::parse(std::string_view text)
{
    if (text == "eo") {
        return eo();
    }
    if (text == "oe") {
        return oe();
    }
    if (text == "oo") {
        return oo();
    }
    throw std::invalid_argument("parity pair must be one of eo, oe, oo; got '" + std::string(text) + "'");
}

RSeries f_double(ParityPair pp, unsigned r, unsigned s, int order)
{
    require_rs(r, s, "f_double");
    const auto len = static_cast<std::size_t>(order) + 1u;
    std::vector<BigInt> coeffs(len);
    // inner[t]: sum over m' < m (second class) and v with v m' = t of v^{s-1}
    std::vector<BigInt> inner(len);
    std::vector<BigInt> upow(len);
    for (long u = 1; u <= order; ++u) {
        upow[static_cast<std::size_t>(u)] = ipow(u, r - 1);
    }
    for (long m = 1; m <= order; ++m) {
        if (in_class(pp.first(), m)) {
            for (long u = 1; u * m <= order; ++u) {
                const long base = u * m;
                const BigInt &w = upow[static_cast<std::size_t>(u)];
                for (long t = 1; base + t <= order; ++t) {
                    const BigInt &b = inner[static_cast<std::size_t>(t)];
                    if (!is_zero(b)) {
                        coeffs[static_cast<std::size_t>(base + t)] += w * b;
                    }
                }
            }
        }
        if (in_class(pp.second(), m)) {
            for (long v = 1; v * m <= order; ++v) {
                inner[static_cast<std::size_t>(v * m)] += ipow(v, s - 1);
            }
        }
    }
    const Rational factor
        = sign(static_cast<long>(r + s)) / (Rational(factorial(r - 1)) * Rational(factorial(s - 1)));
    std::vector<Rational> out;
    out.reserve(len);
    for (const auto &c : coeffs) {
        out.push_back(is_zero(c) ? Rational(0) : Rational(c) * factor);
    }
    return RSeries(std::move(out), order);
}

RSeries alpha(unsigned index, int order)
{
    const RSeries fo0 = fbar_parity(ParityClass::odd, 0, order);
    switch (index) {
        case 1:
            return fo0;
        case 2:
            return -fo0;
        case 3:
            return scale(fo0, Rational(2)) + fbar_parity(ParityClass::even, 0, order);
        case 4:
            return scale(alpha(3, order), Rational(-1, 2));
        default:
            throw std::invalid_argument("alpha: index must be 1..4");
    }
}

RSeries epsilon(ParityPair pp, unsigned r, unsigned s, int order)
{
    require_rs(r, s, "epsilon");
    // (first, second) class of the fbar series attached to delta_{r,*} and delta_{s,1}
    const ParityClass lead = pp == ParityPair::oe() ? ParityClass::even : ParityClass::odd;
    const ParityClass tail = pp == ParityPair::eo() ? ParityClass::even : ParityClass::odd;
    RSeries out(order);
    if (r == 2) {
        out += fbar_parity(lead, s, order);
    }
    if (r == 1) {
        out -= fbar_parity(lead, s - 1, order);
    }
    if (s == 1) {
        out += fbar_parity(tail, r - 1, order);
        if (pp == ParityPair::oo()) {
            out += scale(f_parity(ParityClass::odd, r, order), Rational(2));
        }
    }
    if (r == 1 && s == 1) {
        const unsigned which = pp == ParityPair::eo() ? 1u : (pp == ParityPair::oe() ? 2u : 3u);
        out += alpha(which, order);
    }
    return out;
}

BigInt oo_middle_weight(unsigned r, unsigned s, unsigned p)
{
    BigInt w = binomial(p - 1, static_cast<long>(s) - 1);
    if (s % 2 == 1) {
        w = -w;
    }
    const BigInt b = binomial(p - 1, static_cast<long>(r) - 1);
    if ((p + r) % 2 == 0) {
        w += b;
    } else {
        w -= b;
    }
    return w;
}

RSeries beta_oo(unsigned r, unsigned s, int order)
{
    require_rs(r, s, "beta_oo");
    RSeries out(order);
    for (unsigned p = 1; p + 1 <= r + s; ++p) {
        const unsigned h = r + s - p;
        const BigInt w = oo_middle_weight(r, s, p);
        const Rational b = beta(p);
        if (is_zero(w) || b.is_zero()) {
            continue;
        }
        out += scale(f_parity(ParityClass::odd, h, order), Rational(w) * b);
    }
    return out;
}

ESeries Z_double(ParityPair pp, unsigned r, unsigned s, int order)
{
    require_rs(r, s, "Z_double");
    ESeries out = to_ext(f_double(pp, r, s, order) + scale(epsilon(pp, r, s, order), Rational(1, 4)));
    if (pp == ParityPair::oe()) {
        out += scale(to_ext(f_parity(ParityClass::odd, r, order)), zeta_tilde(s));
    } else if (pp == ParityPair::oo()) {
        for (unsigned p = 1; p + 1 <= r + s; ++p) {
            const BigInt w = oo_middle_weight(r, s, p);
            const ExtScalar z = zeta_tilde(p);
            if (is_zero(w) || z.is_zero()) {
                continue;
            }
            out += scale(to_ext(f_parity(ParityClass::odd, r + s - p, order)), z * Rational(w));
        }
    }
    return out;
}

std::shared_ptr<const ESeries> Z_double_cached(ParityPair pp, unsigned r, unsigned s, int order)
{
    return SeriesCatalog::global().get(
        SeriesKey{"Z_" + pp.name(), {static_cast<int>(r), static_cast<int>(s)}, order},
        [&] { return Z_double(pp, r, s, order); });
}

ESeries P_oe(unsigned r, unsigned s, int order)
{
    require_rs(r, s, "P_oe");
    const ESeries g0 = G_0(r, order);
    const ESeries g2 = G_two_tau(s, order);
    ESeries out = g0 * g2;
    if (r == 2) {
        out += scale(qderive(g2), Rational(BigInt(1), BigInt(4 * s)));
    }
    if (s == 2) {
        out += scale(qderive(g0), Rational(BigInt(1), BigInt(4 * r)));
    }
    return out;
}

ESeries P_oo(unsigned r, unsigned s, int order)
{
    require_rs(r, s, "P_oo");
    const ESeries a = G_0(r, order);
    const ESeries b = G_0(s, order);
    ESeries out = a * b;
    if (r == 2) {
        out += scale(qderive(b), Rational(BigInt(1), BigInt(4 * s)));
    }
    if (s == 2) {
        out += scale(qderive(a), Rational(BigInt(1), BigInt(4 * r)));
    }
    return out;
}

} // namespace qforms
