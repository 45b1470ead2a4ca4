#include <qforms/numeric.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <qforms/exact.hpp>

namespace qforms
{

namespace
{

constexpr int em_terms = 8;

Complex ipow(Complex w, unsigned k)
{
    Complex out{1.0, 0.0};
    while (k != 0u) {
        if (k & 1u) {
            out *= w;
        }
        k >>= 1u;
        if (k != 0u) {
            w *= w;
        }
    }
    return out;
}

Complex two_pi_i_pow(unsigned k)
{
    return ipow(Complex(0.0, 2.0 * std::numbers::pi), k);
}

// Bounds of the n-range at a given m.
long n_bound(const LatticeTruncation &t, long m)
{
    return t.shape == TruncationShape::box ? t.M : t.M - m;
}

// Values (m tau + n)^{-k} for -B <= n <= B, index n + B.
std::vector<Complex> row(Complex z, unsigned k, long B)
{
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(2 * B + 1));
    for (long n = -B; n <= B; ++n) {
        out.push_back(ipow(1.0 / (z + static_cast<double>(n)), k));
    }
    return out;
}

Complex row_sum(const std::vector<Complex> &v)
{
    KahanSum acc;
    for (const auto &x : v) {
        acc += x;
    }
    return acc.value();
}

Complex tail_plus(Complex z, unsigned k, long B, bool on)
{
    return on ? em_tail(z, k, B) : Complex{};
}

Complex tail_minus(Complex z, unsigned k, long B, bool on)
{
    const double sign = (k % 2u == 0u) ? 1.0 : -1.0;
    return on ? sign * em_tail(-z, k, B) : Complex{};
}

} // namespace

Complex em_tail(Complex z, unsigned k, long B)
{
    if (k < 2u) {
        throw std::invalid_argument("em_tail: k must be >= 2");
    }
    const Complex w = 1.0 / (z + static_cast<double>(B));
    const double kd = static_cast<double>(k);
    Complex sum = ipow(w, k - 1u) / (kd - 1.0);
    sum -= 0.5 * ipow(w, k);
    // f^{(2j-1)}(B) = -k (k+1) ... (k+2j-2) w^{k+2j-1}
    double rising = kd;
    Complex wpow = ipow(w, k + 1u);
    for (int j = 1; j <= em_terms; ++j) {
        const double b2j = bernoulli(static_cast<unsigned>(2 * j)).to_double();
        const double fact = std::tgamma(2.0 * j + 1.0);
        sum += b2j / fact * rising * wpow;
        rising *= (kd + 2.0 * j - 1.0) * (kd + 2.0 * j);
        wpow *= w * w;
    }
    return sum;
}

double zeta_numeric(unsigned p)
{
    if (p < 2u) {
        throw std::invalid_argument("zeta_numeric: p must be >= 2");
    }
    constexpr long cut = 64;
    KahanSum acc;
    for (long n = cut; n >= 1; --n) {
        acc += std::pow(static_cast<double>(n), -static_cast<double>(p));
    }
    acc += em_tail(Complex{}, p, cut);
    return acc.value().real();
}

Complex zeta_tilde_numeric(unsigned k)
{
    if (k == 1u) {
        return {};
    }
    return zeta_numeric(k) / two_pi_i_pow(k);
}

Complex q_of_tau(Complex tau)
{
    return std::exp(Complex(0.0, 2.0 * std::numbers::pi) * tau);
}

Complex evaluate(const ESeries &a, Complex q)
{
    Complex acc{};
    for (int n = a.order(); n >= 0; --n) {
        const ExtScalar &c = a[n];
        Complex v = c.rational_part().to_double();
        for (const auto &[p, coef] : c.symbolic_part()) {
            v += coef.to_double() * zeta_tilde_numeric(static_cast<unsigned>(p));
        }
        acc = acc * q + v;
    }
    return acc;
}

Complex evaluate(const RSeries &a, Complex q)
{
    Complex acc{};
    for (int n = a.order(); n >= 0; --n) {
        acc = acc * q + a[n].to_double();
    }
    return acc;
}

Complex lattice_double_sum(ParityPair pp, unsigned r, unsigned s, const LatticeTruncation &t)
{
    if (r < 3u || s < 2u) {
        throw std::invalid_argument("lattice_double_sum: requires r >= 3 and s >= 2");
    }
    if (t.M < 1 || t.tau.imag() <= 0.0) {
        throw std::invalid_argument("lattice_double_sum: requires M >= 1 and Im tau > 0");
    }
    const bool tails = t.tail_correction;
    KahanSum total;
    Complex prefix_b{};

    if (pp.second() == ParityClass::even) {
        // m' = 0 contributes n' > 0 only.
        KahanSum z;
        for (long n = n_bound(t, 0); n >= 1; --n) {
            z += std::pow(static_cast<double>(n), -static_cast<double>(s));
        }
        z += tail_plus(Complex{}, s, n_bound(t, 0), tails);
        prefix_b = z.value();
    }

    for (long m = 1; m <= t.M; ++m) {
        const long B = n_bound(t, m);
        const Complex z = static_cast<double>(m) * t.tau;
        const bool first = in_class(pp.first(), m);
        const bool second = in_class(pp.second(), m);
        std::vector<Complex> a;
        Complex a_total{};
        if (first) {
            a = row(z, r, B);
            a_total = row_sum(a) + tail_plus(z, r, B, tails) + tail_minus(z, r, B, tails);
            total += a_total * prefix_b;
        }
        if (!second) {
            continue;
        }
        const std::vector<Complex> b = row(z, s, B);
        if (first) {
            // m = m': sum over n > n'.
            KahanSum diag;
            Complex suffix = tail_plus(z, r, B, tails);
            for (long i = 2 * B; i >= 0; --i) {
                diag += b[static_cast<std::size_t>(i)] * suffix;
                suffix += a[static_cast<std::size_t>(i)];
            }
            diag += tail_minus(z, s, B, tails) * a_total;
            if (tails) {
                // n' outside [-B, B], with the inner sums over n expanded to three orders.
                const double rd = static_cast<double>(r);
                const double sign = ((r + s) % 2u == 0u) ? 1.0 : -1.0;
                const Complex below = em_tail(-z, r + s - 1u, B) / (rd - 1.0) + 0.5 * em_tail(-z, r + s, B)
                                      + rd / 12.0 * em_tail(-z, r + s + 1u, B);
                const Complex above = em_tail(z, r + s - 1u, B) / (rd - 1.0) - 0.5 * em_tail(z, r + s, B)
                                      + rd / 12.0 * em_tail(z, r + s + 1u, B);
                diag += above - sign * below;
            }
            total += diag.value();
        }
        prefix_b += row_sum(b) + tail_plus(z, s, B, tails) + tail_minus(z, s, B, tails);
    }
    return total.value() / two_pi_i_pow(r + s);
}

} // namespace qforms
