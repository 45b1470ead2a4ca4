#ifndef QFORMS_QSERIES_HPP
#define QFORMS_QSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <qforms/rational.hpp>

namespace qforms
{

namespace detail
{

template <typename C>
bool coeff_is_zero(const C &c)
{
    return is_zero(c);
}

} // namespace detail

// Truncated power series in q over a coefficient ring C.
//
// The coefficients of q^0 .. q^order are exact; everything above order is
// unknown. There is no default order: every series states its truncation at
// construction, and results of binary operations carry the smaller of the two
// operand orders.
//
// C must be constructible from int, support +, -, * and ==, and have an
// is_zero() overload reachable from this header or by ADL.
template <typename C>
class QSeries
{
public:
    using coefficient_type = C;

    explicit QSeries(int order) : m_order(check_order(order)), m_coeffs(static_cast<std::size_t>(order) + 1u, C(0)) {}

    QSeries(std::vector<C> coeffs, int order) : m_order(check_order(order)), m_coeffs(std::move(coeffs))
    {
        m_coeffs.resize(static_cast<std::size_t>(order) + 1u, C(0));
    }

    static QSeries one(int order)
    {
        QSeries out(order);
        out.m_coeffs[0] = C(1);
        return out;
    }

    static QSeries constant(C c, int order)
    {
        QSeries out(order);
        out.m_coeffs[0] = std::move(c);
        return out;
    }

    int order() const
    {
        return m_order;
    }

    const C &operator[](int n) const
    {
        return m_coeffs.at(index(n));
    }

    void set(int n, C c)
    {
        m_coeffs.at(index(n)) = std::move(c);
    }

    void add_to(int n, const C &c)
    {
        m_coeffs.at(index(n)) += c;
    }

    std::span<const C> coeffs() const
    {
        return m_coeffs;
    }

    bool is_zero() const
    {
        return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const C &c) { return is_zero_coeff(c); });
    }

    QSeries truncated(int order) const
    {
        if (order > m_order) {
            throw std::invalid_argument("QSeries::truncated: cannot raise the order from " + std::to_string(m_order)
                                        + " to " + std::to_string(order));
        }
        return QSeries(std::vector<C>(m_coeffs.begin(), m_coeffs.begin() + order + 1), order);
    }

    /// Coefficient-wise image under f, same order.
    template <typename F>
    auto map(F &&f) const
    {
        using D = std::decay_t<std::invoke_result_t<F &, const C &>>;
        std::vector<D> out;
        out.reserve(m_coeffs.size());
        for (const auto &c : m_coeffs) {
            out.push_back(f(c));
        }
        return QSeries<D>(std::move(out), m_order);
    }

    QSeries &operator+=(const QSeries &o)
    {
        shrink_to(o.m_order);
        for (int n = 0; n <= m_order; ++n) {
            m_coeffs[idx(n)] += o.m_coeffs[idx(n)];
        }
        return *this;
    }

    QSeries &operator-=(const QSeries &o)
    {
        shrink_to(o.m_order);
        for (int n = 0; n <= m_order; ++n) {
            m_coeffs[idx(n)] -= o.m_coeffs[idx(n)];
        }
        return *this;
    }

    friend QSeries operator+(QSeries a, const QSeries &b)
    {
        return a += b;
    }

    friend QSeries operator-(QSeries a, const QSeries &b)
    {
        return a -= b;
    }

    friend QSeries operator-(const QSeries &a)
    {
        return a.map([](const C &c) -> C { return C(0) - c; });
    }

    // Cauchy product; zero coefficients are skipped on both sides.
    friend QSeries operator*(const QSeries &a, const QSeries &b)
    {
        const int order = std::min(a.m_order, b.m_order);
        QSeries out(order);
        for (int i = 0; i <= order; ++i) {
            const C &ai = a.m_coeffs[idx(i)];
            if (is_zero_coeff(ai)) {
                continue;
            }
            for (int j = 0; i + j <= order; ++j) {
                const C &bj = b.m_coeffs[idx(j)];
                if (!is_zero_coeff(bj)) {
                    out.m_coeffs[idx(i + j)] += ai * bj;
                }
            }
        }
        return out;
    }

    QSeries &operator*=(const QSeries &o)
    {
        return *this = *this * o;
    }

    /// Equality of the coefficients both operands know, i.e. up to min(order).
    friend bool operator==(const QSeries &a, const QSeries &b)
    {
        const int order = std::min(a.m_order, b.m_order);
        for (int n = 0; n <= order; ++n) {
            if (!(a.m_coeffs[idx(n)] == b.m_coeffs[idx(n)])) {
                return false;
            }
        }
        return true;
    }

private:
    static int check_order(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("QSeries: negative truncation order " + std::to_string(order));
        }
        return order;
    }

    static std::size_t idx(int n)
    {
        return static_cast<std::size_t>(n);
    }

    std::size_t index(int n) const
    {
        if (n < 0 || n > m_order) {
            throw std::out_of_range("QSeries: exponent " + std::to_string(n) + " outside [0, "
                                    + std::to_string(m_order) + "]");
        }
        return idx(n);
    }

    void shrink_to(int order)
    {
        if (order < m_order) {
            m_order = order;
            m_coeffs.resize(idx(order) + 1u);
        }
    }

    static bool is_zero_coeff(const C &c)
    {
        return detail::coeff_is_zero(c);
    }

    int m_order;
    std::vector<C> m_coeffs;
};

template <typename C, typename S>
QSeries<C> scale(const QSeries<C> &a, const S &s)
{
    return a.map([&s](const C &c) -> C { return C(c * s); });
}

/// a^e by binary exponentiation; a^0 is the unit series at a's order.
template <typename C>
QSeries<C> pow(const QSeries<C> &a, unsigned e)
{
    QSeries<C> result = QSeries<C>::one(a.order());
    QSeries<C> base = a;
    while (e != 0u) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1u;
        if (e != 0u) {
            base *= base;
        }
    }
    return result;
}

/// The derivation q d/dq.
template <typename C>
QSeries<C> qderive(const QSeries<C> &a)
{
    QSeries<C> out(a.order());
    for (int n = 1; n <= a.order(); ++n) {
        if (!detail::coeff_is_zero(a[n])) {
            out.set(n, a[n] * C(n));
        }
    }
    return out;
}

/// q -> -q, i.e. tau -> tau + 1/2.
template <typename C>
QSeries<C> subst_neg_q(const QSeries<C> &a)
{
    QSeries<C> out = a;
    for (int n = 1; n <= a.order(); n += 2) {
        out.set(n, C(0) - a[n]);
    }
    return out;
}

/// q -> q^2, i.e. tau -> 2 tau. The order is kept; odd exponents are zero.
template <typename C>
QSeries<C> subst_q_squared(const QSeries<C> &a)
{
    QSeries<C> out(a.order());
    for (int n = 0; 2 * n <= a.order(); ++n) {
        out.set(2 * n, a[n]);
    }
    return out;
}

/// Result of comparing two series coefficient by coefficient.
template <typename C>
struct SeriesComparison {
    int certified_order;
    std::optional<int> first_mismatch;
    std::optional<std::pair<C, C>> mismatch_values;

    bool equal() const
    {
        return !first_mismatch.has_value();
    }
};

template <typename C>
SeriesComparison<C> certify_equal(const QSeries<C> &a, const QSeries<C> &b, std::optional<int> up_to = std::nullopt)
{
    int order = std::min(a.order(), b.order());
    if (up_to) {
        order = std::min(order, *up_to);
    }
    for (int n = 0; n <= order; ++n) {
        if (!(a[n] == b[n])) {
            return {order, n, std::make_pair(a[n], b[n])};
        }
    }
    return {order, std::nullopt, std::nullopt};
}

} // namespace qforms

#endif
