#ifndef QFORMS_RATIONAL_HPP
#define QFORMS_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qforms
{

using BigInt = mpz_class;

inline bool is_zero(const BigInt &x)
{
    return sgn(x) == 0;
}

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational
{
public:
    Rational() = default;
    Rational(int n) : m_value(n) {}
    Rational(long n) : m_value(n) {}
    Rational(const BigInt &n) : m_value(n) {}
    Rational(const BigInt &num, const BigInt &den)
    {
        if (sgn(den) == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        m_value.get_num() = num;
        m_value.get_den() = den;
        m_value.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
    explicit Rational(mpq_class v) : m_value(std::move(v))
    {
        m_value.canonicalize();
    }

    BigInt num() const
    {
        return m_value.get_num();
    }
    BigInt den() const
    {
        return m_value.get_den();
    }
    const mpq_class &mpq() const
    {
        return m_value;
    }

    bool is_zero() const
    {
        return sgn(m_value) == 0;
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }
    int sign() const
    {
        return sgn(m_value);
    }
    double to_double() const
    {
        return m_value.get_d();
    }

    Rational &operator+=(const Rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        m_value /= o.m_value;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        return Rational(mpq_class(-a.m_value));
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_value == b.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q", or "p" when q == 1.
    std::string to_string() const
    {
        if (is_integer()) {
            return m_value.get_num().get_str();
        }
        return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
    }

    /// Inverse of to_string(); accepts an optional sign and surrounding blanks.
    static Rational parse(std::string_view text);

    friend std::ostream &operator<<(std::ostream &os, const Rational &r)
    {
        return os << r.to_string();
    }

private:
    mpq_class m_value;
};

inline bool is_zero(const Rational &x)
{
    return x.is_zero();
}

inline Rational pow(const Rational &base, unsigned e)
{
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
    return Rational(n, d);
}

inline Rational Rational::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
            s.remove_suffix(1);
        }
        return s;
    };
    auto parse_int = [](std::string_view s) {
        if (s.empty()) {
            throw std::invalid_argument("Rational::parse: empty integer");
        }
        std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (i == s.size()) {
            throw std::invalid_argument("Rational::parse: bare sign");
        }
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw std::invalid_argument("Rational::parse: bad digit in '" + std::string(s) + "'");
            }
        }
        std::string digits(s.front() == '+' ? s.substr(1) : s);
        return BigInt(digits);
    };
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    return Rational(parse_int(trim(text.substr(0, slash))), parse_int(trim(text.substr(slash + 1))));
}

} // namespace qforms

#endif
