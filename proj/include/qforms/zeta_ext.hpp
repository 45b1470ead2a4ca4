#ifndef QFORMS_ZETA_EXT_HPP
#define QFORMS_ZETA_EXT_HPP

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <qforms/rational.hpp>

namespace qforms
{

/// Raised when two elements that both carry odd zeta symbols are multiplied.
class SymbolicProductError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Element of Q + sum_{odd p >= 3} Q z_p, where z_p stands for the normalized
// odd zeta value (2 pi i)^{-p} zeta(p). The symbols are treated as linearly
// independent over Q. Products are only defined while at most one factor
// carries symbols, so every value stays affine in the z_p.
class ExtScalar
{
public:
    ExtScalar() = default;
    ExtScalar(int n) : m_rational(n) {}
    ExtScalar(long n) : m_rational(n) {}
    ExtScalar(Rational r) : m_rational(std::move(r)) {}

    /// c * z_p for odd p >= 3.
    static ExtScalar symbol(int p, Rational c = Rational(1));

    const Rational &rational_part() const
    {
        return m_rational;
    }
    const std::map<int, Rational> &symbolic_part() const
    {
        return m_symbols;
    }
    Rational symbol_coefficient(int p) const;

    bool has_symbols() const
    {
        return !m_symbols.empty();
    }
    bool is_zero() const
    {
        return m_rational.is_zero() && m_symbols.empty();
    }
    /// The rational part; throws std::domain_error if any symbol is present.
    const Rational &as_rational() const;

    ExtScalar &operator+=(const ExtScalar &o);
    ExtScalar &operator-=(const ExtScalar &o);
    ExtScalar &operator*=(const ExtScalar &o);
    ExtScalar &operator*=(const Rational &c);

    friend ExtScalar operator+(ExtScalar a, const ExtScalar &b)
    {
        return a += b;
    }
    friend ExtScalar operator-(ExtScalar a, const ExtScalar &b)
    {
        return a -= b;
    }
    friend ExtScalar operator*(ExtScalar a, const ExtScalar &b)
    {
        return a *= b;
    }
    friend ExtScalar operator*(ExtScalar a, const Rational &c)
    {
        return a *= c;
    }
    friend ExtScalar operator*(const Rational &c, ExtScalar a)
    {
        return a *= c;
    }
    friend ExtScalar operator-(ExtScalar a)
    {
        return a *= Rational(-1);
    }
    friend bool operator==(const ExtScalar &a, const ExtScalar &b)
    {
        return a.m_rational == b.m_rational && a.m_symbols == b.m_symbols;
    }

    /// "a/b" for pure rationals, otherwise "a/b + c/d*z3 - e/f*z5" in ascending p.
    std::string to_string() const;
    static ExtScalar parse(std::string_view text);

    friend std::ostream &operator<<(std::ostream &os, const ExtScalar &x)
    {
        return os << x.to_string();
    }

private:
    void add_symbol(int p, const Rational &c);

    Rational m_rational;
    std::map<int, Rational> m_symbols;
};

inline bool is_zero(const ExtScalar &x)
{
    return x.is_zero();
}

/// (2 pi i)^{-k} zeta(k): 0 for k = 1, -B_k / (2 k!) for even k, the symbol z_k for odd k >= 3.
ExtScalar zeta_tilde(unsigned k);

/// -B_p / (2 p!). Agrees with zeta_tilde on even p; beta(1) = 1/4.
Rational beta(unsigned p);

} // namespace qforms

#endif
