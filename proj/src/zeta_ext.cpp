#include <qforms/zeta_ext.hpp>

#include <cctype>
#include <vector>

#include <qforms/exact.hpp>

namespace qforms
{

ExtScalar ExtScalar::symbol(int p, Rational c)
{
    if (p < 3 || p % 2 == 0) {
        throw std::invalid_argument("ExtScalar::symbol: z_p needs odd p >= 3, got " + std::to_string(p));
    }
    ExtScalar out;
    out.add_symbol(p, c);
    return out;
}

Rational ExtScalar::symbol_coefficient(int p) const
{
    const auto it = m_symbols.find(p);
    return it == m_symbols.end() ? Rational(0) : it->second;
}

const Rational &ExtScalar::as_rational() const
{
    if (has_symbols()) {
        throw std::domain_error("ExtScalar::as_rational: value " + to_string() + " carries odd zeta symbols");
    }
    return m_rational;
}

void ExtScalar::add_symbol(int p, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_symbols.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_symbols.erase(it);
        }
    }
}

ExtScalar &ExtScalar::operator+=(const ExtScalar &o)
{
    m_rational += o.m_rational;
    for (const auto &[p, c] : o.m_symbols) {
        add_symbol(p, c);
    }
    return *this;
}

ExtScalar &ExtScalar::operator-=(const ExtScalar &o)
{
    m_rational -= o.m_rational;
    for (const auto &[p, c] : o.m_symbols) {
        add_symbol(p, -c);
    }
    return *this;
}

ExtScalar &ExtScalar::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        m_rational = Rational(0);
        m_symbols.clear();
        return *this;
    }
    m_rational *= c;
    for (auto &entry : m_symbols) {
        entry.second *= c;
    }
    return *this;
}

ExtScalar &ExtScalar::operator*=(const ExtScalar &o)
{
    if (has_symbols() && o.has_symbols()) {
        throw SymbolicProductError("ExtScalar: product of two symbolic values (" + to_string() + ") * ("
                                   + o.to_string() + ") leaves the degree-1 ring");
    }
    if (!o.has_symbols()) {
        return *this *= o.m_rational;
    }
    // this is purely rational, o carries the symbols
    const Rational c = m_rational;
    *this = o;
    return *this *= c;
}

std::string ExtScalar::to_string() const
{
    std::string out = m_rational.to_string();
    for (const auto &[p, c] : m_symbols) {
        if (c.sign() < 0) {
            out += " - " + (-c).to_string();
        } else {
            out += " + " + c.to_string();
        }
        out += "*z" + std::to_string(p);
    }
    return out;
}

ExtScalar ExtScalar::parse(std::string_view text)
{
    // Split into signed terms at top-level '+'/'-' that follow a space.
    ExtScalar out;
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string current;
    auto flush = [&] {
        std::string t;
        for (char ch : current) {
            if (!std::isspace(static_cast<unsigned char>(ch))) {
                t.push_back(ch);
            }
        }
        if (!t.empty()) {
            terms.emplace_back(sign, t);
        }
        current.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if ((ch == '+' || ch == '-') && i > 0 && text[i - 1] == ' ') {
            flush();
            sign = (ch == '-') ? -1 : 1;
            continue;
        }
        current.push_back(ch);
    }
    flush();
    if (terms.empty()) {
        throw std::invalid_argument("ExtScalar::parse: empty input");
    }
    for (auto [sg, t] : terms) {
        if (!t.empty() && t.front() == 'z') {
            t = "1*" + t;
        }
        const auto star = t.find("*z");
        if (star == std::string::npos) {
            out.m_rational += Rational::parse(t) * Rational(sg);
            continue;
        }
        const std::string index = t.substr(star + 2);
        if (index.empty() || index.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("ExtScalar::parse: bad symbol in '" + t + "'");
        }
        const int p = std::stoi(index);
        if (p < 3 || p % 2 == 0) {
            throw std::invalid_argument("ExtScalar::parse: z_p needs odd p >= 3 in '" + t + "'");
        }
        out.add_symbol(p, Rational::parse(t.substr(0, star)) * Rational(sg));
    }
    return out;
}

ExtScalar zeta_tilde(unsigned k)
{
    if (k == 0) {
        throw std::invalid_argument("zeta_tilde: k must be >= 1");
    }
    if (k == 1) {
        return ExtScalar(0);
    }
    if (k % 2 == 0) {
        return ExtScalar(beta(k));
    }
    return ExtScalar::symbol(static_cast<int>(k));
}

Rational beta(unsigned p)
{
    if (p == 0) {
        throw std::invalid_argument("beta: p must be >= 1");
    }
    return -bernoulli(p) / (Rational(2) * Rational(factorial(p)));
}

} // namespace qforms
