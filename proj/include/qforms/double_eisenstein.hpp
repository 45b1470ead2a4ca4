#ifndef QFORMS_DOUBLE_EISENSTEIN_HPP
#define QFORMS_DOUBLE_EISENSTEIN_HPP

#include <memory>
#include <string>
#include <string_view>

#include <qforms/eisenstein.hpp>

namespace qforms
{

/// Parity constraint on (m, m') for the double series; only eo, oe and oo exist.
class ParityPair
{
public:
    static ParityPair eo()
    {
        return {ParityClass::even, ParityClass::odd};
    }
    static ParityPair oe()
    {
        return {ParityClass::odd, ParityClass::even};
    }
    static ParityPair oo()
    {
        return {ParityClass::odd, ParityClass::odd};
    }
    /// "eo", "oe" or "oo"; throws std::invalid_argument otherwise.
    static ParityPair parse(std::string_view text);

    ParityClass first() const
    {
        return m_first;
    }
    ParityClass second() const
    {
        return m_second;
    }
    std::string name() const
    {
        return {parity_letter(m_first), parity_letter(m_second)};
    }

    bool operator==(const ParityPair &) const = default;

private:
    ParityPair(ParityClass first, ParityClass second) : m_first(first), m_second(second) {}

    ParityClass m_first;
    ParityClass m_second;
};

/// sum over m > m' > 0 with parities pp of phi_r(m tau) phi_s(m' tau).
RSeries f_double(ParityPair pp, unsigned r, unsigned s, int order);

/// alpha_1 = fbar^o_0, alpha_2 = -fbar^o_0, alpha_3 = 2 fbar^o_0 + fbar^e_0, alpha_4 = -alpha_3 / 2.
RSeries alpha(unsigned index, int order);

/// Boundary correction series; zero whenever r >= 3 and s >= 2.
RSeries epsilon(ParityPair pp, unsigned r, unsigned s, int order);

/// (-1)^s C(p-1, s-1) + (-1)^{p+r} C(p-1, r-1).
BigInt oo_middle_weight(unsigned r, unsigned s, unsigned p);

/// sum_{p+h=r+s, p,h >= 1} oo_middle_weight(r, s, p) beta_p f^o_h.
RSeries beta_oo(unsigned r, unsigned s, int order);

/// Extended double Eisenstein series Z^{pp}_{r,s} for all r, s >= 1.
ESeries Z_double(ParityPair pp, unsigned r, unsigned s, int order);

/// Memoized Z_double through SeriesCatalog::global().
std::shared_ptr<const ESeries> Z_double_cached(ParityPair pp, unsigned r, unsigned s, int order);

/// G^0_r G_s(2 tau) + delta_{r,2} G_s(2 tau)' / 4s + delta_{s,2} G^0_r' / 4r.
ESeries P_oe(unsigned r, unsigned s, int order);
/// G^0_r G^0_s + delta_{r,2} G^0_s' / 4s + delta_{s,2} G^0_r' / 4r.
ESeries P_oo(unsigned r, unsigned s, int order);

} // namespace qforms

#endif
