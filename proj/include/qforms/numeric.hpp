#ifndef QFORMS_NUMERIC_HPP
#define QFORMS_NUMERIC_HPP

#include <complex>

#include <qforms/double_eisenstein.hpp>
#include <qforms/eisenstein.hpp>

namespace qforms
{

using Complex = std::complex<double>;

/// Compensated (Kahan) accumulator for complex doubles.
class KahanSum
{
public:
    void add(Complex x)
    {
        add_part(m_re, m_re_c, x.real());
        add_part(m_im, m_im_c, x.imag());
    }
    KahanSum &operator+=(Complex x)
    {
        add(x);
        return *this;
    }
    Complex value() const
    {
        return {m_re, m_im};
    }

private:
    static void add_part(double &sum, double &comp, double x)
    {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    double m_re = 0.0;
    double m_re_c = 0.0;
    double m_im = 0.0;
    double m_im_c = 0.0;
};

/// sum_{n > B} (z + n)^{-k} by Euler-Maclaurin, for k >= 2 and |z + B| large.
Complex em_tail(Complex z, unsigned k, long B);

/// zeta(p) for p >= 2.
double zeta_numeric(unsigned p);

/// (2 pi i)^{-k} zeta(k), with 0 at k = 1.
Complex zeta_tilde_numeric(unsigned k);

/// Value at q of the truncated series, odd zeta symbols replaced by their numeric values.
Complex evaluate(const ESeries &a, Complex q);
Complex evaluate(const RSeries &a, Complex q);

Complex q_of_tau(Complex tau);

enum class TruncationShape { box, diamond };

// Finite part of the lattice: 0 <= m' <= m <= M, and |n| <= M (box) or
// |n| <= M - m (diamond). With tail_correction the n-sums beyond the bound are
// added by Euler-Maclaurin, so only the m direction stays truncated.
struct LatticeTruncation {
    long M = 400;
    Complex tau{0.0, 1.0};
    TruncationShape shape = TruncationShape::box;
    bool tail_correction = true;
};

/// (2 pi i)^{-r-s} sum over m tau + n > m' tau + n' > 0 with the parities of pp, for r >= 3, s >= 2.
Complex lattice_double_sum(ParityPair pp, unsigned r, unsigned s, const LatticeTruncation &trunc);

} // namespace qforms

#endif
