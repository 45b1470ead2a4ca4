#ifndef QFORMS_MU_SOLVER_HPP
#define QFORMS_MU_SOLVER_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <qforms/eisenstein.hpp>
#include <qforms/linear_system.hpp>
#include <qforms/report.hpp>

namespace qforms
{

class VerificationFailed : public std::runtime_error
{
public:
    VerificationFailed(int exponent, const std::string &what) : std::runtime_error(what), exponent(exponent) {}
    int exponent;
};

class NonIntegerResult : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Coefficients mu_s(l), 2 <= l <= s, with the provenance of the solve.
struct MuTable {
    int s = 0;
    std::map<int, Rational> mu;
    int system_rows = 0;
    int rank = 0;
    int verified_order = 0;
    std::vector<int> row_exponents;

    const Rational &at(int l) const
    {
        return mu.at(l);
    }
};

/// The products G^0_{2l} G^0_{4s-2l}, l = 2..s, at the given order.
std::vector<RSeries> mu_basis(int s, int order);

/// T^{8s} as an integral-exponent series.
RSeries T8_power(int s, int order);

/// The system built from the coefficients of q^2 .. q^{s + extra_rows}.
LinearSystem mu_system(int s, int extra_rows = 0);

// Solves T^{8s} = sum_l mu_s(l) G^0_{2l} G^0_{4s-2l} exactly from the rows
// q^2 .. q^{s + extra_rows}, then checks the identity through q^verify_order.
// Throws RankDeficient, InconsistentSystem, or VerificationFailed.
MuTable solve_mu(int s, int verify_order, int extra_rows = 0);

/// r_{8s}(n) from the mu table; throws NonIntegerResult if the combination is not integral.
BigInt r8s_formula(int s, long n, const MuTable &mu);
/// t_{8s}(m), evaluated through rho^0 at n = m + s.
BigInt t8s_formula(int s, long m, const MuTable &mu);

std::vector<BigInt> r8s_table(int s, long n_max, const MuTable &mu);
std::vector<BigInt> t8s_table(int s, long m_max, const MuTable &mu);

/// theta^{8s} = 2^{8s} sum_l mu_s(l) G^iinf_{2l}(-q) G^iinf_{4s-2l}(-q) through q^order.
VerificationReport theta_identity_check(int s, const MuTable &mu, int order);

} // namespace qforms

#endif
