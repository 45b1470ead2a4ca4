#ifndef QFORMS_VERIFY_HPP
#define QFORMS_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qforms/double_eisenstein.hpp>
#include <qforms/numeric.hpp>
#include <qforms/report.hpp>

namespace qforms
{

enum class ShuffleKind { oe, oo };

/// Range of the binomial sums over i + j = r + s: i, j >= 1 or i, j >= 2.
enum class IndexConvention { ge1, ge2 };

std::string to_string(ShuffleKind k);
std::string to_string(IndexConvention c);

using ZDoubleProvider = std::function<ESeries(ParityPair, unsigned, unsigned, int)>;

struct ShuffleOptions {
    IndexConvention convention = IndexConvention::ge1;
    // Adds alpha_4 to Z^oo_{1,1} + Z^oo_{1,1} + Z^o_2, matching the generating function Z^o(X).
    bool alpha4_at_unit = true;
    // Source of Z^{pp}_{r,s}; empty means the memoized Z_double.
    ZDoubleProvider z_double;
};

/// Both equalities of the oe or oo double shuffle relation through q^order.
VerificationReport check_shuffle(ShuffleKind kind, unsigned r, unsigned s, int order, const ShuffleOptions &opt = {});

enum class SummationTerms { even_r, all_r };

/// (1/4) G^0_k = sum over even r, 2 <= r <= k - 2, of Z^oo_{r, k-r}.
VerificationReport check_summation(unsigned k, int order, SummationTerms terms = SummationTerms::even_r);

/// G^0_r G^iinf_s = 2^{-s} ((2^s - 1) P^oe_{r,s} - P^oo_{r,s}).
VerificationReport check_star(unsigned r, unsigned s, int order);

struct PartialFractionSample {
    Rational tau;
    long n = 0;
    long n2 = 0;
};

/// Exact check of the decomposition of 1 / ((tau + n)^r (tau + n')^s) at rational points.
VerificationReport check_partial_fraction(unsigned r, unsigned s, const std::vector<PartialFractionSample> &samples);

/// Lattice sum against the q-expansion of Z_double, relative error <= tol.
VerificationReport check_prop4(ParityPair pp, unsigned r, unsigned s, Complex tau, long M, int order, double tol);

/// Smallest admissible Im of the transformed point for the given s, order and tolerance.
double transformation_floor(unsigned s, int order, double tol);

/// 2^{8s} (2 tau + 1)^{-4s} T(-1/(2 tau + 1))^{8s} = theta(tau)^{8s}, numerically.
VerificationReport check_transformation(unsigned s, Complex tau, int order, double tol);

enum class Suite { all, shuffle, summation, star, prop4, transform };

Suite parse_suite(std::string_view name);

struct SuiteOptions {
    std::optional<int> order;
    std::optional<double> tol;
    unsigned threads = 0; // 0: QFORMS_THREADS or hardware concurrency
};

/// Runs the suite; reports come back in a fixed order regardless of thread count.
std::vector<VerificationReport> run_suite(Suite suite, const SuiteOptions &opt = {});

/// QFORMS_THREADS if set and positive, else the hardware concurrency.
unsigned default_thread_count();

} // namespace qforms

#endif
