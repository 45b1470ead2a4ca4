#ifndef QFORMS_LINEAR_SYSTEM_HPP
#define QFORMS_LINEAR_SYSTEM_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <qforms/rational.hpp>

namespace qforms
{

class RankDeficient : public std::runtime_error
{
public:
    RankDeficient(std::size_t rank, std::size_t columns)
        : std::runtime_error("linear system has rank " + std::to_string(rank) + " < " + std::to_string(columns)
                             + " unknowns"),
          rank(rank), columns(columns)
    {
    }
    std::size_t rank;
    std::size_t columns;
};

class InconsistentSystem : public std::runtime_error
{
public:
    explicit InconsistentSystem(int provenance)
        : std::runtime_error("linear system is inconsistent (row from exponent " + std::to_string(provenance) + ")"),
          provenance(provenance)
    {
    }
    int provenance;
};

// Rows may outnumber unknowns; extra rows are checked for consistency.
struct LinearSystem {
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> rhs;
    /// Source tag per row (the q-exponent that produced it).
    std::vector<int> provenance;

    std::size_t rows() const
    {
        return matrix.size();
    }
    std::size_t columns() const
    {
        return matrix.empty() ? 0 : matrix.front().size();
    }
};

struct LinearSolution {
    std::vector<Rational> x;
    std::size_t rank;
};

/// Rank of the coefficient matrix, by fraction-free elimination.
std::size_t fraction_free_rank(const LinearSystem &sys);

/// Unique solution by Bareiss elimination over Z and rational back substitution.
/// Throws RankDeficient or InconsistentSystem; never patches a defective system.
LinearSolution solve_fraction_free(const LinearSystem &sys);

} // namespace qforms

#endif
