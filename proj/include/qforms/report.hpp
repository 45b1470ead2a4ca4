#ifndef QFORMS_REPORT_HPP
#define QFORMS_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <qforms/qseries.hpp>

namespace qforms
{

struct Mismatch {
    int exponent;
    std::string lhs;
    std::string rhs;
};

// Outcome of one identity check. A failing report always carries a witness:
// the first mismatching exponent with both coefficients for exact checks, or
// both numeric values with the relative error for numeric ones.
struct VerificationReport {
    std::string identity;
    std::map<std::string, std::string> parameters;
    bool passed = false;
    std::optional<Mismatch> first_mismatch;
    std::string convention;
    int certified_order = -1;
    std::optional<double> relative_error;
    std::optional<double> tolerance;
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;
};

/// Folds a series comparison into r; `label` prefixes the mismatch sides when several equalities share a report.
template <typename C>
void record_comparison(VerificationReport &r, const SeriesComparison<C> &cmp, const std::string &label = {})
{
    if (r.certified_order < 0 || cmp.certified_order < r.certified_order) {
        r.certified_order = cmp.certified_order;
    }
    if (cmp.equal() || r.first_mismatch) {
        return;
    }
    const std::string prefix = label.empty() ? std::string() : label + ": ";
    r.first_mismatch = Mismatch{*cmp.first_mismatch, prefix + cmp.mismatch_values->first.to_string(),
                                prefix + cmp.mismatch_values->second.to_string()};
}

} // namespace qforms

#endif
