#include <qforms/serialize.hpp>

#include <sstream>
#include <stdexcept>

namespace qforms
{

namespace
{

std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) {
        throw std::invalid_argument("csv: unterminated quote");
    }
    out.push_back(std::move(cur));
    return out;
}

ESeries from_pairs(const std::vector<std::pair<int, ExtScalar>> &pairs)
{
    int order = -1;
    for (const auto &p : pairs) {
        if (p.first < 0) {
            throw std::invalid_argument("series: negative exponent " + std::to_string(p.first));
        }
        order = std::max(order, p.first);
    }
    if (order < 0) {
        throw std::invalid_argument("series: no coefficients");
    }
    ESeries out(order);
    for (const auto &[n, c] : pairs) {
        out.set(n, c);
    }
    return out;
}

} // namespace

std::string csv_quote(std::string_view field)
{
    std::string out = "\"";
    for (char c : field) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

json series_to_json(const ESeries &a)
{
    json out = json::array();
    for (int n = 0; n <= a.order(); ++n) {
        out.push_back({{"n", n}, {"coeff", a[n].to_string()}});
    }
    return out;
}

ESeries series_from_json(const json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("series json: expected an array");
    }
    std::vector<std::pair<int, ExtScalar>> pairs;
    for (const auto &e : j) {
        pairs.emplace_back(e.at("n").get<int>(), ExtScalar::parse(e.at("coeff").get<std::string>()));
    }
    return from_pairs(pairs);
}

std::string series_to_csv(const ESeries &a)
{
    std::string out = "n,value\n";
    for (int n = 0; n <= a.order(); ++n) {
        out += std::to_string(n) + "," + csv_quote(a[n].to_string()) + "\n";
    }
    return out;
}

ESeries series_from_csv(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "n,value") {
        throw std::invalid_argument("series csv: expected header 'n,value'");
    }
    std::vector<std::pair<int, ExtScalar>> pairs;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 2) {
            throw std::invalid_argument("series csv: expected two fields in '" + line + "'");
        }
        pairs.emplace_back(std::stoi(f[0]), ExtScalar::parse(f[1]));
    }
    return from_pairs(pairs);
}

json mu_to_json(const MuTable &t)
{
    json mu = json::array();
    for (const auto &[l, v] : t.mu) {
        mu.push_back({{"l", l}, {"value", v.to_string()}});
    }
    return {{"s", t.s},
            {"mu", mu},
            {"system_rows", t.system_rows},
            {"rank", t.rank},
            {"row_exponents", t.row_exponents},
            {"verified_order", t.verified_order}};
}

std::string mu_to_csv(const MuTable &t)
{
    std::string out = "l,value\n";
    for (const auto &[l, v] : t.mu) {
        out += std::to_string(l) + "," + csv_quote(v.to_string()) + "\n";
    }
    return out;
}

std::string mu_to_pretty(const MuTable &t)
{
    std::string out;
    for (const auto &[l, v] : t.mu) {
        out += "mu_" + std::to_string(t.s) + "(" + std::to_string(l) + ") = " + v.to_string() + "\n";
    }
    out += "rows " + std::to_string(t.system_rows) + ", rank " + std::to_string(t.rank) + ", verified to q^"
           + std::to_string(t.verified_order) + "\n";
    return out;
}

json report_to_json(const VerificationReport &r, bool with_timing)
{
    json out = {{"identity", r.identity}, {"parameters", r.parameters}, {"passed", r.passed}};
    if (!r.convention.empty()) {
        out["convention"] = r.convention;
    }
    if (r.certified_order >= 0) {
        out["certified_order"] = r.certified_order;
    }
    if (r.first_mismatch) {
        out["first_mismatch"] = {
            {"exponent", r.first_mismatch->exponent}, {"lhs", r.first_mismatch->lhs}, {"rhs", r.first_mismatch->rhs}};
    }
    if (r.relative_error) {
        out["relative_error"] = *r.relative_error;
    }
    if (r.tolerance) {
        out["tolerance"] = *r.tolerance;
    }
    if (!r.notes.empty()) {
        out["notes"] = r.notes;
    }
    if (with_timing) {
        out["elapsed_ms"] = r.elapsed_ms;
    }
    return out;
}

std::string report_to_pretty(const VerificationReport &r)
{
    std::ostringstream os;
    os << (r.passed ? "PASS " : "FAIL ") << r.identity;
    for (const auto &[k, v] : r.parameters) {
        os << ' ' << k << '=' << v;
    }
    if (!r.convention.empty()) {
        os << " convention=" << r.convention;
    }
    if (r.first_mismatch) {
        os << " mismatch at q^" << r.first_mismatch->exponent << ": " << r.first_mismatch->lhs
           << " != " << r.first_mismatch->rhs;
    }
    if (r.relative_error) {
        os << " rel_err=" << *r.relative_error;
    }
    if (r.tolerance) {
        os << " tol=" << *r.tolerance;
    }
    for (const auto &n : r.notes) {
        os << " [" << n << ']';
    }
    os << '\n';
    return os.str();
}

} // namespace qforms
