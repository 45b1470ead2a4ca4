#ifndef QFORMS_EISENSTEIN_HPP
#define QFORMS_EISENSTEIN_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include <qforms/qseries.hpp>
#include <qforms/rational.hpp>
#include <qforms/zeta_ext.hpp>

namespace qforms
{

using RSeries = QSeries<Rational>;
using ESeries = QSeries<ExtScalar>;

/// Congruence class of a lattice index.
enum class ParityClass { even, odd, all };

bool in_class(ParityClass c, long m);
char parity_letter(ParityClass c);

/// Embeds a rational series into the zeta-extended ring.
ESeries to_ext(const RSeries &a);
/// Inverse of to_ext; throws std::domain_error if a coefficient carries an odd zeta symbol.
RSeries to_rational(const ESeries &a);

/// phi_k = (-1)^k / (k-1)! sum_{u>0} u^{k-1} q^u.
RSeries phi(unsigned k, int order);

/// sum over m > 0 in the class of phi_r(m tau). parity must be even or odd.
RSeries f_parity(ParityClass parity, unsigned r, int order);

/// -sum over m > 0 in the class of m phi_{s+1}(m tau).
RSeries fbar_parity(ParityClass parity, unsigned s, int order);

/// G_k = zeta~(k) + (-1)^k / (k-1)! sum sigma_{k-1}(n) q^n.
ESeries G(unsigned k, int order);
/// G_k(2 tau), also written Z^e_k.
ESeries G_two_tau(unsigned k, int order);
/// G_k(2 tau) - 2^{-k} G_k(tau): the cusp-i-infinity series.
ESeries G_iinf(unsigned k, int order);
/// G_k(tau) - G_k(2 tau): the cusp-0 series, also written Z^o_k.
ESeries G_0(unsigned k, int order);

/// 1 + 2 sum_{n>=1} q^{n^2}.
RSeries theta_unit(int order);
/// T(tau)^8 = q (sum_{n>=0} q^{n(n+1)/2})^8, integral exponents only.
RSeries T8(int order);

struct SeriesKey {
    std::string name;
    std::vector<int> params;
    int order;

    auto operator<=>(const SeriesKey &) const = default;
};

// Memo of named series. Lookups are locked; builders run unlocked, so they may
// consult the catalog recursively. The first inserted value wins, and equals a
// fresh build bit for bit.
class SeriesCatalog
{
public:
    using Builder = std::function<ESeries()>;

    std::shared_ptr<const ESeries> get(const SeriesKey &key, const Builder &build);

    /// Single-index series by name: phi, f_o, f_e, fbar_o, fbar_e, G, G_2tau, G_iinf, G_0, theta, T8.
    std::shared_ptr<const ESeries> named(std::string_view name, unsigned k, int order);

    std::size_t size() const;
    void clear();

    static SeriesCatalog &global();

private:
    mutable std::mutex m_mutex;
    std::map<SeriesKey, std::shared_ptr<const ESeries>> m_memo;
};

/// Uncached construction behind SeriesCatalog::named; throws std::invalid_argument on unknown names.
ESeries build_named_series(std::string_view name, unsigned k, int order);
const std::vector<std::string> &named_series_list();

} // namespace qforms

#endif
