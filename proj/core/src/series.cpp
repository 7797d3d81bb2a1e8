#include "bidend/series.hpp"

#include <sstream>
#include <stdexcept>

namespace bidend {

Series::Series(int order, std::vector<Rational> low) : Series(order) {
    if (static_cast<int>(low.size()) > order + 1) throw std::invalid_argument("Series: too many coefficients");
    for (std::size_t i = 0; i < low.size(); ++i) coeff_[i] = low[i];
}

Series Series::operator+(const Series& o) const {
    if (order() != o.order()) throw std::invalid_argument("Series: order mismatch");
    Series r(order());
    for (int i = 0; i <= order(); ++i) r[i] = coeff_[i] + o.coeff_[i];
    return r;
}

Series Series::operator-(const Series& o) const {
    if (order() != o.order()) throw std::invalid_argument("Series: order mismatch");
    Series r(order());
    for (int i = 0; i <= order(); ++i) r[i] = coeff_[i] - o.coeff_[i];
    return r;
}

Series Series::operator*(const Series& o) const {
    if (order() != o.order()) throw std::invalid_argument("Series: order mismatch");
    Series r(order());
    for (int i = 0; i <= order(); ++i)
        for (int j = 0; i + j <= order(); ++j) r[i + j] += coeff_[i] * o.coeff_[j];
    return r;
}

Series Series::operator/(const Series& o) const {
    if (order() != o.order()) throw std::invalid_argument("Series: order mismatch");
    if (is_zero(o[0])) throw std::invalid_argument("Series: division by a series without unit constant term");
    Series q(order());
    for (int n = 0; n <= order(); ++n) {
        Rational s = coeff_[n];
        for (int k = 1; k <= n; ++k) s -= o[k] * q[n - k];
        q[n] = s / o[0];
    }
    return q;
}

bool Series::integral() const {
    for (const auto& c : coeff_)
        if (!is_integer(c)) return false;
    return true;
}

std::string Series::str() const {
    std::ostringstream os;
    for (int i = 0; i <= order(); ++i) {
        if (i) os << ',';
        os << rat_str(coeff_[i]);
    }
    return os.str();
}

Series r_from_d(const Series& d) {
    if (!is_zero(d[0])) throw std::invalid_argument("r_from_d: decoration series has a constant term");
    const int N = d.order();
    Series r(N);
    r[0] = 1;
    // R = 1 + D R^2, solved coefficient by coefficient
    for (int n = 1; n <= N; ++n) {
        Rational s(0);
        for (int k = 1; k <= n; ++k) {
            Rational sq(0);
            for (int i = 0; i <= n - k; ++i) sq += r[i] * r[n - k - i];
            s += d[k] * sq;
        }
        r[n] = s;
    }
    return r;
}

Series p_from_r(const Series& r_plus) {
    if (!is_zero(r_plus[0])) throw std::invalid_argument("p_from_r: series has a constant term");
    Series one_plus = r_plus;
    one_plus[0] = 1;
    return r_plus / (one_plus * one_plus);
}

Series d_from_r(const Series& r_plus) { return p_from_r(r_plus); }

}  // namespace bidend
