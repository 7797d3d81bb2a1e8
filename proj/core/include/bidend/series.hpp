#ifndef BIDEND_SERIES_HPP
#define BIDEND_SERIES_HPP

#include <string>
#include <vector>

#include "bidend/rational.hpp"

namespace bidend {

// Truncated formal power series with exact rational coefficients.
class Series {
public:
    explicit Series(int order) : coeff_(order + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
    }
    Series(int order, std::vector<Rational> low);  // low coefficients, rest zero

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const Rational& operator[](int n) const { return coeff_.at(n); }
    Rational& operator[](int n) { return coeff_.at(n); }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    // Division; the divisor needs a unit constant term.
    Series operator/(const Series& o) const;
    bool operator==(const Series& o) const { return coeff_ == o.coeff_; }

    bool integral() const;
    std::string str() const;  // comma-separated coefficients c_0..c_N

private:
    std::vector<Rational> coeff_;
};

/*
 * The two enumerative identities the library keeps in sync:
 *
 *  - r_from_d: from the decoration-count series D (no constant term) to the
 *    forest-dimension series R with constant term 1, via the quadratic
 *    fixed point R = 1 + D R^2.  Coefficient n counts decorated forests of
 *    degree n.
 *  - p_from_r: from the graded dimensions of the augmentation ideal to the
 *    totally-primitive dimensions, P = R+/(1 + R+)^2.
 *  - d_from_r inverts r_from_d; it is the same formula as p_from_r, which
 *    is exactly the free-generator / totally-primitive coincidence.
 */
Series r_from_d(const Series& d);
Series p_from_r(const Series& r_plus);
Series d_from_r(const Series& r_plus);

}  // namespace bidend

#endif
