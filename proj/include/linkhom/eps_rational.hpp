#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace linkhom {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact scalar c_0 + c_1*eps + ... + c_m*eps^m where eps is a positive
// infinitesimal. The order is lexicographic on (c_0, c_1, ...), which is a
// total order compatible with addition; a value is positive iff its first
// nonzero coefficient is positive.
class EpsRational {
public:
    EpsRational() = default;
    EpsRational(int value) : EpsRational(Rational(value)) {}
    EpsRational(const Rational& constant);
    explicit EpsRational(std::vector<Rational> coeffs);

    // eps^order, order >= 1
    static EpsRational eps(int order = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // -1, 0, +1 by the first nonzero coefficient
    int sign() const;
    bool is_positive() const { return sign() > 0; }
    // highest order with nonzero coefficient; -1 for zero
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int order) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    EpsRational& operator+=(const EpsRational& other);
    EpsRational& operator-=(const EpsRational& other);
    friend EpsRational operator+(EpsRational a, const EpsRational& b) { return a += b; }
    friend EpsRational operator-(EpsRational a, const EpsRational& b) { return a -= b; }
    EpsRational operator-() const;
    EpsRational times(const Rational& scalar) const;

    friend bool operator==(const EpsRational& a, const EpsRational& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const EpsRational& a, const EpsRational& b) { return !(a == b); }
    friend bool operator<(const EpsRational& a, const EpsRational& b);
    friend bool operator>(const EpsRational& a, const EpsRational& b) { return b < a; }
    friend bool operator<=(const EpsRational& a, const EpsRational& b) { return !(b < a); }
    friend bool operator>=(const EpsRational& a, const EpsRational& b) { return !(a < b); }

    // "3/2", "2", "0+e" (a "+e" suffix adds one order of eps)
    static EpsRational parse(const std::string& text);
    std::string str() const;

private:
    std::vector<Rational> coeffs_;

    void normalize();
};

}  // namespace linkhom
