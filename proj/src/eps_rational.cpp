#include "linkhom/eps_rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace linkhom {

EpsRational::EpsRational(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

EpsRational::EpsRational(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

EpsRational EpsRational::eps(int order) {
    if (order < 1) throw std::invalid_argument("eps order must be >= 1");
    std::vector<Rational> c(order + 1, Rational(0));
    c[order] = 1;
    return EpsRational(std::move(c));
}

void EpsRational::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int EpsRational::sign() const {
    for (const Rational& c : coeffs_) {
        if (c > 0) return 1;
        if (c < 0) return -1;
    }
    return 0;
}

Rational EpsRational::coeff(int order) const {
    if (order < 0 || order >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[order];
}

EpsRational& EpsRational::operator+=(const EpsRational& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

EpsRational& EpsRational::operator-=(const EpsRational& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

EpsRational EpsRational::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (Rational& x : c) x = -x;
    return EpsRational(std::move(c));
}

EpsRational EpsRational::times(const Rational& scalar) const {
    std::vector<Rational> c(coeffs_);
    for (Rational& x : c) x *= scalar;
    return EpsRational(std::move(c));
}

bool operator<(const EpsRational& a, const EpsRational& b) {
    std::size_t m = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < m; ++i) {
        Rational ca = i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0);
        Rational cb = i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0);
        if (ca != cb) return ca < cb;
    }
    return false;
}

namespace {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
        neg = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&](Int& out) {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("bad rational literal: " + text);
        out = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out = out * 10 + (text[pos] - '0');
            ++pos;
        }
    };
    Int num, den = 1;
    read_digits(num);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        read_digits(den);
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    }
    if (pos != text.size()) throw std::invalid_argument("bad rational literal: " + text);
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

}  // namespace

EpsRational EpsRational::parse(const std::string& text) {
    std::string body = text;
    bool with_eps = false;
    if (body.size() >= 2 && body.compare(body.size() - 2, 2, "+e") == 0) {
        with_eps = true;
        body.resize(body.size() - 2);
    }
    EpsRational value(parse_rational(body));
    if (with_eps) value += eps(1);
    return value;
}

std::string EpsRational::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first && coeffs_[i] > 0) out << "+";
        if (i == 0) {
            out << coeffs_[i];
        } else {
            if (coeffs_[i] == -1)
                out << "-";
            else if (coeffs_[i] != 1)
                out << coeffs_[i] << "*";
            out << "e";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

}  // namespace linkhom
