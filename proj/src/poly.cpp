// SPDX-License-Identifier: MIT

#include "isospec/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace isospec {

Poly::Poly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Poly::Poly(std::initializer_list<double> coeffs) {
    c_.reserve(coeffs.size());
    for (double x : coeffs)
        c_.emplace_back(x, 0.0);
    trim();
}

Poly Poly::constant(cplx c) {
    return Poly(std::vector<cplx>{c});
}

bool Poly::is_one() const {
    return degree() == 0 && std::abs(c_[0] - cplx(1.0)) <= kCoeffTrimTol;
}

cplx Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return {};
    return c_[k];
}

cplx Poly::leading() const {
    return c_.empty() ? cplx{} : c_.back();
}

double Poly::max_coeff() const {
    double m = 0.0;
    for (const cplx& c : c_)
        m = std::max(m, std::abs(c));
    return m;
}

void Poly::trim() {
    double scale = max_coeff();
    if (scale == 0.0) {
        c_.clear();
        return;
    }
    while (!c_.empty() && std::abs(c_.back()) <= kCoeffTrimTol * scale)
        c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<cplx> r(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < c_.size()) r[k] += c_[k];
        if (k < o.c_.size()) r[k] += o.c_[k];
    }
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    return *this + (-o);
}

Poly Poly::operator-() const {
    std::vector<cplx> r(c_);
    for (cplx& c : r)
        c = -c;
    Poly p;
    p.c_ = std::move(r);
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero())
        return {};
    std::vector<cplx> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(cplx s) const {
    std::vector<cplx> r(c_);
    for (cplx& c : r)
        c *= s;
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw std::invalid_argument("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly(), a};
    std::vector<cplx> rem(a.c_);
    std::vector<cplx> quo(a.degree() - b.degree() + 1);
    const cplx lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        cplx q = rem[k + b.degree()] / lead;
        quo[k] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[k + j] -= q * b.c_[j];
    }
    rem.resize(b.degree() >= 0 ? b.degree() : 0);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

cplx Poly::eval(cplx z) const {
    cplx acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (degree() < 1)
        return {};
    std::vector<cplx> r(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
        r[k - 1] = static_cast<double>(k) * c_[k];
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero())
        return {};
    return *this * (cplx(1.0) / leading());
}

bool Poly::approx_equal(const Poly& a, const Poly& b, double tol) {
    double scale = std::max({1.0, a.max_coeff(), b.max_coeff()});
    int d = std::max(a.degree(), b.degree());
    for (int k = 0; k <= d; ++k)
        if (std::abs(a.coeff(k) - b.coeff(k)) > tol * scale)
            return false;
    return true;
}

Poly Poly::gcd(const Poly& a, const Poly& b, double tol) {
    Poly x = a.monic();
    Poly y = b.monic();
    if (x.is_zero() && y.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    while (!y.is_zero()) {
        if (y.degree() == 0)
            return Poly::one();
        Poly r = divrem(x, y).second;
        // A remainder that is tiny next to the operands counts as exact.
        if (r.max_coeff() <= tol * std::max(1.0, std::max(x.max_coeff(), y.max_coeff())))
            r = Poly();
        x = std::move(y);
        y = r.is_zero() ? Poly() : r.monic();
    }
    return x.monic();
}

namespace {

std::string fmt_real(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string fmt_coeff(cplx c) {
    if (c.imag() == 0.0)
        return fmt_real(c.real());
    if (c.real() == 0.0)
        return fmt_real(c.imag()) + "i";
    return "(" + fmt_real(c.real()) + (c.imag() > 0 ? "+" : "") + fmt_real(c.imag()) + "i)";
}

}  // namespace

std::string Poly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        cplx c = c_[k];
        if (std::abs(c) == 0.0)
            continue;
        std::string term;
        bool is_real_neg = (c.imag() == 0.0 && c.real() < 0.0);
        cplx shown = is_real_neg ? -c : c;
        bool unit = (shown == cplx(1.0) && k > 0);
        std::string mag = unit ? "" : fmt_coeff(shown);
        if (k == 0)
            term = fmt_coeff(shown);
        else if (k == 1)
            term = mag + var;
        else
            term = mag + var + "^" + std::to_string(k);
        if (out.empty())
            out = (is_real_neg ? "-" : "") + term;
        else
            out += (is_real_neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace isospec
