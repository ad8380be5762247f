// SPDX-License-Identifier: MIT

#include "isospec/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "isospec/roots.hpp"
#include "longpoly.hpp"

namespace isospec {

Rational::Rational(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        detail::lvec n = detail::widen(num_);
        detail::lvec d = detail::widen(den_);
        // Euclid only proposes where common content may sit; it can conflate
        // a pair of nearby-but-distinct roots with a true common factor, so
        // each proposed root is verified on both sides by backward error and
        // cancelled one deflation at a time.
        const detail::lvec g = detail::gcd_l(n, d, kGcdTol);
        if (g.size() > 1) {
            std::vector<cplx> candidates;
            try {
                candidates = poly_roots(detail::narrow(g));
            } catch (const RootConvergenceError&) {
                candidates.clear();
            }
            bool changed = false;
            for (cplx c : candidates) {
                const detail::lc r = detail::polish_root(d, detail::lc(c));
                if (detail::backward_root_error(n, r) <= kGcdTol &&
                    detail::backward_root_error(d, r) <= kGcdTol) {
                    n = detail::deflate(n, r);
                    d = detail::deflate(d, r);
                    changed = true;
                    if (n.size() <= 1 || d.size() <= 1)
                        break;
                }
            }
            if (changed) {
                num_ = detail::narrow(n);
                den_ = detail::narrow(d);
            }
        }
    }
    cplx lead = den_.leading();
    num_ = num_ * (cplx(1.0) / lead);
    den_ = den_ * (cplx(1.0) / lead);
    if (num_.is_zero())
        den_ = Poly::one();
}

bool Rational::is_variable() const {
    return den_.is_one() && num_.degree() == 1 &&
           std::abs(num_.coeff(1) - cplx(1.0)) <= 1e-12 &&
           std::abs(num_.coeff(0)) <= 1e-12;
}

int Rational::pi() const {
    if (is_zero())
        return kPiNegInf;
    return num_.degree() - den_.degree();
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero())
        throw std::domain_error("division by the zero rational function");
    return Rational(num_ * o.den_, den_ * o.num_);
}

EvalResult Rational::eval(cplx z) const {
    EvalResult r;
    cplx dv = den_.eval(z);
    double scale = std::pow(1.0 + std::abs(z), std::max(0, den_.degree()));
    if (std::abs(dv) <= kPoleTol * scale) {
        r.pole = true;
        return r;
    }
    r.value = num_.eval(z) / dv;
    return r;
}

bool Rational::approx_equal(const Rational& a, const Rational& b, double tol) {
    return Poly::approx_equal(a.num_, b.num_, tol) && Poly::approx_equal(a.den_, b.den_, tol);
}

std::string Rational::str(const std::string& var) const {
    if (den_.is_one())
        return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace isospec
