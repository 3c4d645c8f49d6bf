#include "multizero/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace multizero {

namespace {
const Rational kZero(0);
}

Polynomial Polynomial::constant(const Rational& value) {
    return Polynomial(std::vector<Rational>{value});
}

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
    if (coeff.is_zero() || degree < 0) return Polynomial();
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    c.back() = coeff;
    return Polynomial(std::move(c));
}

const Rational& Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = Polynomial::constant(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& ci : c_) ci *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            prod[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(prod));
}

Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> c(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = -a.c_[i];
    return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& ci = coeff(i);
        if (ci.is_zero()) continue;
        if (!first) os << (ci.is_negative() ? " - " : " + ");
        else if (ci.is_negative()) os << "-";
        first = false;
        Rational a = ci.abs();
        if (i == 0 || a != Rational(1)) {
            os << a.num().get_str();
            if (!a.is_integer()) os << "/" << a.den().get_str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LinearDivision divide_by_linear(const Polynomial& p, const Rational& c) {
    if (p.is_zero()) return {Polynomial(), Rational(0)};
    const auto& a = p.coeffs();
    std::vector<Rational> q(a.size() - 1, Rational(0));
    Rational carry = a.back();
    for (int i = static_cast<int>(a.size()) - 2; i >= 0; --i) {
        q[static_cast<std::size_t>(i)] = carry;
        carry = a[static_cast<std::size_t>(i)] + carry * c;
    }
    return {Polynomial(std::move(q)), carry};
}

int multiplicity_at(const Polynomial& p, const Rational& c) {
    if (p.is_zero())
        raise(ErrorCode::ZeroPolynomial, "multiplicity of the zero polynomial is undefined");
    int m = 0;
    Polynomial q = p;
    while (true) {
        LinearDivision d = divide_by_linear(q, c);
        if (!d.remainder.is_zero()) return m;
        ++m;
        q = std::move(d.quotient);
        if (q.is_zero()) return m;
    }
}

Polynomial newton_interpolate(const std::vector<std::pair<long, Rational>>& points) {
    std::set<long> seen;
    for (const auto& [x, y] : points) {
        if (!seen.insert(x).second)
            raise(ErrorCode::DuplicateAbscissa,
                  "duplicate abscissa " + std::to_string(x));
    }
    const std::size_t m = points.size();
    if (m == 0) return Polynomial();

    // Divided-difference table, in place.
    std::vector<Rational> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = m - 1; i >= level; --i) {
            Rational dx(points[i].first - points[i - level].first);
            dd[i] = (dd[i] - dd[i - 1]) / dx;
            if (i == level) break;
        }
    }

    int last = static_cast<int>(m) - 1;
    while (last >= 0 && dd[static_cast<std::size_t>(last)].is_zero()) --last;

    // Horner over the Newton form, highest difference first.
    Polynomial result;
    for (int k = last; k >= 0; --k) {
        Polynomial node(std::vector<Rational>{Rational(-points[static_cast<std::size_t>(k)].first), Rational(1)});
        result = result * node + Polynomial::constant(dd[static_cast<std::size_t>(k)]);
    }
    return result;
}

}  // namespace multizero
