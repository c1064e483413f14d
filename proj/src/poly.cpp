#include "relfact/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace relfact {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::monomial(double c, std::size_t degree)
{
    std::vector<double> coeffs(degree + 1, 0.0);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const
{
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::optional<std::size_t> Polynomial::min_degree() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0.0) return i;
    return std::nullopt;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(double c)
{
    for (double& a : coeffs_) a *= c;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    return mul_up_to(a, b, a.coeffs_.size() + b.coeffs_.size() - 2);
}

Polynomial scale(double c, const Polynomial& p)
{
    return c * p;
}

Polynomial mul_x(const Polynomial& p)
{
    if (p.is_zero()) return {};
    std::vector<double> coeffs(p.coeffs().size() + 1, 0.0);
    std::copy(p.coeffs().begin(), p.coeffs().end(), coeffs.begin() + 1);
    return Polynomial(std::move(coeffs));
}

Polynomial truncated(const Polynomial& p, std::size_t max_degree)
{
    const auto c = p.coeffs();
    if (c.size() <= max_degree + 1) return p;
    return Polynomial(std::vector<double>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(max_degree + 1)));
}

Polynomial mul_up_to(const Polynomial& a, const Polynomial& b, std::size_t max_degree)
{
    const auto ca = a.coeffs();
    const auto cb = b.coeffs();
    if (ca.empty() || cb.empty()) return {};
    const std::size_t top = std::min(ca.size() + cb.size() - 2, max_degree);
    std::vector<double> out(top + 1, 0.0);
    for (std::size_t i = 0; i < ca.size() && i <= top; ++i) {
        if (ca[i] == 0.0) continue;
        const std::size_t jmax = std::min(cb.size() - 1, top - i);
        for (std::size_t j = 0; j <= jmax; ++j) out[i + j] += ca[i] * cb[j];
    }
    return Polynomial(std::move(out));
}

double eval_one(const Polynomial& p)
{
    double sum = 0.0;
    for (double a : p.coeffs()) sum += a;
    return sum;
}

double max_abs_diff(const Polynomial& a, const Polynomial& b)
{
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(a.coeff(i) - b.coeff(i)));
    return worst;
}

TruncatedPoly::TruncatedPoly(int bound) : bound_(bound)
{
    if (bound < 0) throw std::invalid_argument("truncation bound must be nonnegative");
}

TruncatedPoly::TruncatedPoly(int bound, Polynomial p) : TruncatedPoly(bound)
{
    rep_ = truncated(p, static_cast<std::size_t>(bound));
}

void TruncatedPoly::require_same_bound(const TruncatedPoly& rhs) const
{
    if (bound_ != rhs.bound_) {
        throw std::invalid_argument("truncation bounds differ: " + std::to_string(bound_) + " vs " +
                                    std::to_string(rhs.bound_));
    }
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& rhs)
{
    require_same_bound(rhs);
    rep_ += rhs.rep_;
    return *this;
}

TruncatedPoly& TruncatedPoly::operator-=(const TruncatedPoly& rhs)
{
    require_same_bound(rhs);
    rep_ -= rhs.rep_;
    return *this;
}

TruncatedPoly& TruncatedPoly::operator*=(double c)
{
    rep_ *= c;
    return *this;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b)
{
    a.require_same_bound(b);
    return TruncatedPoly(a.bound_, mul_up_to(a.rep_, b.rep_, static_cast<std::size_t>(a.bound_)));
}

TruncatedPoly truncate(const Polynomial& p, int bound)
{
    return TruncatedPoly(bound, p);
}

TruncatedPoly scale(double c, const TruncatedPoly& p)
{
    return c * p;
}

TruncatedPoly mul_x(const TruncatedPoly& p)
{
    return TruncatedPoly(p.bound(), mul_x(p.representative()));
}

double constrained_prob(const TruncatedPoly& p)
{
    return eval_one(p.representative());
}

std::string to_string(const Polynomial& p)
{
    std::string out;
    char buf[64];
    const auto c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0.0) continue;
        const double magnitude = out.empty() ? c[i] : std::abs(c[i]);
        std::snprintf(buf, sizeof buf, "%.12g*x^%zu", magnitude, i);
        if (!out.empty()) out += c[i] < 0.0 ? " - " : " + ";
        out += buf;
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const TruncatedPoly& p)
{
    return to_string(p.representative());
}

} // namespace relfact
