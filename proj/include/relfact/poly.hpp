#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relfact {

/// Dense polynomial in R[x]; coefficient i multiplies x^i.
///
/// Canonical form has no trailing zero coefficients, so the zero polynomial
/// has no coefficients at all. Negative coefficients are allowed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double c) { return Polynomial({c}); }
    static Polynomial monomial(double c, std::size_t degree);

    std::span<const double> coeffs() const { return coeffs_; }
    double coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0.0; }
    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const;
    /// Lowest degree carrying a nonzero coefficient.
    std::optional<std::size_t> min_degree() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(double c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(double c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<double> coeffs_;
};

Polynomial scale(double c, const Polynomial& p);
Polynomial mul_x(const Polynomial& p);

/// Drops every coefficient of degree above max_degree.
Polynomial truncated(const Polynomial& p, std::size_t max_degree);

/// Product with every term of degree above max_degree discarded, without
/// computing those terms.
Polynomial mul_up_to(const Polynomial& a, const Polynomial& b, std::size_t max_degree);

/// Sum of coefficients: the value at x = 1.
double eval_one(const Polynomial& p);

/// Largest absolute coefficient difference.
double max_abs_diff(const Polynomial& a, const Polynomial& b);

/// Residue class in R[x] / <x^(bound+1)>, held by its unique representative of
/// degree <= bound.
class TruncatedPoly {
public:
    explicit TruncatedPoly(int bound);
    TruncatedPoly(int bound, Polynomial p);

    int bound() const { return bound_; }
    const Polynomial& representative() const { return rep_; }
    std::span<const double> coeffs() const { return rep_.coeffs(); }
    bool is_zero() const { return rep_.is_zero(); }

    TruncatedPoly& operator+=(const TruncatedPoly& rhs);
    TruncatedPoly& operator-=(const TruncatedPoly& rhs);
    TruncatedPoly& operator*=(double c);

    friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
    friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) { return a -= b; }
    friend TruncatedPoly operator*(double c, TruncatedPoly p) { return p *= c; }
    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);

    friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;

private:
    void require_same_bound(const TruncatedPoly& rhs) const;

    int bound_;
    Polynomial rep_;
};

TruncatedPoly truncate(const Polynomial& p, int bound);
TruncatedPoly scale(double c, const TruncatedPoly& p);
TruncatedPoly mul_x(const TruncatedPoly& p);

/// Sum of the representative's coefficients: the probability of a pathset
/// with at most bound() operative edges when p came from a solver.
double constrained_prob(const TruncatedPoly& p);

/// "a_m*x^m + ... + a_n*x^n" with 12 significant digits; zero terms omitted,
/// "0" for the zero polynomial.
std::string to_string(const Polynomial& p);
std::string to_string(const TruncatedPoly& p);

} // namespace relfact
