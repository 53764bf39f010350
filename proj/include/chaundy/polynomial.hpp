#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaundy/combinatorics.hpp"
#include "chaundy/errors.hpp"
#include "chaundy/rational.hpp"

namespace chaundy {

/// Interpretation of coefficient k: x^k, or the rising-factorial basis
/// element x^(k)/k!.
enum class Basis { Monomial, RisingOverFactorial };

inline const char* basis_name(Basis b) {
    return b == Basis::Monomial ? "monomial" : "rising-over-factorial";
}

/// Dense univariate polynomial over Rational in a declared basis.
///
/// Canonical form: the coefficient vector never ends in a zero, and the zero
/// polynomial is the empty vector. Its degree is a distinguished "minus
/// infinity" (std::nullopt), never -1.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(Basis b) : basis_(b) {}
    DensePoly(std::initializer_list<Rational> cs, Basis b = Basis::Monomial)
        : coeffs_(cs), basis_(b) {
        trim();
    }
    explicit DensePoly(std::vector<Rational> cs, Basis b = Basis::Monomial)
        : coeffs_(std::move(cs)), basis_(b) {
        trim();
    }

    static DensePoly zero(Basis b = Basis::Monomial) { return DensePoly(b); }
    static DensePoly constant(const Rational& c, Basis b = Basis::Monomial) {
        return DensePoly({c}, b);
    }
    /// x — identical coefficients in either basis since x^(1)/1! = x.
    static DensePoly variable(Basis b = Basis::Monomial) { return DensePoly({0, 1}, b); }
    static DensePoly one_minus_x() { return DensePoly({1, -1}); }

    Basis basis() const { return basis_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of basis element k; zero beyond the stored range.
    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    /// coeff(k) += delta, extending the vector if needed.
    void add_to_coeff(std::size_t k, const Rational& delta) {
        if (k >= coeffs_.size()) coeffs_.resize(k + 1, Rational(0));
        coeffs_[k] += delta;
        trim();
    }

    bool operator==(const DensePoly& o) const = default;

    DensePoly& operator+=(const DensePoly& o) {
        require_same_basis(o, "add");
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) {
        require_same_basis(o, "subtract");
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }
    DensePoly& operator*=(const Rational& c) {
        if (c == 0) {
            coeffs_.clear();
        } else {
            for (auto& a : coeffs_) a *= c;
        }
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator-(DensePoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend DensePoly operator*(const Rational& c, DensePoly p) { return p *= c; }
    friend DensePoly operator*(DensePoly p, const Rational& c) { return p *= c; }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        a.require_same_basis(b, "multiply");
        if (a.basis_ == Basis::RisingOverFactorial) {
            // The rising basis is not convolutive; multiply through the
            // monomial basis, exactly.
            return (a.to_monomial_basis() * b.to_monomial_basis()).to_rising_basis();
        }
        if (a.is_zero() || b.is_zero()) return DensePoly(a.basis_);
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return DensePoly(std::move(out), a.basis_);
    }

    /// Exact value at x. In the rising basis this is sum c_k x^(k)/k!.
    Rational eval(const Rational& x) const {
        if (coeffs_.empty()) return 0;
        if (basis_ == Basis::Monomial) {
            Rational acc = 0;
            for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
            return acc;
        }
        Rational acc = 0;
        Rational term = 1; // x^(k)/k!, updated incrementally
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (k > 0) term *= (x + Int(k - 1)) / Int(k);
            acc += coeffs_[k] * term;
        }
        return acc;
    }

    /// d/dx in the monomial basis.
    DensePoly derivative() const {
        if (basis_ != Basis::Monomial)
            throw unsupported_basis_error("derivative requires the monomial basis");
        if (coeffs_.size() <= 1) return DensePoly(basis_);
        std::vector<Rational> out(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Int(k);
        return DensePoly(std::move(out), basis_);
    }

    /// q with q(x) = p(1 - x); Horner accumulation in (1 - x). An involution.
    DensePoly compose_one_minus_x() const {
        if (basis_ != Basis::Monomial)
            throw unsupported_basis_error(
                "substitution x -> 1-x requires the monomial basis");
        DensePoly acc;
        const DensePoly omx = one_minus_x();
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * omx;
            acc.add_to_coeff(0, coeffs_[i]);
        }
        return acc;
    }

    /// Change of basis, monomial -> rising. Exact back-substitution against
    /// the upper-triangular matrix whose column k is the monomial expansion
    /// of x^(k)/k! (diagonal entry 1/k!).
    DensePoly to_rising_basis() const {
        if (basis_ != Basis::Monomial)
            throw unsupported_basis_error("to_rising_basis expects a monomial-basis input");
        if (coeffs_.empty()) return DensePoly(Basis::RisingOverFactorial);
        const std::size_t n = coeffs_.size();
        const auto columns = rising_columns(n);
        std::vector<Rational> work = coeffs_;
        std::vector<Rational> rising(n, Rational(0));
        for (std::size_t k = n; k-- > 0;) {
            // columns[k] is monic-over-k!: leading monomial coefficient 1/k!.
            Rational c = work[k] * factorial(static_cast<Index>(k));
            rising[k] = c;
            if (c != 0)
                for (std::size_t i = 0; i <= k; ++i) work[i] -= c * columns[k][i];
        }
        return DensePoly(std::move(rising), Basis::RisingOverFactorial);
    }

    /// Change of basis, rising -> monomial: expand sum c_k x^(k)/k!.
    DensePoly to_monomial_basis() const {
        if (basis_ != Basis::RisingOverFactorial)
            throw unsupported_basis_error("to_monomial_basis expects a rising-basis input");
        if (coeffs_.empty()) return DensePoly(Basis::Monomial);
        const auto columns = rising_columns(coeffs_.size());
        std::vector<Rational> out(coeffs_.size(), Rational(0));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            for (std::size_t i = 0; i <= k; ++i) out[i] += coeffs_[k] * columns[k][i];
        }
        return DensePoly(std::move(out), Basis::Monomial);
    }

    /// Ascending-order rendering, e.g. "3 - 2*x + x^2". The zero polynomial
    /// renders as "0". Rising-basis values render as a tagged coefficient
    /// list since there is no compact conventional notation.
    std::string str(const std::string& var = "x") const {
        if (coeffs_.empty()) return "0";
        if (basis_ == Basis::RisingOverFactorial) {
            std::string out = "rising[";
            for (std::size_t k = 0; k < coeffs_.size(); ++k) {
                if (k) out += ", ";
                out += to_string(coeffs_[k]);
            }
            return out + "]";
        }
        std::string out;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (k == 0) {
                out += to_string(mag);
            } else {
                if (mag != 1) out += to_string(mag) + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void require_same_basis(const DensePoly& o, const char* what) const {
        if (basis_ != o.basis_)
            throw basis_mismatch_error(std::string("cannot ") + what + " a " +
                                       basis_name(basis_) + " polynomial with a " +
                                       basis_name(o.basis_) + " one");
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    // Monomial coefficients of x^(k)/k! for k < n, built by the recurrence
    // col_k = col_{k-1} * (x + k - 1) / k.
    static std::vector<std::vector<Rational>> rising_columns(std::size_t n) {
        std::vector<std::vector<Rational>> cols(n);
        cols[0] = {Rational(1)};
        for (std::size_t k = 1; k < n; ++k) {
            const auto& prev = cols[k - 1];
            std::vector<Rational> cur(k + 1, Rational(0));
            for (std::size_t i = 0; i < prev.size(); ++i) {
                cur[i + 1] += prev[i];
                cur[i] += prev[i] * Int(k - 1);
            }
            for (auto& c : cur) c /= Int(k);
            cols[k] = std::move(cur);
        }
        return cols;
    }

    std::vector<Rational> coeffs_;
    Basis basis_ = Basis::Monomial;
};

inline DensePoly pow(const DensePoly& p, Index e) {
    DensePoly acc = DensePoly::constant(1, p.basis());
    for (Index i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

/// p^(n) = p(p+1)...(p+n-1) for a polynomial argument, expanded as an
/// explicit product of shifted factors.
inline DensePoly rising_factorial_poly(const DensePoly& p, Index n) {
    DensePoly acc = DensePoly::constant(1, p.basis());
    for (Index j = 0; j < n; ++j) {
        DensePoly shifted = p;
        shifted.add_to_coeff(0, Rational(Int(j)));
        acc = acc * shifted;
    }
    return acc;
}

/// Quotient and remainder in the monomial basis; b must be nonzero.
inline std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
    if (a.basis() != Basis::Monomial || b.basis() != Basis::Monomial)
        throw unsupported_basis_error("polynomial division requires the monomial basis");
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    DensePoly r = a;
    DensePoly q;
    const std::size_t db = *b.degree();
    const Rational lead_b = b.coeff(db);
    while (!r.is_zero() && *r.degree() >= db) {
        const std::size_t dr = *r.degree();
        Rational factor = r.coeff(dr) / lead_b;
        std::vector<Rational> t(dr - db + 1, Rational(0));
        t.back() = factor;
        DensePoly term{std::vector<Rational>(t)};
        q += term;
        r -= term * b;
    }
    return {q, r};
}

} // namespace chaundy
