#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chaundy/rational.hpp"

namespace chaundy {

/// Dense bivariate polynomial over Rational; entry (i, j) is the coefficient
/// of alpha^i beta^j. Canonicalization trims all-zero boundary rows/columns,
/// so structural equality is semantic equality. The zero polynomial is the
/// empty grid.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<std::vector<Rational>> grid) : grid_(std::move(grid)) {
        canonicalize();
    }

    static BiPoly constant(const Rational& c) { return BiPoly({{c}}); }
    static BiPoly alpha() { return BiPoly({{0}, {1}}); }
    static BiPoly beta() { return BiPoly({{0, 1}}); }

    bool is_zero() const { return grid_.empty(); }

    /// One past the highest alpha/beta exponent present (0 for zero).
    std::size_t alpha_size() const { return grid_.size(); }
    std::size_t beta_size() const { return grid_.empty() ? 0 : grid_[0].size(); }

    Rational coeff(std::size_t i, std::size_t j) const {
        if (i >= alpha_size() || j >= beta_size()) return 0;
        return grid_[i][j];
    }

    bool operator==(const BiPoly& o) const = default;

    BiPoly& operator+=(const BiPoly& o) {
        grow_to(o.alpha_size(), o.beta_size());
        for (std::size_t i = 0; i < o.grid_.size(); ++i)
            for (std::size_t j = 0; j < o.grid_[i].size(); ++j) grid_[i][j] += o.grid_[i][j];
        canonicalize();
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        grow_to(o.alpha_size(), o.beta_size());
        for (std::size_t i = 0; i < o.grid_.size(); ++i)
            for (std::size_t j = 0; j < o.grid_[i].size(); ++j) grid_[i][j] -= o.grid_[i][j];
        canonicalize();
        return *this;
    }
    BiPoly& operator*=(const Rational& c) {
        for (auto& row : grid_)
            for (auto& v : row) v *= c;
        canonicalize();
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const Rational& c, BiPoly p) { return p *= c; }
    friend BiPoly operator*(BiPoly p, const Rational& c) { return p *= c; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::vector<Rational>> out(
            a.alpha_size() + b.alpha_size() - 1,
            std::vector<Rational>(a.beta_size() + b.beta_size() - 1, Rational(0)));
        for (std::size_t i = 0; i < a.alpha_size(); ++i)
            for (std::size_t j = 0; j < a.beta_size(); ++j) {
                if (a.grid_[i][j] == 0) continue;
                for (std::size_t k = 0; k < b.alpha_size(); ++k)
                    for (std::size_t l = 0; l < b.beta_size(); ++l)
                        out[i + k][j + l] += a.grid_[i][j] * b.grid_[k][l];
            }
        return BiPoly(std::move(out));
    }

    Rational eval(const Rational& a, const Rational& b) const {
        Rational acc = 0;
        Rational apow = 1;
        for (std::size_t i = 0; i < alpha_size(); ++i) {
            Rational bpow = 1;
            for (std::size_t j = 0; j < beta_size(); ++j) {
                acc += grid_[i][j] * apow * bpow;
                bpow *= b;
            }
            apow *= a;
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < alpha_size(); ++i)
            for (std::size_t j = 0; j < beta_size(); ++j) {
                const Rational& c = grid_[i][j];
                if (c == 0) continue;
                Rational mag = c < 0 ? Rational(-c) : c;
                if (out.empty()) {
                    if (c < 0) out += "-";
                } else {
                    out += c < 0 ? " - " : " + ";
                }
                std::string term;
                if (i) {
                    term += "a";
                    if (i > 1) term += "^" + std::to_string(i);
                }
                if (j) {
                    if (!term.empty()) term += "*";
                    term += "b";
                    if (j > 1) term += "^" + std::to_string(j);
                }
                if (term.empty()) {
                    out += to_string(mag);
                } else {
                    if (mag != 1) out += to_string(mag) + "*";
                    out += term;
                }
            }
        return out;
    }

private:
    void grow_to(std::size_t rows, std::size_t cols) {
        std::size_t r = std::max(rows, alpha_size());
        std::size_t c = std::max(cols, beta_size());
        for (auto& row : grid_) row.resize(c, Rational(0));
        grid_.resize(r, std::vector<Rational>(c, Rational(0)));
    }

    void canonicalize() {
        // stored degrees only bound the true degrees until we trim
        std::size_t rows = 0, cols = 0;
        for (std::size_t i = 0; i < grid_.size(); ++i)
            for (std::size_t j = 0; j < grid_[i].size(); ++j)
                if (grid_[i][j] != 0) {
                    rows = std::max(rows, i + 1);
                    cols = std::max(cols, j + 1);
                }
        grid_.resize(rows);
        for (auto& row : grid_) row.resize(cols, Rational(0));
    }

    std::vector<std::vector<Rational>> grid_;
};

/// base^(n) = base(base+1)...(base+n-1) as a bivariate polynomial.
inline BiPoly rising_factorial_bipoly(const BiPoly& base, Index n) {
    BiPoly acc = BiPoly::constant(1);
    for (Index j = 0; j < n; ++j) {
        BiPoly shifted = base + BiPoly::constant(Rational(Int(j)));
        acc = acc * shifted;
    }
    return acc;
}

} // namespace chaundy
