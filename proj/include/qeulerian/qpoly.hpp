#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qeulerian/bigint.hpp"

namespace qeulerian {

// Exact-integer polynomial in the single variable q, stored densely:
// coefficient of q^i lives at index i, highest stored coefficient nonzero.
class QPoly {
public:
    QPoly() = default;
    QPoly(BigInt constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    QPoly(long long constant) : QPoly(BigInt{constant}) {}

    static QPoly monomial(int deg, BigInt coeff = BigInt{1}) {
        if (deg < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
        QPoly p;
        if (coeff.is_zero()) return p;
        p.c_.assign(static_cast<std::size_t>(deg) + 1, BigInt{});
        p.c_.back() = std::move(coeff);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    const BigInt& coeff(int i) const {
        static const BigInt zero{};
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }

    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly{};
        QPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    QPoly& operator+=(const QPoly& b) { *this = *this + b; return *this; }
    QPoly& operator-=(const QPoly& b) { *this = *this - b; return *this; }
    QPoly& operator*=(const QPoly& b) { *this = *this * b; return *this; }

    // Multiply by q^k.
    QPoly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        if (k < 0) throw std::invalid_argument("QPoly::shifted: negative shift");
        QPoly r;
        r.c_.assign(c_.size() + static_cast<std::size_t>(k), BigInt{});
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<std::size_t>(k)] = c_[i];
        return r;
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    BigInt at_one() const { return eval(BigInt{1}); }

    // Number of nonzero coefficients.
    int term_count() const {
        int n = 0;
        for (const auto& c : c_) if (!c.is_zero()) ++n;
        return n;
    }

    // Compact canonical rendering, ascending q-degree: "1-q-q^2+q^4".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            const bool neg = c_[i].sign() < 0;
            if (first) {
                if (neg) out += '-';
                first = false;
            } else {
                out += neg ? '-' : '+';
            }
            BigInt mag = neg ? -c_[i] : c_[i];
            const bool unit = (mag == BigInt{1});
            if (i == 0) {
                out += mag.str();
            } else {
                if (!unit) out += mag.str();
                out += 'q';
                if (i > 1) { out += '^'; out += std::to_string(i); }
            }
        }
        return out;
    }

private:
    std::vector<BigInt> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// (q;q)_n = prod_{i=1..n} (1 - q^i); empty product for n = 0.
inline QPoly q_pochhammer(int n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer: negative n");
    QPoly r{1};
    for (int i = 1; i <= n; ++i)
        r *= QPoly{1} - QPoly::monomial(i);
    return r;
}

// Gaussian binomial [n k]_q, zero outside 0 <= k <= n. Computed by the
// Pascal-type recurrence [n k] = [n-1 k] + q^(n-k) [n-1 k-1], which stays
// inside exact polynomials (no division).
inline QPoly q_binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("q_binomial: negative n");
    if (k < 0 || k > n) return QPoly{};
    std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = QPoly{1};
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            QPoly upper = (j == i) ? QPoly{} : row[static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(j)] = upper + row[static_cast<std::size_t>(j) - 1].shifted(i - j);
        }
    }
    return row[static_cast<std::size_t>(k)];
}

// Integer binomial C(n, 2) as a q-exponent helper.
inline long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace qeulerian
