#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qeulerian/qpoly.hpp"

namespace qeulerian {

// (t-degree, r-degree) key of a TRQPoly term.
struct TRDeg {
    int t = 0;
    int r = 0;
    friend auto operator<=>(const TRDeg&, const TRDeg&) = default;
};

// Polynomial in t and r with QPoly coefficients, sparse by (t,r) degree.
// Stored coefficients are never the zero polynomial.
class TRQPoly {
public:
    TRQPoly() = default;
    TRQPoly(QPoly constant) {
        if (!constant.is_zero()) terms_.emplace(TRDeg{0, 0}, std::move(constant));
    }
    TRQPoly(long long constant) : TRQPoly(QPoly{constant}) {}

    static TRQPoly monomial(int tdeg, int rdeg, QPoly c = QPoly{1}) {
        if (tdeg < 0 || rdeg < 0) throw std::invalid_argument("TRQPoly::monomial: negative degree");
        TRQPoly p;
        if (!c.is_zero()) p.terms_.emplace(TRDeg{tdeg, rdeg}, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<TRDeg, QPoly>& terms() const { return terms_; }

    // Coefficient of t^tdeg r^rdeg; zero polynomial if absent.
    const QPoly& coeff(int tdeg, int rdeg) const {
        static const QPoly zero{};
        auto it = terms_.find(TRDeg{tdeg, rdeg});
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(int tdeg, int rdeg, const QPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(TRDeg{tdeg, rdeg}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const TRQPoly& a, const TRQPoly& b) { return a.terms_ == b.terms_; }

    friend TRQPoly operator+(const TRQPoly& a, const TRQPoly& b) {
        TRQPoly r = a;
        for (const auto& [d, c] : b.terms_) r.add_term(d.t, d.r, c);
        return r;
    }

    friend TRQPoly operator-(const TRQPoly& a, const TRQPoly& b) { return a + (-b); }

    TRQPoly operator-() const {
        TRQPoly r = *this;
        for (auto& [d, c] : r.terms_) c = -c;
        return r;
    }

    friend TRQPoly operator*(const TRQPoly& a, const TRQPoly& b) {
        TRQPoly r;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_)
                r.add_term(da.t + db.t, da.r + db.r, ca * cb);
        return r;
    }

    TRQPoly& operator+=(const TRQPoly& b) { *this = *this + b; return *this; }
    TRQPoly& operator-=(const TRQPoly& b) { *this = *this - b; return *this; }
    TRQPoly& operator*=(const TRQPoly& b) { *this = *this * b; return *this; }

    TRQPoly times_q(const QPoly& c) const {
        TRQPoly r;
        for (const auto& [d, cc] : terms_) r.add_term(d.t, d.r, cc * c);
        return r;
    }

    // Substitutes exact integers for any subset of {t, r, q} and re-normalizes.
    TRQPoly specialize(std::optional<BigInt> t, std::optional<BigInt> r,
                       std::optional<BigInt> q) const {
        TRQPoly out;
        for (const auto& [d, c] : terms_) {
            QPoly cc = q ? QPoly{c.eval(*q)} : c;
            int td = d.t, rd = d.r;
            if (t) { cc *= QPoly{t->pow(static_cast<unsigned>(td))}; td = 0; }
            if (r) { cc *= QPoly{r->pow(static_cast<unsigned>(rd))}; rd = 0; }
            out.add_term(td, rd, cc);
        }
        return out;
    }

    TRQPoly at_r1() const { return specialize(std::nullopt, BigInt{1}, std::nullopt); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == TRDeg{0, 0} &&
                terms_.begin()->second.degree() <= 0);
    }

    // Integer value of a fully specialized polynomial.
    BigInt as_integer() const {
        if (!is_constant()) throw std::logic_error("TRQPoly::as_integer: not constant");
        return terms_.empty() ? BigInt{} : terms_.begin()->second.coeff(0);
    }

    // Canonical rendering: terms sorted by (t-degree, r-degree, q-degree)
    // ascending, e.g. "1 + (2+q+q^2)*t + t^2". Stable output contract.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            std::string mono;
            if (d.t == 1) mono = "t";
            else if (d.t > 1) mono = "t^" + std::to_string(d.t);
            if (d.r >= 1) {
                if (!mono.empty()) mono += '*';
                mono += 'r';
                if (d.r > 1) mono += '^' + std::to_string(d.r);
            }
            std::string block;
            bool neg = false;
            if (mono.empty()) {
                block = c.str();
                neg = block[0] == '-';
                if (neg) block.erase(block.begin());
            } else if (c == QPoly{1}) {
                block = mono;
            } else if (c == QPoly{-1}) {
                block = mono;
                neg = true;
            } else if (c.term_count() == 1) {
                block = c.str();
                neg = block[0] == '-';
                if (neg) block.erase(block.begin());
                block += '*' + mono;
            } else {
                block = '(' + c.str() + ")*" + mono;
            }
            if (first) {
                if (neg) out += '-';
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            out += block;
        }
        return out;
    }

private:
    std::map<TRDeg, QPoly> terms_;
};

}  // namespace qeulerian
