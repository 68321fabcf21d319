#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace qeulerian {

// Signed arbitrary-precision integer, sign + magnitude in base 2^32.
// Supports exactly what exact polynomial arithmetic needs: addition,
// subtraction, multiplication, comparison and decimal rendering.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v < 0) { sign_ = -1; }
        else if (v > 0) { sign_ = 1; }
        std::uint64_t m = (v < 0) ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
        while (m != 0) {
            mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
            m >>= 32;
        }
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        if (a.sign_ >= 0) return cmp_mag(a.mag_, b.mag_);
        return cmp_mag(b.mag_, a.mag_);
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
            return r;
        }
        auto c = cmp_mag(a.mag_, b.mag_);
        if (c == std::strong_ordering::equal) return BigInt{};
        if (c == std::strong_ordering::greater) {
            r.mag_ = sub_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            r.mag_ = sub_mag(b.mag_, a.mag_);
            r.sign_ = b.sign_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j]
                                  + r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry != 0) {
                std::uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.mag_.empty() && r.mag_.back() == 0) r.mag_.pop_back();
        return r;
    }

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    BigInt pow(unsigned e) const {
        BigInt base = *this, r{1};
        while (e != 0) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // Value as long long; throws if it does not fit.
    long long to_ll() const {
        if (mag_.size() > 2) throw std::overflow_error("BigInt::to_ll: out of range");
        std::uint64_t m = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
        if (sign_ >= 0) {
            if (m > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("BigInt::to_ll: out of range");
            return static_cast<long long>(m) * (sign_ == 0 ? 0 : 1);
        }
        if (m > static_cast<std::uint64_t>(INT64_MAX) + 1) throw std::overflow_error("BigInt::to_ll: out of range");
        return -static_cast<long long>(m - 1) - 1;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        // Peel decimal digits in chunks of 10^9.
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int d = 0; d < 9; ++d) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian limbs, no trailing zero

    static std::strong_ordering cmp_mag(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& lo = a.size() < b.size() ? a : b;
        const auto& hi = a.size() < b.size() ? b : a;
        std::vector<std::uint32_t> r(hi.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        r.back() = static_cast<std::uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Requires |a| > |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow
                             - (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = 0;
            if (cur < 0) { cur += (1LL << 32); borrow = 1; }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

}  // namespace qeulerian
