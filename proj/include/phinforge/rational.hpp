#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace phinforge {

/// Arbitrary-precision signed integer, sign-magnitude with base-1e9 limbs.
/// Only what exact linear algebra needs: ring ops, divmod, gcd, p-valuation.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { neg_ = true; }
        unsigned long long m = neg_ ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
        while (m) { mag_.push_back(static_cast<uint32_t>(m % kBase)); m /= kBase; }
    }

    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty integer literal");
        BigInt r;
        size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') { neg = (s[0] == '-'); i = 1; }
        if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<uint32_t>(s[i] - '0'));
        }
        r.trim();
        if (!r.is_zero()) r.neg_ = neg;
        return r;
    }

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return neg_; }
    bool is_one() const { return !neg_ && mag_.size() == 1 && mag_[0] == 1; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a < b || a == b; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return b <= a; }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_;
            r.trim();
            return r;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.neg_ = a.neg_; }
        else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.neg_ = b.neg_; }
        r.trim();
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            unsigned long long carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                unsigned long long cur = r.mag_[i + j] +
                    static_cast<unsigned long long>(a.mag_[i]) * b.mag_[j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                unsigned long long cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        r.neg_ = a.neg_ != b.neg_;
        r.trim();
        return r;
    }

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    /// Truncated quotient and remainder; remainder has the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); r = a; return; }
        if (b.mag_.size() == 1) {
            q.mag_.assign(a.mag_.size(), 0);
            unsigned long long rem = 0;
            for (size_t i = a.mag_.size(); i-- > 0;) {
                unsigned long long cur = rem * kBase + a.mag_[i];
                q.mag_[i] = static_cast<uint32_t>(cur / b.mag_[0]);
                rem = cur % b.mag_[0];
            }
            q.neg_ = a.neg_ != b.neg_;
            q.trim();
            r = BigInt(static_cast<long long>(rem));
            if (a.neg_ && !r.is_zero()) r.neg_ = true;
            return;
        }
        // schoolbook long division, digit by digit with binary search on the digit
        BigInt bm = b.abs();
        BigInt rem;
        q.mag_.assign(a.mag_.size(), 0);
        for (size_t i = a.mag_.size(); i-- > 0;) {
            rem.mag_.insert(rem.mag_.begin(), a.mag_[i]);
            rem.trim();
            uint32_t lo = 0, hi = kBase - 1, digit = 0;
            while (lo <= hi) {
                uint32_t mid = lo + (hi - lo) / 2;
                BigInt t = bm;
                t.mul_small_inplace(mid);
                if (cmp_mag(t.mag_, rem.mag_) <= 0) { digit = mid; lo = mid + 1; }
                else { if (mid == 0) break; hi = mid - 1; }
            }
            q.mag_[i] = digit;
            BigInt t = bm;
            t.mul_small_inplace(digit);
            rem.mag_ = sub_mag(rem.mag_, t.mag_);
            rem.trim();
        }
        q.neg_ = a.neg_ != b.neg_;
        q.trim();
        r = rem;
        r.neg_ = a.neg_ && !r.is_zero();
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = false;
        b.neg_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a.is_zero() ? BigInt(1) : a;  // gcd(0,0) treated as 1 to keep reductions safe
    }

    static BigInt pow(BigInt base, unsigned long long e) {
        BigInt r(1);
        while (e) {
            if (e & 1ULL) r *= base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    /// Multiplicity of the prime p in this (this != 0).
    long long valuation(const BigInt& p) const {
        if (is_zero()) throw std::domain_error("valuation of zero");
        BigInt a = abs();
        long long v = 0;
        while (true) {
            BigInt q, r;
            divmod(a, p, q, r);
            if (!r.is_zero()) break;
            a = q;
            ++v;
        }
        return v;
    }

    long long to_ll() const {
        long long r = 0;
        for (size_t i = mag_.size(); i-- > 0;) r = r * kBase + mag_[i];
        return neg_ ? -r : r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s = neg_ ? "-" : "";
        s += std::to_string(mag_.back());
        for (size_t i = mag_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(mag_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

private:
    static constexpr uint32_t kBase = 1000000000u;
    bool neg_ = false;
    std::vector<uint32_t> mag_;  // little endian, base 1e9

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) neg_ = false;
    }
    void mul_small_inplace(uint32_t m) {
        unsigned long long carry = 0;
        for (auto& limb : mag_) {
            unsigned long long cur = static_cast<unsigned long long>(limb) * m + carry;
            limb = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry) { mag_.push_back(static_cast<uint32_t>(carry % kBase)); carry /= kBase; }
        trim();
    }
    void add_small_inplace(uint32_t v) {
        unsigned long long carry = v;
        for (size_t i = 0; carry && i < mag_.size(); ++i) {
            unsigned long long cur = mag_[i] + carry;
            mag_[i] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry) { mag_.push_back(static_cast<uint32_t>(carry % kBase)); carry /= kBase; }
    }
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        unsigned long long carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            unsigned long long cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        long long borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            long long cur = static_cast<long long>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) { cur += kBase; borrow = 1; }
            else borrow = 0;
            r[i] = static_cast<uint32_t>(cur);
        }
        return r;
    }
};

/// Exact rational number, always reduced, denominator positive.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    /// Parses "a/b" or "a".
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return den_.is_one(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (a - b).num_.is_negative();
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(den_, num_);
    }

    /// p-adic valuation, this != 0.
    long long valuation(const BigInt& p) const {
        if (is_zero()) throw std::domain_error("valuation of zero");
        return num_.valuation(p) - den_.valuation(p);
    }

    /// Canonical "num/den" form.
    std::string to_string() const { return num_.to_string() + "/" + den_.to_string(); }

private:
    BigInt num_, den_;
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) { num_ = num_ / g; den_ = den_ / g; }
    }
};

}  // namespace phinforge
