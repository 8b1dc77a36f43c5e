#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cqh {

struct field_mismatch_error : std::runtime_error {
    field_mismatch_error(const std::string &what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    parse_error(const std::string &what) : std::runtime_error(what) {}
};

// Exact rational scalar. Always kept in lowest terms with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long long n, long long d) : v_(static_cast<long>(n), static_cast<long>(d)) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class &q) : v_(q) { v_.canonicalize(); }

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(long long n) const { return Rational(n); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    // "n" for integers, "n/d" otherwise; '-' sign on the numerator.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    static Rational parse(const std::string &s) {
        if (s.empty()) throw parse_error("empty rational literal");
        auto ok_int = [](const std::string &t) {
            if (t.empty()) return false;
            size_t i = (t[0] == '-') ? 1 : 0;
            if (i == t.size()) return false;
            if (t[i] == '0' && (i > 0 || t.size() > 1)) return false; // no leading zeros, no "-0"
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            if (!ok_int(s)) throw parse_error("bad rational literal: " + s);
            return Rational(mpq_class(mpz_class(s)));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!ok_int(num) || !ok_int(den) || den[0] == '-')
            throw parse_error("bad rational literal: " + s);
        mpz_class d(den);
        if (d == 0) throw parse_error("zero denominator: " + s);
        mpq_class q(mpz_class(num), d);
        q.canonicalize();
        // canonical form required on input: lowest terms, positive denominator
        if (q.get_num().get_str() != num || q.get_den().get_str() != den)
            throw parse_error("rational literal not in canonical form: " + s);
        return Rational(q);
    }

    // total order, used only for pivot normalization and canonical sorting
    friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }

    const mpq_class &raw() const { return v_; }

private:
    mpq_class v_;
};

// Scalar in a prime field F_p. Residues are stored in [0, p).
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(uint64_t v, uint64_t p) : v_(v % p), p_(p) {}

    static Fp make(long long n, uint64_t p) {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<uint64_t>(r), p);
    }

    uint64_t residue() const { return v_; }
    uint64_t modulus() const { return p_; }

    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    Fp from_int(long long n) const { return make(n, p_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp &operator+=(const Fp &o) {
        match(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp &operator-=(const Fp &o) {
        match(o);
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Fp &operator*=(const Fp &o) {
        match(o);
        v_ = static_cast<uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_);
        return *this;
    }
    Fp &operator/=(const Fp &o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, const Fp &b) { return a += b; }
    friend Fp operator-(Fp a, const Fp &b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp &b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp &b) { return a /= b; }
    friend bool operator==(const Fp &a, const Fp &b) {
        if (a.p_ != b.p_) throw field_mismatch_error("comparing residues of different moduli");
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp &a, const Fp &b) { return !(a == b); }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("inverse of zero residue");
        // extended Euclid
        int64_t t = 0, nt = 1;
        int64_t r = static_cast<int64_t>(p_), nr = static_cast<int64_t>(v_);
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw std::domain_error("residue not invertible: modulus not prime?");
        if (t < 0) t += static_cast<int64_t>(p_);
        return Fp(static_cast<uint64_t>(t), p_);
    }

    std::string str() const { return std::to_string(v_); }

    static Fp parse(const std::string &s, uint64_t p) {
        if (s.empty()) throw parse_error("empty residue literal");
        if (s[0] == '0' && s.size() > 1) throw parse_error("residue with leading zero: " + s);
        uint64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw parse_error("bad residue literal: " + s);
            v = v * 10 + static_cast<uint64_t>(c - '0');
            if (v >= (uint64_t(1) << 62)) throw parse_error("residue literal out of range: " + s);
        }
        if (v >= p) throw parse_error("residue " + s + " not reduced mod " + std::to_string(p));
        return Fp(v, p);
    }

    friend bool operator<(const Fp &a, const Fp &b) { return a.v_ < b.v_; }

private:
    void match(const Fp &o) const {
        if (p_ != o.p_) throw field_mismatch_error(
            "mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
    }
    uint64_t v_;
    uint64_t p_;
};

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace cqh
