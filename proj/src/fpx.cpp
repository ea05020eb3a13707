#include "golomb/fpx.hpp"

#include <sstream>

#include "golomb/error.hpp"
#include "golomb/numutil.hpp"

namespace golomb::fpx {

void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_zero(const Vec& a) { return a.empty(); }

long deg(const Vec& a) { return static_cast<long>(a.size()) - 1; }

Vec from_int(long c, long p) {
    long r = c % p;
    if (r < 0) r += p;
    if (r == 0) return {};
    return {r};
}

Vec add(const Vec& a, const Vec& b, long p) {
    Vec out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        long v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        out[i] = v % p;
    }
    trim(out);
    return out;
}

Vec sub(const Vec& a, const Vec& b, long p) {
    Vec out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        long v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        out[i] = ((v % p) + p) % p;
    }
    trim(out);
    return out;
}

Vec neg(const Vec& a, long p) {
    Vec out(a);
    for (auto& c : out) c = (p - c) % p;
    return out;
}

Vec mul(const Vec& a, const Vec& b, long p) {
    if (a.empty() || b.empty()) return {};
    Vec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
}

Vec scale(const Vec& a, long c, long p) {
    c = ((c % p) + p) % p;
    if (c == 0) return {};
    Vec out(a);
    for (auto& x : out) x = (x * c) % p;
    trim(out);
    return out;
}

long inv_mod_p(long c, long p) {
    c = ((c % p) + p) % p;
    if (c == 0) throw Error(Err::DivisionByZero, "inverse of 0 in F_p");
    long r = 1, base = c, e = p - 2;
    while (e) {
        if (e & 1) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return r;
}

std::pair<Vec, Vec> divrem(const Vec& a, const Vec& b, long p) {
    if (b.empty()) throw Error(Err::DivisionByZero, "division by zero polynomial");
    Vec r(a), q;
    long db = deg(b);
    if (deg(a) >= db) q.assign(a.size() - b.size() + 1, 0);
    long binv = inv_mod_p(b.back(), p);
    while (deg(r) >= db) {
        long k = deg(r) - db;
        long c = (r.back() * binv) % p;
        q[k] = c;
        for (long i = 0; i <= db; ++i) {
            long v = r[k + i] - c * b[i];
            r[k + i] = ((v % p) + p) % p;
        }
        trim(r);
    }
    trim(q);
    return {q, r};
}

Vec mod(const Vec& a, const Vec& b, long p) { return divrem(a, b, p).second; }

Vec monic(const Vec& a, long p) {
    if (a.empty()) return a;
    return scale(a, inv_mod_p(a.back(), p), p);
}

Vec gcd(Vec a, Vec b, long p) {
    while (!b.empty()) {
        Vec r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

ExtGcd ext_gcd(const Vec& a, const Vec& b, long p) {
    Vec r0 = a, r1 = b;
    Vec s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1, p);
        Vec s2 = sub(s0, mul(q, s1, p), p);
        Vec t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty()) {
        long c = inv_mod_p(r0.back(), p);
        r0 = scale(r0, c, p);
        s0 = scale(s0, c, p);
        t0 = scale(t0, c, p);
    }
    return {r0, s0, t0};
}

Vec powmod(const Vec& a, const mpz_class& e, const Vec& m, long p) {
    if (e < 0) throw Error(Err::ZeroArgument, "powmod needs e >= 0");
    Vec base = mod(a, m, p);
    Vec result = mod({1}, m, p);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = mod(mul(result, base, p), m, p);
        base = mod(mul(base, base, p), m, p);
        k >>= 1;
    }
    return result;
}

Vec invmod(const Vec& a, const Vec& m, long p) {
    auto e = ext_gcd(mod(a, m, p), m, p);
    if (deg(e.g) != 0) throw Error(Err::DivisionByZero, "element not invertible modulo m");
    return mod(e.s, m, p);
}

long eval(const Vec& a, long x, long p) {
    long v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = (v * x + *it) % p;
    return v;
}

bool irreducible(const Vec& a, long p) {
    long d = deg(a);
    if (d < 1) return false;
    if (d == 1) return true;
    // Rabin: X^{p^d} == X mod a, and X^{p^{d/l}} - X coprime to a for
    // every prime l dividing d.
    Vec x = {0, 1};
    mpz_class q = p;
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
    if (powmod(x, qd, a, p) != mod(x, a, p)) return false;
    for (const auto& [l, e] : factor_integer(mpz_class(d))) {
        (void)e;
        long dl = d / l.get_si();
        mpz_class qdl;
        mpz_pow_ui(qdl.get_mpz_t(), q.get_mpz_t(), dl);
        Vec h = sub(powmod(x, qdl, a, p), mod(x, a, p), p);
        if (deg(gcd(h, a, p)) != 0) return false;
    }
    return true;
}

Vec monic_by_index(const mpz_class& k, long degree, long p) {
    Vec out(degree + 1, 0);
    out[degree] = 1;
    // lexicographic on (c_0, ..., c_{d-1}): c_0 is the most significant digit
    mpz_class r = k;
    for (long i = degree - 1; i >= 0; --i) {
        out[i] = mpz_class(r % p).get_si();
        r /= p;
    }
    if (r != 0) throw Error(Err::ZeroArgument, "monic index out of range");
    return out;
}

Vec least_irreducible(long degree, long p) {
    if (degree == 1) return {0, 1};  // X comes first
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), p, degree);
    // c_0 is the most significant lex digit, and c_0 = 0 means X divides the
    // candidate; skip that whole leading block
    mpz_class start;
    mpz_ui_pow_ui(start.get_mpz_t(), p, degree - 1);
    for (mpz_class k = start; k < total; ++k) {
        Vec cand = monic_by_index(k, degree, p);
        if (irreducible(cand, p)) return cand;
    }
    throw Error(Err::SearchExhausted, "no irreducible of requested degree");  // unreachable
}

std::string to_string(const Vec& a, const std::string& var) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = deg(a); i >= 0; --i) {
        if (a[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || a[i] != 1) os << a[i];
        if (i > 0) {
            if (a[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace golomb::fpx
