#include "golomb/numutil.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "golomb/error.hpp"

namespace golomb {

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n) {
    static std::map<mpz_class, std::vector<std::pair<mpz_class, unsigned>>> cache;
    static std::mutex mtx;
    if (n <= 0) throw Error(Err::ZeroArgument, "factor_integer needs n >= 1");
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::pair<mpz_class, unsigned>> out;
    mpz_class m = n;
    auto strip = [&](const mpz_class& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    // trial division over 6k +- 1
    mpz_class d = 5;
    while (d * d <= m) {
        strip(d);
        strip(d + 2);
        d += 6;
    }
    if (m > 1) out.emplace_back(m, 1);
    {
        std::lock_guard<std::mutex> lock(mtx);
        cache[n] = out;
    }
    return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factor_integer(n)) {
        std::size_t sz = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

unsigned long padic_valuation(const mpz_class& n, const mpz_class& p) {
    if (n < 1) throw Error(Err::ZeroArgument, "p-adic valuation needs n >= 1");
    unsigned long v = 0;
    mpz_class m = n;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

long binomial_mod_p(const mpz_class& n, const mpz_class& k, long p) {
    // Lucas: C(n,k) = prod C(n_i, k_i) mod p over base-p digits.
    if (k < 0 || k > n) return 0;
    mpz_class nn = n, kk = k;
    long result = 1;
    while (kk > 0 || nn > 0) {
        long nd = mpz_class(nn % p).get_si();
        long kd = mpz_class(kk % p).get_si();
        if (kd > nd) return 0;
        // C(nd, kd) mod p with nd, kd < p
        long num = 1, den = 1;
        for (long i = 0; i < kd; ++i) {
            num = (num * ((nd - i) % p)) % p;
            den = (den * ((i + 1) % p)) % p;
        }
        // den is invertible mod p
        long dinv = 1, base = den % p, e = p - 2;
        while (e) {
            if (e & 1) dinv = (dinv * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        result = (result * ((num * dinv) % p)) % p;
        nn /= p;
        kk /= p;
    }
    return result;
}

mpz_class order_mod(const mpz_class& a, const mpz_class& m) {
    if (m <= 1) throw Error(Err::ZeroArgument, "order_mod needs modulus > 1");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw Error(Err::NotCoprime, "order_mod needs gcd(a, m) = 1");
    // group exponent divides lambda(m); using phi-style descent on the
    // full group order would need phi(m), so factor m and build phi
    mpz_class phi = 1;
    for (const auto& [p, e] : factor_integer(m)) {
        mpz_class pe = 1;
        for (unsigned i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    mpz_class ord = phi;
    for (const auto& [p, e] : factor_integer(phi)) {
        (void)e;
        while (mpz_divisible_p(ord.get_mpz_t(), p.get_mpz_t())) {
            mpz_class cand = ord / p;
            mpz_class r;
            mpz_powm(r.get_mpz_t(), a.get_mpz_t(), cand.get_mpz_t(), m.get_mpz_t());
            if (r == 1)
                ord = cand;
            else
                break;
        }
    }
    return ord;
}

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error(Err::ZeroArgument, "Rng::below(0)");
    // rejection sampling keeps the distribution exact
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

static unsigned thread_cap() {
    if (const char* env = std::getenv("GOLOMB_LAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned workers = std::min<std::size_t>(thread_cap(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

const char* err_name(Err e) {
    switch (e) {
        case Err::MixedFields: return "MixedFields";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::ZeroElement: return "ZeroElement";
        case Err::NoSuchSubgroup: return "NoSuchSubgroup";
        case Err::InfiniteField: return "InfiniteField";
        case Err::ConstantPolynomial: return "ConstantPolynomial";
        case Err::UnsupportedDegree: return "UnsupportedDegree";
        case Err::UnsupportedField: return "UnsupportedField";
        case Err::ZeroPolynomial: return "ZeroPolynomial";
        case Err::NotCoprime: return "NotCoprime";
        case Err::ZeroCenter: return "ZeroCenter";
        case Err::IncompatibleExtension: return "IncompatibleExtension";
        case Err::BadEvaluation: return "BadEvaluation";
        case Err::RootsNotInTruncation: return "RootsNotInTruncation";
        case Err::NotBasic: return "NotBasic";
        case Err::ZeroGenerator: return "ZeroGenerator";
        case Err::ZeroArgument: return "ZeroArgument";
        case Err::PreconditionViolated: return "PreconditionViolated";
        case Err::InOrbit: return "InOrbit";
        case Err::RadicalMismatch: return "RadicalMismatch";
        case Err::SearchExhausted: return "SearchExhausted";
        case Err::ParseError: return "ParseError";
        case Err::ConfigError: return "ConfigError";
        case Err::ReportError: return "ReportError";
    }
    return "Unknown";
}

}  // namespace golomb
