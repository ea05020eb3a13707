#include "golomb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "golomb/error.hpp"
#include "golomb/numutil.hpp"

namespace golomb {

long Degree::value() const {
    if (!finite_)
        throw Error(Err::PreconditionViolated, "degree of the zero polynomial has no integer value");
    return v_;
}

bool Degree::operator<(const Degree& o) const {
    if (!finite_) return o.finite_;
    if (!o.finite_) return false;
    return v_ < o.v_;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly::Poly(FieldPtr F, std::vector<FieldElement> coeffs)
    : owner_(std::move(F)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!c.field()->same(*owner_))
            throw Error(Err::MixedFields, "coefficient from a different field");
    trim();
}

Poly Poly::X(const FieldPtr& F) { return Poly(F, {F->zero(), F->one()}); }

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::from_ints(const FieldPtr& F, const std::vector<long>& c) {
    std::vector<FieldElement> v;
    v.reserve(c.size());
    for (long x : c) v.push_back(F->from_integer(x));
    return Poly(F, std::move(v));
}

Poly Poly::monomial(const FieldPtr& F, long degree, const FieldElement& lead) {
    if (lead.is_zero()) return zero(F);
    std::vector<FieldElement> v(degree, F->zero());
    v.push_back(lead);
    return Poly(F, std::move(v));
}

Degree Poly::degree() const {
    if (c_.empty()) return Degree::neg_infinity();
    return Degree(static_cast<long>(c_.size()) - 1);
}

FieldElement Poly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return owner_->zero();
    return c_[i];
}

const FieldElement& Poly::leading() const {
    if (c_.empty()) throw Error(Err::ZeroPolynomial, "zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    if (!owner_->same(*o.owner_)) throw Error(Err::MixedFields, "polynomial addition");
    std::vector<FieldElement> v;
    std::size_t n = std::max(c_.size(), o.c_.size());
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < c_.size() && i < o.c_.size())
            v.push_back(c_[i] + o.c_[i]);
        else if (i < c_.size())
            v.push_back(c_[i]);
        else
            v.push_back(o.c_[i]);
    }
    return Poly(owner_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<FieldElement> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return Poly(owner_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (!owner_->same(*o.owner_)) throw Error(Err::MixedFields, "polynomial multiplication");
    if (c_.empty() || o.c_.empty()) return zero(owner_);
    std::vector<FieldElement> v(c_.size() + o.c_.size() - 1, owner_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = v[i + j] + c_[i] * o.c_[j];
    }
    return Poly(owner_, std::move(v));
}

Poly Poly::operator*(const FieldElement& s) const {
    std::vector<FieldElement> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c * s);
    return Poly(owner_, std::move(v));
}

bool Poly::operator==(const Poly& o) const { return owner_->same(*o.owner_) && c_ == o.c_; }

bool Poly::operator<(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (!owner_->same(*d.owner_)) throw Error(Err::MixedFields, "polynomial division");
    if (d.is_zero()) throw Error(Err::DivisionByZero, "polynomial division by zero");
    Poly r = *this;
    long dd = d.degree().value();
    std::vector<FieldElement> q;
    if (static_cast<long>(c_.size()) >= dd + 1)
        q.assign(c_.size() - dd, owner_->zero());
    FieldElement lead_inv = d.leading().inverse();
    while (!r.is_zero() && r.degree().value() >= dd) {
        long k = r.degree().value() - dd;
        FieldElement c = r.leading() * lead_inv;
        q[k] = c;
        // r -= c * X^k * d
        std::vector<FieldElement> rv = r.c_;
        for (long i = 0; i <= dd; ++i) rv[k + i] = rv[k + i] - c * d.c_[i];
        r = Poly(owner_, std::move(rv));
    }
    return {Poly(owner_, std::move(q)), r};
}

bool Poly::divides(const Poly& other) const {
    if (is_zero()) return other.is_zero();
    return other.divrem(*this).second.is_zero();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Poly Poly::pow(unsigned long e) const {
    Poly base = *this, result = one(owner_);
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Poly Poly::pow_mod(const mpz_class& e, const Poly& m) const {
    if (e < 0) throw Error(Err::ZeroArgument, "pow_mod needs e >= 0");
    Poly base = *this % m;
    Poly result = one(owner_) % m;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = (result * base) % m;
        base = (base * base) % m;
        k >>= 1;
    }
    return result;
}

Poly Poly::inverse_mod(const Poly& m) const {
    auto e = ext_gcd(*this % m, m);
    if (!(e.g.degree() == 0))
        throw Error(Err::NotCoprime, "element not invertible modulo " + m.to_string());
    return e.s % m;
}

Poly Poly::derivative(unsigned long times) const {
    Poly r = *this;
    for (unsigned long t = 0; t < times; ++t) {
        std::vector<FieldElement> v;
        for (std::size_t i = 1; i < r.c_.size(); ++i)
            v.push_back(r.c_[i] * owner_->from_integer(static_cast<long>(i)));
        r = Poly(owner_, std::move(v));
    }
    return r;
}

FieldElement Poly::evaluate(const FieldElement& x) const {
    if (x.field()->same(*owner_)) {
        FieldElement acc = owner_->zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    // coefficients must embed into x's field
    FieldElement acc = x.field()->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + embed(*it, x.field());
    return acc;
}

Poly Poly::substitute_affine(const FieldElement& alpha, const FieldElement& beta) const {
    Poly arg(owner_, {beta, alpha});
    Poly acc = zero(owner_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * arg + constant(*it);
    return acc;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r = r0 % r1;
        r0 = r1;
        r1 = r;
    }
    return r0.monic();
}

PolyExtGcd ext_gcd(const Poly& a, const Poly& b) {
    const FieldPtr& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(F), s1 = Poly::zero(F), t0 = Poly::zero(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (!r0.is_zero()) {
        FieldElement c = r0.leading().inverse();
        r0 = r0 * c;
        s0 = s0 * c;
        t0 = t0 * c;
    }
    return {r0, s0, t0};
}

Poly FactoredPoly::reassemble() const {
    Poly out = Poly::constant(unit);
    for (const auto& [f, e] : factors) out = out * f.pow(e);
    return out;
}

Poly FactoredPoly::radical() const {
    Poly out = Poly::one(unit.field());
    for (const auto& [f, e] : factors) {
        (void)e;
        out = out * f;
    }
    return out;
}

// --- factorization over finite fields --------------------------------------

namespace {

FieldElement random_element(const FieldEnumeration& en, Rng& rng) {
    // enumeration sizes in the factoring paths fit into 64 bits
    std::uint64_t q = en.size().get_ui();
    return en.at(rng.below(q));
}

Poly random_poly_below(const FieldPtr& F, long degree_bound, Rng& rng, const FieldEnumeration& en) {
    std::vector<FieldElement> v;
    for (long i = 0; i < degree_bound; ++i) v.push_back(random_element(en, rng));
    return Poly(F, std::move(v));
}

// Splits a monic product of irreducibles of equal degree d (Cantor-Zassenhaus).
void equal_degree_split(const Poly& h, long d, Rng& rng, const FieldEnumeration& en,
                        std::vector<Poly>& out) {
    long dh = h.degree().value();
    if (dh == d) {
        out.push_back(h);
        return;
    }
    const FieldPtr& F = h.field();
    long p = F->characteristic();
    long n = F->extension_degree();
    mpz_class q = F->cardinality();
    while (true) {
        Poly t = random_poly_below(F, dh, rng, en);
        if (t.is_constant()) continue;
        Poly g0 = gcd(h, t);
        if (g0.degree() > 0 && g0.degree().value() < dh) {
            equal_degree_split(g0, d, rng, en, out);
            equal_degree_split(h / g0, d, rng, en, out);
            return;
        }
        Poly u = Poly::zero(F);
        if (p != 2) {
            mpz_class qd;
            mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
            u = t.pow_mod((qd - 1) / 2, h) - Poly::one(F);
        } else {
            // trace map over F_2 into the degree-n*d splitting field
            Poly acc = t % h;
            u = acc;
            for (long i = 1; i < n * d; ++i) {
                acc = (acc * acc) % h;
                u = u + acc;
            }
        }
        Poly g = gcd(h, u);
        if (g.degree() > 0 && g.degree().value() < dh) {
            equal_degree_split(g, d, rng, en, out);
            equal_degree_split(h / g, d, rng, en, out);
            return;
        }
    }
}

// p-th root of a polynomial whose exponents are all multiples of p.
Poly pth_root(const Poly& f) {
    const FieldPtr& F = f.field();
    long p = F->characteristic();
    mpz_class q = F->cardinality();
    std::vector<FieldElement> v;
    long d = f.degree().value();
    for (long i = 0; i <= d; i += p) v.push_back(f.coeff(i).pow(q / p));
    return Poly(F, std::move(v));
}

// (squarefree part, multiplicity) pairs for a monic polynomial, char p.
void squarefree_decompose(const Poly& f, unsigned long mult,
                          std::vector<std::pair<Poly, unsigned long>>& out) {
    const FieldPtr& F = f.field();
    long p = F->characteristic();
    Poly c = gcd(f, f.derivative());
    Poly w = f / c;
    unsigned long i = 1;
    while (!(w.degree() == 0)) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(pth_root(c), mult * p, out);
}

}  // namespace

FactoredPoly factor(const Poly& a, std::uint64_t seed) {
    if (a.is_zero()) throw Error(Err::ZeroPolynomial, "cannot factor the zero polynomial");
    const FieldPtr& F = a.field();
    if (!F->finite())
        throw Error(Err::UnsupportedField, "factorization needs a finite coefficient field");
    FactoredPoly result{a.leading(), {}};
    if (a.is_constant()) return result;

    Rng rng(seed ^ 0x9a0c51ULL);
    FieldEnumeration en(F);
    std::vector<std::pair<Poly, unsigned long>> squarefree;
    squarefree_decompose(a.monic(), 1, squarefree);

    for (const auto& [sf, mult] : squarefree) {
        // distinct-degree stage
        Poly rem = sf;
        Poly frob = Poly::X(F) % rem;
        mpz_class q = F->cardinality();
        long d = 0;
        std::vector<std::pair<Poly, long>> stages;
        while (rem.degree() >= 2 * (d + 1)) {
            ++d;
            frob = frob.pow_mod(q, rem);
            Poly g = gcd(rem, frob - Poly::X(F));
            if (g.degree() > 0) {
                stages.emplace_back(g, d);
                rem = rem / g;
                frob = frob % rem;
            }
        }
        if (rem.degree() > 0) stages.emplace_back(rem, rem.degree().value());
        // equal-degree stage
        for (const auto& [prod, deg_d] : stages) {
            std::vector<Poly> irreducibles;
            equal_degree_split(prod, deg_d, rng, en, irreducibles);
            for (auto& f : irreducibles) result.factors.emplace_back(f, mult);
        }
    }

    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    if (result.reassemble() != a)
        throw Error(Err::PreconditionViolated, "internal: factor reconstruction failed");
    return result;
}

// --- irreducibility ---------------------------------------------------------

namespace {

bool irreducible_finite(const Poly& a) {
    long d = a.degree().value();
    if (d == 1) return true;
    const FieldPtr& F = a.field();
    Poly f = a.monic();
    mpz_class q = F->cardinality();
    Poly x = Poly::X(F);
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
    if (x.pow_mod(qd, f) != x % f) return false;
    for (const auto& [l, e] : factor_integer(mpz_class(d))) {
        (void)e;
        mpz_class qdl;
        mpz_pow_ui(qdl.get_mpz_t(), q.get_mpz_t(), d / l.get_si());
        Poly h = x.pow_mod(qdl, f) - x % f;
        if (gcd(h, f).degree() > 0) return false;
    }
    return true;
}

bool irreducible_rationals(const Poly& a) {
    long d = a.degree().value();
    if (d == 1) return true;
    if (d > 3)
        throw Error(Err::UnsupportedDegree,
                    "irreducibility over Q is only decided up to degree 3");
    // clear denominators, divide by integer content
    mpz_class lcm_den = 1;
    for (const auto& c : a.coeffs())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                c.rational().get_den().get_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : a.coeffs()) z.push_back(mpz_class(c.rational() * lcm_den));
    mpz_class content = 0;
    for (const auto& v : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    for (auto& v : z) v /= content;

    if (z[0] == 0) return false;  // root at 0
    if (d == 2) {
        mpz_class disc = z[1] * z[1] - 4 * z[2] * z[0];
        if (disc < 0) return true;
        return mpz_perfect_square_p(disc.get_mpz_t()) == 0;
    }
    // degree 3: a rational root u/v must have u | z0, v | z3
    auto us = divisors(abs(z[0]));
    auto vs = divisors(abs(z[3]));
    for (const auto& u : us) {
        for (const auto& v : vs) {
            for (int sign : {1, -1}) {
                mpq_class r(sign * u, v);
                r.canonicalize();
                mpq_class val = 0;
                for (long i = d; i >= 0; --i) val = val * r + mpq_class(z[i]);
                if (val == 0) return false;
            }
        }
    }
    return true;
}

// monic divisors of a nonzero F_p[T] polynomial, via full factorization
std::vector<fpx::Vec> monic_divisors(const fpx::Vec& v, long p) {
    FieldPtr Fp = Field::prime(p);
    std::vector<FieldElement> coeffs;
    for (long c : v) coeffs.push_back(Fp->from_integer(c));
    FactoredPoly fac = factor(Poly(Fp, coeffs), 7);
    std::vector<Poly> divs{Poly::one(Fp)};
    for (const auto& [f, e] : fac.factors) {
        std::vector<Poly> next;
        for (const auto& d0 : divs) {
            Poly acc = d0;
            next.push_back(acc);
            for (unsigned long k = 1; k <= e; ++k) {
                acc = acc * f;
                next.push_back(acc);
            }
        }
        divs = std::move(next);
    }
    std::vector<fpx::Vec> out;
    for (const auto& d0 : divs) {
        fpx::Vec w;
        for (const auto& c : d0.coeffs()) w.push_back(c.prime_residue());
        out.push_back(std::move(w));
    }
    return out;
}

bool irreducible_rational_functions(const Poly& a) {
    long d = a.degree().value();
    if (d == 1) return true;
    if (d > 2)
        throw Error(Err::UnsupportedDegree,
                    "irreducibility over F_p(T) is only decided up to degree 2");
    const FieldPtr& F = a.field();
    long p = F->characteristic();
    // clear denominators and remove the F_p[T] content
    fpx::Vec lcm_den{1};
    for (const auto& c : a.coeffs()) {
        const auto& rf = c.rational_function();
        fpx::Vec g = fpx::gcd(lcm_den, rf.den, p);
        lcm_den = fpx::mul(fpx::divrem(lcm_den, g, p).first, rf.den, p);
    }
    std::vector<fpx::Vec> z;
    for (const auto& c : a.coeffs()) {
        const auto& rf = c.rational_function();
        z.push_back(fpx::mul(rf.num, fpx::divrem(lcm_den, rf.den, p).first, p));
    }
    fpx::Vec content{};
    for (const auto& v : z) content = fpx::gcd(content, v, p);
    for (auto& v : z) v = fpx::divrem(v, content, p).first;

    if (fpx::is_zero(z[0])) return false;  // root at 0
    // rational root theorem in F_p[T]: a root u/v has u | z0 (up to units), v | z2
    auto us = monic_divisors(z[0], p);
    auto vs = monic_divisors(z[2], p);
    for (const auto& u : us) {
        for (const auto& v : vs) {
            for (long c = 1; c < p; ++c) {
                FieldElement r = F->from_fraction(fpx::scale(u, c, p), v);
                FieldElement val = F->zero();
                for (long i = d; i >= 0; --i)
                    val = val * r + F->from_fraction(z[i], {1});
                if (val.is_zero()) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_irreducible(const Poly& a) {
    if (a.degree() < 1) {
        if (a.is_zero()) throw Error(Err::ZeroPolynomial, "irreducibility of zero");
        throw Error(Err::ConstantPolynomial, "constants are units, not candidates for primality");
    }
    switch (a.field()->kind()) {
        case FieldKind::Prime:
        case FieldKind::Extension: return irreducible_finite(a);
        case FieldKind::Rationals: return irreducible_rationals(a);
        case FieldKind::RationalFunctions: return irreducible_rational_functions(a);
    }
    throw Error(Err::PreconditionViolated, "bad field kind");
}

// --- enumeration ------------------------------------------------------------

MonicEnumeration::MonicEnumeration(FieldPtr F, long degree) : field_(std::move(F)), degree_(degree) {
    if (!field_->finite())
        throw Error(Err::InfiniteField, "monic enumeration needs a finite field");
    if (degree < 0) throw Error(Err::ZeroArgument, "degree must be >= 0");
    mpz_pow_ui(size_.get_mpz_t(), field_->cardinality().get_mpz_t(), degree);
}

Poly MonicEnumeration::at(const mpz_class& i) const {
    if (i < 0 || i >= size_) throw Error(Err::ZeroArgument, "monic index out of range");
    FieldEnumeration en(field_);
    std::vector<FieldElement> v(degree_ + 1, field_->zero());
    v[degree_] = field_->one();
    mpz_class r = i;
    mpz_class q = field_->cardinality();
    for (long j = degree_ - 1; j >= 0; --j) {
        v[j] = en.at(r % q);
        r /= q;
    }
    return Poly(field_, std::move(v));
}

MonicEnumeration enumerate_monic(const FieldPtr& F, long degree) {
    return MonicEnumeration(F, degree);
}

// --- embeddings and roots ---------------------------------------------------

namespace {

// all roots of f lying in its own coefficient field
std::vector<FieldElement> roots_in_field(const Poly& f) {
    const FieldPtr& F = f.field();
    if (f.is_zero()) throw Error(Err::ZeroPolynomial, "roots of zero");
    std::vector<FieldElement> out;
    if (f.is_constant()) return out;
    Poly g = f.monic();
    Poly x = Poly::X(F);
    Poly h = x.pow_mod(F->cardinality(), g) - x % g;
    Poly lin = gcd(g, h);  // product of (X - root), each root once
    if (lin.degree() == 0) return out;
    Rng rng(0xE5CAFEULL);
    FieldEnumeration en(F);
    std::vector<Poly> linear_factors;
    equal_degree_split(lin, 1, rng, en, linear_factors);
    for (const auto& l : linear_factors) out.push_back(-l.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

// image of the source generator inside the target field, cached
FieldElement embedding_root(const FieldPtr& src, const FieldPtr& target) {
    static std::map<std::pair<std::string, std::string>, FieldElement> cache;
    static std::mutex mtx;
    auto modulus_tag = [](const FieldPtr& f) {
        std::string s = f->to_string() + "[";
        if (f->kind() == FieldKind::Extension)
            for (long c : f->modulus()) s += std::to_string(c) + ",";
        return s + "]";
    };
    std::pair<std::string, std::string> key{modulus_tag(src), modulus_tag(target)};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    // the source modulus has prime-field coefficients, so it lifts plainly
    std::vector<FieldElement> coeffs;
    for (long c : src->modulus()) coeffs.push_back(target->from_integer(c));
    Poly lifted(target, std::move(coeffs));
    std::vector<FieldElement> roots = roots_in_field(lifted);
    if (roots.empty())
        throw Error(Err::IncompatibleExtension,
                    src->to_string() + " does not embed into " + target->to_string());
    FieldElement rho = roots.front();  // least root: a canonical choice
    {
        std::lock_guard<std::mutex> lock(mtx);
        cache.emplace(key, rho);
    }
    return rho;
}

}  // namespace

FieldElement embed(const FieldElement& a, const FieldPtr& target) {
    const FieldPtr& src = a.field();
    if (src->same(*target)) return a;
    if (src->kind() == FieldKind::Prime && target->characteristic() == src->characteristic()) {
        return target->from_integer(a.prime_residue());
    }
    if (src->kind() == FieldKind::Extension && target->kind() == FieldKind::Extension &&
        src->characteristic() == target->characteristic() &&
        target->extension_degree() % src->extension_degree() == 0) {
        FieldElement rho = embedding_root(src, target);
        FieldElement acc = target->zero();
        const fpx::Vec& v = a.ext_coeffs();
        for (auto it = v.rbegin(); it != v.rend(); ++it)
            acc = acc * rho + target->from_integer(*it);
        return acc;
    }
    throw Error(Err::IncompatibleExtension,
                src->to_string() + " does not embed into " + target->to_string());
}

Poly embed_poly(const Poly& a, const FieldPtr& target) {
    std::vector<FieldElement> v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) v.push_back(embed(c, target));
    return Poly(target, std::move(v));
}

std::vector<FieldElement> roots_in_extension(const Poly& a, long M) {
    const FieldPtr& F = a.field();
    if (!F->finite())
        throw Error(Err::UnsupportedField, "roots_in_extension needs a finite base field");
    if (M < 1 || M % F->extension_degree() != 0)
        throw Error(Err::IncompatibleExtension,
                    "base degree " + std::to_string(F->extension_degree()) +
                        " does not divide " + std::to_string(M));
    FieldPtr E = (M == F->extension_degree())
                     ? F
                     : Field::extension(F->characteristic(), M);
    return roots_in_field(embed_poly(a, E));
}

// --- printing and parsing ---------------------------------------------------

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree().value(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c_[i].to_string();
        bool needs_parens =
            cs.find_first_of("+-/ ") != std::string::npos && !(cs.size() > 1 && cs[0] == '-' && i == 0);
        if (i == 0) {
            os << cs;
        } else {
            if (!c_[i].is_one()) {
                if (needs_parens || cs[0] == '-')
                    os << "(" << cs << ")*";
                else
                    os << cs << "*";
            }
            os << "X";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly Poly::parse(const FieldPtr& F, const std::string& text) {
    // split into signed terms at top parenthesis level
    struct Term {
        int sign;
        std::string body;
    };
    std::vector<Term> terms;
    int depth = 0, sign = 1;
    std::string cur;
    auto flush = [&](int next_sign) {
        std::string t = cur;
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
        if (!t.empty()) terms.push_back({sign, t});
        cur.clear();
        sign = next_sign;
    };
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == '+' || ch == '-')) {
            bool empty_so_far = true;
            for (char c2 : cur)
                if (!std::isspace(static_cast<unsigned char>(c2))) empty_so_far = false;
            if (empty_so_far && ch == '-') {
                // leading sign of this term
                sign = -sign;
                continue;
            }
            if (empty_so_far) continue;
            flush(ch == '-' ? -1 : 1);
            continue;
        }
        cur += ch;
    }
    flush(1);
    if (terms.empty()) throw Error(Err::ParseError, "empty polynomial '" + text + "'");

    Poly out = Poly::zero(F);
    for (const auto& term : terms) {
        // locate X outside parens
        std::size_t xpos = std::string::npos;
        int d = 0;
        for (std::size_t i = 0; i < term.body.size(); ++i) {
            if (term.body[i] == '(') ++d;
            if (term.body[i] == ')') --d;
            if (d == 0 && term.body[i] == 'X') {
                xpos = i;
                break;
            }
        }
        FieldElement coef = F->one();
        long expo = 0;
        if (xpos == std::string::npos) {
            coef = F->parse_element(term.body);
        } else {
            std::string cpart = term.body.substr(0, xpos);
            while (!cpart.empty() && std::isspace(static_cast<unsigned char>(cpart.back()))) cpart.pop_back();
            if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
            while (!cpart.empty() && std::isspace(static_cast<unsigned char>(cpart.back()))) cpart.pop_back();
            if (!cpart.empty()) {
                if (cpart.front() == '(' && cpart.back() == ')')
                    cpart = cpart.substr(1, cpart.size() - 2);
                coef = F->parse_element(cpart);
            }
            expo = 1;
            std::string rest = term.body.substr(xpos + 1);
            std::size_t i = 0;
            while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
            if (i < rest.size()) {
                if (rest[i] != '^')
                    throw Error(Err::ParseError, "unexpected '" + rest + "' after X");
                ++i;
                while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
                expo = 0;
                bool any = false;
                while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) {
                    expo = expo * 10 + (rest[i] - '0');
                    ++i;
                    any = true;
                }
                if (!any || i != rest.size())
                    throw Error(Err::ParseError, "bad exponent in '" + term.body + "'");
            }
        }
        if (term.sign < 0) coef = -coef;
        out = out + Poly::monomial(F, expo, coef);
    }
    return out;
}

}  // namespace golomb
