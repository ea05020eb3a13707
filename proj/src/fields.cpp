#include "golomb/fields.hpp"

#include <cctype>
#include <sstream>

#include "golomb/error.hpp"
#include "golomb/numutil.hpp"

namespace golomb {

namespace {

void require_prime(long p) {
    if (p < 2 || !is_prime(mpz_class(p)))
        throw Error(Err::PreconditionViolated, std::to_string(p) + " is not prime");
    // coefficient products must stay inside a long
    if (p >= (1L << 31))
        throw Error(Err::PreconditionViolated, "characteristic too large for this toolkit");
}

// Reduce a fraction of F_p[T] polynomials to canonical form: coprime parts,
// monic denominator, zero represented as 0/1.
FieldElement::RatFun reduce_fraction(fpx::Vec num, fpx::Vec den, long p) {
    if (fpx::is_zero(den)) throw Error(Err::DivisionByZero, "zero denominator in F_p(T)");
    if (fpx::is_zero(num)) return {{}, {1}};
    fpx::Vec g = fpx::gcd(num, den, p);
    num = fpx::divrem(num, g, p).first;
    den = fpx::divrem(den, g, p).first;
    long lead_inv = fpx::inv_mod_p(den.back(), p);
    den = fpx::scale(den, lead_inv, p);
    num = fpx::scale(num, lead_inv, p);
    return {num, den};
}

}  // namespace

FieldPtr Field::prime(long p) {
    require_prime(p);
    return FieldPtr(new Field(FieldKind::Prime, p, 1, {}));
}

FieldPtr Field::extension(long p, long n) {
    require_prime(p);
    if (n < 1) throw Error(Err::PreconditionViolated, "extension degree must be >= 1");
    if (n == 1) return prime(p);
    return extension(p, fpx::least_irreducible(n, p));
}

FieldPtr Field::extension(long p, fpx::Vec modulus) {
    require_prime(p);
    fpx::trim(modulus);
    long n = fpx::deg(modulus);
    if (n < 2) throw Error(Err::PreconditionViolated, "extension modulus must have degree >= 2");
    if (modulus.back() != 1)
        throw Error(Err::PreconditionViolated, "extension modulus must be monic");
    for (long c : modulus)
        if (c < 0 || c >= p)
            throw Error(Err::PreconditionViolated, "modulus coefficients out of range");
    if (!fpx::irreducible(modulus, p))
        throw Error(Err::PreconditionViolated, "extension modulus is reducible");
    return FieldPtr(new Field(FieldKind::Extension, p, n, std::move(modulus)));
}

FieldPtr Field::rationals() { return FieldPtr(new Field(FieldKind::Rationals, 0, 1, {})); }

FieldPtr Field::rational_functions(long p) {
    require_prime(p);
    return FieldPtr(new Field(FieldKind::RationalFunctions, p, 1, {}));
}

FieldPtr Field::parse(const std::string& text) {
    if (text == "Q") return rationals();
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(Err::ParseError, "bad field descriptor '" + text + "'");
    std::string tag = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    try {
        if (tag == "Fp") return prime(std::stol(rest));
        if (tag == "FpT") return rational_functions(std::stol(rest));
        if (tag == "Fq") {
            auto caret = rest.find('^');
            if (caret == std::string::npos)
                throw Error(Err::ParseError, "Fq descriptor needs p^n");
            return extension(std::stol(rest.substr(0, caret)), std::stol(rest.substr(caret + 1)));
        }
    } catch (const Error& e) {
        if (e.kind() == Err::ParseError) throw;
        throw Error(Err::ParseError, "bad field descriptor '" + text + "': " + e.what());
    } catch (const std::invalid_argument&) {
        throw Error(Err::ParseError, "bad number in field descriptor '" + text + "'");
    }
    throw Error(Err::ParseError, "unknown field descriptor '" + text + "'");
}

std::string Field::to_string() const {
    switch (kind_) {
        case FieldKind::Prime: return "Fp:" + std::to_string(p_);
        case FieldKind::Extension:
            return "Fq:" + std::to_string(p_) + "^" + std::to_string(n_);
        case FieldKind::Rationals: return "Q";
        case FieldKind::RationalFunctions: return "FpT:" + std::to_string(p_);
    }
    return "?";
}

const fpx::Vec& Field::modulus() const {
    if (kind_ != FieldKind::Extension)
        throw Error(Err::PreconditionViolated, "only extension fields have a modulus");
    return modulus_;
}

mpz_class Field::cardinality() const {
    if (!finite()) throw Error(Err::InfiniteField, to_string() + " is infinite");
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p_, n_);
    return q;
}

bool Field::same(const Field& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
}

FieldElement Field::zero() const { return from_integer(0); }
FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(long k) const {
    auto self = shared_from_this();
    switch (kind_) {
        case FieldKind::Prime: {
            long r = k % p_;
            if (r < 0) r += p_;
            return FieldElement(self, r);
        }
        case FieldKind::Extension: return FieldElement(self, fpx::from_int(k, p_));
        case FieldKind::Rationals: return FieldElement(self, mpq_class(k));
        case FieldKind::RationalFunctions:
            return FieldElement(self, FieldElement::RatFun{fpx::from_int(k, p_), {1}});
    }
    throw Error(Err::PreconditionViolated, "bad field kind");
}

FieldElement Field::from_rational(const mpq_class& q) const {
    if (kind_ != FieldKind::Rationals)
        throw Error(Err::PreconditionViolated, "from_rational needs Q");
    mpq_class c = q;
    c.canonicalize();
    return FieldElement(shared_from_this(), c);
}

FieldElement Field::from_coeffs(fpx::Vec c) const {
    if (kind_ != FieldKind::Extension)
        throw Error(Err::PreconditionViolated, "from_coeffs needs an extension field");
    for (auto& x : c) x = ((x % p_) + p_) % p_;
    fpx::trim(c);
    if (fpx::deg(c) >= n_) c = fpx::mod(c, modulus_, p_);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::from_fraction(fpx::Vec num, fpx::Vec den) const {
    if (kind_ != FieldKind::RationalFunctions)
        throw Error(Err::PreconditionViolated, "from_fraction needs F_p(T)");
    for (auto& x : num) x = ((x % p_) + p_) % p_;
    for (auto& x : den) x = ((x % p_) + p_) % p_;
    fpx::trim(num);
    fpx::trim(den);
    return FieldElement(shared_from_this(), reduce_fraction(std::move(num), std::move(den), p_));
}

FieldElement Field::generator() const {
    if (kind_ == FieldKind::Extension) return FieldElement(shared_from_this(), fpx::Vec{0, 1});
    if (kind_ == FieldKind::RationalFunctions)
        return FieldElement(shared_from_this(), FieldElement::RatFun{{0, 1}, {1}});
    throw Error(Err::PreconditionViolated, "field has no distinguished generator");
}

bool FieldElement::is_zero() const {
    switch (owner_->kind()) {
        case FieldKind::Prime: return std::get<long>(rep_) == 0;
        case FieldKind::Extension: return std::get<fpx::Vec>(rep_).empty();
        case FieldKind::Rationals: return std::get<mpq_class>(rep_) == 0;
        case FieldKind::RationalFunctions: return std::get<RatFun>(rep_).num.empty();
    }
    return false;
}

bool FieldElement::is_one() const { return *this == owner_->one(); }

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field()->same(*b.field()))
        throw Error(Err::MixedFields,
                    a.field()->to_string() + " vs " + b.field()->to_string());
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    long p = owner_->characteristic();
    switch (owner_->kind()) {
        case FieldKind::Prime:
            return FieldElement(owner_, (std::get<long>(rep_) + std::get<long>(o.rep_)) % p);
        case FieldKind::Extension:
            return FieldElement(owner_, fpx::add(std::get<fpx::Vec>(rep_), std::get<fpx::Vec>(o.rep_), p));
        case FieldKind::Rationals:
            return FieldElement(owner_, mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_)));
        case FieldKind::RationalFunctions: {
            const auto& a = std::get<RatFun>(rep_);
            const auto& b = std::get<RatFun>(o.rep_);
            fpx::Vec num = fpx::add(fpx::mul(a.num, b.den, p), fpx::mul(b.num, a.den, p), p);
            return FieldElement(owner_, reduce_fraction(num, fpx::mul(a.den, b.den, p), p));
        }
    }
    throw Error(Err::PreconditionViolated, "bad field kind");
}

FieldElement FieldElement::operator-() const {
    long p = owner_->characteristic();
    switch (owner_->kind()) {
        case FieldKind::Prime:
            return FieldElement(owner_, (p - std::get<long>(rep_)) % p);
        case FieldKind::Extension:
            return FieldElement(owner_, fpx::neg(std::get<fpx::Vec>(rep_), p));
        case FieldKind::Rationals:
            return FieldElement(owner_, mpq_class(-std::get<mpq_class>(rep_)));
        case FieldKind::RationalFunctions: {
            const auto& a = std::get<RatFun>(rep_);
            return FieldElement(owner_, RatFun{fpx::neg(a.num, p), a.den});
        }
    }
    throw Error(Err::PreconditionViolated, "bad field kind");
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    long p = owner_->characteristic();
    switch (owner_->kind()) {
        case FieldKind::Prime:
            return FieldElement(owner_, (std::get<long>(rep_) * std::get<long>(o.rep_)) % p);
        case FieldKind::Extension:
            return FieldElement(owner_, fpx::mod(fpx::mul(std::get<fpx::Vec>(rep_),
                                                          std::get<fpx::Vec>(o.rep_), p),
                                                 owner_->modulus(), p));
        case FieldKind::Rationals:
            return FieldElement(owner_, mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_)));
        case FieldKind::RationalFunctions: {
            const auto& a = std::get<RatFun>(rep_);
            const auto& b = std::get<RatFun>(o.rep_);
            return FieldElement(owner_, reduce_fraction(fpx::mul(a.num, b.num, p),
                                                        fpx::mul(a.den, b.den, p), p));
        }
    }
    throw Error(Err::PreconditionViolated, "bad field kind");
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(Err::DivisionByZero, "inverse of zero");
    long p = owner_->characteristic();
    switch (owner_->kind()) {
        case FieldKind::Prime:
            return FieldElement(owner_, fpx::inv_mod_p(std::get<long>(rep_), p));
        case FieldKind::Extension:
            return FieldElement(owner_, fpx::invmod(std::get<fpx::Vec>(rep_), owner_->modulus(), p));
        case FieldKind::Rationals:
            return FieldElement(owner_, mpq_class(1 / std::get<mpq_class>(rep_)));
        case FieldKind::RationalFunctions: {
            const auto& a = std::get<RatFun>(rep_);
            return FieldElement(owner_, reduce_fraction(a.den, a.num, p));
        }
    }
    throw Error(Err::PreconditionViolated, "bad field kind");
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(*this, o);
    if (o.is_zero()) throw Error(Err::DivisionByZero, "division by zero");
    return *this * o.inverse();
}

FieldElement FieldElement::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this, result = owner_->one();
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!owner_->same(*o.owner_)) return false;
    return rep_ == o.rep_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    require_same_field(*this, o);
    switch (owner_->kind()) {
        case FieldKind::Prime: return std::get<long>(rep_) < std::get<long>(o.rep_);
        case FieldKind::Extension: {
            // enumeration order: lexicographic on the padded coefficient tuple
            const auto& a = std::get<fpx::Vec>(rep_);
            const auto& b = std::get<fpx::Vec>(o.rep_);
            long n = owner_->extension_degree();
            for (long i = 0; i < n; ++i) {
                long ca = i < static_cast<long>(a.size()) ? a[i] : 0;
                long cb = i < static_cast<long>(b.size()) ? b[i] : 0;
                if (ca != cb) return ca < cb;
            }
            return false;
        }
        case FieldKind::Rationals: return std::get<mpq_class>(rep_) < std::get<mpq_class>(o.rep_);
        case FieldKind::RationalFunctions: {
            const auto& a = std::get<RatFun>(rep_);
            const auto& b = std::get<RatFun>(o.rep_);
            if (a.den != b.den) return a.den < b.den;
            return a.num < b.num;
        }
    }
    return false;
}

std::string FieldElement::to_string() const {
    switch (owner_->kind()) {
        case FieldKind::Prime: return std::to_string(std::get<long>(rep_));
        case FieldKind::Extension: return fpx::to_string(std::get<fpx::Vec>(rep_), "w");
        case FieldKind::Rationals: return std::get<mpq_class>(rep_).get_str();
        case FieldKind::RationalFunctions: {
            const auto& a = std::get<RatFun>(rep_);
            if (a.den == fpx::Vec{1}) return fpx::to_string(a.num, "T");
            return "(" + fpx::to_string(a.num, "T") + ")/(" + fpx::to_string(a.den, "T") + ")";
        }
    }
    return "?";
}

long FieldElement::prime_residue() const { return std::get<long>(rep_); }
const fpx::Vec& FieldElement::ext_coeffs() const { return std::get<fpx::Vec>(rep_); }
const mpq_class& FieldElement::rational() const { return std::get<mpq_class>(rep_); }
const FieldElement::RatFun& FieldElement::rational_function() const {
    return std::get<RatFun>(rep_);
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw Error(Err::PreconditionViolated, "bad arithmetic op");
}

std::optional<mpz_class> element_order(const FieldElement& a) {
    if (a.is_zero()) throw Error(Err::ZeroElement, "order of zero");
    const FieldPtr& F = a.field();
    switch (F->kind()) {
        case FieldKind::Rationals: {
            const mpq_class& q = a.rational();
            if (q == 1) return mpz_class(1);
            if (q == -1) return mpz_class(2);
            return std::nullopt;
        }
        case FieldKind::RationalFunctions: {
            const auto& f = a.rational_function();
            if (fpx::deg(f.num) > 0 || fpx::deg(f.den) > 0) return std::nullopt;
            // nonzero constants form F_p*
            long c = f.num[0];
            if (c == 1) return mpz_class(1);
            return order_mod(mpz_class(c), mpz_class(F->characteristic()));
        }
        default: break;
    }
    // finite field: descend from |F*| through its prime factors
    mpz_class ord = F->cardinality() - 1;
    for (const auto& [pf, e] : factor_integer(ord)) {
        (void)e;
        while (mpz_divisible_p(ord.get_mpz_t(), pf.get_mpz_t())) {
            mpz_class cand = ord / pf;
            if (a.pow(cand).is_one())
                ord = cand;
            else
                break;
        }
    }
    return ord;
}

bool is_root_of_unity(const FieldElement& a) {
    if (a.is_zero()) throw Error(Err::ZeroElement, "root-of-unity test on zero");
    return element_order(a).has_value();
}

FieldElement subgroup_of_order(const FieldPtr& F, const mpz_class& d) {
    if (!F->finite()) throw Error(Err::InfiniteField, "subgroup_of_order needs a finite field");
    if (d < 1) throw Error(Err::ZeroArgument, "subgroup order must be >= 1");
    mpz_class units = F->cardinality() - 1;
    if (!mpz_divisible_p(units.get_mpz_t(), d.get_mpz_t()))
        throw Error(Err::NoSuchSubgroup,
                    d.get_str() + " does not divide |F*| = " + units.get_str());
    if (d == 1) return F->one();
    FieldEnumeration en(F);
    for (mpz_class i = 1; i < en.size(); ++i) {
        FieldElement a = en.at(i);
        mpz_class o = *element_order(a);
        if (mpz_divisible_p(o.get_mpz_t(), d.get_mpz_t())) return a.pow(o / d);
    }
    throw Error(Err::NoSuchSubgroup, "exhausted field without finding the subgroup");  // unreachable
}

FieldEnumeration::FieldEnumeration(FieldPtr F) : field_(std::move(F)) {
    if (!field_->finite())
        throw Error(Err::InfiniteField, field_->to_string() + " cannot be enumerated");
    size_ = field_->cardinality();
}

FieldElement FieldEnumeration::at(const mpz_class& i) const {
    if (i < 0 || i >= size_) throw Error(Err::ZeroArgument, "enumeration index out of range");
    long p = field_->characteristic();
    if (field_->kind() == FieldKind::Prime)
        return field_->from_integer(mpz_class(i).get_si());
    // lexicographic on (c_0, ..., c_{n-1}): the last coordinate moves fastest
    long n = field_->extension_degree();
    fpx::Vec c(n, 0);
    mpz_class r = i;
    for (long j = n - 1; j >= 0; --j) {
        c[j] = mpz_class(r % p).get_si();
        r /= p;
    }
    return field_->from_coeffs(std::move(c));
}

FieldEnumeration enumerate_field(const FieldPtr& F) { return FieldEnumeration(F); }

// --- element parsing ------------------------------------------------------

namespace {

// Parses a sum of terms c, c*s^k, s^k over the symbol s into a coefficient
// vector mod p. Used for extension elements (symbol w) and F_p[T] parts.
fpx::Vec parse_symbol_poly(const std::string& text, char symbol, long p) {
    fpx::Vec out;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto set_coeff = [&](long k, long c) {
        if (k >= static_cast<long>(out.size())) out.resize(k + 1, 0);
        out[k] = ((out[k] + c) % p + p) % p;
    };
    skip_ws();
    if (i == text.size()) throw Error(Err::ParseError, "empty element literal");
    while (i < text.size()) {
        long sign = 1;
        skip_ws();
        if (text[i] == '+') { ++i; }
        else if (text[i] == '-') { sign = -1; ++i; }
        skip_ws();
        bool have_num = false;
        long num = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            have_num = true;
            num = num * 10 + (text[i] - '0');
            ++i;
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
        long expo = 0;
        if (i < text.size() && text[i] == symbol) {
            ++i;
            expo = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw Error(Err::ParseError, "exponent expected in '" + text + "'");
                expo = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    expo = expo * 10 + (text[i] - '0');
                    ++i;
                }
            }
        } else if (!have_num) {
            throw Error(Err::ParseError, "unexpected character in '" + text + "'");
        }
        set_coeff(expo, sign * (have_num ? num : 1));
        skip_ws();
        if (i < text.size() && text[i] != '+' && text[i] != '-')
            throw Error(Err::ParseError, "unexpected character in '" + text + "'");
    }
    fpx::trim(out);
    return out;
}

}  // namespace

FieldElement Field::parse_element(const std::string& text) const {
    std::string t = text;
    switch (kind_) {
        case FieldKind::Prime: {
            fpx::Vec v = parse_symbol_poly(t, 'w', p_);
            if (fpx::deg(v) > 0) throw Error(Err::ParseError, "'" + text + "' is not in F_p");
            return from_integer(v.empty() ? 0 : v[0]);
        }
        case FieldKind::Extension: return from_coeffs(parse_symbol_poly(t, 'w', p_));
        case FieldKind::Rationals: {
            mpq_class q;
            if (q.set_str(t, 10) != 0)
                throw Error(Err::ParseError, "'" + text + "' is not a rational");
            q.canonicalize();
            return from_rational(q);
        }
        case FieldKind::RationalFunctions: {
            // top-level "(num)/(den)", or a plain F_p[T] polynomial
            int depth = 0;
            std::size_t slash = std::string::npos;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i] == '(') ++depth;
                else if (t[i] == ')') --depth;
                else if (t[i] == '/' && depth == 0) { slash = i; break; }
            }
            auto strip_parens = [](std::string s) {
                while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
                while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
                if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
                    int d = 0;
                    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
                        if (s[i] == '(') ++d;
                        if (s[i] == ')') --d;
                        if (d == 0) return s;  // outer parens do not match
                    }
                    return s.substr(1, s.size() - 2);
                }
                return s;
            };
            if (slash == std::string::npos)
                return from_fraction(parse_symbol_poly(strip_parens(t), 'T', p_), {1});
            return from_fraction(parse_symbol_poly(strip_parens(t.substr(0, slash)), 'T', p_),
                                 parse_symbol_poly(strip_parens(t.substr(slash + 1)), 'T', p_));
        }
    }
    throw Error(Err::PreconditionViolated, "bad field kind");
}

}  // namespace golomb
