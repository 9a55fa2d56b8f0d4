#include "iwahori/padic_core.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace iwahori {

namespace {

// splits r = u * p^e with num/den of u prime to p
void extract_p_power(int p, BigRat& r, long long& e) {
    e = 0;
    if (r == 0) return;
    BigInt num = numerator(r), den = denominator(r);
    const BigInt P = p;
    BigInt q, rem;
    for (;;) {
        divide_qr(num, P, q, rem);
        if (rem != 0) break;
        num = q;
        ++e;
    }
    for (;;) {
        divide_qr(den, P, q, rem);
        if (rem != 0) break;
        den = q;
        --e;
    }
    r = BigRat(num, den);
}

void check_same_prime(int a, int b) {
    if (a != b) throw std::invalid_argument("mixed ambient primes");
}

}  // namespace

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    // extended Euclid
    BigInt r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    BigInt s0 = 0, s1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: not coprime");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

BigInt pow_bigint(const BigInt& base, unsigned long long e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

PadicRational PadicRational::from_integer(int p, const BigInt& n) {
    return from_rational(p, BigRat(n));
}

PadicRational PadicRational::from_rational(int p, const BigRat& r) {
    BigRat u = r;
    long long e = 0;
    extract_p_power(p, u, e);
    if (u == 0) e = 0;
    return PadicRational(p, std::move(u), e);
}

PadicRational PadicRational::p_power(int p, long long e) {
    return PadicRational(p, 1, e);
}

std::optional<long long> PadicRational::val() const {
    if (is_zero()) return std::nullopt;
    return exp_;
}

BigRat PadicRational::to_rational() const {
    if (is_zero()) return BigRat(0);
    BigRat r = unit_;
    if (exp_ >= 0)
        r *= BigRat(pow_bigint(p_, static_cast<unsigned long long>(exp_)));
    else
        r /= BigRat(pow_bigint(p_, static_cast<unsigned long long>(-exp_)));
    return r;
}

PadicRational PadicRational::operator-() const {
    return PadicRational(p_, -unit_, exp_);
}

PadicRational PadicRational::operator+(const PadicRational& o) const {
    check_same_prime(p_, o.p_);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long long e = std::min(exp_, o.exp_);
    BigRat t = unit_ * BigRat(pow_bigint(p_, static_cast<unsigned long long>(exp_ - e))) +
               o.unit_ * BigRat(pow_bigint(p_, static_cast<unsigned long long>(o.exp_ - e)));
    if (t == 0) return zero(p_);
    long long extra = 0;
    extract_p_power(p_, t, extra);  // cancellation can leave p-powers in the sum
    return PadicRational(p_, std::move(t), e + extra);
}

PadicRational PadicRational::operator-(const PadicRational& o) const {
    return *this + (-o);
}

PadicRational PadicRational::operator*(const PadicRational& o) const {
    check_same_prime(p_, o.p_);
    if (is_zero() || o.is_zero()) return zero(p_);
    // units stay units: p is prime to every factor
    return PadicRational(p_, unit_ * o.unit_, exp_ + o.exp_);
}

PadicRational PadicRational::operator/(const PadicRational& o) const {
    return *this * o.inverse();
}

PadicRational PadicRational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return PadicRational(p_, 1 / unit_, -exp_);
}

bool PadicRational::operator==(const PadicRational& o) const {
    check_same_prime(p_, o.p_);
    return exp_ == o.exp_ && unit_ == o.unit_;
}

int PadicRational::residue() const {
    if (is_zero()) return 0;
    if (exp_ < 0) throw std::domain_error("residue: negative valuation");
    if (exp_ > 0) return 0;
    BigInt m = p_;
    BigInt n = numerator(unit_) % m;
    if (n < 0) n += m;
    BigInt d = denominator(unit_) % m;
    return static_cast<int>((n * mod_inverse(d, m)) % m);
}

int PadicRational::unit_residue() const {
    if (is_zero()) throw std::domain_error("unit_residue: zero element");
    BigInt m = p_;
    BigInt n = numerator(unit_) % m;
    if (n < 0) n += m;
    BigInt d = denominator(unit_) % m;
    return static_cast<int>((n * mod_inverse(d, m)) % m);
}

BigInt PadicRational::residue_mod_pk(long long k) const {
    if (k < 1) throw std::invalid_argument("residue_mod_pk: k >= 1");
    if (is_zero()) return 0;
    if (exp_ < 0) throw std::domain_error("residue_mod_pk: negative valuation");
    BigInt m = pow_bigint(p_, static_cast<unsigned long long>(k));
    if (exp_ >= k) return 0;
    BigInt n = numerator(unit_) % m;
    if (n < 0) n += m;
    BigInt v = (n * mod_inverse(denominator(unit_) % m, m)) % m;
    v = (v * pow_bigint(p_, static_cast<unsigned long long>(exp_))) % m;
    return v;
}

std::string PadicRational::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << numerator(unit_);
    if (denominator(unit_) != 1) os << "/" << denominator(unit_);
    if (exp_ != 0) os << "*p^" << exp_;
    return os.str();
}

PadicRational PadicRational::parse(int p, const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty p-adic literal");
    long long e = 0;
    auto star = t.find("*p^");
    std::string rat = t;
    if (star != std::string::npos) {
        rat = t.substr(0, star);
        e = std::stoll(t.substr(star + 3));
    } else if (t.rfind("p^", 0) == 0) {
        rat = "1";
        e = std::stoll(t.substr(2));
    } else if (t == "p") {
        rat = "1";
        e = 1;
    } else if (t == "-p") {
        rat = "-1";
        e = 1;
    }
    auto slash = rat.find('/');
    BigInt num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = BigInt(rat);
        } else {
            num = BigInt(rat.substr(0, slash));
            den = BigInt(rat.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad p-adic literal: " + s);
    }
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    PadicRational x = from_rational(p, BigRat(num, den));
    return x * p_power(p, e);
}

Mat2 Mat2::from_integers(int p, const BigInt& a, const BigInt& b, const BigInt& c,
                         const BigInt& d) {
    return Mat2(p, PadicRational::from_integer(p, a), PadicRational::from_integer(p, b),
                PadicRational::from_integer(p, c), PadicRational::from_integer(p, d));
}

Mat2 Mat2::identity(int p) { return from_integers(p, 1, 0, 0, 1); }
Mat2 Mat2::alpha(int p) { return from_integers(p, 1, 0, 0, p); }
Mat2 Mat2::beta(int p) { return from_integers(p, 0, 1, p, 0); }
Mat2 Mat2::w(int p) { return from_integers(p, 0, 1, 1, 0); }
Mat2 Mat2::h(int p, int lambda) { return from_integers(p, lambda, 1, 1, 0); }
Mat2 Mat2::upper_unipotent(int p, const BigInt& x) { return from_integers(p, 1, x, 0, 1); }

Mat2 Mat2::central_p_power(int p, long long k) {
    PadicRational s = PadicRational::p_power(p, k);
    return Mat2(p, s, PadicRational::zero(p), PadicRational::zero(p), s);
}

Mat2 Mat2::operator*(const Mat2& o) const {
    check_same_prime(p_, o.p_);
    return Mat2(p_, a() * o.a() + b() * o.c(), a() * o.b() + b() * o.d(),
                c() * o.a() + d() * o.c(), c() * o.b() + d() * o.d());
}

Mat2 Mat2::scaled(const PadicRational& s) const {
    return Mat2(p_, a() * s, b() * s, c() * s, d() * s);
}

PadicRational Mat2::det() const { return a() * d() - b() * c(); }

Mat2 Mat2::inv() const {
    PadicRational dt = det();
    if (dt.is_zero()) throw std::domain_error("mat_inv: singular matrix");
    PadicRational di = dt.inverse();
    return Mat2(p_, d() * di, -b() * di, -c() * di, a() * di);
}

bool Mat2::operator==(const Mat2& o) const {
    return p_ == o.p_ && e_[0] == o.e_[0] && e_[1] == o.e_[1] && e_[2] == o.e_[2] &&
           e_[3] == o.e_[3];
}

std::string Mat2::str() const {
    return "(" + a().str() + " " + b().str() + "; " + c().str() + " " + d().str() + ")";
}

Gl2FpMat::Gl2FpMat(int p, int a, int b, int c, int d) : p_(p) {
    auto norm = [p](int x) {
        x %= p;
        return x < 0 ? x + p : x;
    };
    m_ = {norm(a), norm(b), norm(c), norm(d)};
    if (det() == 0) throw std::domain_error("Gl2FpMat: singular");
}

Gl2FpMat Gl2FpMat::operator*(const Gl2FpMat& o) const {
    check_same_prime(p_, o.p_);
    return Gl2FpMat(p_, m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                    m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]);
}

int Gl2FpMat::det() const {
    int d = (m_[0] * m_[3] - m_[1] * m_[2]) % p_;
    return d < 0 ? d + p_ : d;
}

Gl2FpMat Gl2FpMat::inv() const {
    int d = det();
    int di = static_cast<int>(mod_inverse(BigInt(d), BigInt(p_)));
    return Gl2FpMat(p_, m_[3] * di, -m_[1] * di, -m_[2] * di, m_[0] * di);
}

std::vector<Gl2FpMat> enumerate_gl2(int p) {
    std::vector<Gl2FpMat> out;
    out.reserve(static_cast<size_t>((p * p - 1) * (p * p - p)));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if ((a * d - b * c) % p != 0) out.push_back(Gl2FpMat(p, a, b, c, d));
    return out;
}

int smallest_primitive_root(int p) {
    if (p == 2) return 1;
    for (int g = 2; g < p; ++g) {
        int x = 1;
        bool ok = true;
        for (int i = 1; i < p - 1; ++i) {
            x = (x * g) % p;
            if (x == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

std::vector<Gl2FpMat> gl2_generators(int p) {
    std::vector<Gl2FpMat> gens;
    gens.push_back(Gl2FpMat(p, 1, 1, 0, 1));
    gens.push_back(Gl2FpMat(p, 1, 0, 1, 1));
    gens.push_back(Gl2FpMat(p, 0, 1, 1, 0));
    int g0 = smallest_primitive_root(p);
    if (g0 != 1) gens.push_back(Gl2FpMat(p, g0, 0, 0, 1));
    return gens;
}

namespace {

// polynomial helpers over F_p, coefficient vectors with c[i] the x^i coefficient
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    // m monic
    int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int da = static_cast<int>(a.size()) - 1;
        int lead = a[da] % p;
        if (lead != 0) {
            for (int i = 0; i <= dm; ++i) {
                int& t = a[da - dm + i];
                t = ((t - lead * m[i]) % p + p * p) % p;
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

bool poly_is_zero(const std::vector<int>& a) { return a.empty(); }

// all monic polynomials of degree d, ordered by base-p value of the coefficient tuple
std::vector<std::vector<int>> monic_polys(int p, int d) {
    std::vector<std::vector<int>> out;
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
        std::vector<int> c(d + 1, 0);
        long long t = v;
        for (int i = 0; i < d; ++i) {
            c[i] = static_cast<int>(t % p);
            t /= p;
        }
        c[d] = 1;
        out.push_back(std::move(c));
    }
    return out;
}

bool is_irreducible(const std::vector<int>& f, int p) {
    int k = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= k; ++d) {
        for (const auto& g : monic_polys(p, d)) {
            // divisible by g?
            std::vector<int> r = poly_mod(f, g, p);
            (void)r;
            if (poly_is_zero(r)) return false;
        }
    }
    return true;
}

}  // namespace

FqFieldPtr FqField::get(int p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("FqField: p not prime");
    if (k < 1) throw std::invalid_argument("FqField: k >= 1");
    static std::mutex mu;
    static std::map<std::pair<int, int>, FqFieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
    std::vector<int> mod;
    if (k == 1) {
        mod = {0, 1};  // x, unused
    } else {
        for (const auto& f : monic_polys(p, k)) {
            if (is_irreducible(f, p)) {
                mod = f;
                break;
            }
        }
        if (mod.empty()) throw std::logic_error("no irreducible polynomial found");
    }
    FqFieldPtr field(new FqField(p, k, std::move(mod)));
    cache[{p, k}] = field;
    return field;
}

long long FqField::q() const {
    long long r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

FqScalar::FqScalar(FqFieldPtr field, int value_mod_p) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("FqScalar: null field");
    c_.assign(static_cast<size_t>(field_->k), 0);
    int v = value_mod_p % field_->p;
    if (v < 0) v += field_->p;
    c_[0] = v;
}

FqScalar FqScalar::from_coeffs(FqFieldPtr field, std::vector<int> coeffs) {
    if (!field) throw std::invalid_argument("FqScalar: null field");
    if (coeffs.size() != static_cast<size_t>(field->k))
        throw std::invalid_argument("FqScalar: wrong coefficient count");
    FqScalar x(field, 0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        int v = coeffs[i] % field->p;
        if (v < 0) v += field->p;
        x.c_[i] = v;
    }
    return x;
}

bool FqScalar::is_zero() const {
    for (int v : c_)
        if (v != 0) return false;
    return true;
}

namespace {
void check_same_field(const FqFieldPtr& a, const FqFieldPtr& b) {
    if (!a || !b) throw std::invalid_argument("FqScalar: uninitialized");
    if (a.get() == b.get()) return;
    if (a->p != b->p || a->k != b->k || a->modulus != b->modulus)
        throw std::invalid_argument("FqScalar: mixed fields");
}
}  // namespace

FqScalar FqScalar::operator+(const FqScalar& o) const {
    check_same_field(field_, o.field_);
    FqScalar r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = (c_[i] + o.c_[i]) % field_->p;
    return r;
}

FqScalar FqScalar::operator-(const FqScalar& o) const { return *this + (-o); }

FqScalar FqScalar::operator-() const {
    FqScalar r = *this;
    for (auto& v : r.c_) v = (field_->p - v) % field_->p;
    return r;
}

FqScalar FqScalar::operator*(const FqScalar& o) const {
    check_same_field(field_, o.field_);
    const int p = field_->p;
    if (field_->k == 1) {
        FqScalar r(field_, 0);
        r.c_[0] = (c_[0] * o.c_[0]) % p;
        return r;
    }
    std::vector<int> prod = poly_mul(c_, o.c_, p);
    prod = poly_mod(std::move(prod), field_->modulus, p);
    prod.resize(static_cast<size_t>(field_->k), 0);
    FqScalar r(field_, 0);
    r.c_ = std::move(prod);
    return r;
}

FqScalar FqScalar::inverse() const {
    if (is_zero()) throw std::domain_error("FqScalar: inverse of zero");
    return pow(field_->q() - 2);
}

FqScalar FqScalar::pow(long long e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("FqScalar: negative power of zero");
        long long order = field_->q() - 1;
        e %= order;
        e += order;
    }
    FqScalar r = one(field_);
    FqScalar b = *this;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

bool FqScalar::operator==(const FqScalar& o) const {
    check_same_field(field_, o.field_);
    return c_ == o.c_;
}

std::string FqScalar::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

std::vector<int> lifts(int p) {
    std::vector<int> out(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) out[static_cast<size_t>(i)] = i;
    return out;
}

std::optional<CentralFactorization> factor_KZ(const Mat2& g) {
    PadicRational dt = g.det();
    if (dt.is_zero()) throw std::invalid_argument("factor_KZ: singular matrix");
    long long vd = *dt.val();
    if (vd % 2 != 0) return std::nullopt;  // val(det) must be even
    long long m = vd / 2;
    long long minval = m + 1;
    bool any = false;
    for (int i = 0; i < 4; ++i) {
        auto v = g.at(i / 2, i % 2).val();
        if (v) {
            minval = any ? std::min(minval, *v) : *v;
            any = true;
        }
    }
    if (minval != m) return std::nullopt;  // min entry valuation must be val(det)/2
    Mat2 u = g.scaled(PadicRational::p_power(g.prime(), -m));
    return CentralFactorization{m, u};
}

std::optional<CentralFactorization> factor_IZ(const Mat2& g) {
    PadicRational dt = g.det();
    if (dt.is_zero()) throw std::invalid_argument("factor_IZ: singular matrix");
    if (g.a().is_zero()) return std::nullopt;  // top-left must become a unit
    long long m = *g.a().val();
    Mat2 u = g.scaled(PadicRational::p_power(g.prime(), -m));
    auto nonneg = [](const PadicRational& x) { return x.is_integral(); };
    if (!nonneg(u.b()) || !nonneg(u.c()) || !nonneg(u.d())) return std::nullopt;
    if (!u.d().is_unit()) return std::nullopt;
    if (!u.c().is_zero() && *u.c().val() < 1) return std::nullopt;
    if (!u.det().is_unit()) return std::nullopt;
    return CentralFactorization{m, u};
}

Gl2FpMat reduce_mod_p(const Mat2& u) {
    for (int i = 0; i < 4; ++i)
        if (!u.at(i / 2, i % 2).is_integral())
            throw std::domain_error("reduce_mod_p: entry not in Z_p");
    if (!u.det().is_unit()) throw std::domain_error("reduce_mod_p: det not a unit");
    return Gl2FpMat(u.prime(), u.a().residue(), u.b().residue(), u.c().residue(),
                    u.d().residue());
}

FqScalar char_value(const Mat2& g, CharKind kind, long long r, const FqFieldPtr& field) {
    auto f = factor_IZ(g);
    if (!f) throw std::domain_error("char_value: matrix not in IZ");
    int entry = (kind == CharKind::d) ? f->u.d().residue() : f->u.a().residue();
    long long p1 = g.prime() - 1;
    long long e = ((r % p1) + p1) % p1;  // entry is a unit, so x^(p-1) = 1
    return FqScalar(field, entry).pow(e);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace iwahori
