#include "iwahori/finite_reps.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace iwahori {

VrElement::VrElement(FqFieldPtr field, long long r) : r_(r), field_(std::move(field)) {
    if (r < 0) throw std::invalid_argument("VrElement: r >= 0");
    c_.assign(static_cast<size_t>(r + 1), FqScalar::zero(field_));
}

VrElement VrElement::monomial(const FqFieldPtr& field, long long r, long long ydeg,
                              const FqScalar& coeff) {
    VrElement v(field, r);
    v.set_coeff(ydeg, coeff);
    return v;
}

bool VrElement::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

VrElement VrElement::operator+(const VrElement& o) const {
    if (r_ != o.r_) throw std::invalid_argument("VrElement: degree mismatch");
    VrElement out = *this;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

VrElement VrElement::operator-(const VrElement& o) const { return *this + (-o); }

VrElement VrElement::operator-() const {
    VrElement out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

VrElement VrElement::scaled(const FqScalar& s) const {
    VrElement out = *this;
    for (auto& x : out.c_) x = x * s;
    return out;
}

bool VrElement::operator==(const VrElement& o) const {
    return r_ == o.r_ && c_ == o.c_;
}

FqScalar VrElement::evaluate(const FqScalar& x, const FqScalar& y) const {
    // sum coeff_i x^(r-i) y^i, with 0^0 = 1
    const FqFieldPtr& f = field_;
    FqScalar acc = FqScalar::zero(f);
    std::vector<FqScalar> xpow(c_.size(), FqScalar::one(f));
    for (size_t i = 1; i < c_.size(); ++i) xpow[i] = xpow[i - 1] * x;
    FqScalar yp = FqScalar::one(f);
    for (size_t i = 0; i < c_.size(); ++i) {
        acc = acc + c_[i] * xpow[c_.size() - 1 - i] * yp;
        yp = yp * y;
    }
    return acc;
}

std::string VrElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str() << "*X^" << (r_ - static_cast<long long>(i)) << "Y^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

VrElement substitute(const VrElement& P, const FqScalar& a, const FqScalar& b,
                     const FqScalar& c, const FqScalar& d) {
    const FqFieldPtr& f = P.field();
    long long r = P.r();
    size_t n = static_cast<size_t>(r + 1);
    // powers of (aX + cY) and (bX + dY) as coefficient vectors
    std::vector<FqVec> upow(n), vpow(n);
    upow[0] = {FqScalar::one(f)};
    vpow[0] = {FqScalar::one(f)};
    auto mul_linear = [&](const FqVec& w, const FqScalar& s, const FqScalar& t) {
        FqVec out = fq_zero_vec(f, w.size() + 1);
        for (size_t i = 0; i < w.size(); ++i) {
            out[i] = out[i] + w[i] * s;      // times X-part
            out[i + 1] = out[i + 1] + w[i] * t;  // times Y-part
        }
        return out;
    };
    for (size_t j = 1; j < n; ++j) {
        upow[j] = mul_linear(upow[j - 1], a, c);
        vpow[j] = mul_linear(vpow[j - 1], b, d);
    }
    VrElement out(f, r);
    for (size_t i = 0; i < n; ++i) {
        const FqScalar& coeff = P.coeffs()[i];
        if (coeff.is_zero()) continue;
        const FqVec& u = upow[n - 1 - i];
        const FqVec& v = vpow[i];
        for (size_t s = 0; s < u.size(); ++s) {
            if (u[s].is_zero()) continue;
            for (size_t t = 0; t < v.size(); ++t) {
                if (v[t].is_zero()) continue;
                size_t ydeg = s + t;
                out.set_coeff(static_cast<long long>(ydeg),
                              out.coeff(static_cast<long long>(ydeg)) + coeff * u[s] * v[t]);
            }
        }
    }
    return out;
}

VrElement gl2_act(const Gl2FpMat& g, const VrElement& P) {
    const FqFieldPtr& f = P.field();
    if (g.prime() != f->p) throw std::invalid_argument("gl2_act: prime mismatch");
    return substitute(P, FqScalar(f, g.a()), FqScalar(f, g.b()), FqScalar(f, g.c()),
                      FqScalar(f, g.d()));
}

bool quotient_degree_ok(int p, long long r) {
    return r >= p + 1 || (p == 2 && r == 2);
}

QuotElement vstar_reduce(const VrElement& P) {
    const int p = P.field()->p;
    const long long r = P.r();
    if (!quotient_degree_ok(p, r))
        throw std::invalid_argument("vstar_reduce: degree below p+1");
    VrElement x = P;
    // the generators theta * X^(r-p-1-b) Y^b reduce index b+1 into index b+p
    for (long long b = 0; b + p + 1 <= r; ++b) {
        FqScalar t = x.coeff(b + 1);
        if (!t.is_zero()) {
            x.set_coeff(b + p, x.coeff(b + p) + t);
            x.set_coeff(b + 1, FqScalar::zero(P.field()));
        }
    }
    return QuotElement(std::move(x));
}

QuotElement QuotElement::operator+(const QuotElement& o) const {
    return vstar_reduce(rep_ + o.rep_);  // normal forms add to a normal form
}

QuotElement QuotElement::operator-(const QuotElement& o) const {
    return vstar_reduce(rep_ - o.rep_);
}

QuotElement QuotElement::scaled(const FqScalar& s) const {
    return vstar_reduce(rep_.scaled(s));
}

QuotElement quot_act(const Gl2FpMat& g, const QuotElement& x) {
    return vstar_reduce(gl2_act(g, x.rep()));
}

std::vector<long long> quotient_free_indices(int p, long long r) {
    if (!quotient_degree_ok(p, r))
        throw std::invalid_argument("quotient_free_indices: degree below p+1");
    std::vector<long long> out{0};
    for (long long i = r - p + 1; i <= r; ++i) out.push_back(i);
    return out;
}

FqVec quotient_coords(const QuotElement& x) {
    auto idx = quotient_free_indices(x.field()->p, x.r());
    FqVec out;
    out.reserve(idx.size());
    for (long long i : idx) out.push_back(x.rep().coeff(i));
    return out;
}

IndBChar::IndBChar(FqFieldPtr field, int p, long long r, FqVec values)
    : field_(std::move(field)), p_(p), values_(std::move(values)) {
    long long m = p - 1;
    r_ = ((r % m) + m) % m;
    if (values_.size() != static_cast<size_t>(p + 1))
        throw std::invalid_argument("IndBChar: need p+1 values");
}

bool IndBChar::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

IndBChar IndBChar::operator+(const IndBChar& o) const {
    if (p_ != o.p_ || r_ != o.r_) throw std::invalid_argument("IndBChar: mismatch");
    FqVec v = values_;
    for (size_t i = 0; i < v.size(); ++i) v[i] = v[i] + o.values_[i];
    return IndBChar(field_, p_, r_, std::move(v));
}

IndBChar IndBChar::scaled(const FqScalar& s) const {
    FqVec v = values_;
    for (auto& x : v) x = x * s;
    return IndBChar(field_, p_, r_, std::move(v));
}

bool IndBChar::operator==(const IndBChar& o) const {
    return p_ == o.p_ && r_ == o.r_ && values_ == o.values_;
}

IndBChar IndBChar::translate(const Gl2FpMat& g) const {
    // (g.f)(h) = f(h g): push each representative's bottom row through g
    FqVec out = fq_zero_vec(field_, values_.size());
    auto bottom = [&](size_t idx) -> std::pair<int, int> {
        if (idx == 0) return {0, 1};
        return {1, static_cast<int>(idx) - 1};
    };
    for (size_t i = 0; i < values_.size(); ++i) {
        auto [c, d] = bottom(i);
        int c2 = (c * g.a() + d * g.c()) % p_;
        int d2 = (c * g.b() + d * g.d()) % p_;
        // canonical representative and the B-scaling factor
        int scale, idx2;
        if (c2 % p_ != 0) {
            scale = c2;
            int cinv = static_cast<int>(mod_inverse(BigInt(c2), BigInt(p_)));
            idx2 = 1 + (d2 * cinv) % p_;
        } else {
            scale = d2 % p_;
            idx2 = 0;
        }
        out[i] = values_[static_cast<size_t>(idx2)] * FqScalar(field_, scale).pow(r_);
    }
    return IndBChar(field_, p_, r_, std::move(out));
}

IndBChar psi(const VrElement& P) {
    const FqFieldPtr& f = P.field();
    const int p = f->p;
    if (!quotient_degree_ok(p, P.r())) throw std::invalid_argument("psi: degree below p+1");
    FqVec values;
    values.reserve(static_cast<size_t>(p + 1));
    values.push_back(P.evaluate(FqScalar::zero(f), FqScalar::one(f)));
    for (int t = 0; t < p; ++t)
        values.push_back(P.evaluate(FqScalar::one(f), FqScalar(f, t)));
    return IndBChar(f, p, P.r(), std::move(values));
}

IndBChar psi(const QuotElement& x) { return psi(x.rep()); }

namespace {

// cached per-(p, field) data for the r = 2p-2 quotient: the psi solve and the
// V_0 + V_{p-1} splitting
struct QuotContext {
    FqFieldPtr field;
    int p;
    long long r;  // 2p-2
    FqMatrix psi_inverse_matrix;   // values -> free coordinates
    QuotElement e0;                // [X^{2p-2} - X^{p-1}Y^{p-1} + Y^{2p-2}]
    QuotElement u0;                // [X^{2p-2}]
    FqMatrix iota;                 // V_{p-1} coefficients -> free coordinates
    FqMatrix basis_inverse;        // free coordinates -> (c_V0, V_{p-1} coeffs)
    int orbit_dimension = 0;

    explicit QuotContext(const FqFieldPtr& f) : field(f), p(f->p), r(2LL * f->p - 2) {
        build_psi();
        build_splitting();
    }

    QuotElement monomial_class(long long ydeg) const {
        return vstar_reduce(VrElement::monomial(field, r, ydeg, FqScalar::one(field)));
    }

    void build_psi() {
        auto free_idx = quotient_free_indices(p, r);
        size_t n = free_idx.size();
        FqMatrix m(n, fq_zero_vec(field, n));
        for (size_t col = 0; col < n; ++col) {
            IndBChar f = psi(monomial_class(free_idx[col]));
            for (size_t row = 0; row < n; ++row) m[row][col] = f.values()[row];
        }
        psi_inverse_matrix = fq_invert(m);  // invertibility is the bijectivity claim
    }

    void build_splitting() {
        FqScalar one = FqScalar::one(field);
        VrElement E(field, r);
        E.set_coeff(0, one);
        E.set_coeff(p - 1, -one);
        E.set_coeff(r, one);
        e0 = vstar_reduce(E);
        u0 = monomial_class(0);

        // orbit span of u0 under the full group, by Gaussian closure
        orbit_dimension = orbit_span_dimension();

        // the equivariant embedding iota: X^{p-1} -> u0, extended through group
        // translates; the identity is forced first so iota(X^{p-1}) = u0
        std::vector<VrElement> sources;
        std::vector<QuotElement> targets;
        VrElement xp1 = VrElement::monomial(field, p - 1, 0, one);
        sources.push_back(xp1);
        targets.push_back(u0);
        FqMatrix span_rows;  // for rank bookkeeping
        span_rows.push_back(xp1.coeffs());
        for (const auto& g : enumerate_gl2(p)) {
            if (sources.size() == static_cast<size_t>(p)) break;
            VrElement v = gl2_act(g, xp1);
            FqMatrix trial = span_rows;
            trial.push_back(v.coeffs());
            if (fq_rank(trial) == static_cast<int>(trial.size())) {
                span_rows = std::move(trial);
                sources.push_back(v);
                targets.push_back(quot_act(g, u0));
            }
        }
        if (sources.size() != static_cast<size_t>(p))
            throw std::logic_error("splitting: orbit of X^(p-1) does not span V_(p-1)");
        // solve iota = T * A^-1 with columns the sources/targets
        size_t np = static_cast<size_t>(p);
        FqMatrix A(np, fq_zero_vec(field, np));
        for (size_t j = 0; j < np; ++j)
            for (size_t i = 0; i < np; ++i) A[i][j] = sources[j].coeffs()[i];
        FqMatrix Ainv = fq_invert(A);
        FqMatrix T(np + 1, fq_zero_vec(field, np));
        for (size_t j = 0; j < np; ++j) {
            FqVec tc = quotient_coords(targets[j]);
            for (size_t i = 0; i < np + 1; ++i) T[i][j] = tc[i];
        }
        iota.assign(np + 1, fq_zero_vec(field, np));
        for (size_t i = 0; i < np + 1; ++i)
            for (size_t j = 0; j < np; ++j)
                for (size_t k = 0; k < np; ++k)
                    iota[i][j] = iota[i][j] + T[i][k] * Ainv[k][j];

        // equivariance of iota is asserted, not assumed
        for (const auto& g : gl2_generators(p)) {
            for (long long ydeg = 0; ydeg < p; ++ydeg) {
                VrElement v = VrElement::monomial(field, p - 1, ydeg, one);
                FqVec lhs = fq_apply(iota, gl2_act(g, v).coeffs());
                QuotElement iv = class_from_coords(fq_apply(iota, v.coeffs()));
                FqVec rhs = quotient_coords(quot_act(g, iv));
                if (lhs != rhs) throw std::logic_error("splitting: iota not equivariant");
            }
            if (quot_act(g, e0) != e0)
                throw std::logic_error("splitting: V_0 generator not fixed");
        }

        // change of basis [e0 | iota(e_0) ... iota(e_{p-1})]; invertibility is
        // exactly the direct-sum statement
        FqMatrix B(np + 1, fq_zero_vec(field, np + 1));
        FqVec e0c = quotient_coords(e0);
        for (size_t i = 0; i < np + 1; ++i) B[i][0] = e0c[i];
        for (size_t j = 0; j < np; ++j)
            for (size_t i = 0; i < np + 1; ++i) B[i][j + 1] = iota[i][j];
        basis_inverse = fq_invert(B);
    }

    int orbit_span_dimension() const {
        FqMatrix rows;
        std::vector<QuotElement> frontier{u0};
        rows.push_back(quotient_coords(u0));
        auto gens = gl2_generators(p);
        while (!frontier.empty()) {
            std::vector<QuotElement> next;
            for (const auto& x : frontier) {
                for (const auto& g : gens) {
                    QuotElement y = quot_act(g, x);
                    FqMatrix trial = rows;
                    trial.push_back(quotient_coords(y));
                    if (fq_rank(trial) == static_cast<int>(trial.size())) {
                        rows = std::move(trial);
                        next.push_back(y);
                    }
                }
            }
            frontier = std::move(next);
        }
        return static_cast<int>(rows.size());
    }

    QuotElement class_from_coords(const FqVec& coords) const {
        auto free_idx = quotient_free_indices(p, r);
        VrElement rep(field, r);
        for (size_t i = 0; i < free_idx.size(); ++i) rep.set_coeff(free_idx[i], coords[i]);
        return vstar_reduce(rep);
    }
};

const QuotContext& quot_context(const FqFieldPtr& field) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const QuotContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(field->p, field->k);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_shared<const QuotContext>(field)).first;
    return *it->second;
}

}  // namespace

QuotElement psi_inverse(const IndBChar& f) {
    const auto& ctx = quot_context(f.field());
    if (f.r() != 0) throw std::invalid_argument("psi_inverse: character must be trivial");
    FqVec coords = fq_apply(ctx.psi_inverse_matrix, f.values());
    return ctx.class_from_coords(coords);
}

QuotElement v0_generator(const FqFieldPtr& field) { return quot_context(field).e0; }

QuotElement vp1_generator(const FqFieldPtr& field) { return quot_context(field).u0; }

std::pair<FqScalar, VrElement> decompose_2p2(const QuotElement& x) {
    const auto& ctx = quot_context(x.field());
    if (x.r() != ctx.r) throw std::invalid_argument("decompose_2p2: need r = 2p-2");
    FqVec c = fq_apply(ctx.basis_inverse, quotient_coords(x));
    VrElement q(x.field(), ctx.p - 1);
    for (size_t j = 0; j + 1 < c.size(); ++j) q.set_coeff(static_cast<long long>(j), c[j + 1]);
    return {c[0], q};
}

QuotElement embed_vp1(const VrElement& q) {
    const auto& ctx = quot_context(q.field());
    if (q.r() != ctx.p - 1) throw std::invalid_argument("embed_vp1: need r = p-1");
    return ctx.class_from_coords(fq_apply(ctx.iota, q.coeffs()));
}

int vp1_copy_dimension(const FqFieldPtr& field) {
    return quot_context(field).orbit_dimension;
}

FqScalar sum_powers(long long j, const FqFieldPtr& field) {
    if (j < 1) throw std::invalid_argument("sum_powers: j >= 1");
    FqScalar acc = FqScalar::zero(field);
    for (int i = 0; i < field->p; ++i) acc = acc + FqScalar(field, i).pow(j);
    return acc;
}

}  // namespace iwahori
