#include "iwahori/inductions.hpp"

#include <random>

namespace iwahori {

Weight weight_vr(long long r) { return Weight{r, false}; }

Weight weight_quotient(int p) { return Weight{2LL * p - 2, true}; }

Weight infer_weight(int p, long long r) {
    if (r >= 0 && r <= p - 1) return weight_vr(r);
    if (r == 2LL * p - 2) return weight_quotient(p);
    throw std::invalid_argument("infer_weight: degree is neither <= p-1 nor 2p-2");
}

SphericalElement::SphericalElement(FqFieldPtr field, Weight w)
    : field_(std::move(field)), w_(w) {
    if (!field_) throw std::invalid_argument("SphericalElement: null field");
    const int p = field_->p;
    if (w.quotient) {
        if (w.r != 2LL * p - 2)
            throw std::invalid_argument("SphericalElement: quotient weight needs r = 2p-2");
    } else if (w.r < 0 || w.r > p - 1) {
        throw std::invalid_argument("SphericalElement: weight out of range");
    }
}

SphericalElement SphericalElement::single(const FqFieldPtr& field, Weight w,
                                          const VertexKey& v, const VrElement& value) {
    SphericalElement x(field, w);
    VrElement val = w.quotient ? vstar_reduce(value).rep() : value;
    x.add_term(v, val);
    return x;
}

void SphericalElement::add_term(const VertexKey& v, const VrElement& value) {
    if (value.r() != w_.r) throw std::invalid_argument("add_term: degree mismatch");
    auto it = sup_.find(v);
    if (it == sup_.end()) {
        if (!value.is_zero()) sup_.emplace(v, value);
        return;
    }
    it->second = it->second + value;
    if (it->second.is_zero()) sup_.erase(it);
}

SphericalElement SphericalElement::operator+(const SphericalElement& o) const {
    if (w_ != o.w_ || field_->p != o.field_->p)
        throw std::invalid_argument("spherical add: parameter mismatch");
    SphericalElement out = *this;
    for (const auto& [v, val] : o.sup_) out.add_term(v, val);
    return out;
}

SphericalElement SphericalElement::operator-(const SphericalElement& o) const {
    return *this + o.scaled(-FqScalar::one(field_));
}

SphericalElement SphericalElement::scaled(const FqScalar& s) const {
    SphericalElement out(field_, w_);
    if (s.is_zero()) return out;
    for (const auto& [v, val] : sup_) out.sup_.emplace(v, val.scaled(s));
    return out;
}

bool SphericalElement::operator==(const SphericalElement& o) const {
    return w_ == o.w_ && field_->p == o.field_->p && sup_ == o.sup_;
}

IwahoriElement::IwahoriElement(FqFieldPtr field, CharKind kind, long long r)
    : field_(std::move(field)), kind_(kind) {
    if (!field_) throw std::invalid_argument("IwahoriElement: null field");
    long long m = field_->p - 1;
    r_ = ((r % m) + m) % m;
}

IwahoriElement IwahoriElement::indicator(const FqFieldPtr& field, CharKind kind,
                                         long long r, const EdgeKey& e) {
    IwahoriElement x(field, kind, r);
    x.add_term(e, FqScalar::one(field));
    return x;
}

void IwahoriElement::add_term(const EdgeKey& e, const FqScalar& c) {
    auto it = sup_.find(e);
    if (it == sup_.end()) {
        if (!c.is_zero()) sup_.emplace(e, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) sup_.erase(it);
}

IwahoriElement IwahoriElement::operator+(const IwahoriElement& o) const {
    if (field_->p != o.field_->p || kind_ != o.kind_ || r_ != o.r_)
        throw std::invalid_argument("iwahori add: parameter mismatch");
    IwahoriElement out = *this;
    for (const auto& [e, c] : o.sup_) out.add_term(e, c);
    return out;
}

IwahoriElement IwahoriElement::operator-(const IwahoriElement& o) const {
    return *this + o.scaled(-FqScalar::one(field_));
}

IwahoriElement IwahoriElement::scaled(const FqScalar& s) const {
    IwahoriElement out(field_, kind_, r_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : sup_) out.sup_.emplace(e, c * s);
    return out;
}

bool IwahoriElement::operator==(const IwahoriElement& o) const {
    return field_->p == o.field_->p && kind_ == o.kind_ && r_ == o.r_ && sup_ == o.sup_;
}

namespace {

void normalize_spherical_into(SphericalElement& out, const Mat2& g, const VrElement& v) {
    const int p = g.prime();
    VertexKey key = vertex_normal_form(g);
    Mat2 k = canonical_matrix(key, p).inv() * g;
    auto fk = factor_KZ(k);
    if (!fk) throw std::logic_error("normalize_spherical: residual factor not in KZ");
    VrElement moved = gl2_act(reduce_mod_p(fk->u), v);
    if (out.weight().quotient) moved = vstar_reduce(moved).rep();
    out.add_term(key, moved);
}

void normalize_iwahori_into(IwahoriElement& out, const Mat2& g, const FqScalar& c) {
    const int p = g.prime();
    EdgeKey e = edge_from_group(g);
    Mat2 k = coset_rep(e, p).inv() * g;
    FqScalar coeff = c * char_value(k, out.kind(), out.r(), out.field());
    out.add_term(e, coeff);
}

Mat2 upper_p_lambda(int p, int lambda) {
    // (p lambda; 0 1)
    return Mat2::from_integers(p, p, lambda, 0, 1);
}

Mat2 lower_p_lambda(int p, int lambda) {
    // (1 0; p*lambda p)
    return Mat2::from_integers(p, 1, 0, static_cast<long long>(p) * lambda, p);
}

}  // namespace

SphericalElement normalize_spherical(const Mat2& g, const VrElement& v) {
    const int p = g.prime();
    if (v.field()->p != p) throw std::invalid_argument("normalize_spherical: prime mismatch");
    SphericalElement out(v.field(), infer_weight(p, v.r()));
    normalize_spherical_into(out, g, v);
    return out;
}

IwahoriElement normalize_iwahori(const Mat2& g, const FqScalar& c, CharKind kind,
                                 long long r) {
    IwahoriElement out(c.field(), kind, r);
    normalize_iwahori_into(out, g, c);
    return out;
}

SphericalElement act_g(const Mat2& h, const SphericalElement& x) {
    SphericalElement out(x.field(), x.weight());
    for (const auto& [v, val] : x.support())
        normalize_spherical_into(out, h * canonical_matrix(v, x.prime()), val);
    return out;
}

IwahoriElement act_g(const Mat2& h, const IwahoriElement& x) {
    IwahoriElement out(x.field(), x.kind(), x.r());
    for (const auto& [e, c] : x.support())
        normalize_iwahori_into(out, h * coset_rep(e, x.prime()), c);
    return out;
}

SphericalElement T_spherical(const SphericalElement& x) {
    const int p = x.prime();
    const FqFieldPtr& f = x.field();
    SphericalElement out(f, x.weight());
    FqScalar zero = FqScalar::zero(f), one = FqScalar::one(f);
    for (const auto& [v, val] : x.support()) {
        Mat2 g = canonical_matrix(v, p);
        for (int lambda = 0; lambda < p; ++lambda) {
            // P(X, -lambda X + pY) with p = 0 in F_q
            VrElement moved = substitute(val, one, FqScalar(f, -lambda), zero, zero);
            if (x.weight().quotient) moved = vstar_reduce(moved).rep();
            if (!moved.is_zero())
                normalize_spherical_into(out, g * upper_p_lambda(p, lambda), moved);
        }
        // P(pX, Y) = P(0, Y)
        VrElement last = substitute(val, zero, zero, zero, one);
        if (x.weight().quotient) last = vstar_reduce(last).rep();
        if (!last.is_zero()) normalize_spherical_into(out, g * Mat2::alpha(p), last);
    }
    return out;
}

IwahoriElement T10(const IwahoriElement& x) {
    if (!x.char_trivial())
        throw std::invalid_argument("T10: character must be trivial on I");
    const int p = x.prime();
    IwahoriElement out(x.field(), x.kind(), x.r());
    for (const auto& [e, c] : x.support())
        normalize_iwahori_into(out, coset_rep(e, p) * Mat2::beta(p), c);
    return out;
}

IwahoriElement T12(const IwahoriElement& x) {
    const int p = x.prime();
    IwahoriElement out(x.field(), x.kind(), x.r());
    for (const auto& [e, c] : x.support()) {
        Mat2 g = coset_rep(e, p);
        for (int lambda = 0; lambda < p; ++lambda)
            normalize_iwahori_into(out, g * lower_p_lambda(p, lambda), c);
    }
    return out;
}

IwahoriElement Tm10(const IwahoriElement& x) {
    const int p = x.prime();
    IwahoriElement out(x.field(), x.kind(), x.r());
    for (const auto& [e, c] : x.support()) {
        Mat2 g = coset_rep(e, p);
        for (int lambda = 0; lambda < p; ++lambda)
            normalize_iwahori_into(out, g * upper_p_lambda(p, lambda), c);
    }
    return out;
}

SmoothCharSymbol::SmoothCharSymbol(FqScalar t_, long long a_) : t(std::move(t_)) {
    if (t.is_zero()) throw std::invalid_argument("SmoothCharSymbol: t must be nonzero");
    long long m = t.field()->p - 1;
    a = ((a_ % m) + m) % m;
}

SmoothCharSymbol SmoothCharSymbol::trivial(const FqFieldPtr& field) {
    return SmoothCharSymbol(FqScalar::one(field), 0);
}

bool SmoothCharSymbol::is_trivial() const {
    return t == FqScalar::one(t.field()) && a == 0;
}

FqScalar SmoothCharSymbol::eval(const PadicRational& x) const {
    if (x.is_zero()) throw std::invalid_argument("SmoothCharSymbol: eval at 0");
    FqScalar unit_part = FqScalar(t.field(), x.unit_residue()).pow(a);
    return t.pow(*x.val()) * unit_part;
}

SmoothCharSymbol SmoothCharSymbol::inverse() const {
    return SmoothCharSymbol(t.inverse(), -a);
}

SmoothCharSymbol SmoothCharSymbol::operator*(const SmoothCharSymbol& o) const {
    return SmoothCharSymbol(t * o.t, a + o.a);
}

bool SmoothCharSymbol::operator==(const SmoothCharSymbol& o) const {
    return t == o.t && a == o.a;
}

SphericalElement twist_eta(const SphericalElement& x, const SmoothCharSymbol& eta) {
    SphericalElement out(x.field(), x.weight());
    for (const auto& [v, val] : x.support()) {
        FqScalar s = eta.eval(canonical_matrix(v, x.prime()).det());
        out.add_term(v, val.scaled(s));
    }
    return out;
}

IwahoriElement twist_eta(const IwahoriElement& x, const SmoothCharSymbol& eta) {
    IwahoriElement out(x.field(), x.kind(), x.r());
    for (const auto& [e, c] : x.support()) {
        FqScalar s = eta.eval(coset_rep(e, x.prime()).det());
        out.add_term(e, c * s);
    }
    return out;
}

namespace {

FqScalar random_scalar(const FqFieldPtr& f, std::mt19937_64& gen) {
    std::vector<int> c(static_cast<size_t>(f->k));
    for (auto& v : c) v = static_cast<int>(gen() % static_cast<unsigned long long>(f->p));
    return FqScalar::from_coeffs(f, std::move(c));
}

FqScalar random_nonzero(const FqFieldPtr& f, std::mt19937_64& gen) {
    for (;;) {
        FqScalar s = random_scalar(f, gen);
        if (!s.is_zero()) return s;
    }
}

std::vector<size_t> distinct_indices(size_t pool, size_t count, std::mt19937_64& gen) {
    count = std::min(count, pool);
    std::vector<size_t> idx(pool);
    for (size_t i = 0; i < pool; ++i) idx[i] = i;
    for (size_t i = 0; i < count; ++i) {
        size_t j = i + static_cast<size_t>(gen() % (pool - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(count);
    return idx;
}

}  // namespace

IwahoriElement random_iwahori(const FqFieldPtr& field, CharKind kind, long long r,
                              int radius, int count, unsigned long long seed) {
    if (radius < 0 || count < 0) throw std::invalid_argument("random_iwahori: bad shape");
    IwahoriElement out(field, kind, r);
    if (count == 0) return out;
    auto edges = edge_ball(field->p, radius);
    std::mt19937_64 gen(seed);
    for (size_t i : distinct_indices(edges.size(), static_cast<size_t>(count), gen))
        out.add_term(edges[i], random_nonzero(field, gen));
    return out;
}

SphericalElement random_spherical(const FqFieldPtr& field, Weight w, int radius,
                                  int count, unsigned long long seed) {
    if (radius < 0 || count < 0) throw std::invalid_argument("random_spherical: bad shape");
    SphericalElement out(field, w);
    if (count == 0) return out;
    auto verts = ball(field->p, radius);
    std::mt19937_64 gen(seed);
    for (size_t i : distinct_indices(verts.size(), static_cast<size_t>(count), gen)) {
        VrElement val(field, w.r);
        do {
            val = VrElement(field, w.r);
            if (w.quotient) {
                for (long long idx : quotient_free_indices(field->p, w.r))
                    val.set_coeff(idx, random_scalar(field, gen));
            } else {
                for (long long idx = 0; idx <= w.r; ++idx)
                    val.set_coeff(idx, random_scalar(field, gen));
            }
        } while (val.is_zero());
        out.add_term(verts[i], val);
    }
    return out;
}

}  // namespace iwahori
