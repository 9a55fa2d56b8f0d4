#include "iwahori/comparison.hpp"

#include <sstream>

namespace iwahori {

namespace {

// Y^{2p-2} - X^{p-1}Y^{p-1}, the image of the canonical generator
VrElement phi_seed(const FqFieldPtr& f) {
    int p = f->p;
    VrElement v(f, 2 * p - 2);
    v.set_coeff(2 * p - 2, FqScalar::one(f));
    v.set_coeff(p - 1, -FqScalar::one(f));
    return v;
}

}  // namespace

SphericalElement phi(const IwahoriElement& x) {
    if (!x.char_trivial())
        throw std::invalid_argument("phi: character must be trivial on I");
    const int p = x.prime();
    SphericalElement out(x.field(), weight_quotient(p));
    VrElement seed = phi_seed(x.field());
    for (const auto& [e, c] : x.support())
        out = out + normalize_spherical(coset_rep(e, p), seed.scaled(c));
    return out;
}

SphericalElement project_V0(const SphericalElement& y) {
    if (!y.weight().quotient) throw std::invalid_argument("project_V0: quotient weight only");
    SphericalElement out(y.field(), weight_vr(0));
    for (const auto& [v, val] : y.support()) {
        auto [c, q] = decompose_2p2(vstar_reduce(val));
        out.add_term(v, VrElement::monomial(y.field(), 0, 0, c));
    }
    return out;
}

SphericalElement project_Vp1(const SphericalElement& y) {
    if (!y.weight().quotient)
        throw std::invalid_argument("project_Vp1: quotient weight only");
    SphericalElement out(y.field(), weight_vr(y.prime() - 1));
    for (const auto& [v, val] : y.support()) {
        auto [c, q] = decompose_2p2(vstar_reduce(val));
        out.add_term(v, q);
    }
    return out;
}

SphericalElement psi_r(const IwahoriElement& x) {
    const int p = x.prime();
    if (x.kind() != CharKind::d || x.r() <= 0 || x.r() >= p - 1)
        throw std::invalid_argument("psi_r: needs kind d with 0 < r < p-1");
    SphericalElement out(x.field(), weight_vr(x.r()));
    VrElement xr = VrElement::monomial(x.field(), x.r(), 0, FqScalar::one(x.field()));
    for (const auto& [e, c] : x.support())
        out = out + normalize_spherical(coset_rep(e, p) * Mat2::beta(p), xr.scaled(c));
    return out;
}

IwahoriElement theta(const IwahoriElement& x) {
    if (!x.char_trivial()) throw std::invalid_argument("theta: character must be trivial");
    return T10(x);
}

namespace {

IwahoriElement flip_impl(const IwahoriElement& x, CharKind from, CharKind to) {
    const int p = x.prime();
    if (x.kind() != from || x.r() <= 0 || x.r() >= p - 1)
        throw std::invalid_argument("flip: needs 0 < r < p-1 and the matching side");
    IwahoriElement out(x.field(), to, x.r());
    for (const auto& [e, c] : x.support()) {
        Mat2 g = coset_rep(e, p) * Mat2::beta(p);
        EdgeKey enew = edge_from_group(g);
        Mat2 k = coset_rep(enew, p).inv() * g;
        out.add_term(enew, c * char_value(k, to, x.r(), x.field()));
    }
    return out;
}

}  // namespace

IwahoriElement flip(const IwahoriElement& x) {
    return flip_impl(x, CharKind::d, CharKind::a);
}

IwahoriElement flip_back(const IwahoriElement& x) {
    return flip_impl(x, CharKind::a, CharKind::d);
}

bool ComparisonReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void ComparisonReport::append(const ComparisonReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string report_to_tap(const ComparisonReport& r) {
    std::ostringstream os;
    os << "TAP version 13\n";
    os << "# suite " << r.suite << " p=" << r.p << " seed=" << r.seed
       << " radius=" << r.radius << " trials=" << r.trials << "\n";
    os << "1.." << r.checks.size() << "\n";
    size_t n = 0;
    for (const auto& c : r.checks) {
        ++n;
        if (c.pass) {
            os << "ok " << n << " - " << c.id << "\n";
        } else {
            os << "not ok " << n << " - " << c.id;
            if (c.failing_seed) os << " # seed " << *c.failing_seed;
            os << "\n";
            if (!c.detail.empty()) os << "# " << c.detail << "\n";
        }
    }
    return os.str();
}

}  // namespace iwahori
