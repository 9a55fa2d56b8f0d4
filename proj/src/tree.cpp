#include "iwahori/tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace iwahori {

std::string VertexKey::str() const {
    std::ostringstream os;
    os << n << ";";
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i) os << ",";
        os << digits[i].first << ":" << digits[i].second;
    }
    return os.str();
}

Mat2 canonical_matrix(const VertexKey& v, int p) {
    PadicRational a = PadicRational::zero(p);
    for (const auto& [i, d] : v.digits)
        a = a + PadicRational::from_integer(p, d) * PadicRational::p_power(p, i);
    return Mat2(p, PadicRational::p_power(p, v.n), a, PadicRational::zero(p),
                PadicRational::one(p));
}

VertexKey vertex_normal_form(const Mat2& g) {
    const int p = g.prime();
    if (g.det().is_zero()) throw std::invalid_argument("vertex_normal_form: singular");
    // column reduction over Z_p: bring g Z_p^2 to the form (x top; 0 y)
    PadicRational a = g.a(), b = g.b(), c = g.c(), d = g.d();
    auto lt = [](const PadicRational& x, const PadicRational& y) {
        // val(x) < val(y), with val(0) = +infinity
        if (x.is_zero()) return false;
        if (y.is_zero()) return true;
        return *x.val() < *y.val();
    };
    if (lt(c, d)) {
        std::swap(a, b);
        std::swap(c, d);
    }
    // now val(d) <= val(c) and d != 0; clear the bottom-left entry
    PadicRational t = c / d;  // integral
    a = a - t * b;
    // lattice = span{(a, 0), (b, d)}; homothety-normalize and read off the key
    long long n = *a.val() - *d.val();
    VertexKey key;
    key.n = n;
    PadicRational q = b / d;  // the class of the top-right entry mod p^n
    if (!q.is_zero() && *q.val() < n) {
        long long e = *q.val();
        long long count = n - e;
        BigInt P = p;
        BigInt m = pow_bigint(P, static_cast<unsigned long long>(count));
        BigInt num = numerator(q.unit()) % m;
        if (num < 0) num += m;
        BigInt u = (num * mod_inverse(denominator(q.unit()) % m, m)) % m;
        for (long long j = 0; j < count; ++j) {
            int digit = static_cast<int>(u % P);
            u /= P;
            if (digit != 0) key.digits.emplace_back(e + j, digit);
        }
    }
    return key;
}

bool lattice_equal(const Mat2& g, const Mat2& h) {
    if (g.det().is_zero() || h.det().is_zero())
        throw std::invalid_argument("lattice_equal: singular");
    Mat2 m = h.inv() * g;
    long long vd = *m.det().val();
    if (vd % 2 != 0) return false;
    long long half = vd / 2;
    for (int i = 0; i < 4; ++i) {
        auto v = m.at(i / 2, i % 2).val();
        if (v && *v < half) return false;
    }
    return true;  // min entry valuation is forced to equal half by det
}

std::vector<VertexKey> neighbors(const VertexKey& v, int p) {
    std::vector<VertexKey> out;
    out.reserve(static_cast<size_t>(p) + 1);
    for (int lambda = 0; lambda < p; ++lambda) {
        VertexKey nb;
        nb.n = v.n + 1;
        nb.digits = v.digits;
        if (lambda != 0) nb.digits.emplace_back(v.n, lambda);
        out.push_back(std::move(nb));
    }
    VertexKey up;
    up.n = v.n - 1;
    up.digits = v.digits;
    if (!up.digits.empty() && up.digits.back().first == v.n - 1) up.digits.pop_back();
    out.push_back(std::move(up));
    return out;
}

bool adjacent(const VertexKey& u, const VertexKey& v, int p) {
    auto nb = neighbors(u, p);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

EdgeKey base_edge(int p) {
    return EdgeKey{base_vertex(), vertex_normal_form(Mat2::alpha(p))};
}

EdgeKey edge_from_group(const Mat2& g) {
    return EdgeKey{vertex_normal_form(g), vertex_normal_form(g * Mat2::alpha(g.prime()))};
}

std::vector<EdgeKey> continuations(const EdgeKey& e, int p) {
    std::vector<EdgeKey> out;
    out.reserve(static_cast<size_t>(p));
    for (const auto& u : neighbors(e.terminal, p))
        if (u != e.origin) out.push_back(EdgeKey{e.terminal, u});
    return out;
}

namespace {

Mat2 coset_rep_uncached(const EdgeKey& e, int p) {
    Mat2 g1 = canonical_matrix(e.origin, p);
    VertexKey target = act_vertex(g1.inv(), e.terminal);
    // target is a neighbor of the base vertex
    if (target.n == -1 && target.digits.empty()) return g1;
    if (target.n == 1) {
        int lambda = 0;
        if (!target.digits.empty()) {
            if (target.digits.size() != 1 || target.digits[0].first != 0)
                throw std::logic_error("coset_rep: endpoints not adjacent");
            lambda = target.digits[0].second;
        }
        return g1 * Mat2::h(p, lambda);
    }
    throw std::logic_error("coset_rep: endpoints not adjacent");
}

}  // namespace

Mat2 coset_rep(const EdgeKey& e, int p) {
    // memoized; the result depends only on the key
    static std::mutex mu;
    static std::map<std::pair<int, EdgeKey>, Mat2> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, e});
        if (it != cache.end()) return it->second;
    }
    Mat2 rep = coset_rep_uncached(e, p);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(p, e), rep);
    return rep;
}

VertexKey act_vertex(const Mat2& g, const VertexKey& v) {
    return vertex_normal_form(g * canonical_matrix(v, g.prime()));
}

EdgeKey act_edge(const Mat2& g, const EdgeKey& e) {
    return EdgeKey{act_vertex(g, e.origin), act_vertex(g, e.terminal)};
}

std::vector<VertexKey> ball(int p, int radius) {
    if (radius < 0) throw std::invalid_argument("ball: radius >= 0");
    std::vector<VertexKey> order{base_vertex()};
    std::set<VertexKey> seen{base_vertex()};
    size_t level_start = 0;
    for (int d = 0; d < radius; ++d) {
        size_t level_end = order.size();
        for (size_t i = level_start; i < level_end; ++i) {
            for (const auto& nb : neighbors(order[i], p)) {
                if (seen.insert(nb).second) order.push_back(nb);
            }
        }
        level_start = level_end;
    }
    return order;
}

std::vector<EdgeKey> edge_ball(int p, int radius) {
    auto verts = ball(p, radius);
    std::set<VertexKey> in(verts.begin(), verts.end());
    std::vector<EdgeKey> out;
    for (const auto& v : verts)
        for (const auto& u : neighbors(v, p))
            if (in.count(u)) out.push_back(EdgeKey{v, u});
    return out;
}

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::map<VertexKey, int> index_vertices(const std::vector<VertexKey>& verts) {
    std::map<VertexKey, int> idx;
    int i = 0;
    for (const auto& v : verts) idx.emplace(v, i++);
    return idx;
}

}  // namespace

std::string dot_ball(int p, int radius) {
    auto verts = ball(p, radius);
    auto idx = index_vertices(verts);
    std::ostringstream os;
    os << "graph tree {\n  node [shape=circle, fontsize=10];\n";
    for (const auto& v : verts)
        os << "  v" << idx.at(v) << " [label=" << quote(v.str()) << "];\n";
    for (const auto& v : verts)
        for (const auto& u : neighbors(v, p))
            if (idx.count(u) && idx.at(v) < idx.at(u))
                os << "  v" << idx.at(v) << " -- v" << idx.at(u) << ";\n";
    os << "}\n";
    return os.str();
}

std::string dot_support(int p, int radius, const std::vector<EdgeKey>& red,
                        const std::vector<EdgeKey>& blue) {
    auto verts = ball(p, radius);
    auto idx = index_vertices(verts);
    std::set<EdgeKey> rset(red.begin(), red.end()), bset(blue.begin(), blue.end());
    // make sure highlighted endpoints are present even outside the ball
    for (const auto& s : {rset, bset})
        for (const auto& e : s)
            for (const auto& v : {e.origin, e.terminal})
                if (!idx.count(v)) {
                    idx.emplace(v, static_cast<int>(idx.size()));
                    verts.push_back(v);
                }
    std::ostringstream os;
    os << "digraph support {\n  node [shape=circle, fontsize=10];\n";
    for (const auto& v : verts)
        os << "  v" << idx.at(v) << " [label=" << quote(v.str()) << "];\n";
    std::set<std::pair<int, int>> drawn;
    auto emit = [&](const EdgeKey& e, const char* color) {
        os << "  v" << idx.at(e.origin) << " -> v" << idx.at(e.terminal) << " [color="
           << color << ", penwidth=2];\n";
        drawn.insert({std::min(idx.at(e.origin), idx.at(e.terminal)),
                      std::max(idx.at(e.origin), idx.at(e.terminal))});
    };
    for (const auto& e : rset) emit(e, "red");
    for (const auto& e : bset) emit(e, "blue");
    for (const auto& v : verts)
        for (const auto& u : neighbors(v, p)) {
            if (!idx.count(u) || idx.at(v) >= idx.at(u)) continue;
            if (drawn.count({std::min(idx.at(v), idx.at(u)), std::max(idx.at(v), idx.at(u))}))
                continue;
            os << "  v" << idx.at(v) << " -> v" << idx.at(u)
               << " [dir=none, color=black];\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace iwahori
