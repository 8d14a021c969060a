#include "hopftwist/geometry.hpp"

#include <ostream>

namespace hopftwist {

int wedge_sign(unsigned a, unsigned b) {
    int swaps = 0;
    for (unsigned bit = 0; bit < 32; ++bit)
        if (b & (1u << bit)) swaps += __builtin_popcount(a & ~((2u << bit) - 1));
    return swaps % 2 ? -1 : 1;
}

namespace {

bool degree_zero_only(const Geom& g) {
    for (const auto& [k, v] : g.terms())
        if (k.m.mask) return false;
    return true;
}

GeomKind join_kind(const Geom& a, const Geom& b) {
    if (a.kind() == b.kind()) return a.kind();
    if (a.kind() == GeomKind::Function || degree_zero_only(a)) {
        if (b.kind() == GeomKind::Function || !degree_zero_only(b) || a.kind() == GeomKind::Function) return b.kind();
    }
    if (b.kind() == GeomKind::Function || degree_zero_only(b)) return a.kind();
    throw std::invalid_argument("cannot combine multivectors with forms");
}

int join_dim(const Geom& a, const Geom& b) {
    if (a.dim() && b.dim() && a.dim() != b.dim()) throw std::invalid_argument("coordinate dimension mismatch");
    return a.dim() ? a.dim() : b.dim();
}

std::string hbar_text(unsigned h) {
    if (h == 0) return "";
    return h == 1 ? "hbar" : "hbar^" + std::to_string(h);
}

std::string join(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

/// Right derivative of del_I by theta_i: sign and remaining mask.
int right_derivative_sign(unsigned mask, int i) {
    unsigned above = mask & ~((2u << i) - 1);
    return __builtin_popcount(above) % 2 ? -1 : 1;
}

/// i_{del_j} on dx^I as a left derivation.
int left_insert_sign(unsigned mask, int j) {
    unsigned below = mask & ((1u << j) - 1);
    return __builtin_popcount(below) % 2 ? -1 : 1;
}

}  // namespace

std::string coordinate_name(int i) { return "x" + std::to_string(i + 1); }

Geom::Geom(GeomKind kind, int dim) : kind_(kind), dim_(dim) {
    if (dim < 0 || dim > kMaxCoords) throw std::invalid_argument("coordinate dimension out of range");
}

Geom Geom::constant(int dim, const Scalar& c) { return monomial(GeomKind::Function, dim, GMono{}, c); }

Geom Geom::coordinate(int dim, int i) {
    if (i < 0 || i >= dim) throw std::invalid_argument("coordinate index out of range");
    GMono m;
    m.x[static_cast<std::size_t>(i)] = 1;
    return monomial(GeomKind::Function, dim, m);
}

Geom Geom::partial(int dim, int i) {
    if (i < 0 || i >= dim) throw std::invalid_argument("coordinate index out of range");
    GMono m;
    m.mask = static_cast<std::uint8_t>(1u << i);
    return monomial(GeomKind::Multivector, dim, m);
}

Geom Geom::dx(int dim, int i) {
    if (i < 0 || i >= dim) throw std::invalid_argument("coordinate index out of range");
    GMono m;
    m.mask = static_cast<std::uint8_t>(1u << i);
    return monomial(GeomKind::Form, dim, m);
}

Geom Geom::monomial(GeomKind kind, int dim, const GMono& m, const Scalar& c, unsigned h) {
    Geom g(kind, dim);
    if (kind == GeomKind::Function && m.mask) throw std::invalid_argument("functions carry no wedge part");
    g.add(h, m, c);
    return g;
}

std::optional<int> Geom::degree() const {
    std::optional<int> d;
    for (const auto& [k, v] : terms()) {
        int e = __builtin_popcount(k.m.mask);
        if (d && *d != e) return std::nullopt;
        d = e;
    }
    return d.value_or(0);
}

Geom Geom::component(int degree) const {
    Geom g(kind_, dim_);
    for (const auto& [k, v] : terms())
        if (__builtin_popcount(k.m.mask) == degree) g.add(k.h, k.m, v);
    return g;
}

int Geom::max_degree() const {
    int d = 0;
    for (const auto& [k, v] : terms()) d = std::max(d, __builtin_popcount(k.m.mask));
    return d;
}

void Geom::adopt(const Geom& o) {
    GeomKind k = join_kind(*this, o);
    dim_ = join_dim(*this, o);
    kind_ = k;
}

Geom& Geom::operator+=(const Geom& o) {
    adopt(o);
    plus(o);
    return *this;
}

Geom& Geom::operator-=(const Geom& o) {
    adopt(o);
    minus(o);
    return *this;
}

Geom operator*(Geom a, const Scalar& c) {
    a.scale_in_place(c);
    return a;
}

Geom operator*(const Geom& a, const Geom& b) {
    Geom r(join_kind(a, b), join_dim(a, b));
    const unsigned n = truncation_order();
    for (const auto& [ka, va] : a.terms())
        for (const auto& [kb, vb] : b.terms()) {
            if (ka.h + kb.h > n || (ka.m.mask & kb.m.mask)) continue;
            GMono m;
            for (std::size_t i = 0; i < m.x.size(); ++i) m.x[i] = static_cast<std::uint8_t>(ka.m.x[i] + kb.m.x[i]);
            m.mask = static_cast<std::uint8_t>(ka.m.mask | kb.m.mask);
            Scalar c = va * vb;
            if (wedge_sign(ka.m.mask, kb.m.mask) < 0) c = -c;
            r.add(ka.h + kb.h, m, c);
        }
    return r;
}

bool operator==(const Geom& a, const Geom& b) {
    if (!(a.terms() == b.terms())) return false;
    return a.kind() == b.kind() || degree_zero_only(a) || a.kind() == GeomKind::Function ||
           b.kind() == GeomKind::Function;
}

Geom Geom::hbar_shift(unsigned k) const {
    Geom g = *this;
    g.hbar_shift_in_place(k);
    return g;
}

Geom Geom::order(unsigned h) const {
    Geom g(kind_, dim_);
    for (const auto& [k, v] : terms())
        if (k.h == h) g.add(0, k.m, v);
    return g;
}

Geom Geom::substitute(int var, const Scalar& value) const {
    Geom g(kind_, dim_);
    for (const auto& [k, v] : terms()) g.add(k.h, k.m, v.substitute(var, value));
    return g;
}

Geom Geom::as_kind(GeomKind k) const {
    if (k != kind_ && !degree_zero_only(*this)) throw std::invalid_argument("cannot change the kind of a graded object");
    Geom g = *this;
    g.kind_ = k;
    return g;
}

std::string Geom::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : terms()) {
        std::string xs;
        for (int i = 0; i < kMaxCoords; ++i) {
            unsigned e = k.m.x[static_cast<std::size_t>(i)];
            if (!e) continue;
            xs = join(xs, coordinate_name(i) + (e > 1 ? "^" + std::to_string(e) : ""));
        }
        std::string basis;
        for (int i = 0; i < kMaxCoords; ++i)
            if (k.m.mask & (1u << i))
                basis += (basis.empty() ? "" : "&") + std::string(kind_ == GeomKind::Form ? "dx" : "del") +
                         std::to_string(i + 1);
        out += render_term(v, join(join(hbar_text(k.h), xs), basis), first);
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Geom& g) { return os << g.to_string(); }

// ---------------------------------------------------------------- calculus

Geom partial_derivative(const Geom& g, int i) {
    Geom r(g.kind(), g.dim());
    for (const auto& [k, v] : g.terms()) {
        unsigned e = k.m.x[static_cast<std::size_t>(i)];
        if (!e) continue;
        GMono m = k.m;
        --m.x[static_cast<std::size_t>(i)];
        r.add(k.h, m, v * Scalar(static_cast<long>(e)));
    }
    return r;
}

Geom vf_apply(const Geom& x, const Geom& f) {
    if (x.kind() == GeomKind::Form || x.degree() != 1) throw std::invalid_argument("vf_apply needs a vector field");
    Geom r(GeomKind::Function, f.dim() ? f.dim() : x.dim());
    for (int i = 0; i < x.dim(); ++i) {
        Geom coeff(GeomKind::Function, x.dim());
        for (const auto& [k, v] : x.terms())
            if (k.m.mask == (1u << i)) coeff.add(k.h, GMono{k.m.x, 0}, v);
        if (!coeff.is_zero()) r += coeff * partial_derivative(f, i);
    }
    return r;
}

namespace {

/// P <- d/dtheta_i (right derivative in the odd variable of del_i).
Geom right_theta_derivative(const Geom& p, int i) {
    Geom r(GeomKind::Multivector, p.dim());
    for (const auto& [k, v] : p.terms()) {
        if (!(k.m.mask & (1u << i))) continue;
        GMono m = k.m;
        m.mask = static_cast<std::uint8_t>(m.mask & ~(1u << i));
        r.add(k.h, m, right_derivative_sign(k.m.mask, i) < 0 ? -v : v);
    }
    return r;
}

Geom schouten_homogeneous(const Geom& p, int dp, const Geom& q, int dq) {
    const int n = std::max(p.dim(), q.dim());
    Geom r(GeomKind::Multivector, n);
    const bool minus = ((dp - 1) * (dq - 1)) % 2 == 0;
    for (int i = 0; i < n; ++i) {
        r += right_theta_derivative(p, i) * partial_derivative(q, i);
        Geom second = right_theta_derivative(q, i) * partial_derivative(p, i);
        if (minus)
            r -= second;
        else
            r += second;
    }
    return r;
}

void require_multivector(const Geom& g, const char* what) {
    if (g.kind() == GeomKind::Form && g.max_degree() > 0) throw std::invalid_argument(std::string(what) + " needs multivectors");
}

void require_form(const Geom& g, const char* what) {
    if (g.kind() == GeomKind::Multivector && g.max_degree() > 0) throw std::invalid_argument(std::string(what) + " needs forms");
}

}  // namespace

Geom schouten(const Geom& p, const Geom& q) {
    require_multivector(p, "schouten");
    require_multivector(q, "schouten");
    Geom r(GeomKind::Multivector, std::max(p.dim(), q.dim()));
    for (int dp = 0; dp <= p.max_degree(); ++dp) {
        Geom pp = p.component(dp);
        if (pp.is_zero()) continue;
        for (int dq = 0; dq <= q.max_degree(); ++dq) {
            Geom qq = q.component(dq);
            if (!qq.is_zero()) r += schouten_homogeneous(pp, dp, qq, dq);
        }
    }
    return r;
}

Geom exterior_derivative(const Geom& w) {
    require_form(w, "d");
    Geom r(GeomKind::Form, w.dim());
    for (int i = 0; i < w.dim(); ++i) {
        Geom di = partial_derivative(w, i).as_kind(GeomKind::Form);
        if (!di.is_zero()) r += Geom::dx(w.dim(), i) * di;
    }
    return r;
}

namespace {

Geom insert_partial(int j, const Geom& w) {
    Geom r(GeomKind::Form, w.dim());
    for (const auto& [k, v] : w.terms()) {
        if (!(k.m.mask & (1u << j))) continue;
        GMono m = k.m;
        m.mask = static_cast<std::uint8_t>(m.mask & ~(1u << j));
        r.add(k.h, m, left_insert_sign(k.m.mask, j) < 0 ? -v : v);
    }
    return r;
}

}  // namespace

Geom insert(const Geom& x, const Geom& w) {
    require_multivector(x, "insert");
    require_form(w, "insert");
    Geom r(GeomKind::Form, std::max(x.dim(), w.dim()));
    for (const auto& [k, v] : x.terms()) {
        Geom acc = w.as_kind(GeomKind::Form);
        for (int j = kMaxCoords - 1; j >= 0 && !acc.is_zero(); --j)
            if (k.m.mask & (1u << j)) acc = insert_partial(j, acc);
        if (acc.is_zero()) continue;
        r += Geom::monomial(GeomKind::Function, r.dim(), GMono{k.m.x, 0}, v, k.h) * acc;
    }
    return r;
}

Geom lie_form(const Geom& x, const Geom& w) {
    Geom r(GeomKind::Form, std::max(x.dim(), w.dim()));
    for (int k = 0; k <= x.max_degree(); ++k) {
        Geom xk = x.component(k);
        if (xk.is_zero()) continue;
        Geom a = insert(xk, exterior_derivative(w));
        Geom b = exterior_derivative(insert(xk, w));
        r += a;
        if (k % 2 == 0)
            r -= b;
        else
            r += b;
    }
    return r;
}

Geom star_involution(const Geom& g) {
    Geom r(g.kind(), g.dim());
    for (const auto& [k, v] : g.terms()) {
        int d = __builtin_popcount(k.m.mask);
        // (e_1 ^ ... ^ e_d)^* = e_d^* ^ ... ^ e_1^* with e^* = -e
        bool neg = (d + d * (d - 1) / 2) % 2 == 1;
        r.add(k.h, k.m, neg ? -v.conj() : v.conj());
    }
    return r;
}

// ---------------------------------------------------------------- realization

std::shared_ptr<const Realization> Realization::create(LiePtr alg, int dim, std::vector<Geom> fields) {
    if (static_cast<int>(fields.size()) != alg->dim()) throw std::invalid_argument("realization needs one field per generator");
    for (auto& f : fields) {
        if (f.is_zero()) {
            f = Geom(GeomKind::Multivector, dim);
            continue;
        }
        if (f.kind() != GeomKind::Multivector || f.degree() != 1 || f.dim() != dim)
            throw std::invalid_argument("realization fields must be vector fields on R^" + std::to_string(dim));
        if (f.min_h() == 0 && f.terms().rbegin()->first.h > 0)
            throw std::invalid_argument("realization fields must not depend on hbar");
    }
    auto r = std::shared_ptr<Realization>(new Realization());
    r->alg_ = std::move(alg);
    r->dim_ = dim;
    r->fields_ = std::move(fields);
    if (auto bad = r->failing_pair()) {
        auto [i, j] = *bad;
        throw AlgebraError("fields do not realize [" + r->alg_->basis_name(i) + "," + r->alg_->basis_name(j) +
                           "], residual " + r->bracket_residual(i, j).to_string());
    }
    return r;
}

std::shared_ptr<const Realization> Realization::hyperboloid() {
    static const auto r = hyperboloid(Scalar::sqrt_param("a"));
    return r;
}

std::shared_ptr<const Realization> Realization::hyperboloid(const Scalar& s) {
    if (s.is_zero()) throw AlgebraError("sqrt(a) must be invertible");
    auto x = [](int i) { return Geom::coordinate(3, i); };
    auto d = [](int i) { return Geom::partial(3, i); };
    Geom h = x(0) * d(0) * Scalar(2) - x(2) * d(2) * Scalar(2);
    Geom e = x(0) * d(1) * s.inverse() - x(1) * d(2) * (Scalar(2) * s);
    Geom ep = x(2) * d(1) * s.inverse() - x(1) * d(0) * (Scalar(2) * s);
    return create(LiePresentation::so21(), 3, {h, e, ep});
}

std::shared_ptr<const Realization> Realization::translations(int n) {
    std::vector<Geom> f;
    for (int i = 0; i < n; ++i) f.push_back(Geom::partial(n, i));
    return create(LiePresentation::abelian(n), n, f);
}

Geom Realization::bracket_residual(int i, int j) const {
    Geom r = vf_bracket(field(i), field(j));
    for (const auto& [k, c] : alg_->bracket(i, j)) r -= field(k) * c;
    return r;
}

std::optional<std::pair<int, int>> Realization::failing_pair() const {
    for (int i = 0; i < alg_->dim(); ++i)
        for (int j = i + 1; j < alg_->dim(); ++j)
            if (!bracket_residual(i, j).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
}

Geom Realization::act_generator(int i, const Geom& obj) const {
    const Geom& x = field(i);
    switch (obj.kind()) {
        case GeomKind::Function: return vf_apply(x, obj);
        case GeomKind::Multivector: return schouten(x, obj);
        case GeomKind::Form: return lie_form(x, obj);
    }
    return obj;
}

const Geom& Realization::act_basis(const Exps& m, GeomKind kind, const GMono& b) const {
    auto key = std::make_tuple(m, kind, b);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    Geom result;
    Geom base = Geom::monomial(kind, dim_, b);
    int j = 0;
    while (j < alg_->dim() && m[static_cast<std::size_t>(j)] == 0) ++j;
    if (j == alg_->dim()) {
        result = base;
    } else {
        // e_j^{k_j} ... e_n^{k_n}: the leftmost factor acts last.
        Exps rest = m;
        --rest[static_cast<std::size_t>(j)];
        Geom inner(kind, dim_);
        for (const auto& [k, v] : act_basis(rest, kind, b).terms()) inner.add(k.h, k.m, v);
        result = act_generator(j, inner);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(key, std::move(result)).first->second;
}

Geom Realization::act(const Exps& m, const Geom& obj) const {
    Geom r(obj.kind(), dim_);
    const unsigned n = truncation_order();
    for (const auto& [k, v] : obj.terms()) {
        const Geom& g = act_basis(m, obj.kind(), k.m);
        for (const auto& [kg, vg] : g.terms())
            if (k.h + kg.h <= n) r.add(k.h + kg.h, kg.m, v * vg);
    }
    return r;
}

Geom Realization::act(const PBWElement& xi, const Geom& obj) const {
    if (xi.algebra() != alg_ && xi.algebra()->name() != alg_->name())
        throw std::invalid_argument("element of an unrealized algebra");
    Geom r(obj.kind(), dim_);
    const unsigned n = truncation_order();
    unsigned obj_min = obj.min_h();
    for (const auto& [k, v] : xi.terms()) {
        if (k.h + obj_min > n) continue;
        r += act(k.m, obj).hbar_shift(k.h) * v;
    }
    return r;
}

Geom contract2(const Realization& phi, const TensorElement& t, const Geom& a, const Geom& b,
               const std::function<Geom(const Geom&, const Geom&)>& op) {
    if (t.arity() != 2) throw std::invalid_argument("contract2 needs a 2-tensor");
    const unsigned n = truncation_order();
    const unsigned base = a.min_h() + b.min_h();
    Geom r;
    bool first = true;
    for (const auto& [k, v] : t.terms()) {
        if (k.h + base > n) continue;
        Geom x = phi.act(k.m[0], a), y = phi.act(k.m[1], b);
        if (x.is_zero() || y.is_zero()) continue;
        Geom term = op(x, y).hbar_shift(k.h) * v;
        if (first) {
            r = term;
            first = false;
        } else {
            r += term;
        }
    }
    if (first) {
        Geom probe = op(a, b);
        return Geom(probe.kind(), probe.dim() ? probe.dim() : phi.dim());
    }
    return r;
}

}  // namespace hopftwist
