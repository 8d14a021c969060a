#include "hopftwist/connection.hpp"

namespace hopftwist {

namespace {

Geom zero_function(int dim) { return Geom(GeomKind::Function, dim); }

bool is_unit_constant(const Geom& d) {
    bool has_constant = false;
    for (const auto& [k, v] : d.terms()) {
        if (k.m != GMono{}) return false;
        if (k.h == 0) has_constant = true;
    }
    return has_constant;
}

/// 1/d for an hbar series d with invertible constant term.
Geom invert_unit(const Geom& d) {
    Scalar c0 = d.order(0).terms().begin()->second;
    Geom u = d * c0.inverse() - Geom::constant(d.dim(), Scalar(1));
    Geom sum = Geom::constant(d.dim(), Scalar(1)), p = sum;
    for (unsigned n = 1; n <= truncation_order(); ++n) {
        p = p * (-u);
        sum += p;
    }
    return sum * c0.inverse();
}

Geom det_of(const std::vector<Geom>& m, int n) {
    if (n == 1) return m[0];
    Geom d = zero_function(0);
    for (int j = 0; j < n; ++j) {
        std::vector<Geom> minor;
        for (int r = 1; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (c != j) minor.push_back(m[static_cast<std::size_t>(r * n + c)]);
        Geom t = m[static_cast<std::size_t>(j)] * det_of(minor, n - 1);
        d += j % 2 ? -t : t;
    }
    return d;
}

Geom cofactor(const std::vector<Geom>& m, int n, int i, int j) {
    if (n == 1) return Geom::constant(m[0].dim(), Scalar(1));
    std::vector<Geom> minor;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (r != i && c != j) minor.push_back(m[static_cast<std::size_t>(r * n + c)]);
    Geom d = det_of(minor, n - 1);
    return (i + j) % 2 ? -d : d;
}

}  // namespace

std::vector<Geom> field_components(const Geom& v, int dim) {
    if (v.kind() == GeomKind::Form && !v.is_zero()) throw std::invalid_argument("expected a vector field");
    std::vector<Geom> comps(static_cast<std::size_t>(dim), zero_function(dim));
    for (const auto& [k, c] : v.terms()) {
        if (__builtin_popcount(k.m.mask) != 1) throw std::invalid_argument("expected a vector field");
        int i = __builtin_ctz(k.m.mask);
        if (i >= dim) throw std::invalid_argument("vector field outside the coordinate range");
        comps[static_cast<std::size_t>(i)].add(k.h, GMono{k.m.x, 0}, c);
    }
    return comps;
}

Geom field_from_components(const std::vector<Geom>& comps) {
    const int dim = static_cast<int>(comps.size());
    Geom v(GeomKind::Multivector, dim);
    for (int k = 0; k < dim; ++k)
        if (!comps[static_cast<std::size_t>(k)].is_zero()) v += comps[static_cast<std::size_t>(k)] * Geom::partial(dim, k);
    return v;
}

// ---------------------------------------------------------------- metric

Metric::Metric(int dim, std::vector<Geom> entries) : dim_(dim), g_(std::move(entries)) {
    if (dim < 1 || dim > kMaxCoords) throw std::invalid_argument("metric dimension out of range");
    if (static_cast<int>(g_.size()) != dim * dim) throw std::invalid_argument("metric needs dim^2 entries");
    for (auto& e : g_) {
        if (e.max_degree() > 0) throw std::invalid_argument("metric entries must be functions");
        e = e.as_kind(GeomKind::Function);
    }
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (!(at(i, j) == at(j, i)))
                throw std::invalid_argument("metric is not symmetric: g" + std::to_string(i + 1) + std::to_string(j + 1) +
                                            " = " + at(i, j).to_string() + " but g" + std::to_string(j + 1) +
                                            std::to_string(i + 1) + " = " + at(j, i).to_string());
}

Metric Metric::euclidean(int dim) {
    std::vector<Geom> g;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g.push_back(Geom::constant(dim, Scalar(i == j ? 1 : 0)));
    return Metric(dim, g);
}

Metric Metric::lightcone_minkowski() {
    std::vector<Geom> g(9, zero_function(3));
    g[2] = g[6] = Geom::constant(3, Scalar::rational(1, 2));
    g[4] = Geom::constant(3, Scalar(1));
    return Metric(3, g);
}

Geom Metric::operator()(const Geom& x, const Geom& y) const {
    auto xc = field_components(x, dim_), yc = field_components(y, dim_);
    Geom r = zero_function(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (xc[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            if (!at(i, j).is_zero() && !yc[static_cast<std::size_t>(j)].is_zero())
                r += xc[static_cast<std::size_t>(i)] * at(i, j) * yc[static_cast<std::size_t>(j)];
    }
    return r;
}

Geom Metric::determinant() const { return det_of(g_, dim_).as_kind(GeomKind::Function); }

bool Metric::is_nondegenerate() const { return is_unit_constant(determinant()); }

std::vector<Geom> Metric::inverse() const {
    Geom d = determinant();
    if (!is_unit_constant(d)) throw AlgebraError("det g = " + d.to_string() + " is not a unit of the polynomial ring");
    Geom dinv = invert_unit(d);
    std::vector<Geom> inv;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) inv.push_back(cofactor(g_, dim_, j, i) * dinv);
    return inv;
}

Report metric_equivariance(const Metric& g, const Realization& phi) {
    Report rep("metric equivariance");
    for (int a = 0; a < phi.algebra()->dim(); ++a) {
        rep.run(phi.algebra()->basis_name(a) + " |> g(X,Y) = g(" + phi.algebra()->basis_name(a) + " |> X, Y) + g(X, " +
                    phi.algebra()->basis_name(a) + " |> Y)",
                [&]() {
                    Residual r;
                    for (int i = 0; i < g.dim(); ++i)
                        for (int j = 0; j < g.dim(); ++j) {
                            Geom X = Geom::partial(g.dim(), i), Y = Geom::partial(g.dim(), j);
                            Geom lhs = phi.act_generator(a, g(X, Y));
                            Geom rhs = g(phi.act_generator(a, X), Y) + g(X, phi.act_generator(a, Y));
                            r &= Residual::of(lhs - rhs);
                        }
                    return r;
                });
    }
    return rep;
}

// ---------------------------------------------------------------- connections

Connection Connection::flat(int dim) {
    return Connection(dim, std::vector<Geom>(static_cast<std::size_t>(dim * dim * dim), zero_function(dim)));
}

Connection::Connection(int dim, std::vector<Geom> christoffel) : dim_(dim), gamma_(std::move(christoffel)) {
    if (static_cast<int>(gamma_.size()) != dim * dim * dim) throw std::invalid_argument("connection needs dim^3 symbols");
    for (auto& g : gamma_) {
        if (g.max_degree() > 0) throw std::invalid_argument("Christoffel symbols must be functions");
        g = g.as_kind(GeomKind::Function);
    }
}

bool Connection::is_flat() const {
    for (const auto& g : gamma_)
        if (!g.is_zero()) return false;
    return true;
}

Geom nabla(const Connection& c, const Geom& x, const Geom& y) {
    const int n = c.dim();
    auto xc = field_components(x, n), yc = field_components(y, n);
    std::vector<Geom> out(static_cast<std::size_t>(n), zero_function(n));
    for (int k = 0; k < n; ++k) {
        Geom& o = out[static_cast<std::size_t>(k)];
        if (!yc[static_cast<std::size_t>(k)].is_zero() && !x.is_zero()) o += vf_apply(x, yc[static_cast<std::size_t>(k)]);
        for (int i = 0; i < n; ++i) {
            if (xc[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!c.gamma(k, i, j).is_zero() && !yc[static_cast<std::size_t>(j)].is_zero())
                    o += xc[static_cast<std::size_t>(i)] * c.gamma(k, i, j) * yc[static_cast<std::size_t>(j)];
        }
    }
    return field_from_components(out);
}

Geom dual_nabla(const Connection& c, const Geom& x, const Geom& w) {
    const int n = c.dim();
    if (w.kind() == GeomKind::Multivector && w.max_degree() > 0) throw std::invalid_argument("dual_nabla acts on 1-forms");
    Geom r(GeomKind::Form, n);
    for (int j = 0; j < n; ++j) {
        Geom dj = Geom::partial(n, j);
        Geom comp = vf_apply(x, insert(dj, w).as_kind(GeomKind::Function)) -
                    insert(nabla(c, x, dj), w).as_kind(GeomKind::Function);
        if (!comp.is_zero()) r += comp * Geom::dx(n, j);
    }
    return r;
}

Connection koszul_levi_civita(const Metric& g) {
    const int n = g.dim();
    std::vector<Geom> inv = g.inverse();
    std::vector<Geom> gamma;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Geom s = zero_function(n);
                for (int l = 0; l < n; ++l) {
                    const Geom& gkl = inv[static_cast<std::size_t>(k * n + l)];
                    if (gkl.is_zero()) continue;
                    Geom t = partial_derivative(g.at(j, l), i) + partial_derivative(g.at(i, l), j) -
                             partial_derivative(g.at(i, j), l);
                    if (!t.is_zero()) s += gkl * t;
                }
                gamma.push_back(s * Scalar::rational(1, 2));
            }
    Connection c(n, gamma);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Geom di = Geom::partial(n, i), dj = Geom::partial(n, j);
            if (!(nabla(c, di, dj) - nabla(c, dj, di)).is_zero())
                throw std::logic_error("Koszul connection is not torsion-free");
            for (int k = 0; k < n; ++k) {
                Geom dk = Geom::partial(n, k);
                if (!(vf_apply(di, g(dj, dk)) - g(nabla(c, di, dj), dk) - g(dj, nabla(c, di, dk))).is_zero())
                    throw std::logic_error("Koszul connection is not metric");
            }
        }
    return c;
}

// ---------------------------------------------------------------- twisted

Geom twist_nabla(const StarAlgebra& a, const Connection& c, const Geom& x, const Geom& y) {
    return contract2(a.realization(), a.twist().total_inv(), x, y,
                     [&](const Geom& p, const Geom& q) { return nabla(c, p, q); });
}

Geom twist_metric(const StarAlgebra& a, const Metric& g, const Geom& x, const Geom& y) {
    return contract2(a.realization(), a.twist().total_inv(), x, y, [&](const Geom& p, const Geom& q) { return g(p, q); });
}

namespace {

const TensorElement& braiding(const StarAlgebra& a, const TensorElement* rinv) { return rinv ? *rinv : a.rmatrix().rinv; }

}  // namespace

Geom curvature(const StarAlgebra& a, const Connection& c, const Geom& x, const Geom& y, const Geom& z,
               const TensorElement* rinv) {
    Geom r = twist_nabla(a, c, x, twist_nabla(a, c, y, z));
    r -= contract2(a.realization(), braiding(a, rinv), y, x,
                   [&](const Geom& yb, const Geom& xb) { return twist_nabla(a, c, yb, twist_nabla(a, c, xb, z)); });
    r -= twist_nabla(a, c, twisted_schouten(a, x, y), z);
    return r;
}

Geom torsion(const StarAlgebra& a, const Connection& c, const Geom& x, const Geom& y, const TensorElement* rinv) {
    Geom r = twist_nabla(a, c, x, y);
    r -= contract2(a.realization(), braiding(a, rinv), y, x,
                   [&](const Geom& yb, const Geom& xb) { return twist_nabla(a, c, yb, xb); });
    r -= twisted_schouten(a, x, y);
    return r;
}

std::vector<Geom> standard_frame(const Realization& phi) {
    std::vector<Geom> frame;
    for (int i = 0; i < phi.algebra()->dim(); ++i)
        if (!phi.field(i).is_zero()) frame.push_back(phi.field(i));
    for (int i = 0; i < phi.dim(); ++i) frame.push_back(Geom::partial(phi.dim(), i));
    return frame;
}

Report connection_report(const StarAlgebra& a, const Connection& c, const Metric& g, const std::vector<Geom>& frame) {
    Report rep("twisted Levi-Civita [" + a.twist().label() + "]");
    rep.run("nabla is Levi-Civita for g", [&]() {
        Connection lc = koszul_levi_civita(g);
        Residual r;
        for (int k = 0; k < c.dim(); ++k)
            for (int i = 0; i < c.dim(); ++i)
                for (int j = 0; j < c.dim(); ++j) r &= Residual::of(c.gamma(k, i, j) - lc.gamma(k, i, j));
        return r;
    });
    rep.run("g is equivariant", [&]() {
        Report eq = metric_equivariance(g, a.realization());
        return eq.passed() ? Residual::ok() : Residual::failed(eq.to_text());
    });
    rep.run("braided metric compatibility of nabla^F with g_F", [&]() {
        Residual r;
        for (const auto& x : frame)
            for (const auto& y : frame)
                for (const auto& z : frame) {
                    Geom res = twisted_schouten(a, x, twist_metric(a, g, y, z)) -
                               twist_metric(a, g, twist_nabla(a, c, x, y), z) -
                               braid(a, y, x, [&](const Geom& yb, const Geom& xb) {
                                   return twist_metric(a, g, yb, twist_nabla(a, c, xb, z));
                               });
                    r &= Residual::of(res);
                    if (!r.zero) return r;
                }
        return r;
    });
    rep.run("braided torsion of nabla^F vanishes", [&]() {
        Residual r;
        for (const auto& x : frame)
            for (const auto& y : frame) {
                r &= Residual::of(torsion(a, c, x, y));
                if (!r.zero) return r;
            }
        return r;
    });
    return rep;
}

}  // namespace hopftwist
