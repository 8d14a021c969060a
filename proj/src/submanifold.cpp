#include "hopftwist/submanifold.hpp"

#include <random>
#include <stdexcept>

namespace hopftwist {

namespace {

unsigned coord_degree(const GMono& m) {
    unsigned d = 0;
    for (auto e : m.x) d += e;
    return d;
}

bool divides(const GMono& lm, const GMono& m) {
    for (std::size_t i = 0; i < lm.x.size(); ++i)
        if (lm.x[i] > m.x[i]) return false;
    return true;
}

Geom frame_wedge(const std::vector<Geom>& frame, unsigned subset, int dim) {
    Geom w = Geom::constant(dim, Scalar(1)).as_kind(GeomKind::Multivector);
    for (std::size_t i = 0; i < frame.size(); ++i)
        if (subset >> i & 1u) w = w * frame[i];
    return w;
}

}  // namespace

bool grlex_less(const GMono& a, const GMono& b) {
    unsigned da = coord_degree(a), db = coord_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.x.size(); ++i)
        if (a.x[i] != b.x[i]) return a.x[i] < b.x[i];
    return false;
}

QuadricIdeal::QuadricIdeal(Geom generator, std::vector<Geom> tangent_frame)
    : f_(std::move(generator)), frame_(std::move(tangent_frame)) {
    if (f_.is_zero()) throw std::invalid_argument("ideal generator is zero");
    bool found = false;
    for (const auto& [k, c] : f_.terms()) {
        if (k.h != 0) throw std::invalid_argument("ideal generator must be hbar-free");
        if (k.m.mask != 0) throw std::invalid_argument("ideal generator must be a function");
        if (!found || grlex_less(lm_, k.m)) {
            lm_ = k.m;
            lc_ = c;
            found = true;
        }
    }
    if (coord_degree(lm_) == 0) throw std::invalid_argument("ideal generator is a constant");
    for (const auto& x : frame_) {
        if (x.kind() != GeomKind::Multivector || x.degree() != 1 || x.dim() != f_.dim())
            throw std::invalid_argument("tangent frame entries must be vector fields");
    }
}

QuadricIdeal QuadricIdeal::hyperboloid(const Scalar& a, const Scalar& c, const Realization& phi) {
    if (phi.dim() != 3) throw std::invalid_argument("the hyperboloid lives in dimension 3");
    auto x = [](int i) { return Geom::coordinate(3, i); };
    Geom f = x(0) * x(2) * Scalar::rational(1, 2) + x(1) * x(1) * (a * Scalar::rational(1, 2)) + Geom::constant(3, c);
    std::vector<Geom> frame;
    for (int i = 0; i < phi.algebra()->dim(); ++i) frame.push_back(phi.field(i));
    return QuadricIdeal(f, frame);
}

Geom reduce_mod(const QuadricIdeal& ideal, const Geom& p) {
    Geom work = p;
    Geom rem = p.is_zero() ? p : Geom(p.kind(), p.dim());
    const GMono& lm = ideal.leading_monomial();
    const Scalar lci = ideal.leading_coefficient().inverse();
    while (!work.is_zero()) {
        auto top = work.terms().begin();
        for (auto it = work.terms().begin(); it != work.terms().end(); ++it)
            if (grlex_less(top->first.m, it->first.m)) top = it;
        const auto key = top->first;
        const Scalar c = top->second;
        if (!divides(lm, key.m)) {
            rem.add(key.h, key.m, c);
            work.add(key.h, key.m, -c);
            continue;
        }
        Scalar q = c * lci;
        for (const auto& [fk, fc] : ideal.generator().terms()) {
            GMono m = key.m;
            for (std::size_t i = 0; i < m.x.size(); ++i)
                m.x[i] = static_cast<std::uint8_t>(m.x[i] - lm.x[i] + fk.m.x[i]);
            work.add(key.h, m, -(q * fc));
        }
    }
    return rem;
}

bool is_tangent(const QuadricIdeal& ideal, const Geom& p) {
    if (p.kind() == GeomKind::Form && p.max_degree() > 0) throw std::invalid_argument("tangency is defined for multivectors");
    if (p.max_degree() == 0) return true;
    return reduce_mod(ideal, schouten(p, ideal.generator())).is_zero();
}

Geom project(const QuadricIdeal& ideal, const Geom& obj) {
    if (obj.kind() == GeomKind::Multivector && !is_tangent(ideal, obj))
        throw std::invalid_argument("multivector is not tangent to the ideal: " + obj.to_string());
    return reduce_mod(ideal, obj);
}

bool projects_to_zero(const QuadricIdeal& ideal, const Geom& obj) {
    const auto& frame = ideal.tangent_frame();
    if (obj.kind() != GeomKind::Form || frame.empty()) return reduce_mod(ideal, obj).is_zero();
    for (int k = 0; k <= obj.max_degree(); ++k) {
        Geom w = obj.component(k);
        if (w.is_zero()) continue;
        if (k == 0) {
            if (!reduce_mod(ideal, w).is_zero()) return false;
            continue;
        }
        for (unsigned s = 0; s < (1u << frame.size()); ++s) {
            if (__builtin_popcount(s) != k) continue;
            if (!reduce_mod(ideal, insert(frame_wedge(frame, s, ideal.dim()), w)).is_zero()) return false;
        }
    }
    return true;
}

ProjectionSamples random_projection_samples(const QuadricIdeal& ideal, int count, unsigned seed, int max_degree) {
    std::mt19937 gen(seed);
    const int dim = ideal.dim();
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
    auto coeff = [&]() {
        int n = 0;
        while (n == 0) n = uniform(-5, 5);
        return Scalar::rational(n, uniform(1, 3));
    };
    auto function = [&](int deg) {
        Geom f(GeomKind::Function, dim);
        int terms = uniform(1, 4);
        for (int t = 0; t < terms; ++t) {
            GMono m;
            int d = uniform(0, deg);
            for (int j = 0; j < d; ++j) ++m.x[static_cast<std::size_t>(uniform(0, dim - 1))];
            f.add(0, m, coeff());
        }
        return f;
    };

    ProjectionSamples s;
    for (int i = 0; i < count; ++i) s.functions.push_back(function(max_degree));

    const auto& frame = ideal.tangent_frame();
    const int extra = std::max(2, count / 5);
    if (!frame.empty()) {
        const int nf = static_cast<int>(frame.size());
        for (int i = 0; i < extra; ++i) {
            Geom p(GeomKind::Multivector, dim);
            if (i % 3 == 2) {
                int a = uniform(0, nf - 1), b = uniform(0, nf - 1);
                p += function(std::max(0, max_degree - 2)) * frame[static_cast<std::size_t>(a)] *
                     frame[static_cast<std::size_t>(b)];
            }
            for (int t = 0; t < 2; ++t)
                p += function(std::max(0, max_degree - 1)) * frame[static_cast<std::size_t>(uniform(0, nf - 1))];
            s.multivectors.push_back(p);
        }
    }
    for (int i = 0; i < extra; ++i) {
        Geom w(GeomKind::Form, dim);
        int k = uniform(0, dim - 1), l = uniform(0, dim - 1);
        w += function(max_degree) * Geom::dx(dim, k);
        if (k != l) w += function(max_degree - 1) * Geom::dx(dim, k) * Geom::dx(dim, l);
        if (i % 2) w += function(max_degree).as_kind(GeomKind::Form);
        s.forms.push_back(w);
    }
    return s;
}

Report twist_project_report(const StarAlgebra& a, const QuadricIdeal& ideal, const ProjectionSamples& samples) {
    const Realization& phi = a.realization();
    for (int i = 0; i < phi.algebra()->dim(); ++i)
        if (!is_tangent(ideal, phi.field(i)))
            throw std::invalid_argument("realized generator " + phi.algebra()->basis_name(i) + " is not tangent");

    Report rep("projection [" + a.twist().label() + "]");
    auto reduced = [&](const Geom& g) {
        Geom r = reduce_mod(ideal, g);
        return r.is_zero() ? Residual::ok() : Residual::failed(r.to_string());
    };
    auto in_kernel = [&](const Geom& g) {
        return projects_to_zero(ideal, g) ? Residual::ok() : Residual::failed(reduce_mod(ideal, g).to_string());
    };
    auto pairs = [](const std::vector<Geom>& v, const std::function<Residual(const Geom&, const Geom&)>& f) {
        Residual r;
        for (std::size_t i = 0; i + 1 < v.size() && r.zero; ++i) r &= f(v[i], v[i + 1]);
        return r;
    };
    const auto& fs = samples.functions;
    const auto& ms = samples.multivectors;
    const auto& ws = samples.forms;
    auto pr = [&](const Geom& g) { return project(ideal, g); };

    rep.run("ideal is stable under the action", [&]() {
        Residual r;
        for (int i = 0; i < phi.algebra()->dim(); ++i) r &= reduced(phi.act_generator(i, ideal.generator()));
        return r;
    });
    rep.run("pr(f) * pr(g) = pr(f * g)", [&]() {
        return pairs(fs, [&](const Geom& f, const Geom& g) { return reduced(star(a, pr(f), pr(g)) - star(a, f, g)); });
    });
    rep.run("ideal is a two-sided star ideal", [&]() {
        return pairs(fs, [&](const Geom& f, const Geom& g) {
            Geom c = ideal.generator() * f;
            Residual r = reduced(star(a, c, g));
            r &= reduced(star(a, g, c));
            return r;
        });
    });
    rep.run("pr(X) ^F pr(Y) = pr(X ^F Y)", [&]() {
        return pairs(ms, [&](const Geom& x, const Geom& y) {
            return reduced(twisted_wedge(a, pr(x), pr(y)) - twisted_wedge(a, x, y));
        });
    });
    rep.run("[[pr(X), pr(Y)]]_F = pr([[X, Y]]_F)", [&]() {
        Residual r = pairs(ms, [&](const Geom& x, const Geom& y) {
            return reduced(twisted_schouten(a, pr(x), pr(y)) - twisted_schouten(a, x, y));
        });
        for (std::size_t i = 0; i < ms.size() && i < fs.size() && r.zero; ++i)
            r &= reduced(twisted_schouten(a, pr(ms[i]), pr(fs[i])) - twisted_schouten(a, ms[i], fs[i]));
        return r;
    });
    rep.run("pr(w) ^F pr(v) = pr(w ^F v)", [&]() {
        return pairs(ws, [&](const Geom& w, const Geom& v) {
            return in_kernel(twisted_wedge(a, pr(w), pr(v)) - twisted_wedge(a, w, v));
        });
    });
    rep.run("d pr(w) = pr(d w)", [&]() {
        Residual r;
        for (const auto& w : ws) r &= in_kernel(exterior_derivative(pr(w)) - exterior_derivative(w));
        for (const auto& f : fs) r &= in_kernel(exterior_derivative(pr(f)) - exterior_derivative(f.as_kind(GeomKind::Form)));
        return r;
    });
    for (auto [op, name] : {std::pair{CartanOp::Insertion, "i^F_pr(X) pr(w) = pr(i^F_X w)"},
                            std::pair{CartanOp::Lie, "L^F_pr(X) pr(w) = pr(L^F_X w)"}}) {
        rep.run(name, [&, op = op]() {
            Residual r;
            for (std::size_t i = 0; i < ms.size() && r.zero; ++i) {
                const Geom& x = ms[i];
                const Geom& w = ws[i % ws.size()];
                r &= in_kernel(twisted_cartan(a, op, pr(x), pr(w)) - twisted_cartan(a, op, x, w));
            }
            return r;
        });
    }
    return rep;
}

Report hyperboloid_suite(const Scalar& a, const Scalar& c) {
    const Scalar s = scalar_sqrt(a);
    auto phi = Realization::hyperboloid(s);
    StarAlgebra J(phi, make_jordanian_twist(phi->algebra(), "H", "E", Scalar::i()));
    QuadricIdeal ideal = QuadricIdeal::hyperboloid(a, c, *phi);
    const LiePtr& alg = phi->algebra();
    const Scalar i = Scalar::i(), half = Scalar::rational(1, 2);

    auto x = [](int k) { return Geom::coordinate(3, k); };
    auto hb = [](const Geom& g, unsigned k) { return g.hbar_shift(k); };
    Report rep("hyperboloid");

    struct Product {
        int l, r;
        Geom expect;
    };
    const std::vector<Product> table = {
        {0, 0, x(0) * x(0)},
        {0, 1, x(0) * x(1) - hb(x(0) * x(0), 1) * (i / s)},
        {0, 2, x(0) * x(2) + hb(x(0) * x(1), 1) * (Scalar(2) * i * s) + hb(x(0) * x(0), 2) * Scalar(2)},
        {1, 0, x(0) * x(1)},
        {1, 1, x(1) * x(1)},
        {1, 2, x(1) * x(2)},
        {2, 0, x(0) * x(2)},
        {2, 1, x(1) * x(2) + hb(x(0) * x(2), 1) * (i / s)},
        {2, 2, x(2) * x(2) - hb(x(1) * x(2), 1) * (Scalar(2) * i * s)},
    };
    for (const auto& p : table) {
        rep.run(coordinate_name(p.l) + " * " + coordinate_name(p.r),
                [&]() { return Residual::of(star(J, x(p.l), x(p.r)) - p.expect); });
    }

    PBWElement one = PBWElement::one(alg), H = PBWElement::generator(alg, "H"), E = PBWElement::generator(alg, "E"),
               Ep = PBWElement::generator(alg, "Ep");
    PBWElement u = one + E.hbar_shift(1) * i, ui = u.inverse();
    auto ox = [](const PBWElement& l, const PBWElement& r) { return TensorElement::product_of({l, r}); };
    const Twist& f = J.twist();
    rep.run("Delta_F(H)", [&]() {
        return Residual::of(twisted_coproduct(f, H) - coproduct(H) + ox(H, E * ui).hbar_shift(1) * i);
    });
    rep.run("Delta_F(E)", [&]() {
        return Residual::of(twisted_coproduct(f, E) - coproduct(E) - ox(E, E).hbar_shift(1) * i);
    });
    rep.run("Delta_F(Ep)", [&]() {
        TensorElement expect = ox(one, Ep) + ox(Ep, ui) - ox(H, H * ui).hbar_shift(1) * (i * half) +
                               ox(H * (one - H * half), E * ui * ui).hbar_shift(2) * half;
        return Residual::of(twisted_coproduct(f, Ep) - expect);
    });
    rep.run("S_F(H)", [&]() { return Residual::of(twisted_antipode(f, H) - antipode(H) * u); });
    rep.run("S_F(E)", [&]() { return Residual::of(twisted_antipode(f, E) - antipode(E) * ui); });
    rep.run("S_F(Ep)", [&]() {
        PBWElement expect = antipode(Ep) * u - (H * H).hbar_shift(1) * (i * half) +
                            ((H * Scalar::rational(3, 2) - one) * H * E).hbar_shift(2) * half +
                            ((H * half - one) * H * E * E).hbar_shift(3) * (i * half);
        return Residual::of(twisted_antipode(f, Ep) - expect);
    });

    const Geom inv_expect[3] = {x(0), x(1), x(2) - hb(x(1), 1) * (Scalar(2) * i * s)};
    for (int k = 0; k < 3; ++k)
        rep.run("(" + coordinate_name(k) + ")^*F",
                [&, k]() { return Residual::of(twisted_involution(J, x(k)) - inv_expect[k]); });

    rep.run("deformed constraint", [&]() {
        Geom lhs = star(J, x(2), x(0)) * half + star(J, x(1), x(1)) * (a * half) + Geom::constant(3, c);
        return Residual::of(reduce_mod(ideal, lhs));
    });

    // Forms used for the coordinate formulas of i^F and L^F.
    auto dx = [](int k) { return Geom::dx(3, k); };
    const std::vector<Geom> forms = {dx(0), dx(2), x(0) * dx(1), x(2) * dx(2) * dx(0), x(1) * x(2) * dx(1) * dx(2),
                                     x(0) * x(1) * x(2) * dx(0) * dx(1) * dx(2)};
    const int lambda[3] = {2, 0, -2};
    for (auto [op, name] : {std::pair{CartanOp::Insertion, "i^F on coordinate fields"},
                            std::pair{CartanOp::Lie, "L^F on coordinate fields"}}) {
        rep.run(name, [&, op = op]() {
            Residual r;
            for (int k = 0; k < 3; ++k) {
                PBWElement w = lambda[k] >= 0 ? u.pow(static_cast<unsigned>(lambda[k] / 2))
                                              : ui.pow(static_cast<unsigned>(-lambda[k] / 2));
                Geom d = Geom::partial(3, k);
                for (const auto& form : forms) {
                    Geom shifted = phi->act(w, form);
                    Geom expect = op == CartanOp::Insertion ? insert(d, shifted) : lie_form(d, shifted);
                    r &= Residual::of(twisted_cartan(J, op, d, form) - expect);
                }
            }
            return r;
        });
    }

    Connection flat = Connection::flat(3);
    const Geom &fH = phi->field(0), &fE = phi->field(1), &fEp = phi->field(2);
    auto nab = [&](const Geom& p, const Geom& q) { return nabla(flat, p, q); };
    auto tnab = [&](const Geom& p, const Geom& q) { return twist_nabla(J, flat, p, q); };
    rep.run("nabla^F_E H", [&]() {
        return Residual::of(tnab(fE, fH) - nab(fE, fH) - hb(nab(fE, fE), 1) * (Scalar(2) * i));
    });
    rep.run("nabla^F_Ep H", [&]() {
        return Residual::of(tnab(fEp, fH) - nab(fEp, fH) + hb(nab(fEp, fE), 1) * (Scalar(2) * i));
    });
    rep.run("nabla^F_E Ep", [&]() {
        return Residual::of(tnab(fE, fEp) - nab(fE, fEp) - hb(nab(fE, fH), 1) * i + hb(nab(fE, fE), 2) * Scalar(2));
    });
    rep.run("nabla^F_Ep Ep", [&]() {
        return Residual::of(tnab(fEp, fEp) - nab(fEp, fEp) + hb(nab(fEp, fH), 1) * i);
    });
    return rep;
}

}  // namespace hopftwist
