#include "hopftwist/hopf.hpp"

namespace hopftwist {

FiniteHopf::FiniteHopf(std::string name, std::vector<std::string> basis)
    : name_(std::move(name)), basis_(std::move(basis)), n_(static_cast<int>(basis_.size())) {
    if (n_ == 0) throw std::invalid_argument("empty basis");
    auto sz = static_cast<std::size_t>(n_);
    product_.assign(sz * sz, {});
    coproduct_.assign(sz, {});
    counit_.assign(sz, Scalar());
    antipode_.assign(sz, {});
}

void FiniteHopf::set_product(int i, int j, Vec v) { product_.at(static_cast<std::size_t>(i * n_ + j)) = std::move(v); }
void FiniteHopf::set_unit(Vec v) { unit_ = std::move(v); }
void FiniteHopf::set_coproduct(int i, Mat m) { coproduct_.at(static_cast<std::size_t>(i)) = std::move(m); }
void FiniteHopf::set_counit(int i, Scalar e) { counit_.at(static_cast<std::size_t>(i)) = std::move(e); }
void FiniteHopf::set_antipode(int i, Vec v) { antipode_.at(static_cast<std::size_t>(i)) = std::move(v); }

void FiniteHopf::validate() const {
    auto n = static_cast<std::size_t>(n_);
    for (const auto& p : product_)
        if (p.size() != n) throw std::invalid_argument(name_ + ": incomplete multiplication table");
    if (unit_.size() != n) throw std::invalid_argument(name_ + ": missing unit");
    for (const auto& c : coproduct_)
        if (c.size() != n * n) throw std::invalid_argument(name_ + ": incomplete coproduct table");
    for (const auto& s : antipode_)
        if (s.size() != n) throw std::invalid_argument(name_ + ": incomplete antipode table");
}

FiniteHopf::Vec FiniteHopf::basis_vector(int i) const {
    Vec v = zero();
    v.at(static_cast<std::size_t>(i)) = Scalar(1);
    return v;
}

FiniteHopf::Vec FiniteHopf::mul(const Vec& a, const Vec& b) const {
    Vec r = zero();
    for (int i = 0; i < n_; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (b[static_cast<std::size_t>(j)].is_zero()) continue;
            Scalar c = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            const Vec& p = product_[static_cast<std::size_t>(i * n_ + j)];
            for (int k = 0; k < n_; ++k) r[static_cast<std::size_t>(k)] += c * p[static_cast<std::size_t>(k)];
        }
    }
    return r;
}

FiniteHopf::Mat FiniteHopf::coproduct(const Vec& a) const {
    Mat r(static_cast<std::size_t>(n_ * n_));
    for (int i = 0; i < n_; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (std::size_t k = 0; k < r.size(); ++k) r[k] += a[static_cast<std::size_t>(i)] * coproduct_[static_cast<std::size_t>(i)][k];
    }
    return r;
}

Scalar FiniteHopf::counit(const Vec& a) const {
    Scalar r;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * counit_[i];
    return r;
}

FiniteHopf::Vec FiniteHopf::antipode(const Vec& a) const {
    Vec r = zero();
    for (int i = 0; i < n_; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int k = 0; k < n_; ++k)
            r[static_cast<std::size_t>(k)] += a[static_cast<std::size_t>(i)] * antipode_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    }
    return r;
}

FiniteHopf::Mat FiniteHopf::mul2(const Mat& a, const Mat& b) const {
    Mat r(static_cast<std::size_t>(n_ * n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Scalar& x = a[static_cast<std::size_t>(i * n_ + j)];
            if (x.is_zero()) continue;
            for (int k = 0; k < n_; ++k)
                for (int l = 0; l < n_; ++l) {
                    const Scalar& y = b[static_cast<std::size_t>(k * n_ + l)];
                    if (y.is_zero()) continue;
                    Scalar c = x * y;
                    const Vec& p = product_[static_cast<std::size_t>(i * n_ + k)];
                    const Vec& q = product_[static_cast<std::size_t>(j * n_ + l)];
                    for (int u = 0; u < n_; ++u) {
                        if (p[static_cast<std::size_t>(u)].is_zero()) continue;
                        for (int v = 0; v < n_; ++v)
                            if (!q[static_cast<std::size_t>(v)].is_zero())
                                r[static_cast<std::size_t>(u * n_ + v)] += c * p[static_cast<std::size_t>(u)] * q[static_cast<std::size_t>(v)];
                    }
                }
        }
    return r;
}

std::vector<Scalar> FiniteHopf::coproduct_left(const Mat& t) const {
    auto n = static_cast<std::size_t>(n_);
    std::vector<Scalar> r(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& c = t[i * n + j];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < n * n; ++k)
                if (!coproduct_[i][k].is_zero()) r[k * n + j] += c * coproduct_[i][k];
        }
    return r;
}

std::vector<Scalar> FiniteHopf::coproduct_right(const Mat& t) const {
    auto n = static_cast<std::size_t>(n_);
    std::vector<Scalar> r(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& c = t[i * n + j];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < n * n; ++k)
                if (!coproduct_[j][k].is_zero()) r[i * n * n + k] += c * coproduct_[j][k];
        }
    return r;
}

bool FiniteHopf::is_commutative() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (product_[static_cast<std::size_t>(i * n_ + j)] != product_[static_cast<std::size_t>(j * n_ + i)]) return false;
    return true;
}

bool FiniteHopf::is_cocommutative() const {
    for (int a = 0; a < n_; ++a)
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (!(coproduct_[static_cast<std::size_t>(a)][static_cast<std::size_t>(i * n_ + j)] ==
                      coproduct_[static_cast<std::size_t>(a)][static_cast<std::size_t>(j * n_ + i)]))
                    return false;
    return true;
}

std::string FiniteHopf::render(const Vec& v) const {
    std::string out;
    for (int i = 0; i < n_; ++i)
        if (!v[static_cast<std::size_t>(i)].is_zero())
            out += render_term(v[static_cast<std::size_t>(i)], basis_name(i), out.empty());
    return out.empty() ? "0" : out;
}

FiniteHopf FiniteHopf::group_algebra_z2() {
    FiniteHopf h("k[Z2]", {"1", "g"});
    Scalar o(1), z;
    h.set_product(0, 0, {o, z});
    h.set_product(0, 1, {z, o});
    h.set_product(1, 0, {z, o});
    h.set_product(1, 1, {o, z});
    h.set_unit({o, z});
    h.set_coproduct(0, {o, z, z, z});
    h.set_coproduct(1, {z, z, z, o});
    h.set_counit(0, o);
    h.set_counit(1, o);
    h.set_antipode(0, {o, z});
    h.set_antipode(1, {z, o});
    h.validate();
    return h;
}

FiniteHopf FiniteHopf::functions_z2() {
    // d_a d_b = delta_ab d_a, Delta d_a = sum_{b c = a} d_b (x) d_c, eps(d_a) = delta_a0, S d_a = d_{a^-1}
    FiniteHopf h("F(Z2)", {"d0", "d1"});
    Scalar o(1), z;
    h.set_product(0, 0, {o, z});
    h.set_product(0, 1, {z, z});
    h.set_product(1, 0, {z, z});
    h.set_product(1, 1, {z, o});
    h.set_unit({o, o});
    h.set_coproduct(0, {o, z, z, o});
    h.set_coproduct(1, {z, o, o, z});
    h.set_counit(0, o);
    h.set_counit(1, z);
    h.set_antipode(0, {o, z});
    h.set_antipode(1, {z, o});
    h.validate();
    return h;
}

FiniteHopf FiniteHopf::sweedler() {
    // g^2 = 1, x^2 = 0, x g = -g x; Delta g = g (x) g, Delta x = x (x) 1 + g (x) x
    FiniteHopf h("H4", {"1", "g", "x", "gx"});
    Scalar o(1), m(-1), z;
    h.set_product(0, 0, {o, z, z, z});
    h.set_product(0, 1, {z, o, z, z});
    h.set_product(0, 2, {z, z, o, z});
    h.set_product(0, 3, {z, z, z, o});
    h.set_product(1, 0, {z, o, z, z});
    h.set_product(1, 1, {o, z, z, z});
    h.set_product(1, 2, {z, z, z, o});
    h.set_product(1, 3, {z, z, o, z});
    h.set_product(2, 0, {z, z, o, z});
    h.set_product(2, 1, {z, z, z, m});
    h.set_product(2, 2, {z, z, z, z});
    h.set_product(2, 3, {z, z, z, z});
    h.set_product(3, 0, {z, z, z, o});
    h.set_product(3, 1, {z, z, m, z});
    h.set_product(3, 2, {z, z, z, z});
    h.set_product(3, 3, {z, z, z, z});
    h.set_unit({o, z, z, z});
    auto t = [](int i, int j) { return static_cast<std::size_t>(i * 4 + j); };
    FiniteHopf::Mat d(16);
    d[t(0, 0)] = o;
    h.set_coproduct(0, d);
    d.assign(16, z);
    d[t(1, 1)] = o;
    h.set_coproduct(1, d);
    d.assign(16, z);
    d[t(2, 0)] = o;
    d[t(1, 2)] = o;
    h.set_coproduct(2, d);
    d.assign(16, z);
    d[t(3, 1)] = o;  // Delta(gx) = gx (x) g + 1 (x) gx
    d[t(0, 3)] = o;
    h.set_coproduct(3, d);
    h.set_counit(0, o);
    h.set_counit(1, o);
    h.set_counit(2, z);
    h.set_counit(3, z);
    h.set_antipode(0, {o, z, z, z});
    h.set_antipode(1, {z, o, z, z});
    h.set_antipode(2, {z, z, z, m});
    h.set_antipode(3, {z, z, o, z});
    h.validate();
    return h;
}

// ---------------------------------------------------------------- reports

std::vector<Exps> monomials_up_to(const LiePresentation& alg, unsigned bound) {
    std::vector<Exps> out;
    Exps m{};
    const int n = alg.dim();
    for (;;) {
        out.push_back(m);
        int i = 0;
        for (; i < n; ++i) {
            ++m[static_cast<std::size_t>(i)];
            if (total_degree(m) <= bound) break;
            m[static_cast<std::size_t>(i)] = 0;
        }
        if (i == n) break;
    }
    return out;
}

Report hopf_axiom_report(const LiePtr& alg, unsigned degree_bound) {
    Report rep("hopf:U(" + alg->name() + ")");
    auto monos = monomials_up_to(*alg, degree_bound);
    std::vector<PBWElement> elems;
    for (const auto& m : monos) elems.push_back(PBWElement::monomial(alg, m));
    PBWElement one = PBWElement::one(alg);

    rep.run("coassociativity", [&] {
        Residual r;
        for (const auto& x : elems) {
            TensorElement d = coproduct(x);
            r &= Residual::of(coproduct_on_leg(d, 1) - coproduct_on_leg(d, 2));
        }
        return r;
    });
    rep.run("counit", [&] {
        Residual r;
        for (const auto& x : elems) {
            TensorElement d = coproduct(x);
            r &= Residual::of(as_pbw(counit_on_leg(d, 1)) - x);
            r &= Residual::of(as_pbw(counit_on_leg(d, 2)) - x);
        }
        return r;
    });
    rep.run("antipode left", [&] {
        Residual r;
        for (const auto& x : elems)
            r &= Residual::of(multiply_legs(antipode_on_leg(coproduct(x), 1)) - one * counit(x)[0]);
        return r;
    });
    rep.run("antipode right", [&] {
        Residual r;
        for (const auto& x : elems)
            r &= Residual::of(multiply_legs(antipode_on_leg(coproduct(x), 2)) - one * counit(x)[0]);
        return r;
    });
    rep.run("coproduct multiplicative", [&] {
        Residual r;
        for (const auto& x : elems)
            for (const auto& y : elems)
                if (total_degree(x.terms().begin()->first.m) + total_degree(y.terms().begin()->first.m) <= degree_bound)
                    r &= Residual::of(coproduct(x * y) - coproduct(x) * coproduct(y));
        return r;
    });
    rep.run("antipode anti-homomorphism", [&] {
        Residual r;
        for (const auto& x : elems)
            for (const auto& y : elems)
                if (total_degree(x.terms().begin()->first.m) + total_degree(y.terms().begin()->first.m) <= degree_bound)
                    r &= Residual::of(antipode(x * y) - antipode(y) * antipode(x));
        return r;
    });
    rep.run("cocommutative", [&] {
        Residual r;
        for (const auto& x : elems) r &= Residual::of(flip(coproduct(x)) - coproduct(x));
        return r;
    });
    rep.run("antipode squared = id", [&] {
        Residual r;
        for (const auto& x : elems) r &= Residual::of(antipode(antipode(x)) - x);
        return r;
    });
    return rep;
}

namespace {

struct VecResidual {
    const FiniteHopf& h;
    Residual of(const FiniteHopf::Vec& a, const FiniteHopf::Vec& b) const {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(a[i] == b[i])) return Residual::failed(h.render(a) + " != " + h.render(b));
        return Residual::ok();
    }
    Residual of_mat(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(a[i] == b[i])) return Residual::failed("tensor component " + std::to_string(i) + ": " +
                                                          a[i].to_string() + " != " + b[i].to_string());
        return Residual::ok();
    }
};

}  // namespace

Report hopf_axiom_report(const FiniteHopf& h) {
    Report rep("hopf:" + h.name());
    const int n = h.dim();
    const auto sz = static_cast<std::size_t>(n);
    VecResidual cmp{h};
    auto basis = [&](int i) { return h.basis_vector(i); };

    rep.run("associativity", [&] {
        Residual r;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    r &= cmp.of(h.mul(h.mul(basis(i), basis(j)), basis(k)), h.mul(basis(i), h.mul(basis(j), basis(k))));
        return r;
    });
    rep.run("unit", [&] {
        Residual r;
        for (int i = 0; i < n; ++i) {
            r &= cmp.of(h.mul(h.unit(), basis(i)), basis(i));
            r &= cmp.of(h.mul(basis(i), h.unit()), basis(i));
        }
        return r;
    });
    rep.run("coassociativity", [&] {
        Residual r;
        for (int i = 0; i < n; ++i) {
            auto d = h.coproduct(basis(i));
            r &= cmp.of_mat(h.coproduct_left(d), h.coproduct_right(d));
        }
        return r;
    });
    rep.run("counit", [&] {
        Residual r;
        for (int i = 0; i < n; ++i) {
            auto d = h.coproduct(basis(i));
            FiniteHopf::Vec left = h.zero(), right = h.zero();
            for (std::size_t a = 0; a < sz; ++a)
                for (std::size_t b = 0; b < sz; ++b) {
                    left[b] += h.counit(basis(static_cast<int>(a))) * d[a * sz + b];
                    right[a] += d[a * sz + b] * h.counit(basis(static_cast<int>(b)));
                }
            r &= cmp.of(left, basis(i));
            r &= cmp.of(right, basis(i));
        }
        return r;
    });
    auto antipode_axiom = [&](bool left_leg) {
        Residual r;
        for (int i = 0; i < n; ++i) {
            auto d = h.coproduct(basis(i));
            FiniteHopf::Vec acc = h.zero();
            for (std::size_t a = 0; a < sz; ++a)
                for (std::size_t b = 0; b < sz; ++b) {
                    if (d[a * sz + b].is_zero()) continue;
                    auto x = basis(static_cast<int>(a)), y = basis(static_cast<int>(b));
                    auto p = left_leg ? h.mul(h.antipode(x), y) : h.mul(x, h.antipode(y));
                    for (std::size_t k = 0; k < sz; ++k) acc[k] += d[a * sz + b] * p[k];
                }
            FiniteHopf::Vec expect = h.unit();
            for (auto& v : expect) v *= h.counit(basis(i));
            r &= cmp.of(acc, expect);
        }
        return r;
    };
    rep.run("antipode left", [&] { return antipode_axiom(true); });
    rep.run("antipode right", [&] { return antipode_axiom(false); });
    rep.run("coproduct multiplicative", [&] {
        Residual r;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                r &= cmp.of_mat(h.coproduct(h.mul(basis(i), basis(j))), h.mul2(h.coproduct(basis(i)), h.coproduct(basis(j))));
        return r;
    });
    rep.run("counit multiplicative", [&] {
        Residual r;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Scalar lhs = h.counit(h.mul(basis(i), basis(j)));
                Scalar rhs = h.counit(basis(i)) * h.counit(basis(j));
                if (!(lhs == rhs)) r &= Residual::failed("counit not multiplicative on " + h.basis_name(i) + "," + h.basis_name(j));
            }
        return r;
    });
    rep.run("antipode anti-homomorphism", [&] {
        Residual r;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                r &= cmp.of(h.antipode(h.mul(basis(i), basis(j))), h.mul(h.antipode(basis(j)), h.antipode(basis(i))));
        return r;
    });
    bool involutive_expected = h.is_commutative() || h.is_cocommutative();
    Residual s2;
    for (int i = 0; i < n; ++i) s2 &= cmp.of(h.antipode(h.antipode(basis(i))), basis(i));
    if (involutive_expected)
        rep.add("antipode squared = id", s2);
    else
        rep.add_informational("antipode squared = id", s2.zero ? "S^2 = id although neither commutative nor cocommutative"
                                                               : "S^2 != id (expected: neither commutative nor cocommutative): " + s2.text);
    return rep;
}

}  // namespace hopftwist
