#include "hopftwist/star.hpp"

#include <mutex>
#include <tuple>
#include <utility>

namespace hopftwist {

namespace {

Geom wedge_op(const Geom& a, const Geom& b) { return a * b; }

void require_function(const Geom& f, const char* what) {
    if (f.max_degree() > 0) throw std::invalid_argument(std::string(what) + " acts on functions");
}

bool odd(int k) { return (k % 2 + 2) % 2 == 1; }

}  // namespace

struct StarAlgebra::Cache {
    std::mutex mu;
    std::map<std::tuple<int, std::string, GMono>, Geom> ops;
};

StarAlgebra::StarAlgebra(RealizationPtr phi, Twist f)
    : phi_(std::move(phi)), f_(std::move(f)), r_(r_matrix(f_)), cache_(std::make_shared<Cache>()) {
    if (!phi_) throw std::invalid_argument("star algebra needs a realization");
    if (f_.algebra()->name() != phi_->algebra()->name())
        throw std::invalid_argument("twist on " + f_.algebra()->name() + " but realization of " +
                                    phi_->algebra()->name());
}

Geom star(const StarAlgebra& a, const Geom& f, const Geom& g) {
    require_function(f, "star");
    require_function(g, "star");
    return contract2(a.realization(), a.twist().total_inv(), f, g, wedge_op);
}

Geom braid(const StarAlgebra& a, const Geom& f, const Geom& g,
           const std::function<Geom(const Geom&, const Geom&)>& op) {
    return contract2(a.realization(), a.rmatrix().rinv, f, g, op);
}

ConstantPoisson::ConstantPoisson(int dim) : dim_(dim), m_(static_cast<std::size_t>(dim * dim)) {
    if (dim < 1 || dim > kMaxCoords) throw std::invalid_argument("Poisson dimension out of range");
}

ConstantPoisson& ConstantPoisson::set(int i, int j, const Scalar& c) {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw std::invalid_argument("Poisson index out of range");
    if (i == j && !c.is_zero()) throw std::invalid_argument("a skew bivector has zero diagonal");
    m_[static_cast<std::size_t>(i * dim_ + j)] = c;
    m_[static_cast<std::size_t>(j * dim_ + i)] = -c;
    return *this;
}

Geom moyal_star(const ConstantPoisson& pi, const Geom& f, const Geom& g, int sign) {
    require_function(f, "moyal_star");
    require_function(g, "moyal_star");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    std::vector<std::pair<Geom, Geom>> layer{{f, g}};
    Geom result = f * g;
    Scalar factor(1);
    for (unsigned n = 1; n <= truncation_order() && !layer.empty(); ++n) {
        std::vector<std::pair<Geom, Geom>> next;
        for (const auto& [p, q] : layer)
            for (int i = 0; i < pi.dim(); ++i) {
                Geom dp = partial_derivative(p, i);
                if (dp.is_zero()) continue;
                for (int j = 0; j < pi.dim(); ++j) {
                    if (pi.at(i, j).is_zero()) continue;
                    Geom dq = partial_derivative(q, j);
                    if (!dq.is_zero()) next.emplace_back(dp * pi.at(i, j), dq);
                }
            }
        factor = factor * Scalar::rational(sign, static_cast<long>(n));
        for (const auto& [p, q] : next) result += (p * q).hbar_shift(n) * factor;
        layer = std::move(next);
    }
    return result;
}

StarAlgebra moyal_star_algebra(const ConstantPoisson& pi, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    auto phi = Realization::translations(pi.dim());
    const LiePtr& alg = phi->algebra();
    std::vector<std::pair<PBWElement, PBWElement>> r;
    for (int i = 0; i < pi.dim(); ++i)
        for (int j = 0; j < pi.dim(); ++j)
            if (!pi.at(i, j).is_zero())
                r.emplace_back(PBWElement::generator(alg, i) * pi.at(i, j), PBWElement::generator(alg, j));
    Twist f = r.empty() ? make_trivial_twist(alg) : make_abelian_twist(alg, r, Scalar(-sign));
    return StarAlgebra(phi, f);
}

DualPoly gutt_star(const DualPoly& p, const DualPoly& q) {
    const LiePtr& alg = p.algebra() ? p.algebra() : q.algebra();
    if (!alg) throw std::invalid_argument("gutt_star needs an algebra");
    if (p.degree() + q.degree() > symmetrize_degree_bound())
        throw std::invalid_argument("gutt_star: degree bound exceeded");
    auto split = [&](const DualPoly& x) {
        std::map<unsigned, DualPoly> parts;
        for (const auto& [k, v] : x.terms()) {
            auto [it, fresh] = parts.try_emplace(total_degree(k.m), alg);
            it->second.add(k.h, k.m, v);
        }
        return parts;
    };
    DualPoly out(alg);
    for (const auto& [k, pk] : split(p))
        for (const auto& [l, ql] : split(q)) {
            DualPoly prod = unsymmetrize_unscaled(symmetrize_unscaled(pk) * symmetrize_unscaled(ql));
            for (const auto& [key, v] : prod.terms()) {
                unsigned d = total_degree(key.m);
                out.add(key.h + k + l - d, key.m, v);
            }
        }
    return out;
}

Geom poisson_from_r(const Realization& phi, const ClassicalR& r, const Geom& f, const Geom& g) {
    if (!r.algebra() || r.algebra()->name() != phi.algebra()->name())
        throw std::invalid_argument("r-matrix legs are not realized");
    Geom out(GeomKind::Function, phi.dim());
    for (int i = 0; i < r.dim(); ++i) {
        if (!phi.field(i).terms().size()) continue;
        Geom fi = phi.act_generator(i, f);
        if (fi.is_zero()) continue;
        for (int j = 0; j < r.dim(); ++j)
            if (!r.at(i, j).is_zero()) out += fi * phi.act_generator(j, g) * r.at(i, j);
    }
    return out;
}

Geom twisted_wedge(const StarAlgebra& a, const Geom& x, const Geom& y) {
    return contract2(a.realization(), a.twist().total_inv(), x, y, wedge_op);
}

Geom twisted_schouten(const StarAlgebra& a, const Geom& x, const Geom& y) {
    return contract2(a.realization(), a.twist().total_inv(), x, y,
                     [](const Geom& p, const Geom& q) { return schouten(p, q); });
}

const Geom& StarAlgebra::twisted_on_basis(int op, const std::string& xkey, const Geom& x, const GMono& b) const {
    auto key = std::make_tuple(op, xkey, b);
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->ops.find(key);
        if (it != cache_->ops.end()) return it->second;
    }
    Geom w = Geom::monomial(GeomKind::Form, dim(), b);
    Geom r = op == static_cast<int>(CartanOp::Lie)
                 ? contract2(*phi_, f_.total_inv(), x, w, [](const Geom& p, const Geom& q) { return lie_form(p, q); })
                 : contract2(*phi_, f_.total_inv(), x, w, [](const Geom& p, const Geom& q) { return insert(p, q); });
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->ops.emplace(key, std::move(r)).first->second;
}

Geom twisted_cartan(const StarAlgebra& a, CartanOp op, const Geom& x, const Geom& w) {
    if (op == CartanOp::Differential) return exterior_derivative(w);
    if (w.kind() == GeomKind::Multivector && w.max_degree() > 0) throw std::invalid_argument("Cartan operators act on forms");
    Geom out(GeomKind::Form, a.dim());
    if (x.is_zero()) return out;
    const std::string key = x.to_string();
    const unsigned n = truncation_order();
    const unsigned base = x.min_h();
    for (const auto& [k, c] : w.terms()) {
        if (k.h + base > n) continue;
        const Geom& r = a.twisted_on_basis(static_cast<int>(op), key, x, k.m);
        for (const auto& [kr, vr] : r.terms())
            if (k.h + kr.h <= n) out.add(k.h + kr.h, kr.m, c * vr);
    }
    return out;
}

int CartanTerm::degree() const {
    if (op == CartanOp::Differential) return 1;
    auto k = x.degree();
    if (!k) throw std::invalid_argument("Cartan operators need homogeneous multivectors");
    return op == CartanOp::Lie ? 1 - *k : -*k;
}

Geom braided_commutator(const StarAlgebra& a, const CartanTerm& A, const CartanTerm& B, const Geom& w,
                        const TensorElement* rinv) {
    const TensorElement& r = rinv ? *rinv : a.rmatrix().rinv;
    const Realization& phi = a.realization();
    Geom out = twisted_cartan(a, A.op, A.x, twisted_cartan(a, B.op, B.x, w));
    const bool plus = odd(A.degree() * B.degree());
    const unsigned n = truncation_order();
    auto label_order = [](const CartanTerm& t) { return t.op == CartanOp::Differential ? 0u : t.x.min_h(); };
    const unsigned base = label_order(A) + label_order(B) + w.min_h();
    for (const auto& [k, c] : r.terms()) {
        if (k.h + base > n) continue;
        // d carries no label, so R^-1 enters it through the counit.
        const Exps& m1 = k.m[0];
        const Exps& m2 = k.m[1];
        if (B.op == CartanOp::Differential && m1 != Exps{}) continue;
        if (A.op == CartanOp::Differential && m2 != Exps{}) continue;
        Geom y = B.op == CartanOp::Differential ? B.x : phi.act(m1, B.x);
        Geom x = A.op == CartanOp::Differential ? A.x : phi.act(m2, A.x);
        if ((B.op != CartanOp::Differential && y.is_zero()) || (A.op != CartanOp::Differential && x.is_zero()))
            continue;
        Geom term = twisted_cartan(a, B.op, y, twisted_cartan(a, A.op, x, w)).hbar_shift(k.h) * c;
        if (plus)
            out += term;
        else
            out -= term;
    }
    return out;
}

CartanSamples default_cartan_samples(const Realization& phi) {
    const int n = phi.dim();
    CartanSamples s;
    std::vector<Geom> fields;
    for (int i = 0; i < n; ++i) fields.push_back(Geom::partial(n, i));
    for (int i = 0; i < phi.algebra()->dim(); ++i)
        if (!phi.field(i).is_zero()) fields.push_back(phi.field(i));
    s.multivectors.push_back(Geom::coordinate(n, 0));
    s.multivectors.insert(s.multivectors.end(), fields.begin(), fields.end());
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t j = i + 1; j < fields.size(); ++j) {
            Geom w = fields[i] * fields[j];
            if (!w.is_zero()) s.multivectors.push_back(w);
        }
    s.forms.push_back(Geom::coordinate(n, n - 1).as_kind(GeomKind::Form));
    for (int i = 0; i < n; ++i) s.forms.push_back(Geom::coordinate(n, (i + 1) % n) * Geom::dx(n, i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s.forms.push_back(Geom::coordinate(n, i) * Geom::dx(n, i) * Geom::dx(n, j));
    return s;
}

Report cartan_report(const StarAlgebra& a, const CartanSamples& samples,
                     const std::optional<TensorElement>& rinv_override) {
    Report rep("braided cartan calculus [" + a.twist().label() + "]");
    const TensorElement* rinv = rinv_override ? &*rinv_override : nullptr;
    const CartanTerm d{CartanOp::Differential, Geom(GeomKind::Multivector, a.dim())};
    auto L = [](const Geom& x) { return CartanTerm{CartanOp::Lie, x}; };
    auto I = [](const Geom& x) { return CartanTerm{CartanOp::Insertion, x}; };

    auto over_pairs = [&](const std::function<Geom(const Geom&, const Geom&, const Geom&)>& residual) {
        return [&, residual]() {
            Residual r;
            for (const auto& x : samples.multivectors)
                for (const auto& y : samples.multivectors)
                    for (const auto& w : samples.forms) {
                        r &= Residual::of(residual(x, y, w));
                        if (!r.zero) return r;
                    }
            return r;
        };
    };
    auto over_single = [&](const std::function<Geom(const Geom&, const Geom&)>& residual) {
        return [&, residual]() {
            Residual r;
            for (const auto& x : samples.multivectors)
                for (const auto& w : samples.forms) {
                    r &= Residual::of(residual(x, w));
                    if (!r.zero) return r;
                }
            return r;
        };
    };

    rep.run("[L_X, L_Y]_R = L_[[X,Y]]_F", over_pairs([&](const Geom& x, const Geom& y, const Geom& w) {
                return braided_commutator(a, L(x), L(y), w, rinv) -
                       twisted_cartan(a, CartanOp::Lie, twisted_schouten(a, x, y), w);
            }));
    rep.run("[L_X, i_Y]_R = i_[[X,Y]]_F", over_pairs([&](const Geom& x, const Geom& y, const Geom& w) {
                return braided_commutator(a, L(x), I(y), w, rinv) -
                       twisted_cartan(a, CartanOp::Insertion, twisted_schouten(a, x, y), w);
            }));
    rep.run("[L_X, d]_R = 0", over_single([&](const Geom& x, const Geom& w) {
                return braided_commutator(a, L(x), d, w, rinv);
            }));
    rep.run("[i_X, i_Y]_R = 0", over_pairs([&](const Geom& x, const Geom& y, const Geom& w) {
                return braided_commutator(a, I(x), I(y), w, rinv);
            }));
    rep.run("[i_X, d]_R = L_X", over_single([&](const Geom& x, const Geom& w) {
                return braided_commutator(a, I(x), d, w, rinv) - twisted_cartan(a, CartanOp::Lie, x, w);
            }));
    rep.run("[d, d]_R = 0", [&]() {
        Residual r;
        for (const auto& w : samples.forms) r &= Residual::of(braided_commutator(a, d, d, w, rinv));
        return r;
    });
    return rep;
}

Geom twisted_involution(const StarAlgebra& a, const Geom& obj) {
    if (!a.twist().algebra()->has_involution()) throw AlgebraError("the algebra carries no *-structure");
    Report u = check_unitary(a.twist());
    if (!u.passed()) throw AlgebraError("twist " + a.twist().label() + " is not unitary");
    return a.realization().act(antipode(a.twist().beta()), star_involution(obj));
}

}  // namespace hopftwist
