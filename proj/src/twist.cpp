#include "hopftwist/twist.hpp"

#include <ostream>

namespace hopftwist {

namespace {

TensorElement unit2(const LiePtr& alg) { return TensorElement::one(alg, 2); }

PBWElement beta_of(const TensorElement& f) { return multiply_legs(antipode_on_leg(f, 2)); }
PBWElement beta_inv_of(const TensorElement& finv) { return multiply_legs(antipode_on_leg(finv, 1)); }

bool is_unit_tensor(const TensorElement& t) { return t == TensorElement::one(t.algebra(), t.arity()); }

}  // namespace

Twist::Twist(std::string label, TensorElement f) : Twist(std::move(label), f, unit2(f.algebra())) {}

Twist::Twist(std::string label, TensorElement f, TensorElement host)
    : label_(std::move(label)), f_(std::move(f)), host_(std::move(host)) {
    if (f_.arity() != 2 || host_.arity() != 2) throw std::invalid_argument("twist must be a 2-tensor");
    finv_ = f_.inverse();
    host_inv_ = host_.inverse();
    total_ = f_ * host_;
    total_inv_ = host_inv_ * finv_;
    beta_ = beta_of(total_);
    beta_inv_ = beta_inv_of(total_inv_);
}

bool Twist::on_twisted_host() const { return !is_unit_tensor(host_); }

Twist make_trivial_twist(const LiePtr& alg) { return Twist("trivial", unit2(alg)); }

Twist make_abelian_twist(const LiePtr& alg, const std::vector<std::pair<PBWElement, PBWElement>>& r,
                         const Scalar& scale) {
    std::vector<PBWElement> gens;
    for (const auto& [x, y] : r) {
        gens.push_back(x);
        gens.push_back(y);
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!(gens[i] * gens[j] - gens[j] * gens[i]).is_zero())
                throw AlgebraError("abelian twist: " + gens[i].to_string() + " and " + gens[j].to_string() +
                                   " do not commute");
    TensorElement u(alg, 2);
    for (const auto& [x, y] : r) u += TensorElement::product_of({x, y});
    u = u.hbar_shift(1) * scale;
    TensorElement sum = unit2(alg), power = sum;
    for (unsigned n = 1; n <= truncation_order(); ++n) {
        power = power * u * Scalar::rational(1, n);
        if (power.is_zero()) break;
        sum += power;
    }
    return Twist("abelian", sum);
}

Twist make_jordanian_twist(const LiePtr& alg, const std::string& h, const std::string& e, const Scalar& scale) {
    auto hi = alg->index_of(h), ei = alg->index_of(e);
    if (!hi || !ei) throw std::invalid_argument("jordanian twist: unknown generator");
    const auto& br = alg->bracket(*hi, *ei);
    if (br.size() != 1 || br[0].first != *ei || !(br[0].second == Scalar(2)))
        throw AlgebraError("jordanian twist requires [" + h + "," + e + "] = 2" + e);
    PBWElement half_h = PBWElement::generator(alg, *hi) * Scalar::rational(1, 2);
    PBWElement sigma = log1p_series(PBWElement::generator(alg, *ei).hbar_shift(1) * scale);
    // H/2 (x) 1 and 1 (x) sigma commute, so the exponential factorizes termwise.
    TensorElement sum = unit2(alg);
    PBWElement hp = PBWElement::one(alg), sp = PBWElement::one(alg);
    Scalar fact(1);
    for (unsigned n = 1; n <= truncation_order(); ++n) {
        hp = hp * half_h;
        sp = sp * sigma;
        fact *= Scalar(static_cast<long>(n));
        if (sp.is_zero()) break;
        sum += TensorElement::product_of({hp, sp}) * fact.inverse();
    }
    return Twist("jordanian", sum);
}

TensorElement host_coproduct(const Twist& f, const PBWElement& x) {
    if (!f.on_twisted_host()) return coproduct(x);
    return f.host() * coproduct(x) * f.host_inv();
}

TensorElement host_coproduct_on_leg(const Twist& f, const TensorElement& t, unsigned leg) {
    TensorElement d = coproduct_on_leg(t, leg);
    if (!f.on_twisted_host()) return d;
    unsigned n = d.arity();
    return leg_embed(f.host(), {leg, leg + 1}, n) * d * leg_embed(f.host_inv(), {leg, leg + 1}, n);
}

namespace {

TensorElement cocycle_residual_impl(const TensorElement& f, const Twist* host) {
    auto on_leg = [&](unsigned leg) {
        return host ? host_coproduct_on_leg(*host, f, leg) : coproduct_on_leg(f, leg);
    };
    TensorElement lhs = leg_embed(f, {1, 2}, 3) * on_leg(1);
    TensorElement rhs = leg_embed(f, {2, 3}, 3) * on_leg(2);
    return lhs - rhs;
}

Report verify_impl(const TensorElement& f, const Twist* host, const std::string& label) {
    Report rep("twist:" + label);
    const LiePtr& alg = f.algebra();
    rep.run("normalization (eps (x) id)", [&] {
        return Residual::of(counit_on_leg(f, 1) - TensorElement::one(alg, 1));
    });
    rep.run("normalization (id (x) eps)", [&] {
        return Residual::of(counit_on_leg(f, 2) - TensorElement::one(alg, 1));
    });
    rep.run("invertible", [&] {
        TensorElement inv = f.inverse();
        Residual r = Residual::of(f * inv - unit2(alg));
        r &= Residual::of(inv * f - unit2(alg));
        return r;
    });
    rep.run("2-cocycle", [&] { return Residual::of(cocycle_residual_impl(f, host)); });
    return rep;
}

}  // namespace

TensorElement cocycle_residual(const TensorElement& f, const Twist& host) { return cocycle_residual_impl(f, &host); }
TensorElement cocycle_residual(const TensorElement& f) { return cocycle_residual_impl(f, nullptr); }

Report verify_twist(const Twist& f) {
    if (!f.on_twisted_host()) return verify_impl(f.f(), nullptr, f.label());
    // Cocycle with respect to Delta_host = host Delta host^-1.
    Twist shell("shell", unit2(f.algebra()), f.host());
    return verify_impl(f.f(), &shell, f.label());
}

Report verify_twist_candidate(const TensorElement& f, const std::string& label) {
    return verify_impl(f, nullptr, label);
}

TensorElement twisted_coproduct(const Twist& f, const PBWElement& x) {
    return f.total() * coproduct(x) * f.total_inv();
}

TensorElement twisted_coproduct_on_leg(const Twist& f, const TensorElement& t, unsigned leg) {
    TensorElement d = coproduct_on_leg(t, leg);
    unsigned n = d.arity();
    return leg_embed(f.total(), {leg, leg + 1}, n) * d * leg_embed(f.total_inv(), {leg, leg + 1}, n);
}

PBWElement twisted_antipode(const Twist& f, const PBWElement& x) { return f.beta() * antipode(x) * f.beta_inv(); }

RMatrix r_matrix(const Twist& f) {
    RMatrix r;
    r.r = flip(f.total()) * f.total_inv();
    r.rinv = f.total() * flip(f.total_inv());
    return r;
}

Report verify_rmatrix(const Twist& f) { return verify_rmatrix(f, r_matrix(f)); }

Report verify_rmatrix(const Twist& f, const RMatrix& r) {
    Report rep("rmatrix:" + f.label());
    const LiePtr& alg = f.algebra();
    rep.run("R R^-1 = 1", [&] {
        Residual res = Residual::of(r.r * r.rinv - unit2(alg));
        res &= Residual::of(r.rinv * r.r - unit2(alg));
        return res;
    });
    rep.run("quasi-cocommutativity", [&] {
        Residual res;
        for (int i = 0; i < alg->dim(); ++i) {
            TensorElement d = twisted_coproduct(f, PBWElement::generator(alg, i));
            res &= Residual::of(flip(d) - r.r * d * r.rinv);
        }
        return res;
    });
    rep.run("hexagon (Delta_F (x) id)R = R13 R23", [&] {
        return Residual::of(twisted_coproduct_on_leg(f, r.r, 1) - leg_embed(r.r, {1, 3}, 3) * leg_embed(r.r, {2, 3}, 3));
    });
    rep.run("hexagon (id (x) Delta_F)R = R13 R12", [&] {
        return Residual::of(twisted_coproduct_on_leg(f, r.r, 2) - leg_embed(r.r, {1, 3}, 3) * leg_embed(r.r, {1, 2}, 3));
    });
    rep.run("quantum Yang-Baxter", [&] {
        TensorElement r12 = leg_embed(r.r, {1, 2}, 3), r13 = leg_embed(r.r, {1, 3}, 3), r23 = leg_embed(r.r, {2, 3}, 3);
        return Residual::of(r12 * r13 * r23 - r23 * r13 * r12);
    });
    rep.run("triangular R21 = R^-1", [&] { return Residual::of(flip(r.r) - r.rinv); });
    return rep;
}

Report check_unitary(const Twist& f) {
    if (!f.algebra()->has_involution()) throw std::invalid_argument("unitarity needs an involution table");
    Report rep("unitary:" + f.label());
    rep.run("F_1^* (x) F_2^* = F^-1", [&] { return Residual::of(star_legwise(f.total()) - f.total_inv()); });
    rep.run("S(beta) beta^* = 1", [&] {
        return Residual::of(antipode(f.beta()) * star(f.beta()) - PBWElement::one(f.algebra()));
    });
    return rep;
}

// ---------------------------------------------------------------- ClassicalR

ClassicalR::ClassicalR(LiePtr alg) : alg_(std::move(alg)), m_(static_cast<std::size_t>(alg_->dim() * alg_->dim())) {}

ClassicalR ClassicalR::wedge(const LiePtr& alg, const std::string& a, const std::string& b, const Scalar& c) {
    auto i = alg->index_of(a), j = alg->index_of(b);
    if (!i || !j) throw std::invalid_argument("unknown generator in r-matrix");
    ClassicalR r(alg);
    r.at(*i, *j) += c;
    r.at(*j, *i) -= c;
    return r;
}

ClassicalR ClassicalR::flipped() const {
    ClassicalR r(alg_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) r.at(i, j) = at(j, i);
    return r;
}

ClassicalR ClassicalR::operator-(const ClassicalR& o) const {
    ClassicalR r = *this;
    for (std::size_t k = 0; k < m_.size(); ++k) r.m_[k] -= o.m_[k];
    return r;
}

ClassicalR ClassicalR::operator+(const ClassicalR& o) const {
    ClassicalR r = *this;
    for (std::size_t k = 0; k < m_.size(); ++k) r.m_[k] += o.m_[k];
    return r;
}

ClassicalR ClassicalR::operator*(const Scalar& c) const {
    ClassicalR r = *this;
    for (auto& v : r.m_) v *= c;
    return r;
}

bool ClassicalR::is_zero() const {
    for (const auto& v : m_)
        if (!v.is_zero()) return false;
    return true;
}

bool ClassicalR::is_skew() const { return (*this + flipped()).is_zero(); }

TensorElement ClassicalR::as_tensor() const {
    TensorElement t(alg_, 2);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (!at(i, j).is_zero()) t += TensorElement::simple(alg_, 2, Legs{unit_exps(i), unit_exps(j)}, at(i, j));
    return t;
}

std::string ClassicalR::to_wedge_string() const {
    std::string out;
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j) {
            Scalar c = (at(i, j) - at(j, i)) * Scalar::rational(1, 2);
            if (!c.is_zero()) out += render_term(c, alg_->basis_name(i) + "^" + alg_->basis_name(j), out.empty());
        }
    return out.empty() ? "0" : out;
}

ClassicalR first_order_part(const TensorElement& t) {
    ClassicalR r(t.algebra());
    for (const auto& [k, v] : t.terms()) {
        if (k.h != 1) continue;
        int idx[2];
        for (unsigned l = 0; l < 2; ++l) {
            if (total_degree(k.m[l]) != 1) throw AlgebraError("order-one term is not in g (x) g: " + t.to_string());
            idx[l] = 0;
            while (k.m[l][static_cast<std::size_t>(idx[l])] == 0) ++idx[l];
        }
        r.at(idx[0], idx[1]) += v;
    }
    return r;
}

ClassicalR classical_r(const Twist& f) {
    ClassicalR rt = first_order_part(f.total());
    return rt.flipped() - rt;
}

ClassicalR classical_r_from_rmatrix(const RMatrix& r) {
    ClassicalR rt = first_order_part(r.r);
    return (rt - rt.flipped()) * Scalar::rational(1, 2);
}

TensorElement cybe_check(const ClassicalR& r) {
    const LiePtr& alg = r.algebra();
    const int n = r.dim();
    TensorElement out(alg, 3);
    auto put = [&](const LiePresentation::Vec& v, int a, int b, int slot, const Scalar& c) {
        for (const auto& [k, w] : v) {
            Legs legs{};
            int pos = 0;
            for (int s = 0; s < 3; ++s) {
                if (s == slot)
                    legs[static_cast<std::size_t>(s)] = unit_exps(k);
                else
                    legs[static_cast<std::size_t>(s)] = unit_exps(pos++ == 0 ? a : b);
            }
            out += TensorElement::simple(alg, 3, legs, c * w);
        }
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (r.at(i, j).is_zero()) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (r.at(k, l).is_zero()) continue;
                    Scalar c = r.at(i, j) * r.at(k, l);
                    put(alg->bracket(i, k), j, l, 0, c);  // [r1,r1'] (x) r2 (x) r2'
                    put(alg->bracket(j, k), i, l, 1, c);  // r1 (x) [r2,r1'] (x) r2'
                    put(alg->bracket(j, l), i, k, 2, c);  // r1 (x) r1' (x) [r2,r2']
                }
        }
    return out;
}

// ---------------------------------------------------------------- exterior algebra of g

namespace {

/// Sign of moving the bits of b past those of a into sorted position.
int merge_sign(unsigned a, unsigned b) {
    int swaps = 0;
    for (unsigned bit = 0; bit < 32; ++bit)
        if (b & (1u << bit)) swaps += __builtin_popcount(a & ~((2u << bit) - 1));
    return swaps % 2 ? -1 : 1;
}

}  // namespace

void LieMultivector::add(unsigned mask, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, ins] = terms_.try_emplace(mask, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LieMultivector LieMultivector::generator(const LiePtr& alg, int i) {
    LieMultivector m(alg);
    m.add(1u << i, Scalar(1));
    return m;
}

LieMultivector LieMultivector::from_r(const ClassicalR& r) {
    LieMultivector m(r.algebra());
    for (int i = 0; i < r.dim(); ++i)
        for (int j = i + 1; j < r.dim(); ++j)
            m.add((1u << i) | (1u << j), (r.at(i, j) - r.at(j, i)) * Scalar::rational(1, 2));
    return m;
}

LieMultivector& LieMultivector::operator+=(const LieMultivector& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
}

LieMultivector operator*(const LieMultivector& a, const LieMultivector& b) {
    LieMultivector r(a.alg_ ? a.alg_ : b.alg_);
    for (const auto& [ka, va] : a.terms_)
        for (const auto& [kb, vb] : b.terms_)
            if ((ka & kb) == 0) r.add(ka | kb, va * vb * Scalar(merge_sign(ka, kb)));
    return r;
}

LieMultivector LieMultivector::operator*(const Scalar& c) const {
    LieMultivector r(alg_);
    for (const auto& [k, v] : terms_) r.add(k, v * c);
    return r;
}

std::string LieMultivector::to_string() const {
    std::string out;
    for (const auto& [k, v] : terms_) {
        std::string f;
        for (int i = 0; i < alg_->dim(); ++i)
            if (k & (1u << i)) f += (f.empty() ? "" : "^") + alg_->basis_name(i);
        out += render_term(v, f, out.empty());
    }
    return out.empty() ? "0" : out;
}

LieMultivector schouten_wedge_g(const LieMultivector& a, const LieMultivector& b) {
    const LiePtr& alg = a.algebra();
    LieMultivector out(alg);
    auto factors = [&](unsigned mask) {
        std::vector<int> f;
        for (int i = 0; i < alg->dim(); ++i)
            if (mask & (1u << i)) f.push_back(i);
        return f;
    };
    auto wedge_of = [&](const std::vector<int>& f, std::size_t skip) {
        LieMultivector w(alg);
        w.add(0, Scalar(1));
        for (std::size_t t = 0; t < f.size(); ++t)
            if (t != skip) w = w * LieMultivector::generator(alg, f[t]);
        return w;
    };
    for (const auto& [ka, va] : a.terms())
        for (const auto& [kb, vb] : b.terms()) {
            auto fa = factors(ka), fb = factors(kb);
            if (fa.empty() || fb.empty()) continue;
            for (std::size_t i = 0; i < fa.size(); ++i)
                for (std::size_t j = 0; j < fb.size(); ++j) {
                    LieMultivector br(alg);
                    for (const auto& [k, c] : alg->bracket(fa[i], fb[j])) br.add(1u << k, c);
                    // (-1)^{i+j} with 1-based positions
                    Scalar sign((i + j) % 2 == 0 ? 1 : -1);
                    out += br * wedge_of(fa, i) * wedge_of(fb, j) * (va * vb * sign);
                }
        }
    return out;
}

// ---------------------------------------------------------------- leaf

LeafBasis symplectic_leaf(const ClassicalR& r) {
    const LiePtr& alg = r.algebra();
    const int n = r.dim();
    // Row echelon form of the matrix whose rows are (e_i^* (x) id)(r).
    std::vector<std::vector<Scalar>> rows;
    for (int i = 0; i < n; ++i) {
        std::vector<Scalar> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = r.at(i, j);
        rows.push_back(row);
    }
    std::vector<std::vector<Scalar>> echelon;
    std::vector<int> pivots;
    auto reduce = [&](std::vector<Scalar> v) {
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            auto p = static_cast<std::size_t>(pivots[e]);
            if (v[p].is_zero()) continue;
            Scalar c = v[p];
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * echelon[e][k];
        }
        return v;
    };
    for (auto& row : rows) {
        auto v = reduce(row);
        int p = -1;
        for (int k = 0; k < n; ++k)
            if (!v[static_cast<std::size_t>(k)].is_zero()) {
                p = k;
                break;
            }
        if (p < 0) continue;
        Scalar inv = v[static_cast<std::size_t>(p)].inverse();
        for (auto& x : v) x *= inv;
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            Scalar c = echelon[e][static_cast<std::size_t>(p)];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < v.size(); ++k) echelon[e][k] -= c * v[k];
        }
        echelon.push_back(v);
        pivots.push_back(p);
    }
    LeafBasis out;
    for (const auto& v : echelon) {
        LiePresentation::Vec vec;
        for (int k = 0; k < n; ++k)
            if (!v[static_cast<std::size_t>(k)].is_zero()) vec.emplace_back(k, v[static_cast<std::size_t>(k)]);
        out.basis.push_back(vec);
    }
    for (std::size_t a = 0; a < out.basis.size(); ++a)
        for (std::size_t b = a + 1; b < out.basis.size(); ++b) {
            auto br = alg->bracket(out.basis[a], out.basis[b]);
            std::vector<Scalar> v(static_cast<std::size_t>(n));
            for (const auto& [k, c] : br) v[static_cast<std::size_t>(k)] += c;
            for (const auto& x : reduce(v))
                if (!x.is_zero()) out.bracket_closed = false;
        }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ClassicalR& r) { return os << r.to_string(); }
std::ostream& operator<<(std::ostream& os, const LieMultivector& m) { return os << m.to_string(); }

Twist compose_twists(const Twist& f2, const Twist& f1) {
    if (!(f2.host() == f1.total()))
        throw std::invalid_argument("compose_twists: second twist must live on the algebra twisted by the first");
    Report r = verify_twist(f2);
    if (!r.passed()) throw AlgebraError("compose_twists: not a twist of the twisted algebra\n" + r.to_text());
    return Twist(f2.label() + "*" + f1.label(), f2.f() * f1.f(), f1.host());
}

}  // namespace hopftwist
