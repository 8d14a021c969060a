#include "hopftwist/tensor.hpp"

#include <ostream>
#include <mutex>

namespace hopftwist {

namespace {

std::string hbar_factor(unsigned h) {
    if (h == 0) return "";
    return h == 1 ? "hbar" : "hbar^" + std::to_string(h);
}

struct CoproductTerm {
    Scalar c;
    Exps left;
    Exps right;
};

const std::vector<CoproductTerm>& coproduct_mono(const Exps& k) {
    static std::mutex mu;
    static std::map<Exps, std::vector<CoproductTerm>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    std::vector<CoproductTerm> out;
    Exps m{};
    for (;;) {
        mpz_class coeff = 1;
        Exps rest;
        for (std::size_t i = 0; i < kMaxLieDim; ++i) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), k[i], m[i]);
            coeff *= b;
            rest[i] = static_cast<std::uint8_t>(k[i] - m[i]);
        }
        out.push_back({Scalar(Gaussian(mpq_class(coeff))), m, rest});
        std::size_t i = 0;
        while (i < kMaxLieDim && m[i] == k[i]) m[i++] = 0;
        if (i == kMaxLieDim) break;
        ++m[i];
    }
    std::lock_guard lock(mu);
    return cache.try_emplace(k, std::move(out)).first->second;
}

}  // namespace

TensorElement::TensorElement(LiePtr alg, unsigned arity) : alg_(std::move(alg)), arity_(arity) {
    if (arity == 0 || arity > kMaxArity) throw std::invalid_argument("tensor arity must be 1..4");
}

TensorElement TensorElement::one(const LiePtr& alg, unsigned arity) {
    TensorElement t(alg, arity);
    t.add(0, Legs{}, Scalar(1));
    return t;
}

TensorElement TensorElement::simple(const LiePtr& alg, unsigned arity, const Legs& legs, const Scalar& c, unsigned h) {
    TensorElement t(alg, arity);
    t.add(h, legs, c);
    return t;
}

TensorElement TensorElement::product_of(const std::vector<PBWElement>& legs) {
    if (legs.empty()) throw std::invalid_argument("empty tensor product");
    LiePtr alg;
    for (const auto& l : legs)
        if (l.algebra()) alg = l.algebra();
    TensorElement t = one(alg, static_cast<unsigned>(legs.size()));
    for (std::size_t i = 0; i < legs.size(); ++i) {
        TensorElement next(alg, t.arity());
        for (const auto& [k, v] : t.terms())
            for (const auto& [kl, vl] : legs[i].terms()) {
                Legs l = k.m;
                l[i] = kl.m;
                next.add(k.h + kl.h, l, v * vl);
            }
        t = std::move(next);
    }
    return t;
}

void TensorElement::check_compatible(const TensorElement& o) const {
    if (o.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
    if (alg_ && o.alg_ && alg_ != o.alg_) throw std::invalid_argument("tensors over different algebras");
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    check_compatible(o);
    plus(o);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    check_compatible(o);
    minus(o);
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    a.check_compatible(b);
    TensorElement r(a.alg_, a.arity_);
    const unsigned n = truncation_order();
    const LiePresentation& alg = *a.alg_;
    std::vector<const MonoPoly*> factors(a.arity_);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            unsigned h = ka.h + kb.h;
            if (h > n) continue;
            for (unsigned l = 0; l < a.arity_; ++l) factors[l] = &alg.multiply(ka.m[l], kb.m[l]);
            Scalar c = ca * cb;
            // cartesian product over legs
            std::vector<MonoPoly::const_iterator> it(a.arity_);
            for (unsigned l = 0; l < a.arity_; ++l) it[l] = factors[l]->begin();
            for (;;) {
                Legs legs{};
                Scalar v = c;
                for (unsigned l = 0; l < a.arity_; ++l) {
                    legs[l] = it[l]->first;
                    if (!it[l]->second.is_one()) v *= it[l]->second;
                }
                r.add(h, legs, v);
                unsigned l = 0;
                while (l < a.arity_) {
                    if (++it[l] != factors[l]->end()) break;
                    it[l] = factors[l]->begin();
                    ++l;
                }
                if (l == a.arity_) break;
            }
        }
    }
    return r;
}

TensorElement operator*(TensorElement a, const Scalar& c) {
    a.scale_in_place(c);
    return a;
}

TensorElement TensorElement::hbar_shift(unsigned k) const {
    TensorElement r = *this;
    r.hbar_shift_in_place(k);
    return r;
}

TensorElement TensorElement::inverse() const {
    Scalar c0;
    for (const auto& [k, v] : terms())
        if (k.h == 0 && k.m == Legs{}) c0 = v;
    if (c0.is_zero()) throw AlgebraError("tensor has no invertible constant term");
    TensorElement u = *this * c0.inverse() - one(alg_, arity_);
    for (const auto& [k, v] : u.terms())
        if (k.h == 0) throw AlgebraError("tensor is not a unit of the truncated algebra");
    TensorElement sum = one(alg_, arity_), power = sum, neg = -u;
    for (unsigned n = 1; n <= truncation_order(); ++n) {
        power = power * neg;
        if (power.is_zero()) break;
        sum += power;
    }
    return sum * c0.inverse();
}

std::string TensorElement::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : terms()) {
        std::string legs;
        for (unsigned l = 0; l < arity_; ++l) {
            std::string s = alg_->render(k.m[l]);
            legs += (l ? " ox " : "") + (s.empty() ? std::string("1") : s);
        }
        if (arity_ == 1 && legs == "1") legs.clear();
        std::string h = hbar_factor(k.h);
        out += render_term(v, h.empty() ? legs : (legs.empty() ? h : h + "*" + legs), first);
        first = false;
    }
    return out;
}

TensorElement leg_embed(const TensorElement& t, const std::vector<unsigned>& positions, unsigned arity) {
    if (positions.size() != t.arity()) throw std::invalid_argument("leg_embed: one position per leg required");
    std::vector<bool> used(arity + 1, false);
    for (unsigned p : positions) {
        if (p < 1 || p > arity || used[p]) throw std::invalid_argument("leg_embed: invalid positions");
        used[p] = true;
    }
    TensorElement r(t.algebra(), arity);
    for (const auto& [k, v] : t.terms()) {
        Legs legs{};
        for (std::size_t i = 0; i < positions.size(); ++i) legs[positions[i] - 1] = k.m[i];
        r.add(k.h, legs, v);
    }
    return r;
}

TensorElement coproduct(const PBWElement& x) {
    TensorElement r(x.algebra(), 2);
    for (const auto& [k, v] : x.terms())
        for (const auto& term : coproduct_mono(k.m)) r.add(k.h, Legs{term.left, term.right}, v * term.c);
    return r;
}

TensorElement coproduct_on_leg(const TensorElement& t, unsigned leg) {
    if (leg < 1 || leg > t.arity() || t.arity() + 1 > kMaxArity) throw std::invalid_argument("coproduct_on_leg: invalid leg");
    TensorElement r(t.algebra(), t.arity() + 1);
    const unsigned l = leg - 1;
    for (const auto& [k, v] : t.terms())
        for (const auto& term : coproduct_mono(k.m[l])) {
            Legs legs{};
            for (unsigned i = 0; i < l; ++i) legs[i] = k.m[i];
            legs[l] = term.left;
            legs[l + 1] = term.right;
            for (unsigned i = l + 1; i < t.arity(); ++i) legs[i + 1] = k.m[i];
            r.add(k.h, legs, v * term.c);
        }
    return r;
}

TensorElement counit_on_leg(const TensorElement& t, unsigned leg) {
    if (leg < 1 || leg > t.arity()) throw std::invalid_argument("counit_on_leg: invalid leg");
    unsigned out_arity = t.arity() == 1 ? 1 : t.arity() - 1;
    TensorElement r(t.algebra(), out_arity);
    const unsigned l = leg - 1;
    for (const auto& [k, v] : t.terms()) {
        if (k.m[l] != Exps{}) continue;
        Legs legs{};
        unsigned j = 0;
        for (unsigned i = 0; i < t.arity(); ++i)
            if (i != l) legs[j++] = k.m[i];
        r.add(k.h, legs, v);
    }
    return r;
}

TensorElement map_leg(const TensorElement& t, unsigned leg, const std::function<const MonoPoly&(const Exps&)>& f) {
    if (leg < 1 || leg > t.arity()) throw std::invalid_argument("map_leg: invalid leg");
    TensorElement r(t.algebra(), t.arity());
    for (const auto& [k, v] : t.terms())
        for (const auto& [m, c] : f(k.m[leg - 1])) {
            Legs legs = k.m;
            legs[leg - 1] = m;
            r.add(k.h, legs, v * c);
        }
    return r;
}

TensorElement antipode_on_leg(const TensorElement& t, unsigned leg) {
    const LiePresentation& alg = *t.algebra();
    return map_leg(t, leg, [&alg](const Exps& m) -> const MonoPoly& { return alg.antipode(m); });
}

TensorElement star_legwise(const TensorElement& t) {
    TensorElement r(t.algebra(), t.arity());
    for (const auto& [k, v] : t.terms()) r.add(k.h, k.m, v.conj());
    const LiePresentation& alg = *t.algebra();
    for (unsigned l = 1; l <= t.arity(); ++l)
        r = map_leg(r, l, [&alg](const Exps& m) -> const MonoPoly& { return alg.involution(m); });
    return r;
}

PBWElement multiply_legs(const TensorElement& t) {
    if (t.arity() != 2) throw std::invalid_argument("multiply_legs expects a 2-tensor");
    PBWElement r(t.algebra());
    for (const auto& [k, v] : t.terms())
        for (const auto& [m, c] : t.algebra()->multiply(k.m[0], k.m[1])) r.add(k.h, m, v * c);
    return r;
}

PBWElement as_pbw(const TensorElement& t) {
    if (t.arity() != 1) throw std::invalid_argument("as_pbw expects a 1-tensor");
    PBWElement r(t.algebra());
    for (const auto& [k, v] : t.terms()) r.add(k.h, k.m[0], v);
    return r;
}

PBWElement leg_element(const LiePtr& alg, const Exps& m) { return PBWElement::monomial(alg, m); }

std::ostream& operator<<(std::ostream& os, const TensorElement& t) { return os << t.to_string(); }

}  // namespace hopftwist
