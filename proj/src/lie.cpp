#include "hopftwist/lie.hpp"

#include <ostream>
#include <algorithm>
#include <atomic>

namespace hopftwist {

unsigned total_degree(const Exps& e) {
    unsigned d = 0;
    for (auto k : e) d += k;
    return d;
}

Exps unit_exps(int i) {
    Exps e{};
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

namespace {

void accumulate(MonoPoly& into, const Exps& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = into.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

std::vector<int> word_of(const Exps& m) {
    std::vector<int> w;
    for (std::size_t i = 0; i < kMaxLieDim; ++i)
        for (unsigned k = 0; k < m[i]; ++k) w.push_back(static_cast<int>(i));
    return w;
}

std::string hbar_factor(unsigned h) {
    if (h == 0) return "";
    return h == 1 ? "hbar" : "hbar^" + std::to_string(h);
}

std::string join_factors(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

}  // namespace

// ---------------------------------------------------------------- presentation

std::shared_ptr<const LiePresentation> LiePresentation::create(std::string name, std::vector<std::string> basis,
                                                               const std::vector<Bracket>& brackets,
                                                               std::vector<int> involution) {
    if (basis.empty() || basis.size() > kMaxLieDim) throw std::invalid_argument("Lie basis size must be 1..8");
    std::shared_ptr<LiePresentation> p(new LiePresentation());
    p->name_ = std::move(name);
    p->basis_ = std::move(basis);
    const int n = p->dim();
    p->table_.assign(static_cast<std::size_t>(n * n), {});
    std::vector<bool> set(static_cast<std::size_t>(n * n), false);
    auto normalize_vec = [](Vec v) {
        std::map<int, Scalar> acc;
        for (auto& [k, c] : v) acc[k] += c;
        Vec out;
        for (auto& [k, c] : acc)
            if (!c.is_zero()) out.emplace_back(k, c);
        return out;
    };
    for (const auto& b : brackets) {
        if (b.i < 0 || b.j < 0 || b.i >= n || b.j >= n) throw std::invalid_argument("bracket index out of range");
        Vec v = normalize_vec(b.value);
        for (auto& [k, c] : v)
            if (k < 0 || k >= n) throw std::invalid_argument("bracket value index out of range");
        if (b.i == b.j) {
            if (!v.empty()) throw std::invalid_argument("[x,x] must vanish for " + p->basis_[static_cast<std::size_t>(b.i)]);
            continue;
        }
        Vec neg = v;
        for (auto& [k, c] : neg) c = -c;
        auto ij = static_cast<std::size_t>(b.i * n + b.j), ji = static_cast<std::size_t>(b.j * n + b.i);
        if ((set[ij] && p->table_[ij] != v) || (set[ji] && p->table_[ji] != neg))
            throw std::invalid_argument("bracket table violates antisymmetry");
        p->table_[ij] = v;
        p->table_[ji] = neg;
        set[ij] = set[ji] = true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec x{{i, Scalar(1)}}, y{{j, Scalar(1)}}, z{{k, Scalar(1)}};
                Vec s = p->bracket(x, p->bracket(y, z));
                for (auto& t : p->bracket(y, p->bracket(z, x))) s.push_back(t);
                for (auto& t : p->bracket(z, p->bracket(x, y))) s.push_back(t);
                if (!normalize_vec(s).empty())
                    throw std::invalid_argument("structure constants violate the Jacobi identity");
            }
    if (!involution.empty()) {
        if (static_cast<int>(involution.size()) != n) throw std::invalid_argument("involution table size mismatch");
        for (int e : involution)
            if (e != 1 && e != -1) throw std::invalid_argument("involution signs must be +1 or -1");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (const auto& [k, c] : p->bracket(i, j)) {
                    Scalar lhs = c.conj() * Scalar(involution[static_cast<std::size_t>(k)]);
                    Scalar rhs = -c * Scalar(involution[static_cast<std::size_t>(i)] * involution[static_cast<std::size_t>(j)]);
                    if (!(lhs == rhs)) throw std::invalid_argument("involution table is not compatible with the bracket");
                }
        p->involution_ = std::move(involution);
    }
    return p;
}

std::shared_ptr<const LiePresentation> LiePresentation::so21() {
    static auto p = create("so21", {"H", "E", "Ep"},
                           {{0, 1, {{1, Scalar(2)}}}, {0, 2, {{2, Scalar(-2)}}}, {2, 1, {{0, Scalar(1)}}}},
                           {-1, -1, -1});
    return p;
}

std::shared_ptr<const LiePresentation> LiePresentation::sl2() {
    static auto p = create("sl2", {"H", "E", "F"},
                           {{0, 1, {{1, Scalar(2)}}}, {0, 2, {{2, Scalar(-2)}}}, {1, 2, {{0, Scalar(1)}}}},
                           {-1, -1, -1});
    return p;
}

std::shared_ptr<const LiePresentation> LiePresentation::abelian(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("P" + std::to_string(i));
    return create("abelian" + std::to_string(n), names, {}, std::vector<int>(static_cast<std::size_t>(n), -1));
}

std::shared_ptr<const LiePresentation> LiePresentation::builtin(const std::string& name) {
    if (name == "so21") return so21();
    if (name == "sl2") return sl2();
    if (name == "abelian2") {
        static auto p = abelian(2);
        return p;
    }
    throw std::invalid_argument("unknown algebra: " + name);
}

std::optional<int> LiePresentation::index_of(const std::string& symbol) const {
    for (int i = 0; i < dim(); ++i)
        if (basis_[static_cast<std::size_t>(i)] == symbol) return i;
    return std::nullopt;
}

LiePresentation::Vec LiePresentation::bracket(const Vec& x, const Vec& y) const {
    std::map<int, Scalar> acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            for (const auto& [k, c] : bracket(i, j)) acc[k] += a * b * c;
    Vec out;
    for (auto& [k, c] : acc)
        if (!c.is_zero()) out.emplace_back(k, c);
    return out;
}

const MonoPoly& LiePresentation::left_multiply(int j, const Exps& m) const {
    auto key = std::make_pair(j, m);
    {
        std::lock_guard lock(mu_);
        auto it = left_cache_.find(key);
        if (it != left_cache_.end()) return it->second;
    }
    MonoPoly res;
    int i = 0;
    while (i < dim() && m[static_cast<std::size_t>(i)] == 0) ++i;
    if (j <= i) {
        Exps r = m;
        ++r[static_cast<std::size_t>(j)];
        res.emplace(r, Scalar(1));
    } else {
        // e_j e_i m' = e_i (e_j m') + [e_j, e_i] m'
        Exps rest = m;
        --rest[static_cast<std::size_t>(i)];
        MonoPoly inner = left_multiply(j, rest);
        for (const auto& [mm, c] : inner)
            for (const auto& [r, c2] : left_multiply(i, mm)) accumulate(res, r, c * c2);
        for (const auto& [k, ck] : bracket(j, i))
            for (const auto& [r, c2] : left_multiply(k, rest)) accumulate(res, r, ck * c2);
    }
    std::lock_guard lock(mu_);
    return left_cache_.try_emplace(key, std::move(res)).first->second;
}

const MonoPoly& LiePresentation::multiply(const Exps& a, const Exps& b) const {
    auto key = std::make_pair(a, b);
    {
        std::lock_guard lock(mu_);
        auto it = mul_cache_.find(key);
        if (it != mul_cache_.end()) return it->second;
    }
    MonoPoly cur{{b, Scalar(1)}};
    std::vector<int> w = word_of(a);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        MonoPoly next;
        for (const auto& [m, c] : cur)
            for (const auto& [r, c2] : left_multiply(*it, m)) accumulate(next, r, c * c2);
        cur = std::move(next);
    }
    std::lock_guard lock(mu_);
    return mul_cache_.try_emplace(key, std::move(cur)).first->second;
}

MonoPoly LiePresentation::normalize_word(const std::vector<int>& word) const {
    MonoPoly cur{{Exps{}, Scalar(1)}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it >= dim()) throw std::invalid_argument("unknown basis index in word");
        MonoPoly next;
        for (const auto& [m, c] : cur)
            for (const auto& [r, c2] : left_multiply(*it, m)) accumulate(next, r, c * c2);
        cur = std::move(next);
    }
    return cur;
}

MonoPoly LiePresentation::rewrite_word(const std::vector<int>& word, Strategy strategy) const {
    for (int x : word)
        if (x < 0 || x >= dim()) throw std::invalid_argument("unknown basis index in word");
    std::map<std::vector<int>, Scalar> pending{{word, Scalar(1)}};
    MonoPoly done;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::vector<int>& w = node.key();
        const Scalar& c = node.mapped();
        std::optional<std::size_t> pos;
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] > w[p + 1]) {
                pos = p;
                if (strategy == Strategy::Leftmost) break;
            }
        }
        if (!pos) {
            Exps e{};
            for (int x : w) ++e[static_cast<std::size_t>(x)];
            accumulate(done, e, c);
            continue;
        }
        auto push = [&pending](std::vector<int> nw, const Scalar& v) {
            if (v.is_zero()) return;
            auto [it, ins] = pending.try_emplace(std::move(nw), v);
            if (!ins) {
                it->second += v;
                if (it->second.is_zero()) pending.erase(it);
            }
        };
        std::size_t p = *pos;
        std::vector<int> swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        push(swapped, c);
        for (const auto& [k, ck] : bracket(w[p], w[p + 1])) {
            std::vector<int> shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
            shorter.push_back(k);
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
            push(shorter, c * ck);
        }
    }
    return done;
}

const MonoPoly& LiePresentation::antipode(const Exps& m) const {
    {
        std::lock_guard lock(mu_);
        auto it = antipode_cache_.find(m);
        if (it != antipode_cache_.end()) return it->second;
    }
    std::vector<int> w = word_of(m);
    std::reverse(w.begin(), w.end());
    MonoPoly r = normalize_word(w);
    if (w.size() % 2 == 1)
        for (auto& [k, c] : r) c = -c;
    std::lock_guard lock(mu_);
    return antipode_cache_.try_emplace(m, std::move(r)).first->second;
}

const MonoPoly& LiePresentation::involution(const Exps& m) const {
    if (!has_involution()) throw std::logic_error("algebra " + name_ + " has no involution table");
    {
        std::lock_guard lock(mu_);
        auto it = involution_cache_.find(m);
        if (it != involution_cache_.end()) return it->second;
    }
    std::vector<int> w = word_of(m);
    int sign = 1;
    for (int x : w) sign *= involution_[static_cast<std::size_t>(x)];
    std::reverse(w.begin(), w.end());
    MonoPoly r = normalize_word(w);
    if (sign < 0)
        for (auto& [k, c] : r) c = -c;
    std::lock_guard lock(mu_);
    return involution_cache_.try_emplace(m, std::move(r)).first->second;
}

std::string LiePresentation::render(const Exps& m) const {
    std::string out;
    for (int i = 0; i < dim(); ++i) {
        unsigned e = m[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        out = join_factors(out, basis_name(i) + (e > 1 ? "^" + std::to_string(e) : ""));
    }
    return out;
}

// ---------------------------------------------------------------- PBWElement

PBWElement PBWElement::constant(const LiePtr& alg, const Scalar& c) {
    PBWElement x(alg);
    x.add(0, Exps{}, c);
    return x;
}

PBWElement PBWElement::generator(const LiePtr& alg, int i) {
    if (i < 0 || i >= alg->dim()) throw std::invalid_argument("generator index out of range");
    return monomial(alg, unit_exps(i));
}

PBWElement PBWElement::generator(const LiePtr& alg, const std::string& symbol) {
    auto i = alg->index_of(symbol);
    if (!i) throw std::invalid_argument("unknown symbol: " + symbol);
    return generator(alg, *i);
}

PBWElement PBWElement::monomial(const LiePtr& alg, const Exps& m, const Scalar& c, unsigned h) {
    PBWElement x(alg);
    x.add(h, m, c);
    return x;
}

PBWElement PBWElement::word(const LiePtr& alg, const std::vector<int>& letters, const Scalar& c) {
    PBWElement x(alg);
    for (const auto& [m, v] : alg->normalize_word(letters)) x.add(0, m, v * c);
    return x;
}

PBWElement PBWElement::word(const LiePtr& alg, const std::vector<std::string>& letters, const Scalar& c) {
    std::vector<int> idx;
    for (const auto& s : letters) {
        auto i = alg->index_of(s);
        if (!i) throw std::invalid_argument("unknown symbol: " + s);
        idx.push_back(*i);
    }
    return word(alg, idx, c);
}

void PBWElement::adopt(const PBWElement& o) {
    if (!alg_) alg_ = o.alg_;
    else if (o.alg_ && o.alg_ != alg_) throw std::invalid_argument("PBW elements from different algebras");
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
    adopt(o);
    plus(o);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
    adopt(o);
    minus(o);
    return *this;
}

PBWElement operator*(const PBWElement& a, const PBWElement& b) {
    PBWElement r(a.alg_ ? a.alg_ : b.alg_);
    if (a.alg_ && b.alg_ && a.alg_ != b.alg_) throw std::invalid_argument("PBW elements from different algebras");
    const unsigned n = truncation_order();
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            if (ka.h + kb.h > n) continue;
            Scalar c = ca * cb;
            for (const auto& [m, v] : r.alg_->multiply(ka.m, kb.m)) r.add(ka.h + kb.h, m, c * v);
        }
    return r;
}

PBWElement operator*(PBWElement a, const Scalar& c) {
    a.scale_in_place(c);
    return a;
}

PBWElement PBWElement::hbar_shift(unsigned k) const {
    PBWElement r = *this;
    r.hbar_shift_in_place(k);
    return r;
}

PBWElement PBWElement::pow(unsigned k) const {
    PBWElement r = one(alg_), b = *this;
    while (k) {
        if (k & 1u) r = r * b;
        k >>= 1u;
        if (k) b = b * b;
    }
    return r;
}

namespace {

// Splits x = c (1 + u) with u of positive hbar order.
std::pair<Scalar, PBWElement> split_unit(const PBWElement& x) {
    Scalar c0;
    for (const auto& [k, v] : x.terms())
        if (k.h == 0 && k.m == Exps{}) c0 = v;
    if (c0.is_zero()) throw AlgebraError("element has no invertible constant term");
    PBWElement u = x * c0.inverse() - PBWElement::one(x.algebra());
    for (const auto& [k, v] : u.terms())
        if (k.h == 0) throw AlgebraError("element is not a unit of the truncated algebra");
    return {c0, u};
}

void require_nilpotent(const PBWElement& u, const char* what) {
    for (const auto& [k, v] : u.terms())
        if (k.h == 0) throw AlgebraError(std::string(what) + " requires an argument of positive hbar order");
}

}  // namespace

PBWElement PBWElement::inverse() const {
    auto [c0, u] = split_unit(*this);
    PBWElement sum = one(alg_), power = one(alg_);
    PBWElement neg = -u;
    for (unsigned n = 1; n <= truncation_order(); ++n) {
        power = power * neg;
        if (power.is_zero()) break;
        sum += power;
    }
    return sum * c0.inverse();
}

std::string PBWElement::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : terms()) {
        out += render_term(v, join_factors(hbar_factor(k.h), alg_->render(k.m)), first);
        first = false;
    }
    return out;
}

PBWElement antipode(const PBWElement& x) {
    PBWElement r(x.algebra());
    for (const auto& [k, v] : x.terms())
        for (const auto& [m, c] : x.algebra()->antipode(k.m)) r.add(k.h, m, v * c);
    return r;
}

HbarSeries counit(const PBWElement& x) { return x.coefficient(Exps{}); }

PBWElement star(const PBWElement& x) {
    PBWElement r(x.algebra());
    for (const auto& [k, v] : x.terms()) {
        Scalar cv = v.conj();
        for (const auto& [m, c] : x.algebra()->involution(k.m)) r.add(k.h, m, cv * c);
    }
    return r;
}

PBWElement exp_series(const PBWElement& u) {
    require_nilpotent(u, "exp");
    PBWElement sum = PBWElement::one(u.algebra()), power = sum;
    for (unsigned n = 1; n <= truncation_order(); ++n) {
        power = power * u * Scalar::rational(1, n);
        if (power.is_zero()) break;
        sum += power;
    }
    return sum;
}

PBWElement log1p_series(const PBWElement& u) {
    require_nilpotent(u, "log1p");
    PBWElement sum(u.algebra()), power = PBWElement::one(u.algebra());
    for (unsigned n = 1; n <= truncation_order(); ++n) {
        power = power * u;
        if (power.is_zero()) break;
        sum += power * Scalar::rational(n % 2 == 1 ? 1 : -1, n);
    }
    return sum;
}

// ---------------------------------------------------------------- DualPoly

DualPoly DualPoly::variable(const LiePtr& alg, int i) { return monomial(alg, unit_exps(i)); }

DualPoly DualPoly::constant(const LiePtr& alg, const Scalar& c) { return monomial(alg, Exps{}, c); }

DualPoly DualPoly::monomial(const LiePtr& alg, const Exps& m, const Scalar& c, unsigned h) {
    DualPoly p(alg);
    p.add(h, m, c);
    return p;
}

DualPoly& DualPoly::operator+=(const DualPoly& o) {
    if (!alg_) alg_ = o.alg_;
    plus(o);
    return *this;
}

DualPoly& DualPoly::operator-=(const DualPoly& o) {
    if (!alg_) alg_ = o.alg_;
    minus(o);
    return *this;
}

DualPoly operator*(const DualPoly& a, const DualPoly& b) {
    DualPoly r(a.alg_ ? a.alg_ : b.alg_);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            Exps m;
            for (std::size_t i = 0; i < kMaxLieDim; ++i) m[i] = static_cast<std::uint8_t>(ka.m[i] + kb.m[i]);
            r.add(ka.h + kb.h, m, ca * cb);
        }
    return r;
}

DualPoly operator*(DualPoly a, const Scalar& c) {
    a.scale_in_place(c);
    return a;
}

DualPoly DualPoly::hbar_shift(unsigned k) const {
    DualPoly r = *this;
    r.hbar_shift_in_place(k);
    return r;
}

unsigned DualPoly::degree() const {
    unsigned d = 0;
    for (const auto& [k, v] : terms()) d = std::max(d, total_degree(k.m));
    return d;
}

std::string DualPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : terms()) {
        out += render_term(v, join_factors(hbar_factor(k.h), alg_->render(k.m)), first);
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- symmetrization

namespace {
std::atomic<unsigned> g_sym_bound{4};

MonoPoly symmetrized_monomial(const LiePresentation& alg, const Exps& m) {
    std::vector<int> w = word_of(m);
    MonoPoly acc;
    std::size_t count = 0;
    do {
        for (const auto& [r, c] : alg.normalize_word(w)) accumulate(acc, r, c);
        ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    Scalar inv = Scalar::rational(1, static_cast<long>(count));
    for (auto& [r, c] : acc) c *= inv;
    return acc;
}
}  // namespace

unsigned symmetrize_degree_bound() { return g_sym_bound.load(); }
void set_symmetrize_degree_bound(unsigned d) { g_sym_bound.store(d); }

PBWElement symmetrize_unscaled(const DualPoly& p) {
    PBWElement r(p.algebra());
    for (const auto& [k, v] : p.terms()) {
        if (total_degree(k.m) > symmetrize_degree_bound()) throw std::invalid_argument("symmetrize: degree bound exceeded");
        for (const auto& [m, c] : symmetrized_monomial(*p.algebra(), k.m)) r.add(k.h, m, v * c);
    }
    return r;
}

PBWElement symmetrize(const DualPoly& p) {
    PBWElement r(p.algebra());
    for (const auto& [k, v] : p.terms()) {
        unsigned d = total_degree(k.m);
        if (d > symmetrize_degree_bound()) throw std::invalid_argument("symmetrize: degree bound exceeded");
        for (const auto& [m, c] : symmetrized_monomial(*p.algebra(), k.m)) r.add(k.h + d, m, v * c);
    }
    return r;
}

namespace {
DualPoly unsymmetrize_impl(PBWElement x, bool scaled) {
    DualPoly p(x.algebra());
    while (!x.is_zero()) {
        unsigned top = 0;
        for (const auto& [k, v] : x.terms()) top = std::max(top, total_degree(k.m));
        if (top > symmetrize_degree_bound()) throw std::invalid_argument("unsymmetrize: degree bound exceeded");
        PBWElement sub(x.algebra());
        for (const auto& [k, v] : x.terms()) {
            if (total_degree(k.m) != top) continue;
            unsigned h = k.h;
            if (scaled) {
                if (h < top) throw std::invalid_argument("unsymmetrize: element is not in the image of symmetrize");
                h -= top;
            }
            p.add(h, k.m, v);
            for (const auto& [m, c] : symmetrized_monomial(*x.algebra(), k.m)) sub.add(k.h, m, v * c);
        }
        x -= sub;
    }
    return p;
}
}  // namespace

DualPoly unsymmetrize_unscaled(const PBWElement& x) { return unsymmetrize_impl(x, false); }
DualPoly unsymmetrize(const PBWElement& x) { return unsymmetrize_impl(x, true); }

std::ostream& operator<<(std::ostream& os, const PBWElement& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const DualPoly& x) { return os << x.to_string(); }

}  // namespace hopftwist
