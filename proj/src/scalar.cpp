#include "hopftwist/scalar.hpp"

#include <ostream>
#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <sstream>

namespace hopftwist {

// ---------------------------------------------------------------- Gaussian

Gaussian Gaussian::inverse() const {
    mpq_class n = re_ * re_ + im_ * im_;
    if (sgn(n) == 0) throw AlgebraError("division by zero");
    return Gaussian(re_ / n, -im_ / n);
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string Gaussian::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    std::string s = "(" + re_.get_str();
    if (sgn(im_) > 0) s += "+";
    return s + imag + ")";
}

// ---------------------------------------------------------------- symbols

namespace {

struct SymbolEntry {
    std::string name;
    bool radical = false;
    ParamPoly square;
};

struct Registry {
    std::mutex mutex;
    std::deque<SymbolEntry> entries;
    std::atomic<int> count{0};
};

Registry& registry() {
    static Registry r;
    return r;
}

int declare(std::string_view name, bool radical, const ParamPoly* square) {
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    for (std::size_t k = 0; k < reg.entries.size(); ++k) {
        if (reg.entries[k].name == name) {
            if (reg.entries[k].radical != radical)
                throw std::invalid_argument("symbol redeclared with a different kind: " + std::string(name));
            return static_cast<int>(k);
        }
    }
    if (reg.entries.size() >= kMaxSymbols) throw std::length_error("too many declared symbols");
    SymbolEntry e{std::string(name), radical, square ? *square : ParamPoly()};
    reg.entries.push_back(std::move(e));
    reg.count.store(static_cast<int>(reg.entries.size()), std::memory_order_release);
    return static_cast<int>(reg.entries.size() - 1);
}

}  // namespace

int declare_parameter(std::string_view name) { return declare(name, false, nullptr); }

int declare_radical(std::string_view name, const ParamPoly& square) {
    if (square.uses_radicals()) throw std::invalid_argument("radical relation must be radical free");
    return declare(name, true, &square);
}

std::optional<int> find_symbol(std::string_view name) {
    auto& reg = registry();
    int n = reg.count.load(std::memory_order_acquire);
    for (int k = 0; k < n; ++k)
        if (reg.entries[static_cast<std::size_t>(k)].name == name) return k;
    return std::nullopt;
}

const std::string& symbol_name(int index) { return registry().entries.at(static_cast<std::size_t>(index)).name; }

bool is_radical(int index) {
    if (index >= symbol_count()) return false;
    return registry().entries[static_cast<std::size_t>(index)].radical;
}

const ParamPoly& radical_square(int index) { return registry().entries.at(static_cast<std::size_t>(index)).square; }

int symbol_count() { return registry().count.load(std::memory_order_acquire); }

// ---------------------------------------------------------------- ParamPoly

bool GrlexLess::operator()(const SymbolMono& a, const SymbolMono& b) const {
    unsigned da = 0, db = 0;
    for (std::size_t k = 0; k < kMaxSymbols; ++k) {
        da += a[k];
        db += b[k];
    }
    if (da != db) return da < db;
    for (std::size_t k = 0; k < kMaxSymbols; ++k)
        if (a[k] != b[k]) return a[k] < b[k];
    return false;
}

ParamPoly::ParamPoly(const Gaussian& c) {
    if (!c.is_zero()) terms_.emplace(SymbolMono{}, c);
}

ParamPoly ParamPoly::symbol(int index, unsigned power) {
    SymbolMono m{};
    m[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(power);
    return monomial(m, Gaussian(1));
}

ParamPoly ParamPoly::monomial(const SymbolMono& m, const Gaussian& c) {
    ParamPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == SymbolMono{});
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == SymbolMono{} && terms_.begin()->second.is_one();
}

Gaussian ParamPoly::constant() const {
    auto it = terms_.find(SymbolMono{});
    return it == terms_.end() ? Gaussian(0) : it->second;
}

unsigned ParamPoly::degree_in(int var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[static_cast<std::size_t>(var)]);
    return d;
}

ParamPoly ParamPoly::coeff_in(int var, unsigned k) const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) {
        if (m[static_cast<std::size_t>(var)] != k) continue;
        SymbolMono mm = m;
        mm[static_cast<std::size_t>(var)] = 0;
        r.terms_.emplace(mm, c);
    }
    return r;
}

void ParamPoly::add_term(const SymbolMono& m, const Gaussian& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            SymbolMono m;
            for (std::size_t k = 0; k < kMaxSymbols; ++k) m[k] = static_cast<std::uint8_t>(ma[k] + mb[k]);
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

ParamPoly ParamPoly::scaled(const Gaussian& s) const {
    if (s.is_zero()) return {};
    ParamPoly r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
}

ParamPoly ParamPoly::shifted(const SymbolMono& s) const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) {
        SymbolMono mm;
        for (std::size_t k = 0; k < kMaxSymbols; ++k) mm[k] = static_cast<std::uint8_t>(m[k] + s[k]);
        r.terms_.emplace(mm, c);
    }
    return r;
}

ParamPoly ParamPoly::conj() const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
    return r;
}

ParamPoly ParamPoly::flip_radical(int rad) const {
    ParamPoly r = *this;
    for (auto& [m, c] : r.terms_)
        if (m[static_cast<std::size_t>(rad)] % 2 == 1) c = -c;
    return r;
}

bool ParamPoly::uses_symbol(int var) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [var](const auto& t) { return t.first[static_cast<std::size_t>(var)] != 0; });
}

bool ParamPoly::uses_radicals() const {
    int n = symbol_count();
    for (int k = 0; k < n; ++k)
        if (is_radical(k) && uses_symbol(k)) return true;
    return false;
}

ParamPoly ParamPoly::reduce_radicals() const {
    int n = symbol_count();
    bool needed = false;
    for (const auto& [m, c] : terms_) {
        for (int k = 0; k < n && !needed; ++k)
            if (m[static_cast<std::size_t>(k)] >= 2 && is_radical(k)) needed = true;
        if (needed) break;
    }
    if (!needed) return *this;
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        ParamPoly term = ParamPoly::monomial(m, c);
        for (int k = 0; k < n; ++k) {
            auto e = m[static_cast<std::size_t>(k)];
            if (e < 2 || !is_radical(k)) continue;
            SymbolMono base = term.terms_.begin()->first;
            Gaussian coeff = term.terms_.begin()->second;
            base[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(e % 2);
            ParamPoly sq = radical_square(k);
            ParamPoly power(Gaussian(1));
            for (unsigned j = 0; j < e / 2u; ++j) power = power * sq;
            term = power.shifted(base).scaled(coeff);
            // The relation is radical free, so a single pass per radical suffices;
            // later radicals are handled on the expanded terms below.
            ParamPoly rest;
            for (const auto& [mm, cc] : term.terms_) rest += ParamPoly::monomial(mm, cc).reduce_radicals();
            term = std::move(rest);
            break;
        }
        out += term;
    }
    return out;
}

ParamPoly ParamPoly::substitute(int var, const ParamPoly& value) const {
    if (!uses_symbol(var)) return *this;
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        SymbolMono base = m;
        unsigned e = base[static_cast<std::size_t>(var)];
        base[static_cast<std::size_t>(var)] = 0;
        ParamPoly power(Gaussian(1));
        for (unsigned j = 0; j < e; ++j) power = power * value;
        out += power.shifted(base).scaled(c);
    }
    return out;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& d) const {
    if (d.is_zero()) throw AlgebraError("division by zero polynomial");
    ParamPoly q, r = *this;
    const SymbolMono& ld = d.leading_mono();
    Gaussian lcinv = d.leading_coeff().inverse();
    while (!r.is_zero()) {
        const SymbolMono lr = r.leading_mono();
        SymbolMono s;
        for (std::size_t k = 0; k < kMaxSymbols; ++k) {
            if (lr[k] < ld[k]) return std::nullopt;
            s[k] = static_cast<std::uint8_t>(lr[k] - ld[k]);
        }
        Gaussian c = r.leading_coeff() * lcinv;
        q.add_term(s, c);
        r -= d.shifted(s).scaled(c);
    }
    return q;
}

ParamPoly ParamPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

namespace {

std::string render_symbols(const SymbolMono& m) {
    std::string factor;
    for (std::size_t k = 0; k < kMaxSymbols; ++k) {
        unsigned e = m[k];
        if (e == 0) continue;
        if (!factor.empty()) factor += "*";
        factor += symbol_name(static_cast<int>(k));
        if (e > 1) factor += "^" + std::to_string(e);
    }
    return factor;
}

// "c*factor" for a Gaussian coefficient with sign pulled out.
std::string render_gaussian_term(const Gaussian& c, const std::string& factor, bool first) {
    bool neg = c.looks_negative();
    Gaussian a = neg ? -c : c;
    std::string body;
    if (factor.empty())
        body = a.to_string();
    else
        body = a.is_one() ? factor : a.to_string() + "*" + factor;
    if (first) return neg ? "-" + body : body;
    return neg ? " - " + body : " + " + body;
}

}  // namespace

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        out += render_gaussian_term(it->second, render_symbols(it->first), first);
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- gcd

namespace {

ParamPoly gcd_rec(const ParamPoly& a, const ParamPoly& b, int v);

ParamPoly content_in(const ParamPoly& p, int v) {
    ParamPoly g;
    unsigned d = p.degree_in(v);
    for (unsigned k = 0; k <= d; ++k) {
        ParamPoly c = p.coeff_in(v, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_rec(g, c, v + 1);
        if (g.is_one()) break;
    }
    return g;
}

ParamPoly primitive_in(const ParamPoly& p, int v) {
    ParamPoly c = content_in(p, v);
    if (c.is_one() || c.is_zero()) return p;
    return *p.divide_exact(c);
}

ParamPoly pseudo_remainder(ParamPoly r, const ParamPoly& b, int v) {
    unsigned db = b.degree_in(v);
    ParamPoly lcb = b.coeff_in(v, db);
    while (!r.is_zero() && r.degree_in(v) >= db) {
        unsigned dr = r.degree_in(v);
        ParamPoly lcr = r.coeff_in(v, dr);
        SymbolMono s{};
        s[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(dr - db);
        r = lcb * r - (lcr * b).shifted(s);
    }
    return r;
}

ParamPoly gcd_rec(const ParamPoly& a, const ParamPoly& b, int v) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return ParamPoly(Gaussian(1));
    const int nv = static_cast<int>(kMaxSymbols);
    while (v < nv && !a.uses_symbol(v) && !b.uses_symbol(v)) ++v;
    if (v >= nv) return ParamPoly(Gaussian(1));
    if (!a.uses_symbol(v)) return gcd_rec(a, content_in(b, v), v + 1);
    if (!b.uses_symbol(v)) return gcd_rec(content_in(a, v), b, v + 1);

    ParamPoly ca = content_in(a, v), cb = content_in(b, v);
    ParamPoly c = gcd_rec(ca, cb, v + 1);
    ParamPoly pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    ParamPoly g;
    for (;;) {
        ParamPoly r = pseudo_remainder(pa, pb, v);
        if (r.is_zero()) {
            g = pb;
            break;
        }
        if (r.degree_in(v) == 0) {
            g = ParamPoly(Gaussian(1));
            break;
        }
        pa = std::move(pb);
        pb = primitive_in(r, v);
    }
    return (c * primitive_in(g, v)).monic();
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) { return gcd_rec(a, b, 0); }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw AlgebraError("zero denominator");
    normalize();
}

Scalar Scalar::param(std::string_view name) { return symbol(declare_parameter(name)); }

Scalar Scalar::sqrt_param(std::string_view name) {
    int p = declare_parameter(name);
    int r = declare_radical("sqrt(" + std::string(name) + ")", ParamPoly::symbol(p));
    return symbol(r);
}

void Scalar::normalize() {
    num_ = num_.reduce_radicals();
    den_ = den_.reduce_radicals();
    if (num_.is_zero()) {
        den_ = ParamPoly(Gaussian(1));
        return;
    }
    if (den_.is_constant()) {
        Gaussian d = den_.constant();
        if (!d.is_one()) {
            num_ = num_.scaled(d.inverse());
            den_ = ParamPoly(Gaussian(1));
        }
        return;
    }
    int n = symbol_count();
    for (int k = 0; k < n; ++k) {
        if (!is_radical(k) || !den_.uses_symbol(k)) continue;
        ParamPoly c = den_.flip_radical(k);
        num_ = (num_ * c).reduce_radicals();
        den_ = (den_ * c).reduce_radicals();
    }
    if (den_.is_constant()) {
        num_ = num_.scaled(den_.constant().inverse());
        den_ = ParamPoly(Gaussian(1));
        return;
    }
    ParamPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    Gaussian lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Gaussian inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one())
            normalize();
        else if (num_.is_zero())
            den_ = ParamPoly(Gaussian(1));
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = (num_ * o.num_).reduce_radicals();
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw AlgebraError("division by zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(unsigned k) const {
    Scalar r(1), b = *this;
    while (k) {
        if (k & 1u) r *= b;
        b *= b;
        k >>= 1u;
    }
    return r;
}

Scalar Scalar::conj() const { return Scalar(num_.conj(), den_.conj()); }

Scalar Scalar::substitute(int var, const Scalar& value) const {
    if (!num_.uses_symbol(var) && !den_.uses_symbol(var)) return *this;
    // Evaluate both polynomials with the fractional value by clearing its denominator.
    auto eval = [&](const ParamPoly& p) {
        Scalar acc;
        for (const auto& [m, c] : p.terms()) {
            SymbolMono base = m;
            unsigned e = base[static_cast<std::size_t>(var)];
            base[static_cast<std::size_t>(var)] = 0;
            acc += Scalar(ParamPoly::monomial(base, c), Gaussian(1)) * value.pow(e);
        }
        return acc;
    };
    return eval(num_) / eval(den_);
}

bool Scalar::looks_negative() const {
    if (num_.is_zero()) return false;
    return num_.leading_coeff().looks_negative();
}

std::string Scalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    std::string d = den_.term_count() > 1 || !den_.is_constant() ? "(" + den_.to_string() + ")" : den_.to_string();
    return n + "/" + d;
}

Scalar scalar_sqrt(const Scalar& s) {
    if (s.is_constant() && s.constant().is_real()) {
        const mpq_class q = s.constant().re();
        if (sgn(q) >= 0) {
            mpz_class n = q.get_num(), d = q.get_den();
            mpz_class rn = sqrt(n), rd = sqrt(d);
            if (rn * rn == n && rd * rd == d) return Scalar(Gaussian(mpq_class(rn, rd)));
        }
    }
    if (s.den().is_one() && s.num().term_count() == 1 && s.num().leading_coeff().is_one()) {
        const SymbolMono& m = s.num().leading_mono();
        int var = -1;
        for (std::size_t k = 0; k < kMaxSymbols; ++k) {
            if (m[k] == 0) continue;
            if (m[k] != 1 || var >= 0) throw AlgebraError("no declared square root for " + s.to_string());
            var = static_cast<int>(k);
        }
        if (var >= 0 && !is_radical(var)) return Scalar::sqrt_param(symbol_name(var));
    }
    throw AlgebraError("no declared square root for " + s.to_string());
}

std::string render_term(const Scalar& coeff, const std::string& factor, bool first) {
    bool neg = false;
    std::string body;
    if (coeff.is_monomial()) {
        const Scalar c = coeff.looks_negative() ? -coeff : coeff;
        neg = coeff.looks_negative();
        std::string cs;
        if (!c.num().is_zero()) {
            const Gaussian& g = c.num().leading_coeff();
            SymbolMono m = c.num().leading_mono();
            std::string sym = render_symbols(m);
            bool unit_sym = m == SymbolMono{};
            std::string gs = g.is_one() ? "" : g.to_string();
            if (unit_sym)
                cs = gs.empty() ? "1" : gs;
            else
                cs = gs.empty() ? sym : gs + "*" + sym;
        }
        if (factor.empty())
            body = cs;
        else
            body = cs == "1" ? factor : cs + "*" + factor;
    } else {
        std::string cs = coeff.den().is_one() ? "(" + coeff.to_string() + ")" : coeff.to_string();
        if (coeff.den().is_one() == false && coeff.num().term_count() <= 1 && coeff.looks_negative()) {
            neg = true;
            cs = (-coeff).to_string();
        }
        body = factor.empty() ? cs : cs + "*" + factor;
    }
    if (first) return neg ? "-" + body : body;
    return neg ? " - " + body : " + " + body;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.to_string(); }
std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hopftwist
