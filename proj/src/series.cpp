#include "hopftwist/series.hpp"

#include <ostream>
#include <atomic>

namespace hopftwist {

namespace {
std::atomic<unsigned> g_order{4};
}

unsigned truncation_order() { return g_order.load(std::memory_order_relaxed); }

void set_truncation_order(unsigned n) {
    if (n > 32) throw std::invalid_argument("truncation order too large");
    g_order.store(n, std::memory_order_relaxed);
}

HbarSeries::HbarSeries(const Scalar& c0, unsigned order) : c_(order + 1) { c_[0] = c0; }

HbarSeries HbarSeries::hbar(unsigned order) {
    HbarSeries s(order);
    if (order >= 1) s.c_[1] = Scalar(1);
    return s;
}

bool HbarSeries::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

void HbarSeries::check_order(const HbarSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("mismatched truncation orders");
}

HbarSeries& HbarSeries::operator+=(const HbarSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

HbarSeries& HbarSeries::operator-=(const HbarSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
    a.check_order(b);
    HbarSeries r(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < a.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

HbarSeries operator*(HbarSeries a, const Scalar& s) {
    for (auto& c : a.c_) c *= s;
    return a;
}

HbarSeries HbarSeries::operator-() const {
    HbarSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

bool operator==(const HbarSeries& a, const HbarSeries& b) {
    a.check_order(b);
    return a.c_ == b.c_;
}

HbarSeries HbarSeries::inverse() const {
    if (!is_unit()) throw AlgebraError("series is not a unit (zero constant term)");
    HbarSeries r(order());
    Scalar inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Scalar acc;
        for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
        r.c_[n] = -acc * inv0;
    }
    return r;
}

HbarSeries HbarSeries::conj() const {
    HbarSeries r = *this;
    for (auto& c : r.c_) c = c.conj();
    return r;
}

std::string HbarSeries::to_string() const {
    std::string out;
    for (unsigned k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        std::string factor = k == 0 ? "" : (k == 1 ? "hbar" : "hbar^" + std::to_string(k));
        out += render_term(c_[k], factor, out.empty());
    }
    return out.empty() ? "0" : out;
}

HbarSeries series_exp(const HbarSeries& u) {
    if (!u[0].is_zero()) throw AlgebraError("exp requires a zero constant term");
    HbarSeries result = HbarSeries(Scalar(1), u.order());
    HbarSeries power = result;
    for (unsigned n = 1; n <= u.order(); ++n) {
        power = power * u * Scalar::rational(1, n);
        result += power;
    }
    return result;
}

HbarSeries series_log1p(const HbarSeries& u) {
    if (!u[0].is_zero()) throw AlgebraError("log1p requires a zero constant term");
    HbarSeries result(u.order());
    HbarSeries power = HbarSeries(Scalar(1), u.order());
    for (unsigned n = 1; n <= u.order(); ++n) {
        power = power * u;
        Scalar c = Scalar::rational(n % 2 == 1 ? 1 : -1, n);
        result += power * c;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const HbarSeries& s) { return os << s.to_string(); }

}  // namespace hopftwist
