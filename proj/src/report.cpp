#include "hopftwist/report.hpp"

#include <cstdio>
#include <sstream>

namespace hopftwist {

namespace {

constexpr std::size_t kMaxResidualChars = 600;

std::string clip(const std::string& s) {
    if (s.size() <= kMaxResidualChars) return s;
    return s.substr(0, kMaxResidualChars) + " ...";
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\n') out += "\\n";
        else if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else
            out += c;
    }
    return out;
}

std::string format_millis(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", ms);
    return buf;
}

}  // namespace

void Report::add(const std::string& name, const Residual& r, double millis) {
    checks_.push_back({suite_, name, r.zero, false, clip(r.text), millis});
}

void Report::add_informational(const std::string& name, const std::string& message) {
    checks_.push_back({suite_, name, true, true, clip(message), 0.0});
}

void Report::run(const std::string& name, const std::function<Residual()>& f) {
    auto start = std::chrono::steady_clock::now();
    Residual r;
    try {
        r = f();
    } catch (const std::exception& e) {
        r = Residual::failed(std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    add(name, r, ms);
}

void Report::merge(const Report& other) {
    for (const auto& c : other.checks_) checks_.push_back(c);
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks_)
        if (!c.passed && !c.informational) ++n;
    return n;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks_) {
        const char* status = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
        os << status << "  " << c.suite << " / " << c.name << "  (" << format_millis(c.millis) << " ms)";
        if (!c.passed || c.informational) os << "\n      " << c.residual;
        os << "\n";
    }
    os << (passed() ? "OK" : "FAILED") << ": " << checks_.size() - failures() << "/" << checks_.size()
       << " checks passed\n";
    return os.str();
}

std::string Report::to_kv() const {
    std::ostringstream os;
    for (const auto& c : checks_) {
        os << "suite=\"" << escape(c.suite) << "\" check=\"" << escape(c.name) << "\" status="
           << (c.informational ? "info" : (c.passed ? "pass" : "fail")) << " residual=\"" << escape(c.residual)
           << "\" millis=" << format_millis(c.millis) << "\n";
    }
    return os.str();
}

}  // namespace hopftwist
