#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace hopftwist {

/// Outcome of a single check: a residual that must vanish.
struct Residual {
    bool zero = true;
    std::string text = "0";

    static Residual ok() { return {}; }
    static Residual failed(std::string what) { return {false, std::move(what)}; }
    /// Residual of any value with is_zero() and to_string().
    template <class T>
    static Residual of(const T& value) {
        if (value.is_zero()) return ok();
        return failed(value.to_string());
    }
    /// Keeps the first nonzero residual.
    Residual& operator&=(const Residual& o) {
        if (zero && !o.zero) *this = o;
        return *this;
    }
};

struct Check {
    std::string suite;
    std::string name;
    bool passed = true;
    bool informational = false;
    std::string residual;
    double millis = 0.0;
};

/// Ordered list of named checks; a report passes iff every
/// non-informational check passes.
class Report {
public:
    Report() = default;
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    const std::vector<Check>& checks() const { return checks_; }

    void add(const std::string& name, const Residual& r, double millis = 0.0);
    void add_informational(const std::string& name, const std::string& message);
    /// Times `f` and records its residual; exceptions become failures.
    void run(const std::string& name, const std::function<Residual()>& f);
    void merge(const Report& other);

    bool passed() const;
    std::size_t failures() const;

    std::string to_text() const;
    /// Flat key-value document, one record per check.
    std::string to_kv() const;

private:
    std::string suite_;
    std::vector<Check> checks_;
};

}  // namespace hopftwist
