#include "hopftwist/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace hopftwist {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

struct Line {
    int number;
    std::string key;  // possibly several words, e.g. "bracket H E"
    std::string value;
};

[[noreturn]] void fail(const Line& l, const std::string& what) {
    throw ConfigError("config line " + std::to_string(l.number) + ": " + what);
}

}  // namespace

ParseContext Config::context() const {
    return ParseContext{algebra, realization ? realization->dim() : 3, parameters};
}

Twist build_twist(const LiePtr& alg, const TwistSpec& spec, const std::vector<std::string>& parameters) {
    ParseContext ctx{alg, 3, parameters};
    try {
        if (spec.kind == "trivial") return make_trivial_twist(alg);
        Scalar scale = parse_scalar(spec.scale, ctx);
        if (spec.kind == "jordanian") {
            if (!alg->index_of(spec.h) || !alg->index_of(spec.e))
                throw ConfigError("jordanian twist needs generators " + spec.h + " and " + spec.e + " in " + alg->name());
            return make_jordanian_twist(alg, spec.h, spec.e, scale);
        }
        if (spec.kind == "abelian") {
            std::vector<std::pair<PBWElement, PBWElement>> r;
            for (const auto& [x, y] : spec.pairs) r.emplace_back(parse_pbw(x, ctx), parse_pbw(y, ctx));
            if (r.empty()) throw ConfigError("abelian twist needs at least one pair");
            return make_abelian_twist(alg, r, scale);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(spec.kind + " twist: " + e.what());
    }
    throw ConfigError("unknown twist kind '" + spec.kind + "'");
}

Config parse_config(const std::string& text) {
    std::map<std::string, std::vector<Line>> sections;
    std::istringstream is(text);
    std::string section = "";
    int number = 0;
    for (std::string raw; std::getline(is, raw);) {
        ++number;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("config line " + std::to_string(number) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            static const char* known[] = {"algebra", "realization", "twist", "metric", "quadric"};
            if (std::find(std::begin(known), std::end(known), section) == std::end(known))
                throw ConfigError("config line " + std::to_string(number) + ": unknown section [" + section + "]");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(number) + ": expected key = value");
        sections[section].push_back({number, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
    }

    Config cfg;
    for (const auto& l : sections[""]) {
        if (l.key == "order") {
            try {
                cfg.order = static_cast<unsigned>(std::stoul(l.value));
            } catch (const std::exception&) {
                fail(l, "order must be a non-negative integer");
            }
        } else if (l.key == "parameters") {
            cfg.parameters = words(l.value);
        } else {
            fail(l, "unknown key '" + l.key + "'");
        }
    }

    // Algebra: a builtin name or basis + brackets.
    {
        std::vector<std::string> basis;
        std::string name = "custom";
        std::vector<const Line*> brackets;
        std::vector<int> involution;
        for (const auto& l : sections["algebra"]) {
            auto k = words(l.key);
            if (l.key == "builtin") {
                try {
                    cfg.algebra = LiePresentation::builtin(l.value);
                } catch (const std::exception& e) {
                    fail(l, e.what());
                }
            } else if (l.key == "name") {
                name = l.value;
            } else if (l.key == "basis") {
                basis = words(l.value);
            } else if (!k.empty() && k[0] == "bracket" && k.size() == 3) {
                brackets.push_back(&l);
            } else if (l.key == "involution") {
                for (const auto& w : words(l.value)) {
                    if (w != "1" && w != "-1") fail(l, "involution signs must be 1 or -1");
                    involution.push_back(std::stoi(w));
                }
            } else {
                fail(l, "unknown algebra key '" + l.key + "'");
            }
        }
        if (!basis.empty()) {
            if (cfg.algebra) throw ConfigError("config: give either a builtin algebra or a basis, not both");
            LiePtr names;
            try {
                names = LiePresentation::create(name, basis, {});
            } catch (const std::exception& e) {
                throw ConfigError(std::string("config algebra: ") + e.what());
            }
            std::vector<LiePresentation::Bracket> table;
            for (const Line* l : brackets) {
                auto k = words(l->key);
                auto i = names->index_of(k[1]), j = names->index_of(k[2]);
                if (!i || !j) fail(*l, "unknown basis element in bracket");
                LiePresentation::Vec v;
                try {
                    PBWElement x = parse_pbw(l->value, ParseContext{names, 3, cfg.parameters});
                    for (const auto& [key, c] : x.terms()) {
                        if (key.h != 0 || total_degree(key.m) != 1) fail(*l, "bracket values must be linear in the basis");
                        for (int b = 0; b < names->dim(); ++b)
                            if (key.m[static_cast<std::size_t>(b)] == 1) v.emplace_back(b, c);
                    }
                } catch (const ConfigError&) {
                    throw;
                } catch (const std::exception& e) {
                    fail(*l, e.what());
                }
                table.push_back({*i, *j, v});
            }
            try {
                cfg.algebra = LiePresentation::create(name, basis, table, involution);
            } catch (const std::exception& e) {
                throw ConfigError(std::string("config algebra: ") + e.what());
            }
        } else if (!brackets.empty()) {
            fail(*brackets.front(), "brackets need a basis");
        }
    }

    // Realization: dim and one field per basis element.
    if (sections.count("realization")) {
        int dim = 3;
        std::map<std::string, const Line*> fields;
        for (const auto& l : sections["realization"]) {
            auto k = words(l.key);
            if (l.key == "builtin") {
                if (l.value != "hyperboloid") fail(l, "unknown realization '" + l.value + "'");
                cfg.realization = Realization::hyperboloid();
                if (!cfg.algebra) cfg.algebra = cfg.realization->algebra();
            } else if (l.key == "dim") {
                try {
                    dim = std::stoi(l.value);
                } catch (const std::exception&) {
                    fail(l, "dim must be an integer");
                }
                if (dim < 1 || dim > kMaxCoords) fail(l, "dim out of range");
            } else if (k.size() == 2 && k[0] == "field") {
                fields[k[1]] = &l;
            } else {
                fail(l, "unknown realization key '" + l.key + "'");
            }
        }
        if (!fields.empty()) {
            if (!cfg.algebra) throw ConfigError("config: realized fields need an algebra");
            std::vector<Geom> fs;
            for (int i = 0; i < cfg.algebra->dim(); ++i) {
                auto it = fields.find(cfg.algebra->basis_name(i));
                if (it == fields.end())
                    throw ConfigError("config realization: no field for " + cfg.algebra->basis_name(i));
                try {
                    fs.push_back(parse_geom(it->second->value, ParseContext{nullptr, dim, cfg.parameters}));
                } catch (const std::exception& e) {
                    fail(*it->second, e.what());
                }
            }
            try {
                cfg.realization = Realization::create(cfg.algebra, dim, fs);
            } catch (const std::exception& e) {
                throw ConfigError(std::string("config realization: ") + e.what());
            }
        }
        if (cfg.realization && cfg.realization->algebra()->name() != cfg.algebra->name())
            throw ConfigError("config: realization and algebra differ");
    }

    if (sections.count("twist")) {
        TwistSpec spec;
        for (const auto& l : sections["twist"]) {
            if (l.key == "kind")
                spec.kind = l.value;
            else if (l.key == "h")
                spec.h = l.value;
            else if (l.key == "e")
                spec.e = l.value;
            else if (l.key == "scale")
                spec.scale = l.value;
            else if (l.key == "pair") {
                auto sep = l.value.find(',');
                if (sep == std::string::npos) fail(l, "pair = x, y");
                spec.pairs.emplace_back(trim(l.value.substr(0, sep)), trim(l.value.substr(sep + 1)));
            } else {
                fail(l, "unknown twist key '" + l.key + "'");
            }
        }
        cfg.twist = spec;
        if (cfg.algebra) build_twist(cfg.algebra, spec, cfg.parameters);
    }

    const int dim = cfg.realization ? cfg.realization->dim() : 3;
    const ParseContext geo{nullptr, dim, cfg.parameters};
    if (sections.count("metric")) {
        std::vector<Geom> g(static_cast<std::size_t>(dim * dim), Geom(GeomKind::Function, dim));
        for (const auto& l : sections["metric"]) {
            if (l.key == "builtin") {
                if (l.value == "lightcone_minkowski" && dim == 3) {
                    cfg.metric = Metric::lightcone_minkowski();
                } else if (l.value == "euclidean") {
                    cfg.metric = Metric::euclidean(dim);
                } else {
                    fail(l, "unknown metric '" + l.value + "'");
                }
                continue;
            }
            auto k = words(l.key);
            if (k.size() != 3 || k[0] != "g") fail(l, "metric entries are written 'g i j = expr'");
            int i = 0, j = 0;
            try {
                i = std::stoi(k[1]) - 1;
                j = std::stoi(k[2]) - 1;
            } catch (const std::exception&) {
                fail(l, "metric indices must be integers");
            }
            if (i < 0 || j < 0 || i >= dim || j >= dim) fail(l, "metric index out of range");
            try {
                Geom v = parse_geom(l.value, geo);
                g[static_cast<std::size_t>(i * dim + j)] = v;
                g[static_cast<std::size_t>(j * dim + i)] = v;
            } catch (const std::exception& e) {
                fail(l, e.what());
            }
        }
        if (!cfg.metric) cfg.metric = Metric(dim, g);
    }

    if (sections.count("quadric")) {
        std::optional<Geom> generator;
        std::vector<std::string> frame;
        for (const auto& l : sections["quadric"]) {
            if (l.key == "generator") {
                try {
                    generator = parse_geom(l.value, geo);
                } catch (const std::exception& e) {
                    fail(l, e.what());
                }
            } else if (l.key == "frame") {
                frame = words(l.value);
            } else {
                fail(l, "unknown quadric key '" + l.key + "'");
            }
        }
        if (!generator) throw ConfigError("config quadric: missing generator");
        std::vector<Geom> fields;
        for (const auto& name : frame) {
            auto k = cfg.algebra ? cfg.algebra->index_of(name) : std::nullopt;
            if (!k || !cfg.realization) throw ConfigError("config quadric: frame field '" + name + "' is not realized");
            fields.push_back(cfg.realization->field(*k));
        }
        try {
            cfg.quadric = QuadricIdeal(*generator, fields);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("config quadric: ") + e.what());
        }
    }
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

}  // namespace hopftwist
