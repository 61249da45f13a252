#include "catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "util.hpp"

namespace piforge {

std::string family_name(Family f) {
    switch (f) {
    case Family::R: return "R";
    case Family::S: return "S";
    case Family::Sprime: return "Sprime";
    case Family::T: return "T";
    case Family::Tprime: return "Tprime";
    case Family::Z: return "Z";
    case Family::ZeroSum: return "zero-sum";
    case Family::Mixed: return "mixed";
    }
    return "?";
}

std::string class_name(IdentityClass c) {
    switch (c) {
    case IdentityClass::Proved: return "proved";
    case IdentityClass::Conjectural: return "conjectural";
    case IdentityClass::TranscriptionSuspect: return "transcription-suspect";
    }
    return "?";
}

std::string eval_class_name(EvalClass e) { return e == EvalClass::Fast ? "fast" : "slow"; }

Family parse_family(const std::string& s) {
    if (s == "R") return Family::R;
    if (s == "S") return Family::S;
    if (s == "Sprime") return Family::Sprime;
    if (s == "T") return Family::T;
    if (s == "Tprime") return Family::Tprime;
    if (s == "Z") return Family::Z;
    if (s == "zero-sum") return Family::ZeroSum;
    if (s == "mixed") return Family::Mixed;
    fail("unknown family '" + s + "'");
}

IdentityClass parse_identity_class(const std::string& s) {
    if (s == "proved") return IdentityClass::Proved;
    if (s == "conjectural") return IdentityClass::Conjectural;
    if (s == "transcription-suspect") return IdentityClass::TranscriptionSuspect;
    fail("unknown class '" + s + "'");
}

EvalClass parse_eval_class(const std::string& s) {
    if (s == "fast") return EvalClass::Fast;
    if (s == "slow") return EvalClass::Slow;
    fail("unknown eval class '" + s + "'");
}

const Identity* Catalog::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

const Identity& Catalog::at(const std::string& id) const {
    const Identity* p = find(id);
    require(p != nullptr, "unknown identity '" + id + "'");
    return *p;
}

std::vector<std::string> Catalog::ids() const {
    std::vector<std::string> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(e.id);
    std::sort(v.begin(), v.end());
    return v;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct Block {
    std::string id;
    long line = 0; // heading line number
    std::map<std::string, std::pair<std::string, long>> kv;
};

[[noreturn]] void block_fail(const Block& b, const std::string& field, long line,
                             const std::string& what) {
    std::ostringstream s;
    s << "line " << line << " [" << b.id << "] field '" << field << "': " << what;
    fail(s.str());
}

const std::string* get(const Block& b, const std::string& key, long& line) {
    auto it = b.kv.find(key);
    if (it == b.kv.end()) return nullptr;
    line = it->second.second;
    return &it->second.first;
}

const std::string& get_required(const Block& b, const std::string& key, long& line) {
    const std::string* v = get(b, key, line);
    if (!v) {
        std::ostringstream s;
        s << "line " << b.line << " [" << b.id << "]: missing required field '" << key << "'";
        fail(s.str());
    }
    return *v;
}

Identity build_identity(const Block& b) {
    static const std::vector<std::string> known = {"family", "class", "anchor", "eval",  "start",
                                                   "numer",  "denom", "base",   "side", "factors",
                                                   "rhs"};
    for (const auto& [key, val] : b.kv)
        if (std::find(known.begin(), known.end(), key) == known.end())
            block_fail(b, key, val.second, "unknown field");

    Identity ident;
    ident.id = b.id;
    long line = b.line;

    auto wrap = [&](const std::string& field, auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            block_fail(b, field, line, e.what());
        }
    };

    const std::string& family_v = get_required(b, "family", line);
    wrap("family", [&] { ident.family = parse_family(family_v); });
    const std::string& class_v = get_required(b, "class", line);
    wrap("class", [&] { ident.cls = parse_identity_class(class_v); });
    ident.source = get_required(b, "anchor", line);
    if (const std::string* v = get(b, "eval", line))
        wrap("eval", [&] { ident.eval_class = parse_eval_class(*v); });

    const std::string& start_v = get_required(b, "start", line);
    wrap("start", [&] {
        Rat r = parse_rat(start_v);
        require(r.get_den() == 1 && r.get_num().fits_slong_p(), "start must be a small integer");
        ident.lhs.start = r.get_num().get_si();
    });
    if (const std::string* v = get(b, "numer", line))
        wrap("numer", [&] { ident.lhs.numer = parse_poly(*v); });
    else
        ident.lhs.numer = Poly(Rat(1));
    if (const std::string* v = get(b, "denom", line))
        wrap("denom", [&] { ident.lhs.denom = parse_poly(*v); });
    if (const std::string* v = get(b, "base", line)) {
        wrap("base", [&] { ident.lhs.base = parse_rat(*v); });
        if (const std::string* s = get(b, "side", line)) {
            wrap("side", [&] {
                if (*s == "divides")
                    ident.lhs.base_divides = true;
                else if (*s == "multiplies")
                    ident.lhs.base_divides = false;
                else
                    fail("side must be 'divides' or 'multiplies'");
            });
        }
    } else if (get(b, "side", line)) {
        block_fail(b, "side", line, "side given without base");
    }
    if (const std::string* v = get(b, "factors", line)) {
        wrap("factors", [&] {
            std::string cur;
            std::istringstream in(*v);
            while (std::getline(in, cur, ',')) {
                // commas also appear inside kind argument lists: rejoin until
                // parentheses balance
                while (std::count(cur.begin(), cur.end(), '(') >
                       std::count(cur.begin(), cur.end(), ')')) {
                    std::string more;
                    require(static_cast<bool>(std::getline(in, more, ',')),
                            "unbalanced '(' in factor list");
                    cur += "," + more;
                }
                if (!trim(cur).empty()) ident.lhs.factors.push_back(parse_seq_factor(cur));
            }
        });
    }
    const std::string& rhs_v = get_required(b, "rhs", line);
    wrap("rhs", [&] { ident.rhs = parse_const_expr(rhs_v); });

    line = b.line;
    wrap("term spec", [&] { validate_spec(ident.lhs); });
    return ident;
}

} // namespace

Catalog parse_catalog(std::string_view text) {
    Catalog cat;
    std::map<std::string, long> seen; // id -> heading line
    Block cur;
    bool open = false;

    auto flush = [&] {
        if (!open) return;
        cat.entries.push_back(build_identity(cur));
        cur = Block{};
        open = false;
    };

    long lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                       : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        lineno++;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;

        if (t.front() == '[') {
            if (t.back() != ']')
                fail("line " + std::to_string(lineno) + ": malformed heading '" + t + "'");
            flush();
            cur.id = trim(t.substr(1, t.size() - 2));
            cur.line = lineno;
            require(!cur.id.empty(), "line " + std::to_string(lineno) + ": empty id");
            auto [it, fresh] = seen.emplace(cur.id, lineno);
            if (!fresh)
                fail("line " + std::to_string(lineno) + ": duplicate id '" + cur.id +
                     "' (first at line " + std::to_string(it->second) + ")");
            open = true;
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            fail("line " + std::to_string(lineno) + ": expected 'key = value' or '[id]'");
        if (!open) fail("line " + std::to_string(lineno) + ": field outside any [id] block");
        std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
        if (cur.kv.count(key))
            fail("line " + std::to_string(lineno) + " [" + cur.id + "]: duplicate field '" + key +
                 "'");
        cur.kv[key] = {val, lineno};
    }
    flush();
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open catalog file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_catalog(buf.str());
    } catch (const Error& e) {
        fail(path + ": " + e.what());
    }
}

std::string serialize_identity(const Identity& ident) {
    std::ostringstream s;
    s << "[" << ident.id << "]\n";
    s << "family = " << family_name(ident.family) << "\n";
    s << "class = " << class_name(ident.cls) << "\n";
    s << "anchor = " << ident.source << "\n";
    if (ident.eval_class != EvalClass::Fast)
        s << "eval = " << eval_class_name(ident.eval_class) << "\n";
    s << "start = " << ident.lhs.start << "\n";
    if (!(ident.lhs.numer == Poly(Rat(1)))) s << "numer = " << ident.lhs.numer.str("k") << "\n";
    if (!(ident.lhs.denom == Poly(Rat(1)))) s << "denom = " << ident.lhs.denom.str("k") << "\n";
    if (ident.lhs.base != 1) {
        s << "base = " << rat_string(ident.lhs.base) << "\n";
        s << "side = " << (ident.lhs.base_divides ? "divides" : "multiplies") << "\n";
    }
    if (!ident.lhs.factors.empty()) {
        s << "factors = ";
        for (size_t i = 0; i < ident.lhs.factors.size(); i++) {
            if (i) s << ", ";
            s << ident.lhs.factors[i].str();
        }
        s << "\n";
    }
    s << "rhs = " << ident.rhs.str() << "\n";
    return s.str();
}

std::string serialize_catalog(const Catalog& cat) {
    std::string out;
    for (size_t i = 0; i < cat.entries.size(); i++) {
        if (i) out += "\n";
        out += serialize_identity(cat.entries[i]);
    }
    return out;
}

const Catalog& default_catalog() {
    static const Catalog cat = [] {
        try {
            return parse_catalog(embedded_catalog_text());
        } catch (const Error& e) {
            fail(std::string("embedded catalog: ") + e.what());
        }
    }();
    return cat;
}

} // namespace piforge
