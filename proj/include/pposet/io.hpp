#pragma once

#include <fstream>
#include <sstream>

#include "pposet/equivalence.hpp"

namespace pposet {

// Poset text format, one poset per file:
//   n <N>
//   cover <a> <b>     (a < b in the order, 1-based)
// Blank lines and lines starting with '#' are ignored.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void fail_at(const std::string& where, int line, const std::string& what) {
    throw parse_error(where + ":" + std::to_string(line) + ": " + what);
}

struct PosetFileContents {
    int n = -1;
    std::vector<std::pair<int, int>> covers;
    std::vector<int> phi;            // optional
    std::pair<int, int> e{0, 0}, f{0, 0};  // optional
    bool has_phi = false, has_e = false, has_f = false;
};

inline PosetFileContents parse_poset_stream(std::istream& in, const std::string& where) {
    PosetFileContents out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        if (word == "n") {
            if (out.n >= 0) fail_at(where, lineno, "duplicate size line");
            if (!(ls >> out.n) || out.n < 0) fail_at(where, lineno, "expected 'n <count>'");
        } else if (word == "cover") {
            int a, b;
            if (!(ls >> a >> b)) fail_at(where, lineno, "expected 'cover <a> <b>'");
            if (out.n < 0) fail_at(where, lineno, "size line must come before covers");
            if (a < 1 || a > out.n || b < 1 || b > out.n)
                fail_at(where, lineno, "cover label out of range 1..n");
            if (a == b) fail_at(where, lineno, "cover relates an element to itself");
            out.covers.push_back({a, b});
        } else if (word == "phi") {
            int v;
            while (ls >> v) out.phi.push_back(v);
            out.has_phi = true;
        } else if (word == "e") {
            if (!(ls >> out.e.first >> out.e.second)) fail_at(where, lineno, "expected 'e <a> <b>'");
            out.has_e = true;
        } else if (word == "f") {
            if (!(ls >> out.f.first >> out.f.second)) fail_at(where, lineno, "expected 'f <a> <b>'");
            out.has_f = true;
        } else {
            fail_at(where, lineno, "unknown directive '" + word + "'");
        }
    }
    if (out.n < 0) fail_at(where, lineno, "missing 'n <count>' line");
    return out;
}

}  // namespace detail

inline Poset parse_poset_text(std::istream& in, const std::string& where = "<input>") {
    detail::PosetFileContents c = detail::parse_poset_stream(in, where);
    try {
        return Poset::from_cover_relations(c.n, c.covers);
    } catch (const std::invalid_argument& ex) {
        throw parse_error(where + ": " + ex.what());
    }
}

inline Poset parse_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    return parse_poset_text(in, path);
}

// Twist-construction input: the poset section plus 'phi', 'e' and 'f'
// lines.
inline TwistInput parse_twist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    detail::PosetFileContents c = detail::parse_poset_stream(in, path);
    if (!c.has_phi || !c.has_e || !c.has_f)
        throw parse_error(path + ": twist input needs 'phi', 'e' and 'f' lines");
    TwistInput t;
    try {
        t.base = Poset::from_cover_relations(c.n, c.covers);
    } catch (const std::invalid_argument& ex) {
        throw parse_error(path + ": " + ex.what());
    }
    t.automorphism = c.phi;
    t.orbit_pair = c.e;
    t.anchor_pair = c.f;
    return t;
}

inline std::string format_poset_text(const Poset& p) {
    std::string out = "n " + std::to_string(p.size()) + "\n";
    for (auto [a, b] : p.covers())
        out += "cover " + std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

}  // namespace pposet
