#pragma once

#include <json.hpp>

#include "pposet/io.hpp"

namespace pposet {

using json = nlohmann::json;

inline json to_json(const Composition& c) { return json(c.parts()); }
inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const QSymElement& x) {
    json terms = json::array();
    for (const auto& [key, c] : x.terms())
        terms.push_back({{"composition", key.parts()}, {"coeff", c}});
    return {{"basis", x.basis() == Basis::L ? "L" : "M"},
            {"degree", x.degree()},
            {"terms", terms}};
}

inline json to_json(const Poset& p) {
    json covers = json::array();
    for (auto [a, b] : p.covers()) covers.push_back({a, b});
    return {{"n", p.size()},
            {"covers", covers},
            {"naturally_labeled", p.naturally_labeled()}};
}

inline json to_json(const IdealTypeTable& t) {
    json out = json::array();
    for (const auto& [kij, count] : t)
        out.push_back({{"k", kij[0]}, {"i", kij[1]}, {"j", kij[2]}, {"count", count}});
    return out;
}

inline json to_json(const JumpData& jd) {
    json pairs = json::array();
    for (const auto& [pr, count] : jd.jump_pairs)
        pairs.push_back({{"jump", pr.first}, {"upjump", pr.second}, {"count", count}});
    return {{"jump_sequence", jd.jump_seq},
            {"upjump_sequence", jd.upjump_seq},
            {"jump_pairs", pairs},
            {"principal_ideal_sizes", jd.ideal_size},
            {"principal_filter_sizes", jd.filter_size}};
}

inline json to_json(const FlagVectors& fv) {
    json f = json::array(), h = json::array();
    for (std::uint32_t s = 0; s < fv.f.size(); ++s) {
        std::vector<int> subset;
        for (std::uint32_t m = s; m; m &= m - 1) subset.push_back(lowest_bit(m) + 1);
        if (fv.f[s]) f.push_back({{"ranks", subset}, {"count", fv.f[s]}});
        if (fv.h[s]) h.push_back({{"ranks", subset}, {"count", fv.h[s]}});
    }
    return {{"f", f}, {"h", h}};
}

inline json to_json(const EquivalenceReport& r) {
    json classes = json::array();
    for (const KEquivalenceClass& cls : r.nontrivial) {
        json keys = json::array();
        for (const CanonicalKey& k : cls.keys) keys.push_back(key_to_hex(k));
        classes.push_back({{"keys", keys},
                           {"K", to_json(cls.kp)},
                           {"shape", cls.shape.parts()}});
    }
    return {{"n", r.n},
            {"total_classes", r.total_classes},
            {"k_classes", r.k_class_count},
            {"nontrivial", static_cast<i64>(r.nontrivial.size())},
            {"classes", classes}};
}

inline json to_json(const AuditResult& a) {
    json collisions = json::array();
    for (const auto& group : a.collisions) {
        json keys = json::array();
        for (const CanonicalKey& k : group) keys.push_back(key_to_hex(k));
        collisions.push_back(keys);
    }
    return {{"classes_checked", a.classes_checked},
            {"collision_count", static_cast<i64>(a.collisions.size())},
            {"collisions", collisions}};
}

}  // namespace pposet
