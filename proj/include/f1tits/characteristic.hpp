#pragma once

#include <set>
#include <string>
#include <vector>

namespace f1tits {

// A set of potential characteristics: values are 0, 1 (idempotent semifields)
// and primes.  `cofinite` stores the excluded values, `finite` the included ones.
struct CharacteristicClass {
    enum class Kind { indefinite, cofinite, finite, unknown };
    Kind kind = Kind::unknown;
    std::set<long long> values;
    std::string diagnostics;

    static CharacteristicClass indefinite() { return {Kind::indefinite, {}, {}}; }
    static CharacteristicClass all_but(std::set<long long> excluded) {
        if (excluded.empty()) return indefinite();
        return {Kind::cofinite, std::move(excluded), {}};
    }
    static CharacteristicClass only(std::set<long long> included) { return {Kind::finite, std::move(included), {}}; }
    static CharacteristicClass unknown(std::string why) { return {Kind::unknown, {}, std::move(why)}; }

    bool is_unknown() const { return kind == Kind::unknown; }
    bool is_empty() const { return kind == Kind::finite && values.empty(); }
    // all but finitely many characteristics
    bool almost_indefinite() const { return kind == Kind::indefinite || kind == Kind::cofinite; }
    bool contains(long long p) const {
        switch (kind) {
            case Kind::indefinite: return true;
            case Kind::cofinite: return !values.count(p);
            case Kind::finite: return values.count(p) > 0;
            default: return false;
        }
    }

    std::string label() const {
        auto list = [&] {
            std::string s = "{";
            bool first = true;
            for (auto v : values) {
                if (!first) s += ",";
                s += std::to_string(v);
                first = false;
            }
            return s + "}";
        };
        switch (kind) {
            case Kind::indefinite: return "indefinite";
            case Kind::cofinite:
                if (values == std::set<long long>{1}) return "all-but-1";
                return "all-but" + list();
            case Kind::finite: return list();
            default: return "unknown";
        }
    }

    bool operator==(const CharacteristicClass& o) const { return kind == o.kind && values == o.values; }
};

inline CharacteristicClass intersect(const CharacteristicClass& a, const CharacteristicClass& b) {
    using K = CharacteristicClass::Kind;
    if (a.is_empty() || b.is_empty()) return CharacteristicClass::only({});
    if (a.is_unknown() || b.is_unknown()) return CharacteristicClass::unknown("intersection with unknown");
    if (a.kind == K::finite || b.kind == K::finite) {
        const auto& f = a.kind == K::finite ? a : b;
        const auto& g = a.kind == K::finite ? b : a;
        std::set<long long> out;
        for (auto v : f.values)
            if (g.contains(v)) out.insert(v);
        return CharacteristicClass::only(out);
    }
    std::set<long long> ex = a.values;
    ex.insert(b.values.begin(), b.values.end());
    return CharacteristicClass::all_but(ex);
}

inline CharacteristicClass unite(const CharacteristicClass& a, const CharacteristicClass& b) {
    using K = CharacteristicClass::Kind;
    if (a.kind == K::indefinite || b.kind == K::indefinite) return CharacteristicClass::indefinite();
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    if (a.is_unknown() || b.is_unknown()) return CharacteristicClass::unknown("union with unknown");
    if (a.kind == K::finite && b.kind == K::finite) {
        std::set<long long> s = a.values;
        s.insert(b.values.begin(), b.values.end());
        return CharacteristicClass::only(s);
    }
    if (a.kind == K::cofinite && b.kind == K::cofinite) {
        std::set<long long> ex;
        for (auto v : a.values)
            if (b.values.count(v)) ex.insert(v);
        return CharacteristicClass::all_but(ex);
    }
    const auto& c = a.kind == K::cofinite ? a : b;
    const auto& f = a.kind == K::cofinite ? b : a;
    std::set<long long> ex;
    for (auto v : c.values)
        if (!f.values.count(v)) ex.insert(v);
    return CharacteristicClass::all_but(ex);
}

}  // namespace f1tits
