#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nilorbit/format.hpp"
#include "nilorbit/spectra.hpp"
#include "nilorbit/verify.hpp"

namespace nilorbit {

// The example corpus is a plain text file: one [entry] per worked example,
// `key = value` lines, repeated keys allowed, `#` comments.
struct CorpusEntry {
    std::string name;
    std::vector<std::pair<std::string, std::string>> fields;

    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : fields)
            if (k == key) return &v;
        return nullptr;
    }
    std::vector<std::string> all(const std::string& key) const {
        std::vector<std::string> out;
        for (const auto& [k, v] : fields)
            if (k == key) out.push_back(v);
        return out;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) {
        std::string t = trim(item);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

} // namespace detail

inline std::vector<CorpusEntry> parse_corpus(std::istream& in) {
    std::vector<CorpusEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (t.front() == '[' && t.back() == ']') {
            entries.push_back(CorpusEntry{t.substr(1, t.size() - 2), {}});
            continue;
        }
        std::size_t eq = t.find('=');
        require(eq != std::string::npos && !entries.empty(), ErrorCode::BadRequest,
                "corpus line outside an entry or without '=': " + t);
        entries.back().fields.emplace_back(detail::trim(t.substr(0, eq)), detail::trim(t.substr(eq + 1)));
    }
    return entries;
}

inline Orbit parse_orbit_field(const std::string& value) {
    std::istringstream is(value);
    std::string kind, cols;
    is >> kind >> cols;
    require(!kind.empty() && !cols.empty(), ErrorCode::BadRequest, "orbit field needs '<kind> <columns>'");
    return validate(parse_kind(kind), parse_columns(cols));
}

// Replay one corpus entry; every listed expectation is checked.
inline void replay_corpus_entry(const CorpusEntry& e, VerifyResult& r) {
    const std::string* orbit_field = e.find("orbit");
    require(orbit_field != nullptr, ErrorCode::BadRequest, "corpus entry without an orbit: " + e.name);
    Orbit orbit = parse_orbit_field(*orbit_field);
    Orbit symp = orbit.kind == GroupKind::SymplecticC ? orbit : to_symplectic(orbit);
    auto where = [&](const std::string& key) { return e.name + "/" + key; };

    if (const auto* v = e.find("chains"))
        r.record(chains_to_string(chain_decompose(symp)) == *v, where("chains"));
    if (const auto* v = e.find("generic")) r.record(is_generic(symp) == (*v == "yes"), where("generic"));
    if (const auto* v = e.find("special")) r.record(is_special(symp) == (*v == "yes"), where("special"));
    if (const auto* v = e.find("normal"))
        r.record(!kp_normality(symp).has_value() == (*v == "yes"), where("normal"));
    if (const auto* v = e.find("witness")) {
        auto w = kp_normality(symp);
        std::ostringstream os;
        if (w) os << w->chain_index << ':' << w->i << ':' << w->j;
        r.record(w.has_value() && os.str() == *v, where("witness"));
    }
    if (const auto* v = e.find("component-rank"))
        r.record(component_group_rank(symp) == std::stoi(*v), where("component-rank"));
    if (const auto* v = e.find("lusztig-rank"))
        r.record(lusztig_quotient_rank(symp) == std::stoi(*v), where("lusztig-rank"));
    if (const auto* v = e.find("infchar")) {
        std::string got;
        for (const HalfInt& h : infinitesimal_character(symp)) {
            if (!got.empty()) got += ' ';
            got += h.str();
        }
        r.record(got == *v, where("infchar") + " got " + got);
    }
    if (const auto* v = e.find("sharp"))
        r.record(sharp_orbit(symp).columns == parse_columns(*v), where("sharp"));
    if (const auto* v = e.find("extract")) {
        auto parts = detail::split_list(*v, ';');
        require(parts.size() == 2 || parts.size() == 1, ErrorCode::BadRequest, "extract = <cols> ; <pairs>");
        GenericExtraction ex = extract_generic(symp);
        bool ok = ex.generic.columns == parse_columns(parts[0]);
        Columns pairs = ex.extracted_pairs;
        std::sort(pairs.begin(), pairs.end(), std::greater<Column>());
        if (parts.size() == 2) {
            ok = ok && pairs == parse_columns(parts[1]);
        } else {
            ok = ok && pairs.empty();
        }
        r.record(ok, where("extract"));
    }

    if (const auto* v = e.find("factors")) {
        std::set<std::string> expected;
        for (const auto& s : detail::split_list(*v, '|')) expected.insert(s);
        std::set<std::string> got;
        for (const auto& f : b_module_factors(symp)) {
            std::string s;
            for (Column c : f.wrapper_columns) s += "{" + std::to_string(c) + "," + std::to_string(c) + "}^+";
            s += parameter_factors_to_string(f.param);
            got.insert(s);
        }
        r.record(got == expected, where("factors"));
    }

    bool needs_norm = e.find("norm-count") || e.find("norm-members") || e.find("norm-depths") ||
                      e.find("param-total") || !e.all("member-params").empty() || e.find("distinguished") ||
                      e.find("norm-min");
    if (!needs_norm) return;

    NormSet ns = norm_set(symp);
    if (const auto* v = e.find("norm-count"))
        r.record(static_cast<int>(ns.members.size()) == std::stoi(*v), where("norm-count"));
    if (const auto* v = e.find("norm-members")) {
        std::set<std::string> expected;
        for (const auto& s : detail::split_list(*v, '|')) expected.insert(s);
        std::set<std::string> got;
        for (const auto& m : ns.members) got.insert(chains_to_string(chain_decompose(m.orbit)));
        r.record(got == expected, where("norm-members"));
    }
    if (const auto* v = e.find("norm-depths")) {
        std::map<int, int> expected;
        for (const auto& s : detail::split_list(*v, ' ')) {
            auto colon = s.find(':');
            expected[std::stoi(s.substr(0, colon))] = std::stoi(s.substr(colon + 1));
        }
        std::map<int, int> got;
        for (const auto& m : ns.members) ++got[m.depth];
        r.record(got == expected, where("norm-depths"));
    }
    if (const auto* v = e.find("param-total")) {
        std::size_t total = 0;
        for (const auto& m : ns.members) total += attach_parameters(ns, m).size();
        r.record(static_cast<int>(total) == std::stoi(*v), where("param-total"));
    }
    for (const std::string& mp : e.all("member-params")) {
        auto sep = mp.find("::");
        require(sep != std::string::npos, ErrorCode::BadRequest, "member-params = <chains> :: <count>");
        std::string member = detail::trim(mp.substr(0, sep));
        int count = std::stoi(detail::trim(mp.substr(sep + 2)));
        bool found = false;
        for (const auto& m : ns.members) {
            if (chains_to_string(chain_decompose(m.orbit)) == member) {
                found = true;
                r.record(static_cast<int>(attach_parameters(ns, m).size()) == count,
                         where("member-params " + member));
            }
        }
        if (!found) r.record(false, where("member-params missing " + member));
    }
    if (const auto* v = e.find("distinguished")) {
        std::set<std::string> expected;
        for (const auto& s : detail::split_list(*v, '|')) expected.insert(s);
        std::set<std::string> got;
        for (const auto& m : ns.members) got.insert(parameter_to_string(distinguished_parameter(ns, m)));
        r.record(got == expected, where("distinguished"));
    }
    if (const auto* v = e.find("norm-min"))
        r.record(norm_minimum(symp).columns == parse_columns(*v), where("norm-min"));
}

inline VerifyResult verify_corpus(const std::string& path) {
    detail::Stopwatch clock;
    VerifyResult r;
    r.name = "corpus";
    std::ifstream in(path);
    require(in.good(), ErrorCode::BadRequest, "cannot open corpus file " + path);
    auto entries = parse_corpus(in);
    require(!entries.empty(), ErrorCode::BadRequest, "corpus file has no entries");
    for (const auto& e : entries) replay_corpus_entry(e, r);
    r.seconds = clock.seconds();
    return r;
}

} // namespace nilorbit
