#pragma once

#include <sstream>
#include <string>

#include "nilorbit/degeneration.hpp"
#include "nilorbit/orbit.hpp"
#include "nilorbit/params.hpp"

namespace nilorbit {

inline std::string columns_to_string(const Columns& cols) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) os << ',';
        os << cols[i];
    }
    return os.str();
}

inline Columns parse_columns(const std::string& text) {
    Columns cols;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            fail(ErrorCode::BadRequest, "bad column '" + item + "'");
        }
        require(pos == item.size() || item.find_first_not_of(" \t", pos) == std::string::npos,
                ErrorCode::BadRequest, "bad column '" + item + "'");
        cols.push_back(v);
    }
    require(!cols.empty(), ErrorCode::BadRequest, "empty column list");
    return cols;
}

inline GroupKind parse_kind(const std::string& text) {
    if (text == "C" || text == "c") return GroupKind::SymplecticC;
    if (text == "B" || text == "b" || text == "D" || text == "d") return GroupKind::OrthogonalBD;
    fail(ErrorCode::BadRequest, "kind must be one of C|B|D, got '" + text + "'");
}

inline std::string kind_to_string(GroupKind k) { return k == GroupKind::SymplecticC ? "C" : "B/D"; }

// Chain display: [8(66)(44)(22)0] when every entry is a single digit,
// [12(10,10)8] with commas inside pairs otherwise.
inline std::string chain_to_string(const std::vector<Column>& e) {
    std::ostringstream os;
    os << '[';
    if (e.size() == 2) {
        os << e[0] << ((e[0] > 9 || e[1] > 9) ? "," : "") << e[1];
    } else {
        os << e.front();
        for (std::size_t i = 1; i + 1 < e.size(); i += 2) {
            os << '(' << e[i];
            if (e[i] > 9 || e[i + 1] > 9) os << ',';
            os << e[i + 1] << ')';
        }
        os << e.back();
    }
    os << ']';
    return os.str();
}

inline std::string chains_to_string(const ChainDecomposition& d) {
    std::string s;
    for (const Chain& c : d.chains) s += chain_to_string(c.entries);
    return s;
}

inline std::string factor_to_string(const Factor& f) {
    std::ostringstream os;
    if (f.kind == Factor::Kind::AnglePlus) {
        os << '<' << f.x << ',' << f.y << ">^+";
    } else {
        os << '{' << f.x << ',' << f.y << "}^" << (f.kind == Factor::Kind::BracePlus ? '+' : '-');
    }
    return os.str();
}

inline std::string chain_factor_to_string(const ChainFactor& cf) {
    std::ostringstream os;
    os << chain_to_string(cf.entries) << '_' << (cf.delta == Parity::Even ? '0' : '1') << '^';
    if (cf.form == ChainFactor::Form::Signed)
        os << sign_char(cf.eps);
    else
        os << '+';
    return os.str();
}

inline std::string parameter_to_string(const AttachedParameter& p) {
    std::string s;
    for (const auto& f : p.factors) s += chain_factor_to_string(f);
    return s;
}

inline std::string parameter_factors_to_string(const AttachedParameter& p) {
    std::string s;
    for (const auto& cf : p.factors)
        for (const auto& f : cf.expand()) s += factor_to_string(f);
    return s;
}

inline std::string lstring_to_string(const LString& s) {
    std::string body = "(" + s.start.str() + " -> " + s.end.str() + ")";
    switch (s.decoration) {
        case Decoration::Plain: return body;
        case Decoration::Under: return "under" + body;
        case Decoration::Over: return "over" + body;
    }
    return body;
}

inline std::string induced_form_to_string(const InducedForm& form) {
    std::ostringstream os;
    os << "I[";
    for (std::size_t i = 0; i < form.blocks.size(); ++i) {
        if (i) os << ' ';
        os << "GL" << form.blocks[i].gl_size << ":(" << columns_to_string(form.blocks[i].block_ktype) << ')';
    }
    os << ']';
    return os.str();
}

inline std::string transferred_to_string(const TransferredParameter& t) {
    std::string s;
    for (const auto& f : t.leading_interior) s += factor_to_string(f);
    s += "[" + std::to_string(t.tail.column) + "]^";
    s += sign_char(t.tail.eps);
    for (const auto& cf : t.rest) s += chain_factor_to_string(cf);
    return s;
}

} // namespace nilorbit
