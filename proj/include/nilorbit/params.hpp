#pragma once

#include <cstdint>
#include <vector>

#include "nilorbit/degeneration.hpp"
#include "nilorbit/half_int.hpp"
#include "nilorbit/orbit.hpp"

namespace nilorbit {

enum class Sign { Plus, Minus };

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

enum class Decoration { Plain, Under, Over };

// A coordinate string (a -> A); Under shifts the second row by -1, Over by +1.
struct LString {
    HalfInt start;
    HalfInt end;
    Decoration decoration = Decoration::Plain;

    std::int64_t gl_size() const {
        std::int64_t diff = (end.doubled - start.doubled) / 2;
        hard_assert((end.doubled - start.doubled) % 2 == 0 && diff >= 0, "string endpoints must differ by a nonnegative integer");
        return diff + 1;
    }
};

// GL-level factor: {x,y}^+, {x,y}^- (y >= 1) or <x,x>^+.
struct Factor {
    enum class Kind { BracePlus, BraceMinus, AnglePlus };
    Kind kind = Kind::BracePlus;
    Column x = 0;
    Column y = 0;

    static Factor brace(Column x, Column y, Sign s) {
        require(0 <= y && y <= x && (x - y) % 2 == 0, ErrorCode::BadRequest, "brace factor needs 0 <= y <= x of equal parity");
        if (s == Sign::Minus) require(y >= 1, ErrorCode::BadRequest, "minus factor needs y >= 1");
        return Factor{s == Sign::Plus ? Kind::BracePlus : Kind::BraceMinus, x, y};
    }
    static Factor angle(Column x) { return Factor{Kind::AnglePlus, x, x}; }

    std::int64_t gl_size() const { return kind == Kind::AnglePlus ? x : (x + y) / 2; }

    // Highest weight of the single K-type of the corresponding GL module.
    Columns block_ktype() const {
        Columns kt(static_cast<std::size_t>(gl_size()), 0);
        if (kind == Kind::BraceMinus)
            for (std::int64_t i = 0; i < y; ++i) kt[static_cast<std::size_t>(i)] = 1;
        return kt;
    }

    // Langlands strings realizing the factor.
    std::vector<LString> strings() const {
        switch (kind) {
            case Kind::BracePlus:
                return {LString{HalfInt::from_doubled(-y + 2), HalfInt::from_doubled(x), Decoration::Plain}};
            case Kind::BraceMinus:
                return {LString{HalfInt::from_doubled(-y + 2), HalfInt::from_doubled(y), Decoration::Under},
                        LString{HalfInt::from_doubled(y + 2), HalfInt::from_doubled(x), Decoration::Plain}};
            case Kind::AnglePlus:
                return {LString{HalfInt::from_doubled(-(x - 1)), HalfInt::from_doubled(x - 1), Decoration::Plain}};
        }
        fail(ErrorCode::Internal, "unreachable");
    }
};

// One bracketed chain factor [b0 (b1 b2) ... b_{2k+1}]_delta^eps.
struct ChainFactor {
    enum class Form {
        Signed,    // ends > 0, parity matches delta: eps meaningful, two choices exist
        ZeroTail,  // ends in 0: forced +
        Angle,     // equal pair of opposite parity: <b,b>^+
    };

    std::vector<Column> entries;
    Parity delta = Parity::Even;
    Form form = Form::Signed;
    Sign eps = Sign::Plus;

    std::int64_t k() const { return static_cast<std::int64_t>(entries.size()) / 2 - 1; }

    std::vector<Factor> expand() const {
        std::vector<Factor> out;
        for (std::int64_t i = 1; i <= k(); ++i)
            out.push_back(Factor::brace(entries[static_cast<std::size_t>(2 * i - 1)],
                                        entries[static_cast<std::size_t>(2 * i)], Sign::Minus));
        switch (form) {
            case Form::Signed:
                out.push_back(Factor::brace(entries.front(), entries.back(), eps));
                break;
            case Form::ZeroTail:
                out.push_back(Factor::brace(entries.front(), 0, Sign::Plus));
                break;
            case Form::Angle:
                out.push_back(Factor::angle(entries.front()));
                break;
        }
        return out;
    }

    friend bool operator==(const ChainFactor& a, const ChainFactor& b) {
        return a.entries == b.entries && a.delta == b.delta && a.form == b.form && a.eps == b.eps;
    }
};

// How many sign choices a chain admits, and in which form.  The three cases
// of the attachment rule; anything else signals a wrong degeneration.
inline ChainFactor classify_chain(const std::vector<Column>& entries, Parity delta) {
    ChainFactor f;
    f.entries = entries;
    f.delta = delta;
    Parity p = parity_of(entries.front());
    if (entries.back() > 0 && p == delta) {
        f.form = ChainFactor::Form::Signed;
    } else if (entries.back() == 0) {
        hard_assert(delta == Parity::Even, "zero-tail chain in odd context");
        f.form = ChainFactor::Form::ZeroTail;
    } else {
        hard_assert(p != delta, "chain classification fell through");
        hard_assert(entries.size() == 2 && entries[0] == entries[1],
                    "opposite-parity chain must be an equal pair");
        f.form = ChainFactor::Form::Angle;
    }
    return f;
}

struct AttachedParameter {
    std::vector<ChainFactor> factors;

    friend bool operator==(const AttachedParameter& a, const AttachedParameter& b) {
        return a.factors == b.factors;
    }
};

// All parameters attached to a Norm member: every admissible sign pattern,
// enumerated + before - per chain, chains left to right.
inline std::vector<AttachedParameter> attach_parameters(const NormSet& ns, const NormMember& member) {
    std::vector<std::vector<ChainFactor>> per_chain;
    for (const auto& seg : member.segments) {
        for (const auto& part : chain_split(seg.columns)) {
            ChainFactor base = classify_chain(part, seg.delta);
            if (base.form == ChainFactor::Form::Signed) {
                ChainFactor minus = base;
                base.eps = Sign::Plus;
                minus.eps = Sign::Minus;
                per_chain.push_back({base, minus});
            } else {
                per_chain.push_back({base});
            }
        }
    }
    (void)ns;
    std::vector<AttachedParameter> out;
    std::vector<std::size_t> choice(per_chain.size(), 0);
    bool done = false;
    while (!done) {
        AttachedParameter p;
        for (std::size_t i = 0; i < per_chain.size(); ++i) p.factors.push_back(per_chain[i][choice[i]]);
        out.push_back(std::move(p));
        done = true;
        for (std::size_t i = per_chain.size(); i-- > 0;) {
            if (++choice[i] < per_chain[i].size()) {
                done = false;
                break;
            }
            choice[i] = 0;
        }
    }
    return out;
}

inline const NormMember& find_member(const NormSet& ns, const Orbit& member) {
    require(member.kind == GroupKind::SymplecticC, ErrorCode::NotMember, "member must be symplectic");
    const NormMember* m = ns.find(member.columns);
    require(m != nullptr, ErrorCode::NotMember, "orbit is not in the Norm set of the origin");
    return *m;
}

inline std::vector<AttachedParameter> attach_parameters(const Orbit& origin, const Orbit& member) {
    NormSet ns = norm_set(origin);
    return attach_parameters(ns, find_member(ns, member));
}

// The unique parameter whose sign-bearing chains carry eps = (-1)^k.
inline AttachedParameter distinguished_parameter(const NormSet& ns, const NormMember& member) {
    AttachedParameter p;
    for (const auto& seg : member.segments) {
        for (const auto& part : chain_split(seg.columns)) {
            ChainFactor f = classify_chain(part, seg.delta);
            if (f.form == ChainFactor::Form::Signed)
                f.eps = (f.k() % 2 == 0) ? Sign::Plus : Sign::Minus;
            p.factors.push_back(std::move(f));
        }
    }
    return p;
}

inline AttachedParameter distinguished_parameter(const Orbit& origin, const Orbit& member) {
    NormSet ns = norm_set(origin);
    return distinguished_parameter(ns, find_member(ns, member));
}

// Induced module data: GL block sizes plus the single K-type of each block.
struct InducedBlock {
    std::int64_t gl_size = 0;
    Columns block_ktype;

    friend bool operator==(const InducedBlock& a, const InducedBlock& b) {
        return a.gl_size == b.gl_size && a.block_ktype == b.block_ktype;
    }
};

struct InducedForm {
    std::vector<InducedBlock> blocks;

    std::int64_t rank() const {
        std::int64_t n = 0;
        for (const auto& b : blocks) n = checked_add(n, b.gl_size);
        return n;
    }
    std::vector<std::int64_t> shape() const {
        std::vector<std::int64_t> s;
        for (const auto& b : blocks) s.push_back(b.gl_size);
        return s;
    }
};

// All-GL form: per chain, interior minus blocks first, then the outer block.
inline InducedForm to_induced_form(const AttachedParameter& p) {
    InducedForm form;
    for (const ChainFactor& cf : p.factors)
        for (const Factor& f : cf.expand())
            form.blocks.push_back(InducedBlock{f.gl_size(), f.block_ktype()});
    return form;
}

inline InducedForm induced_from_trivial(const std::vector<std::int64_t>& shape) {
    InducedForm form;
    for (auto s : shape) form.blocks.push_back(InducedBlock{s, Columns(static_cast<std::size_t>(s), 0)});
    return form;
}

// Composition factor data of B(closure): distinguished parameters of the
// generic core, each carried by the extracted {c,c}^+ wrapper blocks.
struct BModuleFactor {
    Columns wrapper_columns;
    AttachedParameter param;

    InducedForm induced_form() const {
        InducedForm form;
        for (Column c : wrapper_columns)
            form.blocks.push_back(InducedBlock{c, Columns(static_cast<std::size_t>(c), 0)});
        InducedForm core = to_induced_form(param);
        form.blocks.insert(form.blocks.end(), core.blocks.begin(), core.blocks.end());
        return form;
    }
};

inline std::vector<BModuleFactor> b_module_factors(const Orbit& orbit) {
    GenericExtraction ex = extract_generic(orbit);
    NormSet ns = norm_set(ex.generic);
    std::vector<BModuleFactor> out;
    for (const auto& member : ns.members)
        out.push_back(BModuleFactor{ex.extracted_pairs, distinguished_parameter(ns, member)});
    return out;
}

// Orthogonal tail parameter [c]^eps produced by the theta transfer.
struct OrthTail {
    Column column = 0;
    Sign eps = Sign::Plus;

    // (c/2 - 1, ..., 1, 0) for even c; (c/2 - 1, ..., 3/2, 1/2) for odd c.
    std::vector<HalfInt> coords() const {
        std::vector<HalfInt> v;
        for (std::int64_t d = column - 2; d >= 0; d -= 2) v.push_back(HalfInt::from_doubled(d));
        return v;
    }
};

struct TransferredParameter {
    std::vector<Factor> leading_interior;  // the {b,b}^- blocks of the leading chain
    OrthTail tail;
    std::vector<ChainFactor> rest;
};

// Drop the added column c0 from the leading chain factor of a parameter
// attached to Norm(Q^c); everything else is untouched.
inline TransferredParameter theta_transfer(const AttachedParameter& p, const Orbit& q_c) {
    require(!p.factors.empty(), ErrorCode::LeadingColumnMissing, "empty parameter");
    const ChainFactor& lead = p.factors.front();
    require(!q_c.columns.empty() && lead.entries.front() == q_c.columns.front(),
            ErrorCode::LeadingColumnMissing, "leading chain does not start with the added column");
    TransferredParameter t;
    for (std::int64_t i = 1; i <= lead.k(); ++i)
        t.leading_interior.push_back(Factor::brace(lead.entries[static_cast<std::size_t>(2 * i - 1)],
                                                   lead.entries[static_cast<std::size_t>(2 * i)], Sign::Minus));
    t.tail = OrthTail{lead.entries.back(), lead.form == ChainFactor::Form::Signed ? lead.eps : Sign::Plus};
    t.rest.assign(p.factors.begin() + 1, p.factors.end());
    return t;
}

} // namespace nilorbit
