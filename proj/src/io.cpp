#include "cofin/io.hpp"

#include <sstream>

namespace cofin {

namespace {

std::string list_elements(const UpSet& finite_set) {
    std::ostringstream os;
    os << '{';
    auto elems = elements(finite_set);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) os << ',';
        os << elems[i];
    }
    os << '}';
    return os.str();
}

std::string bits_string(const Bits& b) {
    std::string s;
    s.reserve(b.size());
    for (auto x : b) s.push_back(x ? '1' : '0');
    return s;
}

}  // namespace

std::string show(const UpSet& a) {
    SetClass c = classify(a);
    if (c.tag == SetTag::Finite) return list_elements(a);
    if (c.tag == SetTag::Cofinite) {
        UpSet k = complement(a);
        return k.is_empty() ? "N" : "!" + list_elements(k);
    }
    if (a.prefix_ones() == 0 && a.wheel_ones() == 1) {
        std::uint64_t r = select(a, 0);
        std::ostringstream os;
        os << a.period() << 'k';
        if (r) os << '+' << r;
        os << "..";
        return os.str();
    }
    return "per(" + bits_string(a.prefix()) + ";" + bits_string(a.wheel()) + ")";
}

std::string show(const SetClass& c) {
    switch (c.tag) {
        case SetTag::Finite: return "Finite(" + std::to_string(c.count) + ")";
        case SetTag::Cofinite: return "Cofinite(" + std::to_string(c.count) + ")";
        default: return "Split";
    }
}

std::string show(const EnumMap& u) {
    if (u.is_identity()) return "id";
    if (u.cofinite_image()) return "sigma" + list_elements(complement(u.image()));
    return "u(" + show(u.image()) + ")";
}

std::string show(const IdealExpr& ideal) {
    if (ideal.is_empty()) return "0";
    if (ideal.is_coinfinite()) return "L";
    if (ideal.is_top()) return "E";
    std::ostringstream os;
    const auto& gens = ideal.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << " | ";
        os << (gens[i].kind == GenKind::Principal ? "P(" : "Alm(") << show(gens[i].support)
           << ')';
    }
    return os.str();
}

std::string show(const FilterRep& f) {
    if (f.is_principal()) {
        if (f.limit_part().is_empty()) return "discrete";
        if (f.limit_part() == UpSet::naturals()) return "indiscrete";
        return "U(" + show(f.limit_part()) + ")";
    }
    if (f == FilterRep::cofinite_superset_filter(f.limit_part()))
        return f.limit_part().is_empty() ? "frechet" : "C(" + show(f.limit_part()) + ")";
    return "phi(" + show(f.limit_part()) + ";" + show(f.almost_part()) + ")";
}

std::string show(const BornRep& b) { return "born " + show(b.dual()); }

std::string show(const FiniteMap& f) {
    if (auto* p = f.as_prefixed()) {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < p->table.size(); ++i) {
            if (i) os << ',';
            os << p->table[i];
        }
        os << " | " << show(p->tail) << ']';
        return os.str();
    }
    return "finite-map";
}

nlohmann::json to_json(const UpSet& a) {
    return nlohmann::json{{"t", a.threshold()},
                          {"p", a.period()},
                          {"prefix", bits_string(a.prefix())},
                          {"wheel", bits_string(a.wheel())}};
}

UpSet upset_from_json(const nlohmann::json& j) {
    auto parse_bits = [](const std::string& s) {
        Bits b;
        b.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1') throw DomainError("bit strings are 0/1 only");
            b.push_back(c == '1');
        }
        return b;
    };
    Bits prefix = parse_bits(j.at("prefix").get<std::string>());
    Bits wheel = parse_bits(j.at("wheel").get<std::string>());
    if (j.at("t").get<std::uint64_t>() != prefix.size() ||
        j.at("p").get<std::uint64_t>() != wheel.size())
        throw DomainError("t/p fields disagree with bit string lengths");
    return UpSet::from_raw(std::move(prefix), std::move(wheel));
}

}  // namespace cofin
