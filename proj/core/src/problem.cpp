#include "dring/problem.hpp"

#include <cctype>
#include <map>
#include <memory>

namespace dring {

namespace {

struct Piece {
    std::string_view text;
    SourcePos pos;
};

bool valid_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

SourcePos advance(SourcePos pos, std::string_view text, std::size_t n) {
    for (std::size_t i = 0; i < n && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
    }
    return pos;
}

Piece trim(Piece p) {
    std::size_t b = 0;
    while (b < p.text.size() && std::isspace(static_cast<unsigned char>(p.text[b]))) ++b;
    std::size_t e = p.text.size();
    while (e > b && std::isspace(static_cast<unsigned char>(p.text[e - 1]))) --e;
    return {p.text.substr(b, e - b), advance(p.pos, p.text, b)};
}

// Splits on commas outside parentheses/brackets.
std::vector<Piece> split_top_level(Piece p) {
    std::vector<Piece> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= p.text.size(); ++i) {
        if (i == p.text.size() || (p.text[i] == ',' && depth == 0)) {
            out.push_back(trim({p.text.substr(start, i - start), advance(p.pos, p.text, start)}));
            start = i + 1;
            continue;
        }
        char c = p.text[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
    }
    return out;
}

std::vector<Piece> parse_list(Piece value) {
    value = trim(value);
    if (value.text.size() < 2 || value.text.front() != '[' || value.text.back() != ']') {
        throw ParseError("expected a bracketed list", value.pos.line, value.pos.column);
    }
    Piece inner{value.text.substr(1, value.text.size() - 2), advance(value.pos, value.text, 1)};
    if (trim(inner).text.empty()) return {};
    auto items = split_top_level(inner);
    for (const auto& it : items) {
        if (it.text.empty()) throw ParseError("empty list element", it.pos.line, it.pos.column);
    }
    return items;
}

int bracket_balance(std::string_view s) {
    int b = 0;
    for (char c : s) {
        if (c == '[') ++b;
        if (c == ']') --b;
    }
    return b;
}

}  // namespace

PrimeSpec parse_prime(std::string_view text, const RingPtr& ring, SourcePos origin) {
    Piece p = trim({text, origin});
    auto open = p.text.find('(');
    if (open == std::string_view::npos || p.text.back() != ')') {
        throw ParseError("expected point(...) or coord(...)", p.pos.line, p.pos.column);
    }
    std::string_view head = p.text.substr(0, open);
    while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.remove_suffix(1);
    Piece inner{p.text.substr(open + 1, p.text.size() - open - 2), advance(p.pos, p.text, open + 1)};
    auto items = trim(inner).text.empty() ? std::vector<Piece>{} : split_top_level(inner);
    if (head == "point") {
        if (items.size() != ring->size()) {
            throw ParseError("point needs " + std::to_string(ring->size()) + " coordinates, got " +
                                 std::to_string(items.size()),
                             p.pos.line, p.pos.column);
        }
        std::vector<Rational> coords;
        for (const auto& it : items) coords.push_back(parse_constant(it.text, ring, it.pos));
        return PrimeSpec::point(std::move(coords));
    }
    if (head == "coord") {
        std::vector<std::optional<Rational>> values(ring->size());
        if (items.empty()) throw ParseError("coord(...) needs at least one variable", p.pos.line, p.pos.column);
        for (const auto& it : items) {
            auto eq = it.text.find('=');
            if (eq == std::string_view::npos) throw ParseError("expected var=value", it.pos.line, it.pos.column);
            Piece name = trim({it.text.substr(0, eq), it.pos});
            std::size_t idx = ring->index_of(std::string(name.text));
            if (idx == ring->size()) {
                throw ParseError("unknown variable '" + std::string(name.text) + "'", name.pos.line, name.pos.column);
            }
            if (values[idx]) throw ParseError("variable listed twice", name.pos.line, name.pos.column);
            Piece val = trim({it.text.substr(eq + 1), advance(it.pos, it.text, eq + 1)});
            values[idx] = parse_constant(val.text, ring, val.pos);
        }
        return PrimeSpec::coordinate(std::move(values));
    }
    throw ParseError("unknown prime form '" + std::string(head) + "'", p.pos.line, p.pos.column);
}

ProblemFile parse_problem(std::string_view text) {
    std::map<std::string, Piece> entries;
    std::vector<std::string> lines;
    {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto nl = text.find('\n', start);
            if (nl == std::string_view::npos) nl = text.size();
            std::string line(text.substr(start, nl - start));
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(std::move(line));
            start = nl + 1;
        }
    }
    // keep the joined values alive for the Piece views
    std::vector<std::unique_ptr<std::string>> storage;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value'", i + 1, 1);
        Piece key = trim({std::string_view(line).substr(0, colon), {i + 1, 1}});
        std::string k(key.text);
        if (k != "vars" && k != "ideal" && k != "D" && k != "prime") {
            throw ParseError("unknown key '" + k + "'", key.pos.line, key.pos.column);
        }
        if (entries.count(k)) throw ParseError("duplicate key '" + k + "'", key.pos.line, key.pos.column);
        auto value = std::make_unique<std::string>(line.substr(colon + 1));
        SourcePos vpos{i + 1, colon + 2};
        while (bracket_balance(*value) > 0 && i + 1 < lines.size()) {
            *value += "\n" + lines[++i];
        }
        if (bracket_balance(*value) != 0) throw ParseError("unbalanced brackets", vpos.line, vpos.column);
        entries.emplace(k, Piece{*value, vpos});
        storage.push_back(std::move(value));
    }
    if (!entries.count("vars")) throw ParseError("missing 'vars'", 1, 1);
    if (!entries.count("D")) throw ParseError("missing 'D'", 1, 1);

    std::vector<std::string> names;
    for (const auto& v : split_top_level(trim(entries.at("vars")))) {
        if (!valid_identifier(v.text)) {
            throw ParseError("invalid variable name '" + std::string(v.text) + "'", v.pos.line, v.pos.column);
        }
        names.emplace_back(v.text);
    }
    ProblemFile pf;
    try {
        pf.ring = make_ring(names);
    } catch (const InputError& e) {
        const auto& pos = entries.at("vars").pos;
        throw ParseError(e.what(), pos.line, pos.column);
    }
    if (auto it = entries.find("ideal"); it != entries.end()) {
        for (const auto& item : parse_list(it->second)) pf.ideal.push_back(parse_polynomial(item.text, pf.ring, item.pos));
    }
    const Piece& dval = entries.at("D");
    auto ditems = parse_list(dval);
    if (ditems.size() != names.size()) {
        throw ParseError("D has " + std::to_string(ditems.size()) + " entries but there are " +
                             std::to_string(names.size()) + " variables",
                         dval.pos.line, dval.pos.column);
    }
    for (const auto& item : ditems) pf.derivation.push_back(parse_polynomial(item.text, pf.ring, item.pos));
    if (auto it = entries.find("prime"); it != entries.end()) {
        pf.prime = parse_prime(it->second.text, pf.ring, it->second.pos);
    }
    return pf;
}

std::optional<Ideal> ProblemFile::quotient() const {
    if (ideal.empty()) return std::nullopt;
    return Ideal(ring, ideal);
}

Derivation ProblemFile::make_derivation(bool with_quotient) const {
    return Derivation(ring, derivation, with_quotient ? quotient() : std::nullopt);
}

const PrimeSpec& ProblemFile::require_prime() const {
    if (!prime) throw InputError("this command needs a 'prime' entry in the problem file");
    return *prime;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
    return *a.ring == *b.ring && a.ideal == b.ideal && a.derivation == b.derivation && a.prime == b.prime;
}

std::string render_problem(const ProblemFile& p) {
    auto list = [](const std::vector<Poly>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += v[i].str();
        }
        return s + "]";
    };
    std::string out = "vars: ";
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        if (i) out += ", ";
        out += p.vars()[i];
    }
    out += "\nideal: " + list(p.ideal) + "\n";
    out += "D: " + list(p.derivation) + "\n";
    if (p.prime) out += "prime: " + p.prime->str(*p.ring) + "\n";
    return out;
}

}  // namespace dring
