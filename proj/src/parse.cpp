#include "commat/parse.hpp"

#include <cctype>
#include <functional>
#include <vector>

namespace commat {

namespace {

struct Factor {
    std::string name;
    long long exponent = 1;
    std::size_t position = 0;
};

struct Term {
    Int coefficient = 1;
    std::vector<Factor> factors;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { skip_ws(); }

    std::size_t pos() const { return pos_; }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
        skip_ws();
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        skip_ws();
        return true;
    }

    Int integer() {
        std::size_t start = pos_;
        std::string digits;
        if (peek() == '-' || peek() == '+') digits += s_[pos_++];
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer", start);
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
        skip_ws();
        return Int(digits);
    }

    bool integer_ahead() const {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        if (c == '-' || c == '+') {
            std::size_t i = pos_ + 1;
            while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
            return i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]));
        }
        return false;
    }

    std::string identifier() {
        std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek())))
            throw ParseError("expected generator", start);
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek()))) name += s_[pos_++];
        skip_ws();
        return name;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::vector<Term> parse_terms(const std::string& expr) {
    Lexer lex(expr);
    std::vector<Term> terms;
    if (lex.at_end()) throw ParseError("empty expression", 0);
    while (true) {
        Term term;
        bool have_factor = false;
        if (lex.integer_ahead()) {
            term.coefficient = lex.integer();
            if (!lex.accept('*')) {
                // bare integer term (multiple of the unit)
                terms.push_back(std::move(term));
                if (lex.at_end()) break;
                lex.expect('+');
                continue;
            }
        }
        while (true) {
            std::size_t pos = lex.pos();
            std::string name = lex.identifier();
            long long exp = 1;
            if (lex.accept('^')) {
                std::size_t epos = lex.pos();
                Int e = lex.integer();
                if (e < 1) throw ParseError("exponent must be positive", epos);
                exp = to_long_checked(e, "exponent");
            }
            term.factors.push_back({std::move(name), exp, pos});
            have_factor = true;
            if (!lex.accept('*')) break;
        }
        if (!have_factor) throw ParseError("expected factor", lex.pos());
        terms.push_back(std::move(term));
        if (lex.at_end()) break;
        lex.expect('+');
    }
    if (!lex.at_end()) throw ParseError("trailing input", lex.pos());
    return terms;
}

// Index suffix of generators like "y5" / "yb12"; nullopt if absent/malformed.
std::optional<long long> index_suffix(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    long long idx = 0;
    for (std::size_t i = prefix.size(); i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        idx = idx * 10 + (name[i] - '0');
        if (idx > 1'000'000) return std::nullopt;
    }
    return idx;
}

template <class Element, class GenFn, class MulFn>
Element assemble(const std::vector<Term>& terms, Element one, GenFn generator, MulFn mul) {
    Element out;
    for (const auto& term : terms) {
        Element value = one;
        for (const auto& f : term.factors) {
            Element g = generator(f);
            for (long long i = 0; i < f.exponent; ++i) value = mul(value, g);
        }
        out += term.coefficient * value;
    }
    return out;
}

}  // namespace

KRElement parse_kr(const std::string& expr) {
    auto gen = [](const Factor& f) -> KRElement {
        if (f.name == "a") return KRElement::gen_a();
        if (f.name == "w") return KRElement::gen_w();
        if (f.name == "U") return KRElement::gen_u_cap();
        if (f.name == "vb") return KRElement::gen_vb();
        throw ParseError("unknown kr generator '" + f.name + "'", f.position);
    };
    return assemble(parse_terms(expr), KRElement::one(), gen, kr_mul);
}

HZElement parse_hz(const std::string& expr) {
    auto gen = [](const Factor& f) -> HZElement {
        if (f.name == "a") return HZElement::gen_a();
        if (f.name == "u") return HZElement::gen_u();
        throw ParseError("unknown hz generator '" + f.name + "'", f.position);
    };
    return assemble(parse_terms(expr), HZElement::one(), gen, hz_mul);
}

KuElement parse_ku(const std::string& expr) {
    auto gen = [](const Factor& f) -> KuElement {
        if (f.name == "v") return KuElement::gen_v();
        if (auto idx = index_suffix(f.name, "y")) return KuElement::gen_y(*idx);
        throw ParseError("unknown ku generator '" + f.name + "'", f.position);
    };
    return assemble(parse_terms(expr), KuElement::one(), gen, ku_mul);
}

BcomElement parse_bcom(const std::string& expr) {
    auto gen = [](const Factor& f) -> BcomElement {
        if (f.name == "a") return BcomElement::from_term(0, KRElement::gen_a());
        if (f.name == "w") return BcomElement::from_term(0, KRElement::gen_w());
        if (f.name == "U") return BcomElement::from_term(0, KRElement::gen_u_cap());
        if (f.name == "vb") return BcomElement::from_term(0, KRElement::gen_vb());
        if (auto idx = index_suffix(f.name, "yb")) return BcomElement::gen_ybar(*idx);
        throw ParseError("unknown bcom generator '" + f.name + "'", f.position);
    };
    return assemble(parse_terms(expr), BcomElement::one(), gen, bcom_mul);
}

}  // namespace commat
