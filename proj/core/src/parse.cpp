#include "ogfiber/parse.hpp"

#include <cctype>

namespace ogfiber {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool eof() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    char get() { skip_ws(); return s[i++]; }

    std::string read_int() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
            throw ParseError("expected integer", i);
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        return s.substr(start, i - start);
    }

    std::string read_name() {
        skip_ws();
        std::size_t start = i;
        if (i >= s.size() || !(std::isalpha((unsigned char)s[i])))
            throw ParseError("expected variable name", i);
        ++i;
        while (i < s.size() &&
               (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        return s.substr(start, i - start);
    }
};

} // namespace

Polynomial parse_poly(const std::string& text, const RegistryPtr& reg) {
    Lexer lx{text};
    auto acc = make_term_map();

    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", lx.i);
        }
        first = false;

        Rational coeff(sign);
        std::vector<int> exps(reg->size(), 0);
        bool any_factor = false;

        c = lx.peek();
        if (std::isdigit((unsigned char)c)) {
            std::string num = lx.read_int();
            std::string den = "1";
            if (lx.peek() == '/') {
                lx.get();
                den = lx.read_int();
            }
            coeff *= Rational(num + "/" + den);
            any_factor = true;
            if (lx.peek() == '*') {
                lx.get();
                any_factor = false; // factors follow
            } else if (std::isalpha((unsigned char)lx.peek())) {
                throw ParseError("expected '*' between coefficient and variable", lx.i);
            }
        }

        while (!any_factor || std::isalpha((unsigned char)lx.peek())) {
            if (!std::isalpha((unsigned char)lx.peek())) {
                if (!any_factor) throw ParseError("expected factor", lx.i);
                break;
            }
            std::size_t name_pos = lx.i;
            std::string name = lx.read_name();
            if (!reg->contains(name))
                throw ParseError("unknown variable '" + name + "'", name_pos);
            int e = 1;
            if (lx.peek() == '^') {
                lx.get();
                std::string es = lx.read_int();
                if (es[0] == '-') throw ParseError("negative exponent", lx.i);
                e = std::stoi(es);
            }
            exps[reg->index(name)] += e;
            any_factor = true;
            if (lx.peek() == '*') {
                lx.get();
                any_factor = false; // require another factor
                continue;
            }
            break;
        }

        add_into(acc, Monomial(std::move(exps)), coeff);
    }
    return term_map_to_poly(reg, std::move(acc));
}

} // namespace ogfiber
