#include "frob/parse.hpp"

#include <cctype>

namespace frob {

namespace {

class Parser {
public:
    Parser(RingPtr ring, const std::string& text)
        : ring_(std::move(ring)), s_(text) {}

    Polynomial run() {
        Polynomial r = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("unexpected trailing input", pos_);
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(uint8_t(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial acc = product();
        if (neg) acc = poly_neg(acc);
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc = poly_add(acc, product());
            else if (eat('-'))
                acc = poly_sub(acc, product());
            else
                break;
        }
        return acc;
    }

    Polynomial product() {
        Polynomial acc = power();
        while (eat('*')) acc = poly_mul(acc, power());
        return acc;
    }

    Polynomial power() {
        Polynomial base = atom();
        if (eat('^')) {
            int64_t e = integer();
            if (e > 100000) throw ParseError("exponent too large", pos_);
            return poly_pow(base, e);
        }
        return base;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(uint8_t(c))) return poly_constant(ring_, integer());
        if (std::isalpha(uint8_t(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name = identifier();
            auto idx = ring_->var_index(name);
            if (!idx)
                throw ParseError("unknown variable '" + name + "'", start);
            return poly_variable(ring_, *idx);
        }
        throw ParseError("expected a term", pos_);
    }

    int64_t integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(uint8_t(s_[pos_])))
            throw ParseError("expected an integer", pos_);
        int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(uint8_t(s_[pos_]))) {
            if (v > (int64_t(1) << 55))
                throw ParseError("integer literal too large", pos_);
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    std::string identifier() {
        std::string name;
        while (pos_ < s_.size() &&
               (std::isalnum(uint8_t(s_[pos_])) || s_[pos_] == '_'))
            name += s_[pos_++];
        return name;
    }

    RingPtr ring_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    return Parser(ring, text).run();
}

std::string to_string(const RingPtr& ring, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring->vars[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

std::string to_string(const Polynomial& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (const Term& t : a.terms()) {
        if (!s.empty()) s += " + ";
        std::string mono = to_string(a.ring(), t.m);
        if (mono.empty()) {
            s += std::to_string(t.c);
        } else if (t.c == 1) {
            s += mono;
        } else {
            s += std::to_string(t.c) + "*" + mono;
        }
    }
    return s;
}

}  // namespace frob
