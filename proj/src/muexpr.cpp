#include "saw/muexpr.hpp"

#include "saw/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace saw {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw SawError(ErrorCode::BadInput,
                       "bad expression '" + text + "' at offset " + std::to_string(pos) + ": " + what);
    }

    double expression() {
        double v = term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    double term() {
        double v = factor();
        for (;;) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                v /= factor();
            } else {
                return v;
            }
        }
    }

    double factor() {
        skip_ws();
        if (eat('-')) return -factor();
        if (eat('(')) {
            double v = expression();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
            std::string name = text.substr(start, pos - start);
            if (!eat('(')) fail("expected '(' after " + name);
            double arg = expression();
            if (!eat(')')) fail("expected ')'");
            if (name == "sqrt") return std::sqrt(arg);
            if (name == "cbrt") return std::cbrt(arg);
            fail("unknown function " + name);
        }
        skip_ws();
        char* end = nullptr;
        double v = std::strtod(text.c_str() + pos, &end);
        if (end == text.c_str() + pos) fail("expected a number");
        pos = static_cast<std::size_t>(end - text.c_str());
        return v;
    }
};

} // namespace

double evaluate_mu_expression(const std::string& text) {
    Parser p{text};
    double v = p.expression();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

} // namespace saw
