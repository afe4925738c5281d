#include "resurge/op_parser.hpp"

#include <cctype>
#include <sstream>

namespace resurge {

namespace {

struct Scanner {
    std::string s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool accept_word(const std::string& w) {
        skip_ws();
        if (s.compare(pos, w.size(), w) == 0) {
            // must not continue as an identifier
            size_t end = pos + w.size();
            if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
                return false;
            pos = end;
            return true;
        }
        return false;
    }

    // integer with optional sign
    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail(ErrorKind::Parse, "expected an integer at position " + std::to_string(start),
                 static_cast<long>(start));
        return std::stol(s.substr(start, pos - start));
    }

    // unsigned rational "p" or "p/q"
    Rational rational() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start)
            fail(ErrorKind::Parse, "expected a number at position " + std::to_string(start),
                 static_cast<long>(start));
        std::string num = s.substr(start, pos - start);
        if (accept('/')) {
            skip_ws();
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart)
                fail(ErrorKind::Parse, "expected a denominator at position " + std::to_string(dstart),
                     static_cast<long>(dstart));
            return Rational(num + "/" + s.substr(dstart, pos - dstart));
        }
        return Rational(num);
    }
};

} // namespace

ThetaOpQ parse_theta_op(const std::string& text, const std::string& var) {
    Scanner sc{text};
    ThetaOpQ op;
    op.var = var;
    op.c.clear();

    bool any_term = false;
    while (!sc.eof()) {
        // term sign(s)
        Rational sign = 1;
        while (true) {
            if (sc.accept('+')) continue;
            if (sc.accept('-')) {
                sign = -sign;
                continue;
            }
            break;
        }
        if (sc.eof()) fail(ErrorKind::Parse, "dangling sign at end of operator text");

        Rational coeff = sign;
        long x_pow = 0, theta_pow = 0;
        bool saw_factor = false;
        while (true) {
            if (sc.accept_word("theta")) {
                long e = 1;
                if (sc.accept('^')) e = sc.integer();
                if (e < 0)
                    fail(ErrorKind::Parse, "theta exponent must be >= 0");
                theta_pow += e;
                saw_factor = true;
            } else if (sc.accept_word(var)) {
                long e = 1;
                if (sc.accept('^')) e = sc.integer();
                x_pow += e;
                saw_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
                coeff *= sc.rational();
                saw_factor = true;
            } else {
                fail(ErrorKind::Parse,
                     "unexpected character '" + std::string(1, sc.peek()) + "' at position " +
                         std::to_string(sc.pos),
                     static_cast<long>(sc.pos));
            }
            if (sc.accept('*')) continue;
            break;
        }
        if (!saw_factor) fail(ErrorKind::Parse, "empty term in operator text");
        op.add_term(theta_pow, x_pow, coeff);
        any_term = true;

        char c = sc.peek();
        if (c != '+' && c != '-' && c != '\0')
            fail(ErrorKind::Parse,
                 "expected '+' or '-' between terms at position " + std::to_string(sc.pos),
                 static_cast<long>(sc.pos));
    }
    if (!any_term) fail(ErrorKind::Parse, "empty operator text");
    op.normalize();
    return op;
}

std::string format_theta_op(const ThetaOpQ& h) {
    std::ostringstream out;
    bool first = true;
    for (long i = h.order(); i >= 0; --i) {
        for (auto it = h.coeff(i).c.rbegin(); it != h.coeff(i).c.rend(); ++it) {
            const auto& [e, a] = *it;
            Rational mag = abs(a);
            if (!first) out << (a < 0 ? " - " : " + ");
            else if (a < 0) out << "-";
            first = false;
            bool printed = false;
            if (!(mag == 1) || (e == 0 && i == 0)) {
                out << mag.str();
                printed = true;
            }
            if (e != 0) {
                if (printed) out << "*";
                out << h.var;
                if (e != 1) out << "^" << e;
                printed = true;
            }
            if (i > 0) {
                if (printed) out << "*";
                out << "theta";
                if (i > 1) out << "^" << i;
            }
        }
    }
    if (first) out << "0";
    return out.str();
}

} // namespace resurge
