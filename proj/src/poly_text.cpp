#include "folia/poly_text.hpp"

#include <algorithm>
#include <cctype>

#include "folia/error.hpp"

namespace folia {

VariableNames::VariableNames(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty() || !std::isalpha(static_cast<unsigned char>(names_[i][0]))) {
            throw ParseError("bad variable name '" + names_[i] + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[j] == names_[i]) throw ParseError("duplicate variable name '" + names_[i] + "'");
        }
    }
}

VariableNames VariableNames::indexed(std::string_view prefix, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return VariableNames(std::move(names));
}

VariableNames VariableNames::infer(std::string_view text) {
    char prefix = 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isalpha(static_cast<unsigned char>(text[i]))) continue;
        const char c = text[i];
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i + 1 || std::string_view("xazt").find(c) == std::string_view::npos) {
            throw ParseError("unrecognized variable near '" + std::string(text.substr(i, j - i + 1)) + "'");
        }
        if (prefix && prefix != c) throw ParseError("mixed variable families in one polynomial");
        prefix = c;
        count = std::max(count, std::stoul(std::string(text.substr(i + 1, j - i - 1))) + 1);
        i = j - 1;
    }
    if (!prefix) return VariableNames{};
    return indexed(std::string(1, prefix), count);
}

int VariableNames::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

namespace {

class Parser {
   public:
    Parser(std::string_view text, const VariableNames& vars, ScalarDomain domain)
        : text_(text), vars_(vars), domain_(domain) {}

    MultiPoly parse() {
        skipSpace();
        if (pos_ == text_.size()) fail("empty polynomial");
        MultiPoly p = expr();
        skipSpace();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly constant(const Scalar& s) const { return MultiPoly::constant(vars_.size(), s.reduceTo(domain_)); }

    MultiPoly expr() {
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        MultiPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                const MultiPoly d = factor();
                if (!d.isConstant() || d.isZero()) fail("division by a non-constant or zero");
                acc *= d.constantValue().inverse();
            } else {
                skipSpace();
                if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
                    fail("implicit multiplication is not allowed");
                }
                return acc;
            }
        }
    }

    MultiPoly factor() {
        MultiPoly base = primary();
        if (accept('^')) {
            skipSpace();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a non-negative integer");
            base = base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
        }
        return base;
    }

    MultiPoly primary() {
        skipSpace();
        if (pos_ == text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')')) fail("missing ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return constant(Scalar(mpz_class(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const auto name = text_.substr(start, pos_ - start);
            const int idx = vars_.find(name);
            if (idx < 0) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return MultiPoly::variable(vars_.size(), static_cast<std::size_t>(idx), domain_);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const VariableNames& vars_;
    ScalarDomain domain_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parsePoly(std::string_view text, const VariableNames& vars, ScalarDomain domain) {
    return Parser(text, vars, domain).parse();
}

std::string formatPoly(const MultiPoly& p, const VariableNames& vars) {
    if (vars.size() != p.arity()) throw ArityMismatch("variable names do not match polynomial arity");
    if (p.isZero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = p.domain().isRational() && c.sign() < 0;
        const Scalar magnitude = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += magnitude.str();
        } else if (magnitude.isOne()) {
            out += mono;
        } else {
            out += magnitude.str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace folia
