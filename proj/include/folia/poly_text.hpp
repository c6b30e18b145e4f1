#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folia/poly.hpp"

namespace folia {

/// Ordered variable names of a polynomial ring, e.g. a0..a4 or t0,t1.
class VariableNames {
   public:
    VariableNames() = default;
    explicit VariableNames(std::vector<std::string> names);

    /// prefix0 .. prefix{count-1}
    static VariableNames indexed(std::string_view prefix, std::size_t count);
    /// Smallest indexed family covering every variable that occurs in text.
    /// All variables must share one of the prefixes x, a, z, t.
    static VariableNames infer(std::string_view text);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& operator[](std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    /// Index of a name, or -1.
    int find(std::string_view name) const;

    friend bool operator==(const VariableNames&, const VariableNames&) = default;

   private:
    std::vector<std::string> names_;
};

/// Parses the grammar
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*      '/' only by a nonzero constant
///   factor  := primary ['^' integer]
///   primary := integer | variable | '(' expr ')'
/// Implicit multiplication is rejected. Throws ParseError.
MultiPoly parsePoly(std::string_view text, const VariableNames& vars, ScalarDomain domain = {});

/// Canonical text: terms in descending grlex order, `3*a2^2 - 4*a1*a3`.
/// parsePoly(formatPoly(p, v), v) == p.
std::string formatPoly(const MultiPoly& p, const VariableNames& vars);

}  // namespace folia
