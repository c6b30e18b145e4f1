#pragma once

#include <string>
#include <string_view>

#include "folia/exterior.hpp"
#include "folia/poly_text.hpp"

namespace folia {

/// A 1-form together with the names of its ambient coordinates.
struct NamedForm {
    VariableNames vars;
    DiffForm form;
};

/// 1-form document: {"vars": ["a0", ...], "coeffs": ["<poly>", ...]}, one
/// coefficient per variable, polynomials in the text grammar. Throws ParseError.
NamedForm parseFormDocument(std::string_view text);
std::string formatFormDocument(const NamedForm& f);

/// Label of a basis k-form, e.g. "d a0^d a2"; "1" for the empty tuple.
std::string basisLabel(const IndexTuple& idx, const VariableNames& vars);

/// One "label: coefficient" line per nonzero term, in index order.
std::string formatFormTerms(const DiffForm& form, const VariableNames& vars);

}  // namespace folia
