#include "folia/form_io.hpp"

#include <json.hpp>

#include "folia/error.hpp"

namespace folia {

NamedForm parseFormDocument(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("form document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vars") || !doc.contains("coeffs")) {
        throw ParseError("form document needs fields 'vars' and 'coeffs'");
    }
    std::vector<std::string> names;
    std::vector<std::string> coeffText;
    try {
        names = doc.at("vars").get<std::vector<std::string>>();
        coeffText = doc.at("coeffs").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError("'vars' and 'coeffs' must be arrays of strings");
    }
    if (names.size() != coeffText.size()) {
        throw ParseError("form document has " + std::to_string(names.size()) + " variables but " +
                         std::to_string(coeffText.size()) + " coefficients");
    }
    if (names.empty()) throw ParseError("form document has no variables");
    VariableNames vars(std::move(names));
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(coeffText.size());
    for (const auto& t : coeffText) coeffs.push_back(parsePoly(t, vars));
    return {std::move(vars), DiffForm::oneForm(coeffs)};
}

std::string formatFormDocument(const NamedForm& f) {
    nlohmann::ordered_json doc;
    doc["vars"] = f.vars.names();
    std::vector<std::string> coeffs;
    for (const auto& c : f.form.oneFormCoefficients()) coeffs.push_back(formatPoly(c, f.vars));
    doc["coeffs"] = coeffs;
    return doc.dump(2) + "\n";
}

std::string basisLabel(const IndexTuple& idx, const VariableNames& vars) {
    if (idx.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += "^";
        out += "d " + vars[idx[i]];
    }
    return out;
}

std::string formatFormTerms(const DiffForm& form, const VariableNames& vars) {
    if (form.isZero()) return "0\n";
    std::string out;
    for (const auto& [idx, f] : form.terms()) out += basisLabel(idx, vars) + ": " + formatPoly(f, vars) + "\n";
    return out;
}

}  // namespace folia
