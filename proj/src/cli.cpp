#include "folia/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "folia/binary.hpp"
#include "folia/components.hpp"
#include "folia/error.hpp"
#include "folia/exceptional.hpp"
#include "folia/form_io.hpp"
#include "folia/varietyprobe.hpp"

namespace folia {

// ---------------------------------------------------------------------------
// CommandReport

void CommandReport::add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }

void CommandReport::verdict(std::string key, bool ok) {
    add(std::move(key), ok ? "pass" : "fail");
    if (!ok && exitCode == kExitOk) exitCode = kExitCertification;
}

const std::string* CommandReport::find(const std::string& key) const {
    for (const auto& [k, v] : fields) {
        if (k == key) return &v;
    }
    return nullptr;
}

std::string CommandReport::text() const {
    if (!preformatted.empty()) return preformatted;
    std::string out;
    for (const auto& [k, v] : fields) {
        if (v.find('\n') == std::string::npos) {
            out += k + ": " + v + "\n";
            continue;
        }
        out += k + ":\n";
        std::istringstream lines(v);
        for (std::string line; std::getline(lines, line);) out += "  " + line + "\n";
    }
    return out;
}

std::string CommandReport::jsonText() const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    nlohmann::ordered_json f = nlohmann::ordered_json::object();
    for (const auto& [k, v] : fields) f[k] = v;
    doc["fields"] = f;
    doc["exitCode"] = exitCode;
    return doc.dump(2) + "\n";
}

namespace {

// ---------------------------------------------------------------------------
// Input helpers

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Scalar parseScalar(const std::string& raw, ScalarDomain d) {
    const std::string s = trim(raw);
    mpq_class q;
    if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos || q.set_str(s, 10) != 0) {
        throw ParseError("not a rational number: '" + raw + "'");
    }
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + raw + "'");
    q.canonicalize();
    return Scalar(q).reduceTo(d);
}

std::vector<Scalar> parseScalarList(const std::string& text, ScalarDomain d) {
    std::vector<Scalar> out;
    for (const auto& item : split(text, ',')) out.push_back(parseScalar(item, d));
    if (out.empty()) throw ParseError("empty number list");
    return out;
}

ScalarDomain domainFor(std::uint64_t prime) {
    if (prime == 0) return ScalarDomain::rationals();
    try {
        return ScalarDomain::prime(prime);
    } catch (const Error& e) {
        throw PreconditionError(e.what());
    }
}

std::string join(const std::vector<Scalar>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
    return out;
}

std::string trimNewline(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

// Variables for polynomial inputs: the inferred family, widened to `arity`.
VariableNames namesFor(const std::string& text, std::size_t arity) {
    const VariableNames inferred = VariableNames::infer(text);
    if (arity == 0) return inferred;
    if (arity < inferred.size()) throw PreconditionError("--arity is smaller than the variables in use");
    if (inferred.size() == 0) return VariableNames::indexed("x", arity);
    const std::string& first = inferred[0];
    return VariableNames::indexed(first.substr(0, first.find_first_of("0123456789")), arity);
}

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeForm(const std::string& path, const NamedForm& f) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write " + path);
    out << formatFormDocument(f) << "\n";
}

void addResidues(CommandReport& r, const DiffForm& omega, const VariableNames& vars) {
    const DescentCheck descent = descendsCheck(omega);
    const IntegrabilityCheck frob = integrabilityCheck(omega);
    r.verdict("descends", descent.ok);
    if (!descent.ok) r.add("descentResidual", formatPoly(descent.residual, vars));
    r.verdict("integrable", frob.ok);
    if (!frob.ok) {
        const auto& [idx, f] = *frob.residual.terms().begin();
        r.add("integrabilityResidual", basisLabel(idx, vars) + ": " + formatPoly(f, vars));
    }
}

void addForm(CommandReport& r, const std::string& key, const DiffForm& omega, const VariableNames& vars) {
    r.add(key, trimNewline(formatFormTerms(omega, vars)));
    const auto deg = omega.coefficientDegree();
    r.add(key + "CoefficientDegree", deg ? std::to_string(*deg) : "mixed");
}

// ---------------------------------------------------------------------------
// Sub-commands

void binaryReport(CommandReport& r, const std::string& coeffs, std::uint64_t prime, bool full) {
    const BinaryForm f(parseScalarList(coeffs, domainFor(prime)));
    r.add("field", to_string(f.domain()));
    r.add("coefficients", join(f.coefficients()));
    const RootPattern pattern = rootPattern(f);
    if (full) {
        if (f.degree() != 4) throw PreconditionError("invariants are defined for quartics (five coefficients)");
        r.add("apolar", join(f.apolarCoordinates()));
        const InvariantTriple t = invariantsQCD(f);
        r.add("Q", t.q.str());
        r.add("C", t.c.str());
        r.add("D", t.discriminant().str());
        r.add("jRaw", jInvariant(f, JNormalization::Raw).str());
        r.add("jClassical", jInvariant(f, JNormalization::Classical).str());
        const Scalar oracle = discriminantOracle(f);
        r.add("resultant", oracle.str());
        r.verdict("resultantMatchesD", oracle == discriminantOracleConstant().reduceTo(f.domain()) * t.discriminant());
    }
    r.add("pattern", to_string(pattern));
    if (pattern.orbitClass) r.add("class", to_string(*pattern.orbitClass));
}

void buildReport(CommandReport& r, const DiffForm& omega, const VariableNames& vars, const std::string& out) {
    addForm(r, "form", omega, vars);
    addResidues(r, omega, vars);
    if (!out.empty()) {
        writeForm(out, {vars, omega});
        r.add("written", out);
    }
}

void addSet(CommandReport& r, const std::string& key, const PointSet& s) {
    r.add(key + "Count", std::to_string(s.size()));
}

void addWitnesses(CommandReport& r, const std::string& key, const PointSet& s) {
    if (s.size() == 0) return;
    std::string pts;
    for (const auto& p : s.points()) pts += to_string(p) + "\n";
    r.add(key, trimNewline(pts));
}

void compareReport(CommandReport& r, const std::string& a, const PointSet& sa, const std::string& b,
                   const PointSet& sb) {
    addSet(r, a, sa);
    addSet(r, b, sb);
    const SetComparison cmp = compareSets(sa, sb);
    r.verdict(a + "Equals" + b, cmp.equal);
    addWitnesses(r, "only" + a, cmp.onlyA);
    addWitnesses(r, "only" + b, cmp.onlyB);
}

std::vector<MultiPoly> withPartials(const MultiPoly& f) {
    std::vector<MultiPoly> out{f};
    for (std::size_t i = 0; i < f.arity(); ++i) out.push_back(partialDerivative(f, i));
    return out;
}

void probeReport(CommandReport& r, std::uint64_t p, const std::string& target) {
    r.add("prime", std::to_string(p));
    r.add("target", target);
    const auto inv = quarticInvariants();
    if (target == "sing-omega4") {
        const PointSet zeros = zeroLocus(buildOmega4().coefficients(), 4, p);
        const PointSet strata = stratumPoints(Stratum::TBAR, p).unite(stratumPoints(Stratum::NBAR, p));
        compareReport(r, "ZeroLocus", zeros, "TbarUnionNbar", strata);
        r.verdict("countIs2p2Plus2pPlus1", zeros.size() == 2 * p * p + 2 * p + 1);
    } else if (target == "sing-omega-bar") {
        const PointSet zeros = zeroLocus(deriveOmegaBar().omegaBar.coefficients(), 3, p);
        const PointSet strata = stratumPoints(Stratum::P1P, p)
                                    .unite(stratumPoints(Stratum::X2, p))
                                    .unite(stratumPoints(Stratum::X3, p));
        compareReport(r, "ZeroLocus", zeros, "P1pUnionX2UnionX3", strata);
        r.verdict("countIs3pPlus1", zeros.size() == 3 * p + 1);
        r.add("printedFormZeroLocusCount", std::to_string(zeroLocus(paperOmegaBar().coefficients(), 3, p).size()));
    } else if (target == "sing-d-omega-bar") {
        const PointSet zeros = zeroLocus(exteriorDerivative(paperOmegaBar()).coefficients(), 3, p);
        addSet(r, "ZeroLocus", zeros);
        addWitnesses(r, "points", zeros);
        r.verdict("singlePoint", zeros.size() == 1);
        r.add("derivedFormZeroLocusCount",
              std::to_string(zeroLocus(exteriorDerivative(deriveOmegaBar().omegaBar).coefficients(), 3, p).size()));
    } else if (target == "base-locus") {
        const std::vector<MultiPoly> qc{inv.q, inv.c};
        const PointSet zeros = zeroLocus(qc, 4, p);
        compareReport(r, "ZeroLocus", zeros, "Tbar", stratumPoints(Stratum::TBAR, p));
        r.verdict("countIsPPlus1Squared", zeros.size() == (p + 1) * (p + 1));
    } else if (target == "delta-sing") {
        const PointSet zeros = zeroLocus(withPartials(inv.d), 4, p);
        const PointSet tbar = stratumPoints(Stratum::TBAR, p);
        const PointSet nbar = stratumPoints(Stratum::NBAR, p);
        compareReport(r, "ZeroLocus", zeros, "TbarUnionNbar", tbar.unite(nbar));
        compareReport(r, "TbarMeetNbar", tbar.intersect(nbar), "X4", stratumPoints(Stratum::X4, p));
    } else {
        throw ParseError("unknown probe target '" + target + "'");
    }
    r.add("scope", "point sets over F_p; multiplicity structure not examined");
}

void tangentReport(CommandReport& r, const DiffForm& omega, bool expectThirteen) {
    const TangentReport t = tangentSystemDim(omega);
    r.add("ambientDim", std::to_string(t.ambientDim));
    r.add("rawKernelDim", std::to_string(t.rawKernelDim));
    r.add("projectiveDim", std::to_string(t.projectiveDim));
    r.verdict("containsOmegaBar", t.containsOmegaBar);
    if (expectThirteen) r.verdict("projectiveDimIs13", t.projectiveDim == 13);
}

std::string fieldText(const PolyVectorField& v, const VariableNames& vars) {
    std::string out;
    for (std::size_t i = 0; i < v.arity(); ++i) {
        if (v[i].isZero()) continue;
        out += "d/d" + vars[i] + ": " + formatPoly(v[i], vars) + "\n";
    }
    return out.empty() ? "0" : trimNewline(out);
}

// Maps a library exception to the report.
template <class F>
void guarded(CommandReport& r, F&& body) {
    try {
        body();
    } catch (const ParseError& e) {
        r.add("error", e.what());
        r.exitCode = kExitParse;
    } catch (const CertificationError& e) {
        r.add("error", e.what());
        r.exitCode = kExitCertification;
    } catch (const Error& e) {
        r.add("error", e.what());
        r.exitCode = kExitPrecondition;
    }
}

}  // namespace

CommandReport runCommand(const std::vector<std::string>& args) {
    CommandReport report;
    CLI::App app{"Integrable 1-forms on P(4): constructors, invariants, the exceptional pipeline and F_p probes",
                 "folia"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", report.json, "Emit the report as JSON");

    std::string coeffs;
    std::uint64_t prime = 0;
    auto* invariants = app.add_subcommand("invariants", "Q, C, D, j and the root pattern of a binary quartic");
    invariants->add_option("coefficients", coeffs, "Plain coefficients a0,...,a4 of sum a_i t0^(4-i) t1^i")->required();
    invariants->add_option("--prime", prime, "Work over F_p instead of Q");
    auto* classify = app.add_subcommand("classify", "Root multiplicity pattern of a binary form");
    classify->add_option("coefficients", coeffs, "Plain coefficients")->required();
    classify->add_option("--prime", prime, "Work over F_p instead of Q");

    unsigned degree = 0;
    std::string point;
    auto* veroneseCmd = app.add_subcommand("veronese", "Coefficients of (x0 t0 + x1 t1)^r");
    veroneseCmd->add_option("--degree", degree, "r")->required();
    veroneseCmd->add_option("--point", point, "x0,x1")->required();
    veroneseCmd->add_option("--prime", prime, "Work over F_p instead of Q");

    std::string f1;
    std::string f2;
    std::vector<std::string> factors;
    std::string weights;
    std::string matrix;
    std::string eta;
    std::string out;
    std::size_t arity = 0;
    auto* build = app.add_subcommand("build", "Forms of the rational, logarithmic and pullback families");
    build->require_subcommand(1);
    auto* rational = build->add_subcommand("rational", "p1 F2 dF1 - p2 F1 dF2");
    rational->add_option("--f1", f1, "F1")->required();
    rational->add_option("--f2", f2, "F2")->required();
    rational->add_option("--arity", arity, "Number of variables (default: inferred)");
    rational->add_option("--out", out, "Write the form document here");
    auto* logarithmic = build->add_subcommand("log", "sum lambda_i (prod_{j!=i} F_j) dF_i");
    logarithmic->add_option("--factor", factors, "F_i, repeat per factor")->required();
    logarithmic->add_option("--weights", weights, "lambda_1,...,lambda_s")->required();
    logarithmic->add_option("--arity", arity, "Number of variables (default: inferred)");
    logarithmic->add_option("--out", out, "Write the form document here");
    auto* pullbackCmd = build->add_subcommand("pullback", "pi^* eta for a rank-3 linear map");
    pullbackCmd->add_option("--matrix", matrix, "Rows separated by ';', entries by ','")->required();
    pullbackCmd->add_option("--eta", eta, "Coefficients of eta in x0,x1,x2, separated by ';'")->required();
    pullbackCmd->add_option("--out", out, "Write the form document here");

    std::string formPath;
    auto* check = app.add_subcommand("check", "Descent and integrability of a form document");
    check->add_option("--form", formPath, "Form document")->required()->check(CLI::ExistingFile);

    auto* exceptional = app.add_subcommand("exceptional", "The degree-two exceptional foliation");
    exceptional->require_subcommand(1);
    auto* derive = exceptional->add_subcommand("derive", "omega4 -> osculating hyperplane -> saturation");
    derive->add_option("--out", out, "Write omegaBar here");
    auto* paperForm = exceptional->add_subcommand("paper-form", "The printed omegaBar on P^3");
    paperForm->add_option("--out", out, "Write the form document here");
    std::size_t fieldArity = 4;
    auto* fields = exceptional->add_subcommand("fields", "Affine fields X, Y, R and i_X i_Y i_R Omega");
    fields->add_option("--arity", fieldArity, "Number of coordinates")->capture_default_str();
    auto* tangent = exceptional->add_subcommand("tangent-dim", "Dimension of the first-order deformations");
    tangent->add_option("--form", formPath, "Form document (default: the printed omegaBar)")->check(CLI::ExistingFile);
    auto* tangency = exceptional->add_subcommand("double-tangency", "D restricted to the osculating hyperplane");

    std::string target;
    auto* probe = app.add_subcommand("probe", "Finite-field point-set certificates");
    probe->add_option("--prime", prime, "Prime p >= 5")->required();
    probe->add_option("--target", target, "What to certify")
        ->required()
        ->check(CLI::IsMember({"sing-omega4", "sing-omega-bar", "sing-d-omega-bar", "base-locus", "delta-sing"}));

    std::uint64_t seed = 1;
    std::size_t count = 20;
    auto* properties = app.add_subcommand("properties", "Randomized constructor property suite");
    properties->add_option("--seed", seed, "Seed of the random instances")->capture_default_str();
    properties->add_option("--count", count, "Instances per constructor")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        report.command = "help";
        const CLI::App* target_app = &app;
        for (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front(); sub;
             sub = sub->get_subcommands().empty() ? nullptr : sub->get_subcommands().front()) {
            target_app = sub;
        }
        report.preformatted = target_app->help();
        return report;
    } catch (const CLI::ParseError& e) {
        report.command = "parse";
        report.add("error", e.what());
        report.exitCode = kExitParse;
        return report;
    }

    auto commandName = [&] {
        std::string name;
        for (const CLI::App* a = &app; !a->get_subcommands().empty();) {
            a = a->get_subcommands().front();
            name += (name.empty() ? "" : " ") + a->get_name();
        }
        return name;
    };
    report.command = commandName();
    report.add("command", report.command);

    guarded(report, [&] {
        if (invariants->parsed()) {
            binaryReport(report, coeffs, prime, true);
        } else if (classify->parsed()) {
            binaryReport(report, coeffs, prime, false);
        } else if (veroneseCmd->parsed()) {
            const auto xy = parseScalarList(point, domainFor(prime));
            if (xy.size() != 2) throw ParseError("--point needs two coordinates");
            const BinaryForm v = veronese(degree, {xy[0], xy[1]});
            report.add("point", "[" + xy[0].str() + ":" + xy[1].str() + "]");
            report.add("coefficients", join(v.coefficients()));
            report.add("apolar", join(v.apolarCoordinates()));
            report.add("pattern", to_string(rootPattern(v)));
        } else if (rational->parsed()) {
            const VariableNames vars = namesFor(f1 + " " + f2, arity);
            report.add("F1", f1);
            report.add("F2", f2);
            buildReport(report, buildRational(parsePoly(f1, vars), parsePoly(f2, vars)), vars, out);
        } else if (logarithmic->parsed()) {
            std::string all;
            for (const auto& f : factors) all += f + " ";
            const VariableNames vars = namesFor(all, arity);
            std::vector<MultiPoly> fs;
            for (const auto& f : factors) fs.push_back(parsePoly(f, vars));
            const auto lambda = parseScalarList(weights, ScalarDomain::rationals());
            report.add("weights", join(lambda));
            buildReport(report, buildLogarithmic(fs, lambda), vars, out);
        } else if (pullbackCmd->parsed()) {
            const auto rows = split(matrix, ';');
            if (rows.size() != 3) throw ParseError("--matrix needs three rows");
            std::vector<std::vector<Scalar>> entries;
            for (const auto& row : rows) entries.push_back(parseScalarList(row, ScalarDomain::rationals()));
            ScalarMatrix pi(3, entries[0].size());
            for (std::size_t i = 0; i < 3; ++i) {
                if (entries[i].size() != pi.cols()) throw ParseError("ragged --matrix");
                for (std::size_t j = 0; j < pi.cols(); ++j) pi(i, j) = entries[i][j];
            }
            const VariableNames small = VariableNames::indexed("x", 3);
            std::vector<MultiPoly> etaCoeffs;
            for (const auto& c : split(eta, ';')) etaCoeffs.push_back(parsePoly(c, small));
            if (etaCoeffs.size() != 3) throw ParseError("--eta needs three coefficients");
            buildReport(report, buildLinearPullback(pi, DiffForm::oneForm(etaCoeffs)),
                        VariableNames::indexed("x", pi.cols()), out);
        } else if (check->parsed()) {
            const NamedForm f = parseFormDocument(readFile(formPath));
            report.add("form", formPath);
            const auto deg = f.form.coefficientDegree();
            report.add("coefficientDegree", deg ? std::to_string(*deg) : "mixed");
            if (!deg && !f.form.isZero()) throw PreconditionError("coefficients are not homogeneous of one degree");
            addResidues(report, f.form, f.vars);
        } else if (derive->parsed()) {
            const ExceptionalReport e = deriveOmegaBar();
            const auto a5 = VariableNames::indexed("a", 5);
            const auto a4 = VariableNames::indexed("a", 4);
            report.add("omega4CoefficientDegree", std::to_string(e.omega4.coefficientDegree().value_or(-1)));
            report.verdict("omega4Descends", e.omega4Descends);
            report.verdict("omega4Integrable", e.omega4Integrable);
            report.add("hyperplane", "a4 = 0 (osculating at [1:0])");
            report.add("factor", formatPoly(e.factor, a4));
            report.verdict("factorIsOsculatingPlane", e.factorIsFlagPlane);
            addForm(report, "omegaBar", e.omegaBar, a4);
            report.verdict("omegaBarDescends", e.omegaBarDescends);
            report.verdict("omegaBarIntegrable", e.omegaBarIntegrable);
            if (!out.empty()) {
                writeForm(out, {a4, e.omegaBar});
                report.add("written", out);
            }
        } else if (paperForm->parsed()) {
            const DiffForm w = paperOmegaBar();
            const auto x = VariableNames::indexed("x", 4);
            addForm(report, "omegaBar", w, x);
            addResidues(report, w, x);
            report.verdict("saturated", coefficientGcd(w.coefficients()).isConstant());
            if (!out.empty()) {
                writeForm(out, {x, w});
                report.add("written", out);
            }
        } else if (fields->parsed()) {
            const AffineFields f = affineFields(fieldArity);
            const auto z = VariableNames::indexed("z", fieldArity);
            report.add("X", fieldText(f.x, z));
            report.add("Y", fieldText(f.y, z));
            report.add("R", fieldText(f.r, z));
            report.verdict("bracketXYIsMinusY", lieBracket(f.x, f.y) == -f.y);
            report.verdict("bracketXRIsZero", lieBracket(f.x, f.r) == PolyVectorField(std::vector<MultiPoly>(fieldArity, MultiPoly(fieldArity))));
            if (fieldArity >= 3) {
                const DiffForm w = contractVolume(f.x, f.y);
                addForm(report, "contraction", w, z);
                addResidues(report, w, z);
                const bool killed = interiorProduct(f.x, w).isZero() && interiorProduct(f.y, w).isZero() &&
                                    interiorProduct(f.r, w).isZero();
                report.verdict("annihilatedByXYR", killed);
            }
        } else if (tangent->parsed()) {
            if (formPath.empty()) {
                report.add("form", "printed omegaBar");
                tangentReport(report, paperOmegaBar(), true);
            } else {
                report.add("form", formPath);
                tangentReport(report, parseFormDocument(readFile(formPath)).form, false);
            }
        } else if (tangency->parsed()) {
            const DoubleTangency t = checkDoubleTangency();
            report.add("identity", "D(a0,a1,a2,a3,0) = c * a3^2 * Disc(a0, 4*a1, 6*a2, 4*a3)");
            report.add("constant", t.constant.str());
            report.verdict("identityHolds", t.identityHolds);
            report.verdict("a3CubeDoesNotDivide", !t.cubeDivides);
        } else if (probe->parsed()) {
            probeReport(report, prime, target);
        } else if (properties->parsed()) {
            const PropertyTally t = constructorPropertySuite(seed, count);
            report.add("seed", std::to_string(seed));
            report.add("instances", std::to_string(t.instances));
            report.add("rationalPassed", std::to_string(t.rational));
            report.add("logarithmicPassed", std::to_string(t.logarithmic));
            report.add("pullbackPassed", std::to_string(t.pullback));
            report.verdict("allPassed", t.allPassed());
        }
    });
    return report;
}

}  // namespace folia
