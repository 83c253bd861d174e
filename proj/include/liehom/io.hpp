#pragma once

#include "liehom/catalog.hpp"
#include "liehom/homology.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

namespace liehom {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- algebra files

namespace io_detail {

inline mpq_class parse_coefficient(const json& v, const std::string& where)
{
    if (v.is_number_integer()) return mpq_class(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        // Accept U+2212 as a minus sign.
        for (std::size_t p; (p = s.find("\xE2\x88\x92")) != std::string::npos;) s.replace(p, 3, "-");
        auto slash = s.find('/');
        auto digits = [](const std::string& t, bool sign) {
            std::size_t i = (sign && !t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            return i < t.size() && std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(), ::isdigit);
        };
        bool ok = slash == std::string::npos ? digits(s, true)
                                             : digits(s.substr(0, slash), true) && digits(s.substr(slash + 1), false);
        if (ok) {
            if (s[0] == '+') s.erase(0, 1);
            mpq_class q;
            q.set_str(s, 10);
            if (q.get_den() == 0) throw InputError(where + ": zero denominator in \"" + v.get<std::string>() + "\"");
            q.canonicalize();
            return q;
        }
        throw InputError(where + ": malformed coefficient \"" + v.get<std::string>() + "\"");
    }
    throw InputError(where + ": coefficient must be an integer or a \"num/den\" string");
}

inline json render_coefficient(const mpq_class& q)
{
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

inline std::size_t parse_index(const json& v, const std::string& where)
{
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw InputError(where + ": expected a non-negative integer index");
    return v.get<std::size_t>();
}

inline std::string line_context(const std::string& text, std::size_t byte)
{
    std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size())), '\n'));
    return "line " + std::to_string(line);
}

} // namespace io_detail

/// Parses the JSON algebra-file format:
///   {"kind": "lie"|"assoc", "dim": n, "labels": [...], "field": "Q"|"F<p>",
///    "unital": bool, "unit": [coeff...], "table": [[i, j, [[k, coeff], ...]], ...]}
/// Coefficients are integers or "num/den" strings.
inline AlgebraDocument parse_algebra_document(const std::string& text)
{
    using namespace io_detail;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("algebra file, " + line_context(text, e.byte) + ": " + e.what());
    }
    if (!j.is_object()) throw InputError("algebra file: top level must be an object");
    AlgebraDocument doc;

    if (!j.contains("kind") || !j["kind"].is_string()) throw InputError("field 'kind': missing or not a string");
    auto kind = j["kind"].get<std::string>();
    if (kind == "lie") doc.kind = AlgebraKind::lie;
    else if (kind == "assoc" || kind == "associative") doc.kind = AlgebraKind::associative;
    else throw InputError("field 'kind': expected \"lie\" or \"assoc\", got \"" + kind + "\"");

    if (!j.contains("dim")) throw InputError("field 'dim': missing");
    const std::size_t dim = parse_index(j["dim"], "field 'dim'");

    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw InputError("field 'labels': expected an array of strings");
        for (std::size_t k = 0; k < j["labels"].size(); ++k) {
            if (!j["labels"][k].is_string()) throw InputError("labels[" + std::to_string(k) + "]: expected a string");
            doc.labels.push_back(j["labels"][k].get<std::string>());
        }
        if (doc.labels.size() != dim)
            throw InputError("field 'labels': " + std::to_string(doc.labels.size()) + " labels for dim " + std::to_string(dim));
    } else {
        for (std::size_t k = 0; k < dim; ++k) doc.labels.push_back("b" + std::to_string(k));
    }

    if (j.contains("field")) {
        if (!j["field"].is_string()) throw InputError("field 'field': expected \"Q\" or \"F<p>\"");
        try {
            doc.field = parse_field(j["field"].get<std::string>());
        } catch (const InputError& e) {
            throw InputError(std::string("field 'field': ") + e.what());
        }
    }

    bool unital = j.contains("unit") && !j["unit"].is_null();
    if (j.contains("unital")) {
        if (!j["unital"].is_boolean()) throw InputError("field 'unital': expected a boolean");
        if (j["unital"].get<bool>() != unital)
            throw InputError(unital ? "field 'unital': false but a unit is given" : "field 'unit': unital is true but no unit is given");
    }
    if (unital) {
        if (!j["unit"].is_array()) throw InputError("field 'unit': expected an array of coefficients");
        std::vector<mpq_class> u;
        for (std::size_t k = 0; k < j["unit"].size(); ++k)
            u.push_back(parse_coefficient(j["unit"][k], "unit[" + std::to_string(k) + "]"));
        if (u.size() != dim) throw InputError("field 'unit': " + std::to_string(u.size()) + " coordinates for dim " + std::to_string(dim));
        doc.unit = std::move(u);
    }

    if (j.contains("table")) {
        if (!j["table"].is_array()) throw InputError("field 'table': expected an array of rows");
        for (std::size_t r = 0; r < j["table"].size(); ++r) {
            const auto& row = j["table"][r];
            const std::string where = "table[" + std::to_string(r) + "]";
            if (!row.is_array() || row.size() != 3 || !row[2].is_array())
                throw InputError(where + ": expected [i, j, [[k, coeff], ...]]");
            AlgebraDocument::Entry e;
            e.left = parse_index(row[0], where + "[0]");
            e.right = parse_index(row[1], where + "[1]");
            if (e.left >= dim || e.right >= dim) throw InputError(where + ": index out of range for dim " + std::to_string(dim));
            if (doc.kind == AlgebraKind::lie && e.left >= e.right)
                throw InputError(where + ": lie rows need i < j, got [" + std::to_string(e.left) + ", " + std::to_string(e.right) + "]");
            for (std::size_t t = 0; t < row[2].size(); ++t) {
                const auto& term = row[2][t];
                const std::string tw = where + "[2][" + std::to_string(t) + "]";
                if (!term.is_array() || term.size() != 2) throw InputError(tw + ": expected [k, coeff]");
                std::size_t k = parse_index(term[0], tw + "[0]");
                if (k >= dim) throw InputError(tw + ": index out of range for dim " + std::to_string(dim));
                e.terms.emplace_back(k, parse_coefficient(term[1], tw + "[1]"));
            }
            doc.table.push_back(std::move(e));
        }
    }
    return doc;
}

inline json render_algebra_document(const AlgebraDocument& doc)
{
    using namespace io_detail;
    json j;
    j["kind"] = doc.kind == AlgebraKind::lie ? "lie" : "assoc";
    j["dim"] = doc.dim();
    j["labels"] = doc.labels;
    if (doc.field) j["field"] = field_name(*doc.field);
    j["unital"] = doc.unit.has_value();
    if (doc.unit) {
        json u = json::array();
        for (const auto& c : *doc.unit) u.push_back(render_coefficient(c));
        j["unit"] = u;
    }
    json table = json::array();
    for (const auto& e : doc.table) {
        json terms = json::array();
        for (const auto& [k, c] : e.terms) terms.push_back(json::array({k, render_coefficient(c)}));
        table.push_back(json::array({e.left, e.right, terms}));
    }
    j["table"] = table;
    return j;
}

template <Field F>
std::string render_algebra(const BasedAlgebra<F>& alg)
{
    return render_algebra_document(to_document(alg)).dump(2);
}

/// "catalog:<name>" or a path to a JSON algebra file. `expected` restricts the kind.
inline AlgebraDocument load_algebra_document(const std::string& source, std::optional<AlgebraKind> expected)
{
    const std::string prefix = "catalog:";
    AlgebraDocument doc;
    if (source.rfind(prefix, 0) == 0) {
        const std::string name = source.substr(prefix.size());
        if (expected == AlgebraKind::lie) doc = lie_catalog_document(name);
        else if (expected == AlgebraKind::associative) doc = assoc_catalog_document(name);
        else {
            try {
                doc = lie_catalog_document(name);
            } catch (const InputError&) {
                doc = assoc_catalog_document(name);
            }
        }
        return doc;
    }
    std::ifstream in(source);
    if (!in) throw InputError("cannot open algebra file '" + source + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        doc = parse_algebra_document(ss.str());
    } catch (const InputError& e) {
        throw InputError(source + ": " + e.what());
    }
    if (expected && doc.kind != *expected)
        throw InputError(source + ": expected a " + to_string(*expected) + " algebra, file has kind " + to_string(doc.kind));
    return doc;
}

/// Field precedence: explicit override, then the document's own field, then Q.
inline FieldSpec resolve_field(const AlgebraDocument& doc, const std::optional<FieldSpec>& override_field)
{
    if (override_field) return *override_field;
    if (doc.field) return *doc.field;
    return Rationals{};
}

// ---------------------------------------------------------------- reports

inline json report_to_json(const VerificationReport& r)
{
    json j;
    j["theorem"] = r.theorem;
    j["instance"] = r.instance;
    j["field"] = r.field;
    j["lhs"] = {{"label", r.lhs_label}, {"dimension", r.lhs}};
    json rhs = json::array();
    for (const auto& c : r.rhs) {
        json cj{{"label", c.label}, {"dimension", c.dimension}};
        if (!c.factors.empty()) cj["factors"] = c.factors;
        rhs.push_back(cj);
    }
    j["rhs"] = rhs;
    j["rhs_total"] = r.rhs_total();
    if (!r.checks.empty()) {
        json checks = json::array();
        for (const auto& c : r.checks) checks.push_back({{"label", c.label}, {"ok", c.ok}});
        j["checks"] = checks;
    }
    j["pass"] = r.pass;
    if (!r.notes.empty()) j["notes"] = r.notes;
    j["seconds"] = std::round(r.seconds * 1000.0) / 1000.0;
    if (!r.subreports.empty()) {
        json subs = json::array();
        for (const auto& s : r.subreports) subs.push_back(report_to_json(s));
        j["subreports"] = subs;
    }
    return j;
}

inline void render_report_table(std::ostream& os, const VerificationReport& r, int indent = 0)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    os << pad << r.theorem;
    if (!r.instance.empty()) os << "  " << r.instance;
    os << "  [" << r.field << "]  " << (r.pass ? "PASS" : "FAIL") << "  (" << std::fixed << std::setprecision(3)
       << r.seconds << "s)\n";
    os << pad << "  lhs  " << r.lhs_label << " = " << r.lhs << "\n";
    bool first = true;
    for (const auto& c : r.rhs) {
        os << pad << (first ? "  rhs  " : "       ") << c.label << " = " << c.dimension;
        if (c.factors.size() == 2) os << " (" << c.factors[0] << "·" << c.factors[1] << ")";
        os << "\n";
        first = false;
    }
    os << pad << "       total = " << r.rhs_total() << "\n";
    for (const auto& c : r.checks) os << pad << "  check " << (c.ok ? "ok  " : "FAIL") << " " << c.label << "\n";
    for (const auto& n : r.notes) os << pad << "  note " << n << "\n";
    for (const auto& s : r.subreports) render_report_table(os, s, indent + 2);
}

/// Human-readable form of a basis vector, e.g. "e∧z - 1/2*f∧z".
template <Field F>
std::string render_multilinear(const F& field, const MultilinearBasis& basis, const std::vector<std::string>& labels,
                               const SparseVector<F>& v)
{
    if (v.is_zero()) return "0";
    const char* op = basis.kind() == MultilinearKind::sym2 ? "∨" : "∧";
    std::string out;
    for (const auto& [k, c] : v.entries()) {
        const auto& t = basis.tuple(k);
        std::string coeff = field.to_string(c);
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        if (coeff != "1") out += coeff + "*";
        out += labels[t[0]] + op + labels[t[1]];
        if (basis.arity() == 3) out += op + labels[t[2]];
    }
    return out;
}

} // namespace liehom
