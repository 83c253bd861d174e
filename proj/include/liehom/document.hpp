#pragma once

#include "liehom/algebra.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace liehom {

/// Field-independent description of an algebra with exact rational structure
/// constants. Catalog entries and algebra files both go through this type.
struct AlgebraDocument {
    struct Entry {
        std::size_t left = 0;
        std::size_t right = 0;
        std::vector<std::pair<std::size_t, mpq_class>> terms;
    };

    AlgebraKind kind = AlgebraKind::lie;
    std::vector<std::string> labels;
    std::optional<FieldSpec> field;
    std::vector<Entry> table;
    std::optional<std::vector<mpq_class>> unit;

    std::size_t dim() const { return labels.size(); }
};

/// Reduces the document's coefficients into `field`. For a unital associative
/// document whose unit is a basis vector e_u, products involving e_u that the
/// table omits are taken to be e_u·x = x·e_u = x.
template <Field F>
BasedAlgebra<F> instantiate(const AlgebraDocument& doc, const F& field)
{
    const std::size_t n = doc.dim();
    auto to_vector = [&](const std::vector<std::pair<std::size_t, mpq_class>>& terms) {
        Accumulator<F> acc(field, n);
        for (const auto& [k, c] : terms) {
            if (k >= n) throw InputError("coefficient index " + std::to_string(k) + " out of range");
            acc.add(k, field.from_rational(c));
        }
        return acc.take();
    };
    std::vector<TableEntry<F>> entries;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : doc.table) {
        if (e.left >= n || e.right >= n)
            throw InputError("table row [" + std::to_string(e.left) + ", " + std::to_string(e.right) + "] out of range");
        if (doc.kind == AlgebraKind::lie && e.left >= e.right)
            throw InputError("lie table row [" + std::to_string(e.left) + ", " + std::to_string(e.right) +
                             "] must have i < j");
        if (!seen.insert({e.left, e.right}).second)
            throw InputError("duplicate table row [" + std::to_string(e.left) + ", " + std::to_string(e.right) + "]");
        entries.push_back({e.left, e.right, to_vector(e.terms)});
    }
    if (doc.kind == AlgebraKind::lie) {
        if (doc.unit) throw InputError("lie algebras do not carry a unit");
        return BasedAlgebra<F>::lie(field, doc.labels, entries);
    }
    std::optional<SparseVector<F>> unit;
    if (doc.unit) {
        if (doc.unit->size() != n) throw InputError("unit has " + std::to_string(doc.unit->size()) + " coordinates, dim is " + std::to_string(n));
        std::vector<std::pair<std::size_t, mpq_class>> terms;
        for (std::size_t k = 0; k < n; ++k)
            if (sgn((*doc.unit)[k]) != 0) terms.emplace_back(k, (*doc.unit)[k]);
        unit = to_vector(terms);
        if (unit->nnz() == 1 && field.equal(unit->leading_value(), field.one())) {
            const std::size_t u = unit->leading();
            for (std::size_t x = 0; x < n; ++x) {
                if (!seen.count({u, x})) entries.push_back({u, x, SparseVector<F>::unit(field, x)});
                if (x != u && !seen.count({x, u})) entries.push_back({x, u, SparseVector<F>::unit(field, x)});
                seen.insert({u, x});
                seen.insert({x, u});
            }
        }
    }
    return BasedAlgebra<F>::associative(field, doc.labels, entries, std::move(unit));
}

/// Document listing every nonzero product (lie: i < j only), coefficients
/// lifted through the field's canonical rational representative.
template <Field F>
AlgebraDocument to_document(const BasedAlgebra<F>& alg)
{
    AlgebraDocument doc;
    doc.kind = alg.kind();
    doc.labels = alg.labels();
    doc.field = FieldSpec(alg.field());
    const auto& K = alg.field();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = alg.is_lie() ? i + 1 : 0; j < alg.dim(); ++j) {
            const auto& p = alg.product(i, j);
            if (p.is_zero()) continue;
            AlgebraDocument::Entry e{i, j, {}};
            for (const auto& [k, c] : p.entries()) e.terms.emplace_back(k, K.to_rational(c));
            doc.table.push_back(std::move(e));
        }
    if (alg.unit()) {
        std::vector<mpq_class> u(alg.dim());
        for (const auto& [k, c] : alg.unit()->entries()) u[k] = K.to_rational(c);
        doc.unit = std::move(u);
    }
    return doc;
}

/// Instantiates and rejects axiom violations with the offending triple.
template <Field F>
BasedAlgebra<F> instantiate_validated(const AlgebraDocument& doc, const F& field)
{
    auto alg = instantiate(doc, field);
    auto report = validate(alg);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        std::string residual;
        for (const auto& [k, c] : v.residual.entries())
            residual += (residual.empty() ? "" : " + ") + field.to_string(c) + "*" + alg.labels()[k];
        throw InputError(v.axiom + " fails at (" + alg.labels()[v.indices[0]] + ", " + alg.labels()[v.indices[1]] + ", " +
                         alg.labels()[v.indices[2]] + "): residual " + residual + " (" +
                         std::to_string(report.violations.size()) + " violation(s) in total)");
    }
    return alg;
}

} // namespace liehom
