#pragma once

#include "liehom/document.hpp"

#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace liehom {

namespace catalog_detail {

using Terms = std::vector<std::pair<std::size_t, mpq_class>>;

inline AlgebraDocument lie_doc(std::vector<std::string> labels)
{
    AlgebraDocument d;
    d.kind = AlgebraKind::lie;
    d.labels = std::move(labels);
    return d;
}

inline AlgebraDocument assoc_doc(std::vector<std::string> labels, std::vector<mpq_class> unit)
{
    AlgebraDocument d;
    d.kind = AlgebraKind::associative;
    d.labels = std::move(labels);
    d.unit = std::move(unit);
    return d;
}

inline std::vector<mpq_class> unit_at(std::size_t n, std::size_t u)
{
    std::vector<mpq_class> v(n);
    v[u] = 1;
    return v;
}

/// Integer n×n matrices used to derive matrix-algebra tables.
using IntMatrix = std::vector<long>;

inline IntMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j)
{
    IntMatrix m(n * n, 0);
    m[i * n + j] = 1;
    return m;
}

inline IntMatrix mat_mul(std::size_t n, const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i * n + k])
                for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
    return c;
}

inline std::string eij(std::size_t i, std::size_t j) { return "E" + std::to_string(i + 1) + std::to_string(j + 1); }

/// Lie document on a basis of integer matrices closed under commutators;
/// `decompose` expresses a matrix in that basis.
template <class Decompose>
AlgebraDocument matrix_lie(std::vector<std::string> labels, const std::vector<IntMatrix>& basis, std::size_t n,
                           Decompose decompose)
{
    auto d = lie_doc(std::move(labels));
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            auto ab = mat_mul(n, basis[a], basis[b]);
            auto ba = mat_mul(n, basis[b], basis[a]);
            for (std::size_t k = 0; k < ab.size(); ++k) ab[k] -= ba[k];
            Terms t = decompose(ab);
            if (!t.empty()) d.table.push_back({a, b, std::move(t)});
        }
    return d;
}

inline AlgebraDocument sl_doc(std::size_t n)
{
    std::vector<std::string> labels;
    std::vector<IntMatrix> basis;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        auto h = matrix_unit(n, i, i);
        h[(i + 1) * n + i + 1] = -1;
        basis.push_back(h);
        labels.push_back(n == 2 ? "h" : "h" + std::to_string(i + 1));
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> offdiag;
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || (pass == 0) != (i < j)) continue;
                offdiag[{i, j}] = basis.size();
                basis.push_back(matrix_unit(n, i, j));
                labels.push_back(n == 2 ? (i < j ? "e" : "f") : eij(i, j));
            }
    auto decompose = [n, offdiag](const IntMatrix& m) {
        Terms t;
        long running = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            running += m[i * n + i];
            if (running) t.emplace_back(i, mpq_class(running));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && m[i * n + j]) t.emplace_back(offdiag.at({i, j}), mpq_class(m[i * n + j]));
        std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return t;
    };
    return matrix_lie(std::move(labels), basis, n, decompose);
}

inline AlgebraDocument gl_doc(std::size_t n)
{
    std::vector<std::string> labels;
    std::vector<IntMatrix> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            basis.push_back(matrix_unit(n, i, j));
            labels.push_back(eij(i, j));
        }
    auto decompose = [](const IntMatrix& m) {
        Terms t;
        for (std::size_t k = 0; k < m.size(); ++k)
            if (m[k]) t.emplace_back(k, mpq_class(m[k]));
        return t;
    };
    return matrix_lie(std::move(labels), basis, n, decompose);
}

/// Associative document on matrix units E_ij with (i,j) in `cells`.
inline AlgebraDocument matrix_units_doc(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& cells)
{
    std::vector<std::string> labels;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
    for (const auto& c : cells) {
        pos[c] = labels.size();
        labels.push_back(eij(c.first, c.second));
    }
    std::vector<mpq_class> unit(cells.size());
    for (std::size_t i = 0; i < n; ++i) unit[pos.at({i, i})] = 1;
    auto d = assoc_doc(std::move(labels), std::move(unit));
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = 0; b < cells.size(); ++b)
            if (cells[a].second == cells[b].first)
                d.table.push_back({a, b, {{pos.at({cells[a].first, cells[b].second}), 1}}});
    return d;
}

/// Splits "square_zero2", "square_zero(2)" or "sl(3)" into ("square_zero", 2).
inline std::pair<std::string, std::optional<std::size_t>> split_name(std::string name)
{
    if (!name.empty() && name.back() == ')') {
        auto open = name.find('(');
        if (open == std::string::npos) throw InputError("bad catalog name '" + name + "'");
        std::string num = name.substr(open + 1, name.size() - open - 2);
        if (num.empty() || num.size() > 6 || !std::all_of(num.begin(), num.end(), ::isdigit))
            throw InputError("bad catalog parameter in '" + name + "'");
        return {name.substr(0, open), std::stoul(num)};
    }
    std::size_t k = name.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
    if (k == name.size()) return {name, std::nullopt};
    if (name.size() - k > 6) throw InputError("catalog parameter too large in '" + name + "'");
    return {name.substr(0, k), std::stoul(name.substr(k))};
}

inline std::size_t need_param(const std::string& name, const std::optional<std::size_t>& p)
{
    if (!p || *p < 1) throw InputError("catalog entry '" + name + "' needs a parameter >= 1");
    return *p;
}

} // namespace catalog_detail

/// Lie families: abelian(n), nonabelian2, heisenberg(k), sl(n), gl(n).
inline AlgebraDocument lie_catalog_document(const std::string& full_name)
{
    using namespace catalog_detail;
    auto [name, param] = split_name(full_name);
    if (name == "abelian") {
        std::size_t n = need_param(name, param);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
        return lie_doc(std::move(labels));
    }
    if (name == "nonabelian" && param == 2) {
        auto d = lie_doc({"x", "y"});
        d.table.push_back({0, 1, {{1, 1}}});
        return d;
    }
    if (name == "heisenberg") {
        std::size_t k = need_param(name, param);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < k; ++i) labels.push_back(k == 1 ? "e" : "e" + std::to_string(i + 1));
        for (std::size_t i = 0; i < k; ++i) labels.push_back(k == 1 ? "f" : "f" + std::to_string(i + 1));
        labels.push_back("z");
        auto d = lie_doc(std::move(labels));
        for (std::size_t i = 0; i < k; ++i) d.table.push_back({i, k + i, {{2 * k, 1}}});
        return d;
    }
    if (name == "sl") {
        std::size_t n = need_param(name, param);
        if (n < 2) throw InputError("sl(n) needs n >= 2");
        return sl_doc(n);
    }
    if (name == "gl") return gl_doc(need_param(name, param));
    throw InputError("unknown Lie catalog entry '" + full_name + "'");
}

/// Associative unital families: unit_field, dual_numbers, trunc(n), square_zero(m),
/// product_fields(n), cyclic_group_algebra(n), matrix(n), upper_triangular(n).
inline AlgebraDocument assoc_catalog_document(const std::string& full_name)
{
    using namespace catalog_detail;
    auto [name, param] = split_name(full_name);
    if (name == "unit_field" && !param) {
        auto d = assoc_doc({"1"}, {1});
        d.table.push_back({0, 0, {{0, 1}}});
        return d;
    }
    if (name == "dual_numbers" && !param) return assoc_catalog_document("trunc2");
    if (name == "trunc") {
        std::size_t n = need_param(name, param);
        std::vector<std::string> labels{"1"};
        for (std::size_t i = 1; i < n; ++i) labels.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
        if (n == 2) labels[1] = "eps";
        auto d = assoc_doc(std::move(labels), unit_at(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; i + j < n; ++j) d.table.push_back({i, j, {{i + j, 1}}});
        return d;
    }
    if (name == "square_zero") {
        std::size_t m = need_param(name, param);
        std::vector<std::string> labels{"1"};
        for (std::size_t i = 0; i < m; ++i)
            labels.push_back(m == 2 ? std::string(i == 0 ? "x" : "y") : "x" + std::to_string(i + 1));
        auto d = assoc_doc(std::move(labels), unit_at(m + 1, 0));
        for (std::size_t i = 0; i <= m; ++i) {
            d.table.push_back({0, i, {{i, 1}}});
            if (i) d.table.push_back({i, 0, {{i, 1}}});
        }
        return d;
    }
    if (name == "product_fields") {
        std::size_t n = need_param(name, param);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
        auto d = assoc_doc(std::move(labels), std::vector<mpq_class>(n, 1));
        for (std::size_t i = 0; i < n; ++i) d.table.push_back({i, i, {{i, 1}}});
        return d;
    }
    if (name == "cyclic_group_algebra") {
        std::size_t n = need_param(name, param);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("g^" + std::to_string(i));
        auto d = assoc_doc(std::move(labels), unit_at(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d.table.push_back({i, j, {{(i + j) % n, 1}}});
        return d;
    }
    if (name == "matrix" || name == "upper_triangular") {
        std::size_t n = need_param(name, param);
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = name == "matrix" ? 0 : i; j < n; ++j) cells.emplace_back(i, j);
        return matrix_units_doc(n, cells);
    }
    throw InputError("unknown associative catalog entry '" + full_name + "'");
}

template <Field F>
BasedAlgebra<F> make_lie(const std::string& name, const F& field)
{
    return instantiate(lie_catalog_document(name), field);
}

template <Field F>
BasedAlgebra<F> make_assoc(const std::string& name, const F& field)
{
    return instantiate(assoc_catalog_document(name), field);
}

/// Catalog names, for enumeration in tests and `--help`.
inline std::vector<std::string> lie_catalog_examples()
{
    return {"abelian1", "abelian2", "abelian3", "nonabelian2", "heisenberg1", "heisenberg2", "sl2", "sl3", "gl1", "gl2", "gl3"};
}

inline std::vector<std::string> assoc_catalog_examples()
{
    return {"unit_field", "dual_numbers", "trunc3", "trunc4", "square_zero1", "square_zero2", "square_zero3",
            "product_fields2", "product_fields3", "cyclic_group_algebra2", "cyclic_group_algebra3",
            "matrix2", "matrix3", "upper_triangular2", "upper_triangular3"};
}

} // namespace liehom
