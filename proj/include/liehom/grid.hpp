#pragma once

#include "liehom/io.hpp"
#include "liehom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace liehom {

/// One independently computable unit of a verification grid.
struct GridCell {
    std::string key;   ///< "<group>/<instance>/<field>", unique within a suite
    std::string group; ///< "current", "tensor", "matrix", "kunneth", "exact"
    std::vector<VerificationReport> reports;
    std::string error; ///< set when the cell threw instead of reporting
    bool pass = false;
};

struct GridTask {
    std::string key;
    std::string group;
    std::function<std::vector<VerificationReport>()> run;
};

namespace grid_detail {

template <class Body>
void for_each_field(const std::vector<FieldSpec>& fields, Body body)
{
    for (const auto& spec : fields) std::visit([&](const auto& field) { body(field); }, spec);
}

inline VerificationReport tagged(VerificationReport r, const std::string& instance)
{
    r.instance = instance;
    for (auto& s : r.subreports) s = tagged(std::move(s), instance);
    return r;
}

} // namespace grid_detail

/// Current-algebra cells: H₂ and H₂ᵉˢˢ decompositions, the B decomposition, and
/// exactness checks on L ⊗ A.
inline void add_current_tasks(std::vector<GridTask>& tasks, const std::vector<std::string>& lies,
                              const std::vector<std::string>& assocs, const std::vector<FieldSpec>& fields)
{
    grid_detail::for_each_field(fields, [&]<class F>(const F& field) {
        for (const auto& ln : lies)
            for (const auto& an : assocs) {
                const std::string inst = ln + "⊗" + an;
                tasks.push_back({"current/" + inst + "/" + field.name(), "current", [field, ln, an, inst] {
                                     auto l = make_lie(ln, field);
                                     auto a = make_assoc(an, field);
                                     std::vector<VerificationReport> out;
                                     out.push_back(grid_detail::tagged(verify_current_h2(l, a), inst));
                                     out.push_back(grid_detail::tagged(verify_b_current(l, a), inst));
                                     out.push_back(grid_detail::tagged(verify_exact_sequences(current_tensor(l, a)), inst));
                                     return out;
                                 }});
            }
    });
}

/// Exactness on base Lie algebras, with I = [L,L], J = L.
inline void add_exact_tasks(std::vector<GridTask>& tasks, const std::vector<std::string>& lies,
                            const std::vector<FieldSpec>& fields)
{
    grid_detail::for_each_field(fields, [&]<class F>(const F& field) {
        for (const auto& ln : lies)
            tasks.push_back({"exact/" + ln + "/" + field.name(), "exact", [field, ln] {
                                 auto l = make_lie(ln, field);
                                 auto ideals = std::make_optional(std::make_pair(derived(l), l.whole()));
                                 return std::vector<VerificationReport>{grid_detail::tagged(verify_exact_sequences(l, ideals), ln)};
                             }});
    });
}

inline void add_tensor_tasks(std::vector<GridTask>& tasks, const std::vector<std::string>& assocs,
                             const std::vector<FieldSpec>& fields)
{
    grid_detail::for_each_field(fields, [&]<class F>(const F& field) {
        for (const auto& an : assocs)
            for (const auto& bn : assocs) {
                const std::string inst = an + "⊗" + bn;
                tasks.push_back({"tensor/" + inst + "/" + field.name(), "tensor", [field, an, bn, inst] {
                                     return std::vector<VerificationReport>{grid_detail::tagged(
                                         verify_tensor_h2(make_assoc(an, field), make_assoc(bn, field)), inst)};
                                 }});
            }
    });
}

inline void add_matrix_tasks(std::vector<GridTask>& tasks, const std::vector<std::string>& assocs, std::size_t n,
                             const std::vector<FieldSpec>& fields)
{
    grid_detail::for_each_field(fields, [&]<class F>(const F& field) {
        for (const auto& an : assocs) {
            const std::string inst = an + ", n=" + std::to_string(n);
            tasks.push_back({"matrix/" + an + "-n" + std::to_string(n) + "/" + field.name(), "matrix", [field, an, n, inst] {
                                 return std::vector<VerificationReport>{
                                     grid_detail::tagged(verify_matrix_remarks(make_assoc(an, field), n), inst)};
                             }});
        }
    });
}

inline void add_kunneth_tasks(std::vector<GridTask>& tasks, const std::vector<std::string>& assocs,
                              const std::vector<FieldSpec>& fields)
{
    grid_detail::for_each_field(fields, [&]<class F>(const F& field) {
        for (const auto& an : assocs)
            for (const auto& bn : assocs) {
                const std::string inst = an + "⊗" + bn;
                tasks.push_back({"kunneth/" + inst + "/" + field.name(), "kunneth", [field, an, bn, inst] {
                                     return std::vector<VerificationReport>{grid_detail::tagged(
                                         verify_kunneth(make_assoc(an, field), make_assoc(bn, field)), inst)};
                                 }});
            }
    });
}

/// Named suites. "default" is the pinned acceptance grid; "f3" repeats the integer-table
/// identities in characteristic 3; "extended" adds larger instances.
inline std::vector<GridTask> suite_tasks(const std::string& suite)
{
    std::vector<GridTask> tasks;
    const std::vector<std::string> lies{"abelian2", "nonabelian2", "heisenberg1", "sl2", "sl3"};
    const std::vector<std::string> current_assocs{"unit_field", "dual_numbers", "square_zero2",
                                                  "trunc3", "product_fields2", "cyclic_group_algebra3"};
    const std::vector<std::string> tensor_assocs{"unit_field", "dual_numbers", "square_zero2",
                                                 "trunc3", "matrix2", "upper_triangular2"};
    const std::vector<std::string> matrix_assocs{"unit_field", "dual_numbers", "square_zero2", "trunc3"};
    const std::vector<std::string> kunneth_assocs{"dual_numbers", "square_zero2", "trunc3"};
    const std::vector<FieldSpec> q{Rationals{}};
    const std::vector<FieldSpec> q5{Rationals{}, PrimeField(5)};
    if (suite == "default") {
        add_current_tasks(tasks, lies, current_assocs, q5);
        add_exact_tasks(tasks, lies, q5);
        add_tensor_tasks(tasks, tensor_assocs, q);
        add_matrix_tasks(tasks, matrix_assocs, 2, q5);
        add_kunneth_tasks(tasks, kunneth_assocs, q);
    } else if (suite == "f3") {
        const std::vector<FieldSpec> f3{PrimeField(3)};
        add_current_tasks(tasks, lies, current_assocs, f3);
        add_exact_tasks(tasks, lies, f3);
        add_tensor_tasks(tasks, tensor_assocs, f3);
        add_matrix_tasks(tasks, matrix_assocs, 2, f3);
    } else if (suite == "extended") {
        add_current_tasks(tasks, {"heisenberg2", "gl2"}, {"trunc4", "square_zero3"}, q);
        add_tensor_tasks(tasks, {"square_zero3", "upper_triangular3", "cyclic_group_algebra2"}, q);
        add_matrix_tasks(tasks, matrix_assocs, 3, q);
    } else {
        throw InputError("unknown suite '" + suite + "' (expected default, f3 or extended)");
    }
    return tasks;
}

/// Runs tasks on `threads` workers; results come back sorted by key.
inline std::vector<GridCell> run_grid(const std::vector<GridTask>& tasks, unsigned threads = 0)
{
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<GridCell> cells(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            GridCell& c = cells[i];
            c.key = tasks[i].key;
            c.group = tasks[i].group;
            try {
                c.reports = tasks[i].run();
                c.pass = std::all_of(c.reports.begin(), c.reports.end(), [](const auto& r) { return r.all_pass(); });
            } catch (const std::exception& e) {
                c.error = e.what();
                c.pass = false;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, tasks.size()); ++t) pool.emplace_back(worker);
    }
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    return cells;
}

inline json grid_to_json(const std::string& suite, const std::vector<GridCell>& cells)
{
    json j;
    j["suite"] = suite;
    json arr = json::array();
    bool all = true;
    for (const auto& c : cells) {
        json cj{{"key", c.key}, {"group", c.group}, {"pass", c.pass}};
        if (!c.error.empty()) cj["error"] = c.error;
        json reps = json::array();
        for (const auto& r : c.reports) reps.push_back(report_to_json(r));
        cj["reports"] = reps;
        arr.push_back(cj);
        all = all && c.pass;
    }
    j["cells"] = arr;
    j["pass"] = all;
    return j;
}

/// Matrix of pass marks: one line per cell with the headline dimensions.
inline void render_grid_table(std::ostream& os, const std::string& suite, const std::vector<GridCell>& cells)
{
    os << "suite " << suite << ": " << cells.size() << " cells\n";
    std::size_t passed = 0;
    for (const auto& c : cells) {
        os << (c.pass ? "  ok   " : "  FAIL ") << c.key;
        if (!c.error.empty()) os << "  error: " << c.error;
        for (const auto& r : c.reports) {
            os << "  " << r.theorem << " " << r.lhs << (r.lhs == r.rhs_total() ? "=" : "≠") << r.rhs_total();
            for (const auto& s : r.subreports) os << " [" << s.theorem << " " << s.lhs << (s.lhs == s.rhs_total() ? "=" : "≠") << s.rhs_total() << "]";
        }
        os << "\n";
        passed += c.pass ? 1 : 0;
    }
    os << passed << "/" << cells.size() << " cells pass\n";
}

} // namespace liehom
