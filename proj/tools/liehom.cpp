// Command-line front end: single homology computations, identity checks and grids.

#include "liehom/grid.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace liehom;

enum Exit { exit_ok = 0, exit_mismatch = 1, exit_input = 2 };

struct Options {
    std::string lie, assoc, a, b;
    std::string field;
    std::string format = "table";
    std::string variant = "cycles";
    std::string ideal_i, ideal_j;
    std::string suite = "default";
    std::size_t n = 2;
    unsigned threads = 0;
};

std::optional<FieldSpec> field_override(const Options& o)
{
    if (o.field.empty()) return std::nullopt;
    return parse_field(o.field);
}

void warn_modular_sl(const AlgebraDocument& doc, const std::string& source, const FieldSpec& field)
{
    auto ch = field_characteristic(field);
    if (ch == 0 || source.rfind("catalog:sl", 0) != 0) return;
    std::size_t n = 1;
    while (n * n - 1 < doc.dim()) ++n;
    if (n % ch == 0)
        std::cerr << "warning: " << source << " over " << field_name(field)
                  << ": characteristic divides n, sl(n) has a nontrivial center\n";
}

/// Loads every source over one common field.
struct Loaded {
    std::vector<AlgebraDocument> docs;
    FieldSpec field;
};

Loaded load(const Options& o, const std::vector<std::pair<std::string, AlgebraKind>>& sources)
{
    Loaded out{{}, Rationals{}};
    auto over = field_override(o);
    std::optional<FieldSpec> chosen = over;
    for (const auto& [src, kind] : sources) {
        if (src.empty()) throw InputError("missing --" + std::string(kind == AlgebraKind::lie ? "lie" : "assoc") + " argument");
        auto doc = load_algebra_document(src, kind);
        auto f = resolve_field(doc, over);
        if (chosen && field_name(*chosen) != field_name(f))
            throw InputError("algebras are over different fields (" + field_name(*chosen) + ", " + field_name(f) +
                             "); pass --field to choose one");
        chosen = f;
        out.docs.push_back(std::move(doc));
    }
    out.field = chosen.value_or(Rationals{});
    for (std::size_t k = 0; k < sources.size(); ++k) warn_modular_sl(out.docs[k], sources[k].first, out.field);
    return out;
}

// Every verify-* subcommand shares the odd-characteristic hypothesis.
template <Field F>
void require_verifiable_field(const F& field)
{
    if (field.characteristic() == 2)
        throw UnsupportedCharacteristic("verification requires characteristic ≠ 2 (field " + field.name() + ")");
}

int emit_report(const Options& o, const VerificationReport& r)
{
    if (o.format == "json") std::cout << report_to_json(r).dump(2) << "\n";
    else render_report_table(std::cout, r);
    return r.all_pass() ? exit_ok : exit_mismatch;
}

template <Field F>
int emit_quantity(const Options& o, const std::string& quantity, const std::string& source, const F& field,
                  std::size_t dimension, const MultilinearBasis& basis, const std::vector<std::string>& labels,
                  const std::vector<SparseVector<F>>& reps)
{
    std::vector<std::string> rendered;
    for (const auto& v : reps) rendered.push_back(render_multilinear(field, basis, labels, v));
    if (o.format == "json") {
        json j{{"quantity", quantity}, {"algebra", source}, {"field", field.name()}, {"dimension", dimension},
               {"representatives", rendered}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << quantity << "(" << source << ") over " << field.name() << ": dim " << dimension << "\n";
        for (const auto& s : rendered) std::cout << "  " << s << "\n";
    }
    return exit_ok;
}

/// "derived", "whole", "zero", or a comma-separated list of basis labels.
template <Field F>
Subspace<F> parse_ideal(const BasedAlgebra<F>& l, const std::string& text)
{
    if (text == "derived") return derived(l);
    if (text == "whole") return l.whole();
    if (text == "zero") return Subspace<F>::zero(l.field(), l.dim());
    std::vector<SparseVector<F>> vs;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        auto it = std::find(l.labels().begin(), l.labels().end(), item);
        if (it == l.labels().end()) throw InputError("ideal: unknown basis label '" + item + "'");
        vs.push_back(l.basis_vector(static_cast<std::size_t>(it - l.labels().begin())));
    }
    return Subspace<F>::span(l.field(), l.dim(), vs);
}

int run(const std::string& cmd, const Options& o)
{
    if (o.format != "json" && o.format != "table") throw InputError("--format must be json or table");

    if (cmd == "grid") {
        auto tasks = suite_tasks(o.suite);
        auto cells = run_grid(tasks, o.threads);
        if (o.format == "json") std::cout << grid_to_json(o.suite, cells).dump(2) << "\n";
        else render_grid_table(std::cout, o.suite, cells);
        bool all = std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.pass; });
        return all ? exit_ok : exit_mismatch;
    }

    if (cmd == "h2" || cmd == "h2ess" || cmd == "bl" || cmd == "verify-exact") {
        auto in = load(o, {{o.lie, AlgebraKind::lie}});
        return std::visit(
            [&](const auto& field) {
                auto l = instantiate_validated(in.docs[0], field);
                if (cmd == "verify-exact") {
                    require_verifiable_field(field);
                    std::optional<std::pair<Subspace<std::decay_t<decltype(field)>>, Subspace<std::decay_t<decltype(field)>>>> ideals;
                    if (!o.ideal_i.empty() || !o.ideal_j.empty())
                        ideals.emplace(parse_ideal(l, o.ideal_i.empty() ? "derived" : o.ideal_i),
                                       parse_ideal(l, o.ideal_j.empty() ? "whole" : o.ideal_j));
                    auto r = verify_exact_sequences(l, ideals);
                    r.instance = o.lie;
                    return emit_report(o, r);
                }
                if (cmd == "bl") {
                    auto r = b_coinvariants(l);
                    return emit_quantity(o, "B", o.lie, field, r.dimension, MultilinearBasis(l.dim(), MultilinearKind::sym2),
                                         l.labels(), r.representatives);
                }
                auto r = cmd == "h2" ? h2(l) : h2_ess(l);
                return emit_quantity(o, cmd == "h2" ? "H2" : "H2ess", o.lie, field, r.dimension,
                                     MultilinearBasis(l.dim(), MultilinearKind::wedge2), l.labels(), r.representatives);
            },
            in.field);
    }

    if (cmd == "hc1" || cmd == "tspan") {
        auto in = load(o, {{o.assoc, AlgebraKind::associative}});
        return std::visit(
            [&](const auto& field) {
                auto a = instantiate_validated(in.docs[0], field);
                MultilinearBasis w2(a.dim(), MultilinearKind::wedge2);
                if (cmd == "tspan") {
                    auto t = t_span(a);
                    return emit_quantity(o, "T", o.assoc, field, t.dim(), w2, a.labels(), t.basis());
                }
                if (o.variant != "cycles" && o.variant != "full") throw InputError("--variant must be cycles or full");
                auto r = hc1(a, o.variant == "cycles" ? Hc1Variant::cycles : Hc1Variant::full_wedge);
                return emit_quantity(o, "HC1", o.assoc, field, r.dimension, w2, a.labels(), r.representatives);
            },
            in.field);
    }

    if (cmd == "verify-current" || cmd == "verify-bcurrent") {
        auto in = load(o, {{o.lie, AlgebraKind::lie}, {o.assoc, AlgebraKind::associative}});
        return std::visit(
            [&](const auto& field) {
                require_verifiable_field(field);
                auto l = instantiate_validated(in.docs[0], field);
                auto a = instantiate_validated(in.docs[1], field);
                auto r = cmd == "verify-current" ? verify_current_h2(l, a) : verify_b_current(l, a);
                r.instance = o.lie + " ⊗ " + o.assoc;
                for (auto& s : r.subreports) s.instance = r.instance;
                return emit_report(o, r);
            },
            in.field);
    }

    if (cmd == "verify-tensor") {
        auto in = load(o, {{o.a, AlgebraKind::associative}, {o.b, AlgebraKind::associative}});
        return std::visit(
            [&](const auto& field) {
                require_verifiable_field(field);
                auto r = verify_tensor_h2(instantiate_validated(in.docs[0], field), instantiate_validated(in.docs[1], field));
                r.instance = o.a + " ⊗ " + o.b;
                return emit_report(o, r);
            },
            in.field);
    }

    if (cmd == "verify-matrix") {
        auto in = load(o, {{o.assoc, AlgebraKind::associative}});
        return std::visit(
            [&](const auto& field) {
                require_verifiable_field(field);
                auto r = verify_matrix_remarks(instantiate_validated(in.docs[0], field), o.n);
                r.instance = o.assoc + ", n=" + std::to_string(o.n);
                for (auto& s : r.subreports) s.instance = r.instance;
                return emit_report(o, r);
            },
            in.field);
    }

    throw InputError("unknown subcommand '" + cmd + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact second homology of Lie algebras and first cyclic homology of associative algebras"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--field", o.field, "Q or F<p>; overrides the field stored in algebra files")->capture_default_str();
    app.add_option("--format", o.format, "json or table")->capture_default_str();

    const std::string algebra_help = "catalog:<name> or a JSON algebra file";
    auto* c_h2 = app.add_subcommand("h2", "dimension and cycle representatives of H2(L)");
    auto* c_h2ess = app.add_subcommand("h2ess", "essential part of H2(L)");
    auto* c_bl = app.add_subcommand("bl", "coinvariants B(L) = S²L/[L,S²L]");
    auto* c_exact = app.add_subcommand("verify-exact", "exactness of the five-term and coinvariant sequences");
    for (auto* c : {c_h2, c_h2ess, c_bl, c_exact}) c->add_option("--lie", o.lie, algebra_help)->required();
    c_exact->add_option("--ideal-i", o.ideal_i, "ideal I: derived, whole, zero or basis labels a,b,...");
    c_exact->add_option("--ideal-j", o.ideal_j, "ideal J: derived, whole, zero or basis labels a,b,...");

    auto* c_hc1 = app.add_subcommand("hc1", "first cyclic homology HC1(A)");
    auto* c_tspan = app.add_subcommand("tspan", "the subspace T(A) of Λ²A");
    for (auto* c : {c_hc1, c_tspan}) c->add_option("--assoc", o.assoc, algebra_help)->required();
    c_hc1->add_option("--variant", o.variant, "cycles (Ker of the commutator map) or full (all of Λ²A)")->capture_default_str();

    auto* c_vc = app.add_subcommand("verify-current", "H2(L⊗A) decomposition for commutative unital A");
    auto* c_vb = app.add_subcommand("verify-bcurrent", "B(L⊗A) decomposition for commutative unital A");
    for (auto* c : {c_vc, c_vb}) {
        c->add_option("--lie", o.lie, algebra_help)->required();
        c->add_option("--assoc", o.assoc, algebra_help)->required();
    }
    auto* c_vt = app.add_subcommand("verify-tensor", "H2((A⊗B)⁻) = F(A,B) ⊕ F(B,A)");
    c_vt->add_option("--a", o.a, algebra_help)->required();
    c_vt->add_option("--b", o.b, algebra_help)->required();
    auto* c_vm = app.add_subcommand("verify-matrix", "H2(gl_n(A)) and H2(sl_n⊗A) formulas");
    c_vm->add_option("--assoc", o.assoc, algebra_help)->required();
    c_vm->add_option("--n", o.n, "matrix size, 2 or 3")->capture_default_str();

    auto* c_grid = app.add_subcommand("grid", "run a pinned verification grid");
    c_grid->add_option("--suite", o.suite, "default, f3 or extended")->capture_default_str();
    c_grid->add_option("--threads", o.threads, "worker threads (0 = all cores)");

    // Global options are accepted after the subcommand too.
    for (auto* c : app.get_subcommands({})) {
        c->add_option("--field", o.field, "Q or F<p>");
        c->add_option("--format", o.format, "json or table");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), o);
    } catch (const UnsupportedCharacteristic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}
