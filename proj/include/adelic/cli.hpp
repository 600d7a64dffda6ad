#pragma once

#include "text.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace adelic::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_domain = 2;

/// Parses "cong:W:K:k", "exact:W:K" or "ball:i:K:r".
inline Constraint parse_constraint(std::string_view s, const FieldPtr& K) {
    text::Parser p(s);
    Constraint out;
    if (p.accept("cong:")) {
        PlaceKey w = p.place_key();
        p.expect(":");
        KElement target = p.kelement(K);
        p.expect(":");
        out = Constraint::congruence(w, target, static_cast<int>(p.unsigned_integer()));
    } else if (p.accept("exact:")) {
        PlaceKey w = p.place_key();
        p.expect(":");
        out = Constraint::exact_value(w, p.kelement(K));
    } else if (p.accept("ball:")) {
        int index = static_cast<int>(p.unsigned_integer());
        p.expect(":");
        KElement center = p.kelement(K);
        p.expect(":");
        std::string radius = p.take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == '-'; });
        try {
            out = Constraint::ball(index, center, std::stod(radius));
        } catch (const std::logic_error&) {
            p.fail("expected a radius");
        }
    } else {
        p.fail("expected cong:, exact: or ball:");
    }
    p.finish();
    return out;
}

namespace detail {

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string fp_to_string(const FpPoly& f) {
    ZPoly z;
    for (auto c : f) z.push_back(arith::from_u64(c));
    return poly::to_string(z);
}

struct Options {
    std::vector<std::string> register_polys;
    int field = 0;
    int precision = default_precision;
    std::uint64_t prime_bound = default_prime_bound;
    std::string poly;
    std::uint64_t prime = 0;
    std::string ideal;
    std::string adele;
    std::string ultrafilter;
    std::vector<std::string> constraints;
};

inline UniversePtr build_universe(const Options& o, const std::vector<std::string>& extra = {}) {
    std::vector<ZPoly> polys;
    for (const auto& s : o.register_polys) polys.push_back(text::parse_polynomial(s));
    for (const auto& s : extra) polys.push_back(text::parse_polynomial(s));
    return Universe::make(polys, o.prime_bound, o.precision);
}

inline void cmd_factor(const Options& o, std::ostream& out) {
    auto K = NumberField::make(text::parse_polynomial(o.poly));
    auto places = factor_prime(K, o.prime);
    out << "field=" << K->name() << "\n";
    out << "prime=" << o.prime << "\n";
    out << "class=" << splitting_class(K, o.prime).name() << "\n";
    out << "count=" << places.size() << "\n";
    for (const auto& v : places)
        out << "place=" << v.label() << " e=" << v.e() << " f=" << v.f() << " factor=" << fp_to_string(v.factor()) << "\n";
}

inline void cmd_atoms(const Options& o, std::ostream& out) {
    auto u = build_universe(o);
    out << "fields=" << u->field_count() << "\n";
    std::string nongeneric;
    for (auto p : u->nongeneric_primes()) nongeneric += (nongeneric.empty() ? "" : ",") + std::to_string(p);
    out << "nongeneric=" << nongeneric << "\n";
    for (int a = 0; a < u->atom_count(); ++a) {
        const auto& atom = u->atom(a);
        out << "atom=" << atom.name << " witnesses=" << atom.witnesses << " first=" << atom.first_witness
            << " sparse=" << yes_no(u->atom_is_sparse(a)) << "\n";
    }
    for (int j = 1; j < u->field_count(); ++j)
        for (int c = 0; c < u->cell_count(j); ++c) out << "cell=" << j << ":" << u->cell_name(j, c) << "\n";
}

inline void cmd_member(const Options& o, std::ostream& out) {
    auto u = build_universe(o);
    u->check_field(o.field);
    auto P = text::parse_ideal(o.ideal, u, o.field);
    auto alpha = text::parse_adele(o.adele, u, o.field);
    out << "ideal=" << text::to_text(P) << "\n";
    out << "member=" << yes_no(member(alpha, P)) << "\n";
    if (auto w = membership_witness(alpha, P)) out << "witness=" << text::to_text(*w) << "\n";
}

inline void cmd_classify(const Options& o, std::ostream& out) {
    auto u = build_universe(o);
    u->check_field(o.field);
    auto P = text::parse_ideal(o.ideal, u, o.field);
    auto c = classify(P);
    out << "ideal=" << text::to_text(P) << "\n";
    out << "maximal=" << yes_no(c.is_maximal) << "\n";
    out << "minimal=" << yes_no(c.is_minimal) << "\n";
    out << "closed=" << yes_no(is_closed(P)) << "\n";
    if (P.kind() != PrimeIdeal::Kind::zero_at) out << "rank=" << ideal_rank(P) << "\n";
    auto g = generator(P);
    out << "principal=" << yes_no(g.has_value()) << "\n";
    if (g) out << "generator=" << text::to_text(*g) << "\n";
}

inline void cmd_fiber(const Options& o, std::ostream& out) {
    // A polynomial that is already registered names that field; otherwise it is appended.
    const ZPoly f = text::parse_polynomial(o.poly);
    int target = 0;
    for (std::size_t i = 0; i < o.register_polys.size() && target == 0; ++i)
        if (text::parse_polynomial(o.register_polys[i]) == f) target = static_cast<int>(i) + 1;
    auto u = target == 0 ? build_universe(o, {o.poly}) : build_universe(o);
    if (target == 0) target = u->field_count() - 1;
    auto P = text::parse_ideal(o.ideal, u, 0);
    auto fiber = fiber_of_spec(P, target);
    out << "field=" << u->field(target)->name() << "\n";
    out << "base=" << text::to_text(P) << "\n";
    out << "count=" << fiber.size() << "\n";
    for (const auto& Q : fiber) out << "ideal=" << text::to_text(Q) << "\n";
}

inline void cmd_density(const Options& o, std::ostream& out) {
    auto u = build_universe(o);
    u->check_field(o.field);
    auto U = text::parse_ultrafilter(o.ultrafilter, u, o.field);
    std::vector<Constraint> nbhd;
    for (const auto& s : o.constraints) nbhd.push_back(parse_constraint(s, u->field(o.field)));
    auto alpha = density_witness(U, nbhd);
    out << "ultrafilter=" << text::to_text(U) << "\n";
    out << "adele=" << text::to_text(alpha) << "\n";
    out << "in_maximal=" << yes_no(member(alpha, PrimeIdeal::max_at(U))) << "\n";
}

} // namespace detail

/// Runs one command. Returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App app{"Adele ring prime spectrum calculator", "adelic_cli"};
    app.require_subcommand(1);
    app.add_option("--precision", o.precision, "p-adic working precision")->check(CLI::Range(1, 4096));
    app.add_option("--prime-bound", o.prime_bound, "largest prime sampled for atoms")->check(CLI::Range(2, 1000000));
    app.add_option("--register", o.register_polys, "extension polynomial, coefficients low degree first");

    auto* factor = app.add_subcommand("factor", "factor a prime in a number field");
    factor->add_option("--poly", o.poly)->required();
    factor->add_option("--prime", o.prime)->required();

    auto* atoms = app.add_subcommand("atoms", "list splitting atoms of the universe");

    auto* member_cmd = app.add_subcommand("member", "test membership of an adele in a prime ideal");
    member_cmd->add_option("--ideal", o.ideal)->required();
    member_cmd->add_option("--adele", o.adele)->required();
    member_cmd->add_option("--field", o.field);

    auto* classify_cmd = app.add_subcommand("classify", "classify a prime ideal");
    classify_cmd->add_option("--ideal", o.ideal)->required();
    classify_cmd->add_option("--field", o.field);

    auto* fiber = app.add_subcommand("fiber", "primes of an extension over a prime of Q");
    fiber->add_option("--ideal", o.ideal)->required();
    fiber->add_option("--poly", o.poly)->required();

    auto* density = app.add_subcommand("density", "element of a maximal ideal in a neighborhood");
    density->add_option("--ultrafilter", o.ultrafilter)->required();
    density->add_option("--constraint", o.constraints);
    density->add_option("--field", o.field);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (factor->parsed()) detail::cmd_factor(o, out);
        else if (atoms->parsed()) detail::cmd_atoms(o, out);
        else if (member_cmd->parsed()) detail::cmd_member(o, out);
        else if (classify_cmd->parsed()) detail::cmd_classify(o, out);
        else if (fiber->parsed()) detail::cmd_fiber(o, out);
        else if (density->parsed()) detail::cmd_density(o, out);
    } catch (const adelic_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}

} // namespace adelic::cli
