#include "io.hpp"
#include "render.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace anyonlab;
using io::json;

namespace {

struct Options {
    std::string format = "auto";
    std::string frame_file;
    std::uint64_t seed = 0;

    std::string op, path, type = "Z", plaq, spec, spec2, exclude, s1, s2, label, torus, patch, viewport, motif;
    bool syndrome = false;
};

ConeFrame load_frame(const Options& o) {
    std::string file = o.frame_file;
    if (file.empty())
        if (const char* env = std::getenv("ANYONLAB_FRAME")) file = env;
    return file.empty() ? ConeFrame::standard() : io::frame_from(io::read_file(file));
}

std::pair<int, int> parse_dims(const std::string& s) {
    int w = 0, h = 0;
    char x = 0;
    std::istringstream in(s);
    if (!(in >> w >> x >> h) || x != 'x' || !in.eof()) throw io::InputError("expected dimensions as WxH, got '" + s + "'");
    return {w, h};
}

StringType parse_type(const std::string& s) {
    if (s == "X") return StringType::X;
    if (s == "Y") return StringType::Y;
    if (s == "Z") return StringType::Z;
    throw io::InputError("string type must be X, Y or Z");
}

bool want_json(const Options& o, bool default_json) {
    if (o.format == "json") return true;
    if (o.format == "text") return false;
    return default_json;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

QuasiLocalOperator load_quasi_local(const std::string& file) {
    auto v = io::operator_from(io::read_file(file));
    if (auto* p = std::get_if<PauliOperator>(&v)) return QuasiLocalOperator(*p);
    return std::get<QuasiLocalOperator>(v);
}

PauliOperator load_pauli(const std::string& file) {
    auto v = io::operator_from(io::read_file(file));
    if (auto* p = std::get_if<PauliOperator>(&v)) return *p;
    throw io::InputError("expected a single Pauli monomial");
}

void cmd_eval(const Options& o) {
    Gauss v = vacuum_expectation(load_quasi_local(o.op));
    if (want_json(o, false)) emit({{"value", v.str()}});
    else std::cout << v.str() << "\n";
}

void cmd_string(const Options& o) {
    FinitePath p = io::finite_path_from(io::read_file(o.path));
    emit(io::to_json(string_operator(p, parse_type(o.type))));
}

void cmd_deform(const Options& o) {
    FinitePath p = io::finite_path_from(io::read_file(o.path));
    Point at = io::point_from(json::parse("[" + o.plaq + "]"));
    FinitePath d = p.kind == PathKind::Primal ? deform(p, at) : deform_dual(p, at);
    emit({{"path", io::to_json(d)}, {"operator", io::to_json(string_operator(d))}});
}

void cmd_sector_eval(const Options& o) {
    SectorSpec s = io::sector_from(io::read_file(o.spec));
    Gauss v = excitation_expectation(s, load_quasi_local(o.op));
    if (want_json(o, false)) emit({{"value", v.str()}, {"label", label_name(s.label)}});
    else std::cout << v.str() << "\n";
}

void cmd_syndrome(const Options& o) { emit(io::to_json(syndrome(load_pauli(o.op)))); }

void cmd_distinguish(const Options& o) {
    SectorSpec a = io::sector_from(io::read_file(o.spec));
    SectorSpec b = o.spec2.empty() ? SectorSpec::vacuum() : io::sector_from(io::read_file(o.spec2));
    BondSet ex = o.exclude.empty() ? BondSet{} : io::region_from(io::read_file(o.exclude));
    PauliOperator d = sector_distinguisher(a, b, ex);
    QuasiLocalOperator q(d);
    emit({{"operator", io::to_json(d)},
          {"value_first", excitation_expectation(a, q).str()},
          {"value_second", excitation_expectation(b, q).str()}});
}

ComposedSector as_composed(const SectorSpec& s) {
    ComposedSector c;
    if (s.path) c.parts.push_back(s);
    c.cone = s.cone;
    return c;
}

void cmd_braid(const Options& o) {
    ConeFrame f = load_frame(o);
    SectorSpec a = io::sector_from(io::read_file(o.s1)), b = io::sector_from(io::read_file(o.s2));
    BraidResult r = braiding_phase(as_composed(a), as_composed(b), f);
    std::string order = !r.first_less ? "unordered" : *r.first_less ? "s1 < s2" : "s2 < s1";
    json crossings = json::array();
    for (const auto& c : r.crossings) crossings.push_back(io::to_json(c));
    if (want_json(o, false)) {
        emit({{"sign", r.sign}, {"frame", io::to_json(f)}, {"order", order}, {"crossings", crossings}, {"margin", r.margin}});
        return;
    }
    std::cout << r.sign << "\n";
    std::cout << "frame: " << io::to_json(f).dump() << "\n";
    std::cout << "order: " << order << "\n";
    std::cout << "crossings:";
    for (const auto& c : r.crossings) std::cout << " " << to_string(c);
    std::cout << "\n";
}

void cmd_twist(const Options& o) {
    Label l;
    try {
        l = parse_label(o.label);
    } catch (const std::invalid_argument& e) {
        throw io::InputError(e.what());
    }
    int t = twist(l, Representatives::standard(), load_frame(o));
    if (want_json(o, false)) emit({{"label", label_name(l)}, {"twist", t}});
    else std::cout << t << "\n";
}

void cmd_category_tables(const Options& o) {
    ConeFrame f = load_frame(o);
    SectorCategory cat = skeletal_sector_category(f);
    if (want_json(o, false)) {
        json fusion = json::object(), braid = json::object(), tw = json::object();
        for (Label a : kLabels) {
            tw[label_name(a)] = cat.twists[static_cast<int>(a)];
            for (Label b : kLabels) {
                fusion[label_name(a) + "," + label_name(b)] = label_name(a * b);
                braid[label_name(a) + "," + label_name(b)] = cat.braiding[static_cast<int>(a)][static_cast<int>(b)];
            }
        }
        emit({{"fusion", fusion}, {"braiding", braid}, {"twist", tw}});
        return;
    }
    auto table = [&](const std::string& title, auto cell) {
        std::cout << title << "\n     ";
        for (Label b : kLabels) std::cout << " " << std::setw(3) << label_name(b);
        std::cout << "\n";
        for (Label a : kLabels) {
            std::cout << "  " << std::setw(3) << label_name(a);
            for (Label b : kLabels) std::cout << " " << std::setw(3) << cell(a, b);
            std::cout << "\n";
        }
    };
    table("fusion", [](Label a, Label b) { return label_name(a * b); });
    table("braiding", [&](Label a, Label b) {
        return std::to_string(cat.braiding[static_cast<int>(a)][static_cast<int>(b)]);
    });
    std::cout << "twist\n";
    for (Label a : kLabels) std::cout << "  " << std::setw(3) << label_name(a) << " " << std::setw(3)
                                      << cat.twists[static_cast<int>(a)] << "\n";
}

void cmd_category_verify(const Options& o) { emit(io::to_json(verify_equivalence(load_frame(o)))); }

void cmd_gap(const Options& o) {
    auto [w, h] = parse_dims(o.torus);
    FiniteLattice l = FiniteLattice::Torus(w, h);
    json j = io::to_json(spectral_gap(l, o.seed));
    j["lattice"] = {{"kind", "torus"}, {"w", w}, {"h", h}, {"bonds", l.num_bonds()}, {"terms", l.num_terms()}};
    emit(j);
}

void cmd_oracle(const Options& o) {
    auto [w, h] = parse_dims(o.patch);
    FiniteLattice l = FiniteLattice::OpenPatch(w, h);
    QuasiLocalOperator q = load_quasi_local(o.op);
    DenseState psi = projector_state(l);
    auto v = oracle_expectation(l, psi, q);
    bool interior = true;
    for (const auto& b : q.support()) interior = interior && l.interior(b, 1);
    json j{{"oracle", {v.real(), v.imag()}}, {"residual", stabilizer_residual(l, psi)}, {"interior", interior}};
    if (interior) {
        Gauss exact = vacuum_expectation(q);
        j["vacuum"] = exact.str();
        j["agree"] = std::abs(v - to_complex(exact)) <= kSpectralTol;
    }
    emit(j);
}

void cmd_string_energy(const Options& o) {
    auto [w, h] = parse_dims(o.patch);
    FiniteLattice l = FiniteLattice::OpenPatch(w, h);
    FinitePath p = io::finite_path_from(io::read_file(o.path));
    StringType t = parse_type(o.type);
    double e = string_energy(l, p, t);
    std::size_t n = syndrome(string_operator(p, t)).size();
    emit({{"energy", e}, {"syndrome", n}, {"expected", 2.0 * double(n)}});
}

void cmd_render(const Options& o) {
    render::Scene s;
    if (o.motif == "star-plaquette") {
        for (const auto& b : star({2, 2})) s.dashed.insert(b);
        for (const auto& b : plaq({0, 0})) s.thick.insert(b);
    } else if (!o.motif.empty()) {
        throw io::InputError("unknown motif '" + o.motif + "'");
    }
    if (!o.op.empty()) {
        PauliOperator p = load_pauli(o.op);
        for (const auto& [b, l] : p.letters()) s.letters[b] = l;
        if (o.syndrome) {
            Syndrome sy = syndrome(p);
            s.star_defects = sy.stars;
            s.plaquette_defects = sy.plaquettes;
        }
    }
    if (!o.path.empty()) {
        FinitePath p = io::finite_path_from(io::read_file(o.path));
        s.primal = p.primal_support();
        s.dual = p.dual_support();
        if (o.syndrome) {
            Syndrome sy = syndrome(string_operator(p));
            s.star_defects.insert(sy.stars.begin(), sy.stars.end());
            s.plaquette_defects.insert(sy.plaquettes.begin(), sy.plaquettes.end());
        }
    }
    if (!o.spec.empty()) {
        SectorSpec sp = io::sector_from(io::read_file(o.spec));
        s.cone = sp.cone;
        if (sp.path) {
            auto t = sp.path->truncate(6);
            s.primal = t.primal_support();
            s.dual = t.dual_support();
        }
    }
    if (!o.s1.empty() && !o.s2.empty()) {
        SectorSpec a = io::sector_from(io::read_file(o.s1)), b = io::sector_from(io::read_file(o.s2));
        BraidResult r = braiding_phase(as_composed(a), as_composed(b), load_frame(o));
        for (const auto& loop : r.loops)
            for (const auto& [bd, l] : loop.letters()) (l == Letter::X ? s.dual : s.primal).insert(bd);
        for (const auto& c : r.crossings) s.crossings.insert(c);
    }
    render::Viewport v = render::fit(s);
    if (!o.viewport.empty()) {
        json j = json::parse("[" + o.viewport + "]", nullptr, false);
        if (j.is_discarded() || !j.is_array() || j.size() != 4) throw io::InputError("viewport must be x0,y0,x1,y1");
        v = {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(), j[3].get<std::int64_t>()};
    }
    std::cout << (o.format == "svg" ? render::svg(s, v) : render::ascii(s, v));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for the planar toric code: vacuum values, strings, sectors, braiding."};
    app.require_subcommand(1, 1);
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"auto", "json", "text", "svg"}));
    app.add_option("--frame", o.frame_file, "Frame JSON (overrides ANYONLAB_FRAME)");
    app.add_option("--seed", o.seed, "Seed for randomized solvers");

    auto* eval = app.add_subcommand("eval", "Vacuum expectation of an operator");
    eval->add_option("--op", o.op)->required();

    auto* str = app.add_subcommand("string", "String operator along a finite path");
    str->add_option("--path", o.path)->required();
    str->add_option("--type", o.type)->check(CLI::IsMember({"X", "Y", "Z"}));

    auto* def = app.add_subcommand("deform", "Move a path across a plaquette (primal) or star (dual)");
    def->add_option("--path", o.path)->required();
    def->add_option("--plaq", o.plaq, "x,y")->required();

    auto* sector = app.add_subcommand("sector", "Sector operations");
    sector->require_subcommand(1, 1);
    auto* seval = sector->add_subcommand("eval", "Excitation-state expectation");
    seval->add_option("--spec", o.spec)->required();
    seval->add_option("--op", o.op)->required();

    auto* syn = app.add_subcommand("syndrome", "Stars and plaquettes anticommuting with a monomial");
    syn->add_option("--op", o.op)->required();

    auto* dist = app.add_subcommand("distinguish", "Loop operator separating two sectors");
    dist->add_option("--spec", o.spec)->required();
    dist->add_option("--spec2", o.spec2, "Second sector (default: vacuum)");
    dist->add_option("--exclude", o.exclude, "Region JSON the loop must avoid");

    auto* braid = app.add_subcommand("braid", "Braiding sign of two sectors");
    braid->add_option("--s1", o.s1)->required();
    braid->add_option("--s2", o.s2)->required();

    auto* tw = app.add_subcommand("twist", "Twist of a sector label");
    tw->add_option("--label", o.label)->required();

    auto* cat = app.add_subcommand("category", "Sector category data");
    cat->require_subcommand(1, 1);
    auto* tables = cat->add_subcommand("tables", "Fusion, braiding and twist tables");
    auto* verify = cat->add_subcommand("verify", "Compare with the representations of D(Z2)");

    auto* gap = app.add_subcommand("gap", "Spectral gap on a torus");
    gap->add_option("--torus", o.torus, "WxH")->required();

    auto* oracle = app.add_subcommand("oracle", "Projector-state expectation on an open patch");
    oracle->add_option("--patch", o.patch, "WxH")->required();
    oracle->add_option("--op", o.op)->required();

    auto* se = app.add_subcommand("string-energy", "Energy of a string state above the ground state");
    se->add_option("--patch", o.patch, "WxH")->required();
    se->add_option("--path", o.path)->required();
    se->add_option("--type", o.type)->check(CLI::IsMember({"X", "Y", "Z"}));

    auto* rd = app.add_subcommand("render", "ASCII or SVG lattice diagram");
    rd->add_option("--op", o.op);
    rd->add_option("--path", o.path);
    rd->add_option("--spec", o.spec, "Sector: draws its cone and the first steps of its path");
    rd->add_option("--s1", o.s1, "Braid trace: first sector");
    rd->add_option("--s2", o.s2, "Braid trace: second sector");
    rd->add_option("--viewport", o.viewport, "x0,y0,x1,y1");
    rd->add_option("--motif", o.motif, "star-plaquette");
    rd->add_flag("--syndrome", o.syndrome, "Mark defects");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*eval) cmd_eval(o);
        else if (*str) cmd_string(o);
        else if (*def) cmd_deform(o);
        else if (*seval) cmd_sector_eval(o);
        else if (*syn) cmd_syndrome(o);
        else if (*dist) cmd_distinguish(o);
        else if (*braid) cmd_braid(o);
        else if (*tw) cmd_twist(o);
        else if (*tables) cmd_category_tables(o);
        else if (*verify) cmd_category_verify(o);
        else if (*gap) cmd_gap(o);
        else if (*oracle) cmd_oracle(o);
        else if (*se) cmd_string_energy(o);
        else if (*rd) cmd_render(o);
    } catch (const io::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
