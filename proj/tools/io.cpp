#include "io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace anyonlab::io {

namespace {

void only_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
    if (!j.is_object()) throw InputError(std::string(what) + ": expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, _] : j.items())
        if (!ok.count(k)) throw InputError(std::string(what) + ": unknown field '" + k + "'");
}

const json& field(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

std::int64_t integer(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
    return j.get<std::int64_t>();
}

std::vector<Dir> dirs_from(const json& j) {
    if (!j.is_array()) throw InputError("steps: expected an array");
    std::vector<Dir> out;
    for (const auto& s : j) out.push_back(dir_from(s));
    return out;
}

json dirs_json(const std::vector<Dir>& ds) {
    json a = json::array();
    for (Dir d : ds) a.push_back(dir_name(d));
    return a;
}

std::vector<Dir> primal_steps(const FinitePath& p) {
    std::vector<Dir> out;
    Vertex cur = p.start.v;
    for (const auto& b : p.primal) {
        auto e = endpoints(b);
        Vertex next = e[0] == cur ? e[1] : e[0];
        Point d = next - cur;
        out.push_back(d.x == 1 ? Dir::PX : d.x == -1 ? Dir::MX : d.y == 1 ? Dir::PY : Dir::MY);
        cur = next;
    }
    return out;
}

std::vector<Dir> dual_steps(const FinitePath& p) {
    std::vector<Dir> out;
    for (std::size_t i = 0; i + 1 < p.plaquettes.size(); ++i) {
        Point d = p.plaquettes[i + 1] - p.plaquettes[i];
        out.push_back(d.x == 1 ? Dir::PX : d.x == -1 ? Dir::MX : d.y == 1 ? Dir::PY : Dir::MY);
    }
    return out;
}

std::string kind_name(PathKind k) {
    switch (k) {
    case PathKind::Primal: return "primal";
    case PathKind::Dual: return "dual";
    case PathKind::Ribbon: return "ribbon";
    }
    return "?";
}

PathKind kind_from(const json& j) {
    std::string s = j.is_string() ? j.get<std::string>() : "";
    if (s == "primal") return PathKind::Primal;
    if (s == "dual") return PathKind::Dual;
    if (s == "ribbon") return PathKind::Ribbon;
    throw InputError("path kind must be primal, dual or ribbon");
}

json letters_json(const LetterMap& m) {
    json a = json::array();
    for (const auto& [b, l] : m) a.push_back({{"bond", to_json(b)}, {"l", std::string(1, letter_char(l))}});
    return a;
}

LetterMap letters_from(const json& j) {
    if (!j.is_array()) throw InputError("letters: expected an array");
    LetterMap m;
    for (const auto& e : j) {
        only_keys(e, {"bond", "l"}, "letter");
        const auto& l = field(e, "l", "letter");
        if (!l.is_string() || l.get<std::string>().size() != 1) throw InputError("letter: l must be X, Y or Z");
        char c = l.get<std::string>()[0];
        if (c != 'X' && c != 'Y' && c != 'Z') throw InputError("letter: l must be X, Y or Z");
        Bond b = bond_from(field(e, "bond", "letter"));
        if (m.count(b)) throw InputError("letters: bond " + to_string(b) + " appears twice");
        m[b] = letter_from_char(c);
    }
    return m;
}

} // namespace

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

json to_json(const Point& p) { return json::array({p.x, p.y}); }

json to_json(const Bond& b) { return {{"x", b.o.x}, {"y", b.o.y}, {"o", b.d == Orient::H ? "H" : "V"}}; }

std::string phase_name(int k) {
    static const char* names[4] = {"+1", "+i", "-1", "-i"};
    return names[((k % 4) + 4) % 4];
}

json to_json(const PauliOperator& p) { return {{"phase", phase_name(p.phase())}, {"letters", letters_json(p.letters())}}; }

json to_json(const QuasiLocalOperator& q) {
    json terms = json::array();
    for (const auto& [m, c] : q.terms())
        terms.push_back({{"coeff", {c.re.num(), c.re.den(), c.im.num(), c.im.den()}}, {"letters", letters_json(m)}});
    return {{"terms", terms}};
}

json to_json(const FinitePath& p) {
    json j{{"kind", kind_name(p.kind)}};
    switch (p.kind) {
    case PathKind::Primal:
        j["start"] = to_json(p.start.v);
        j["steps"] = dirs_json(primal_steps(p));
        break;
    case PathKind::Dual:
        j["start"] = to_json(p.start.p);
        j["steps"] = dirs_json(dual_steps(p));
        break;
    case PathKind::Ribbon:
        j["start"] = {{"v", to_json(p.start.v)}, {"p", to_json(p.start.p)}};
        j["steps"] = {{"primal", dirs_json(primal_steps(p))}, {"dual", dirs_json(dual_steps(p))}};
        break;
    }
    return j;
}

json to_json(const SemiInfinitePath& p) {
    json j{{"kind", kind_name(p.kind)}};
    switch (p.kind) {
    case PathKind::Primal:
        j["start"] = to_json(p.primal.start);
        j["steps"] = dirs_json(p.primal.prefix);
        j["ray"] = dir_name(p.primal.ray);
        break;
    case PathKind::Dual:
        j["start"] = to_json(p.dual.start);
        j["steps"] = dirs_json(p.dual.prefix);
        j["ray"] = dir_name(p.dual.ray);
        break;
    case PathKind::Ribbon:
        j["start"] = {{"v", to_json(p.primal.start)}, {"p", to_json(p.dual.start)}};
        j["steps"] = {{"primal", dirs_json(p.primal.prefix)}, {"dual", dirs_json(p.dual.prefix)}};
        j["ray"] = dir_name(p.primal.ray);
        break;
    }
    return j;
}

json to_json(const Cone& c) { return {{"apex", to_json(c.apex)}, {"ray1", to_json(c.ray1)}, {"ray2", to_json(c.ray2)}}; }

json to_json(const SectorSpec& s) {
    json j{{"label", label_name(s.label)}};
    if (s.path) j["path"] = to_json(*s.path);
    if (s.cone) j["cone"] = to_json(*s.cone);
    return j;
}

json to_json(const ConeFrame& f) { return {{"forbidden", to_json(f.forbidden)}}; }

json to_json(const Syndrome& s) {
    json st = json::array(), pl = json::array();
    for (const auto& v : s.stars) st.push_back(to_json(v));
    for (const auto& p : s.plaquettes) pl.push_back(to_json(p));
    return {{"stars", st}, {"plaquettes", pl}, {"size", s.size()}};
}

json to_json(const CatReport& r) {
    return {{"fusion_match", r.fusion_match},
            {"braiding_match", r.braiding_match},
            {"twist_match", r.twist_match},
            {"correspondence", r.correspondence},
            {"epsilon_xz", r.epsilon_xz},
            {"mismatches", r.mismatches},
            {"certified", r.all()}};
}

json to_json(const SpectrumResult& r) {
    return {{"e0", r.e0},
            {"gap", r.gap},
            {"degeneracy", r.degeneracy},
            {"levels", r.low},
            {"residual", r.residual},
            {"solver", r.dense ? "dense" : "lanczos"}};
}

json to_json(const RepObject& r) { return json(r.m); }

Point point_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("point: expected [x, y]");
    return {integer(j[0], "point"), integer(j[1], "point")};
}

Bond bond_from(const json& j) {
    only_keys(j, {"x", "y", "o"}, "bond");
    const auto& o = field(j, "o", "bond");
    if (!o.is_string() || (o != "H" && o != "V")) throw InputError("bond: o must be \"H\" or \"V\"");
    Point p{integer(field(j, "x", "bond"), "bond x"), integer(field(j, "y", "bond"), "bond y")};
    return {p, o == "H" ? Orient::H : Orient::V};
}

std::string dir_name(Dir d) {
    switch (d) {
    case Dir::PX: return "+x";
    case Dir::MX: return "-x";
    case Dir::PY: return "+y";
    case Dir::MY: return "-y";
    }
    return "?";
}

Dir dir_from(const json& j) {
    std::string s = j.is_string() ? j.get<std::string>() : "";
    if (s == "+x") return Dir::PX;
    if (s == "-x") return Dir::MX;
    if (s == "+y") return Dir::PY;
    if (s == "-y") return Dir::MY;
    throw InputError("step must be one of +x, -x, +y, -y");
}

PauliOperator pauli_from(const json& j) {
    only_keys(j, {"phase", "letters"}, "operator");
    int k = 0;
    if (j.contains("phase")) {
        const auto& ph = j["phase"];
        std::string s = ph.is_string() ? ph.get<std::string>() : "";
        if (s == "+1" || s == "1") k = 0;
        else if (s == "+i" || s == "i") k = 1;
        else if (s == "-1") k = 2;
        else if (s == "-i") k = 3;
        else throw InputError("operator: phase must be +1, -1, +i or -i");
    }
    return PauliOperator(k, letters_from(field(j, "letters", "operator")));
}

QuasiLocalOperator quasi_local_from(const json& j) {
    only_keys(j, {"terms"}, "combination");
    const auto& terms = field(j, "terms", "combination");
    if (!terms.is_array()) throw InputError("combination: terms must be an array");
    QuasiLocalOperator q;
    for (const auto& t : terms) {
        only_keys(t, {"coeff", "letters"}, "term");
        const auto& c = field(t, "coeff", "term");
        if (!c.is_array() || c.size() != 4) throw InputError("term: coeff must be [re_num, re_den, im_num, im_den]");
        std::int64_t v[4];
        for (int i = 0; i < 4; ++i) v[i] = integer(c[i], "coeff");
        if (v[1] == 0 || v[3] == 0) throw InputError("term: zero denominator");
        q = q + QuasiLocalOperator(PauliOperator(0, letters_from(field(t, "letters", "term"))),
                                   Gauss(Rational(v[0], v[1]), Rational(v[2], v[3])));
    }
    return q;
}

std::variant<PauliOperator, QuasiLocalOperator> operator_from(const json& j) {
    if (j.is_object() && j.contains("terms")) return quasi_local_from(j);
    return pauli_from(j);
}

FinitePath finite_path_from(const json& j) {
    only_keys(j, {"kind", "start", "steps"}, "path");
    PathKind k = kind_from(field(j, "kind", "path"));
    const auto& start = field(j, "start", "path");
    const auto& steps = field(j, "steps", "path");
    switch (k) {
    case PathKind::Primal: return FinitePath::primal_walk(point_from(start), dirs_from(steps));
    case PathKind::Dual: return FinitePath::dual_walk(point_from(start), dirs_from(steps));
    case PathKind::Ribbon: {
        only_keys(start, {"v", "p"}, "ribbon start");
        only_keys(steps, {"primal", "dual"}, "ribbon steps");
        Vertex v = point_from(field(start, "v", "ribbon start"));
        Plaquette p = point_from(field(start, "p", "ribbon start"));
        Site::combined(v, p);
        return FinitePath::ribbon(FinitePath::primal_walk(v, dirs_from(field(steps, "primal", "ribbon steps"))),
                                  FinitePath::dual_walk(p, dirs_from(field(steps, "dual", "ribbon steps"))));
    }
    }
    throw InputError("path: bad kind");
}

SemiInfinitePath semi_infinite_from(const json& j) {
    only_keys(j, {"kind", "start", "steps", "ray"}, "ray path");
    PathKind k = kind_from(field(j, "kind", "ray path"));
    const auto& start = field(j, "start", "ray path");
    Dir ray = dir_from(field(j, "ray", "ray path"));
    json steps = j.contains("steps") ? j["steps"] : json();
    switch (k) {
    case PathKind::Primal:
        return SemiInfinitePath::primal_ray(point_from(start), steps.is_null() ? std::vector<Dir>{} : dirs_from(steps), ray);
    case PathKind::Dual:
        return SemiInfinitePath::dual_ray(point_from(start), steps.is_null() ? std::vector<Dir>{} : dirs_from(steps), ray);
    case PathKind::Ribbon: {
        only_keys(start, {"v", "p"}, "ribbon start");
        std::vector<Dir> pp, dp;
        if (!steps.is_null()) {
            only_keys(steps, {"primal", "dual"}, "ribbon steps");
            if (steps.contains("primal")) pp = dirs_from(steps["primal"]);
            if (steps.contains("dual")) dp = dirs_from(steps["dual"]);
        }
        return SemiInfinitePath::ribbon_ray(point_from(field(start, "v", "ribbon start")),
                                            point_from(field(start, "p", "ribbon start")), pp, dp, ray);
    }
    }
    throw InputError("ray path: bad kind");
}

Cone cone_from(const json& j) {
    only_keys(j, {"apex", "ray1", "ray2"}, "cone");
    return Cone::make(point_from(field(j, "apex", "cone")), point_from(field(j, "ray1", "cone")),
                      point_from(field(j, "ray2", "cone")));
}

SectorSpec sector_from(const json& j) {
    only_keys(j, {"label", "path", "cone"}, "sector");
    const auto& l = field(j, "label", "sector");
    if (!l.is_string()) throw InputError("sector: label must be a string");
    Label label;
    try {
        label = parse_label(l.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (label == Label::One) {
        if (j.contains("path")) throw DomainError("the trivial sector takes no path");
        return SectorSpec::vacuum();
    }
    return SectorSpec::make(label, semi_infinite_from(field(j, "path", "sector")), cone_from(field(j, "cone", "sector")));
}

ConeFrame frame_from(const json& j) {
    only_keys(j, {"forbidden"}, "frame");
    return {cone_from(field(j, "forbidden", "frame"))};
}

BondSet region_from(const json& j) {
    only_keys(j, {"box", "bonds"}, "region");
    BondSet s;
    if (j.contains("box")) {
        const auto& b = j["box"];
        if (!b.is_array() || b.size() != 4) throw InputError("region: box must be [x0, y0, x1, y1]");
        s = box_bonds(integer(b[0], "box"), integer(b[1], "box"), integer(b[2], "box"), integer(b[3], "box"));
    }
    if (j.contains("bonds")) {
        if (!j["bonds"].is_array()) throw InputError("region: bonds must be an array");
        for (const auto& e : j["bonds"]) s.insert(bond_from(e));
    }
    return s;
}

std::string complex_str(std::complex<double> z) {
    auto clean = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
    std::ostringstream os;
    os.precision(12);
    double re = clean(z.real()), im = clean(z.imag());
    if (im == 0) os << re;
    else if (re == 0) os << im << "i";
    else os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
    return os.str();
}

} // namespace anyonlab::io
