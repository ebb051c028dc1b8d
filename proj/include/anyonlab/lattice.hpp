#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace anyonlab {

// Raised when an input violates a documented precondition.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    auto operator<=>(const Point&) const = default;
    Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    Point operator-(Point o) const { return {x - o.x, y - o.y}; }
    Point operator-() const { return {-x, -y}; }
};

// Vertices are stored at their coordinates, plaquettes at their lower-left corner.
using Vertex = Point;
using Plaquette = Point;

enum class Orient : std::uint8_t { H, V };

struct Bond {
    Point o;
    Orient d = Orient::H;
    auto operator<=>(const Bond&) const = default;
};

using BondSet = std::set<Bond>;

inline Bond H(std::int64_t x, std::int64_t y) { return {{x, y}, Orient::H}; }
inline Bond V(std::int64_t x, std::int64_t y) { return {{x, y}, Orient::V}; }

std::array<Point, 2> endpoints(const Bond& b);
// The two plaquettes having b on their boundary.
std::array<Plaquette, 2> faces(const Bond& b);

std::array<Bond, 4> star(Vertex v);
std::array<Bond, 4> plaq(Plaquette p);
bool is_corner(Vertex v, Plaquette p);

Bond translate(const Bond& b, Point t);
BondSet translate(const BondSet& s, Point t);

std::string to_string(const Bond& b);

enum class Dir : std::uint8_t { PX, MX, PY, MY };

Point unit(Dir d);
Dir opposite(Dir d);
// Bond used by a primal step from vertex v.
Bond primal_step(Vertex v, Dir d);
// Bond crossed by a dual step out of plaquette p.
Bond dual_step(Plaquette p, Dir d);

struct Site {
    enum class Kind : std::uint8_t { Vertex, Plaquette, Combined };
    Kind kind = Kind::Vertex;
    Vertex v;
    Plaquette p;

    static Site vertex(Vertex v);
    static Site plaquette(Plaquette p);
    static Site combined(Vertex v, Plaquette p);
    bool operator==(const Site&) const = default;
};

enum class PathKind : std::uint8_t { Primal, Dual, Ribbon };

// A finite path. Primal paths walk vertices along bonds, dual paths walk
// plaquettes across bonds, ribbons carry one of each.
struct FinitePath {
    PathKind kind = PathKind::Primal;
    std::vector<Bond> primal;         // ordered bonds (Primal, Ribbon)
    std::vector<Plaquette> plaquettes; // visited plaquettes, size = crossed+1 (Dual, Ribbon)
    std::vector<Bond> crossed;        // crossed bonds (Dual, Ribbon)
    Site start;
    Site end;

    static FinitePath primal_walk(Vertex from, const std::vector<Dir>& steps);
    static FinitePath dual_walk(Plaquette from, const std::vector<Dir>& steps);
    static FinitePath ribbon(const FinitePath& primal, const FinitePath& dual);
    // Builds a primal path from an ordered bond list; consecutive bonds must share a vertex.
    static FinitePath from_bonds(Vertex from, const std::vector<Bond>& bonds);
    // Builds a dual path from an ordered plaquette list of adjacent plaquettes.
    static FinitePath from_plaquettes(const std::vector<Plaquette>& ps);

    std::size_t length() const;
    // Bonds with odd multiplicity: the support a string operator acts on.
    BondSet primal_support() const;
    BondSet dual_support() const;
    BondSet support() const;
    bool self_avoiding() const;
};

FinitePath concat(const FinitePath& a, const FinitePath& b);
FinitePath reversed(const FinitePath& p);
FinitePath translate(const FinitePath& p, Point t);

// A walk that follows a finite prefix of steps and then a straight ray forever.
struct Walk {
    Point start;
    std::vector<Dir> prefix;
    Dir ray = Dir::PX;

    Dir step(std::size_t i) const { return i < prefix.size() ? prefix[i] : ray; }
    // Position after i steps.
    Point position(std::size_t i) const;
};

struct SemiInfinitePath {
    PathKind kind = PathKind::Primal;
    Site start;
    Walk primal; // used by Primal and Ribbon
    Walk dual;   // used by Dual and Ribbon

    static SemiInfinitePath primal_ray(Vertex v, std::vector<Dir> prefix, Dir ray);
    static SemiInfinitePath dual_ray(Plaquette p, std::vector<Dir> prefix, Dir ray);
    static SemiInfinitePath ribbon_ray(Vertex v, Plaquette p, std::vector<Dir> primal_prefix,
                                       std::vector<Dir> dual_prefix, Dir ray);

    FinitePath truncate(std::size_t n) const;
    // Smallest n such that every step with index >= n avoids the bonds of `region`.
    std::size_t stabilization_index(const BondSet& region) const;
    // Bonds of step i (one for primal/dual, two for ribbons).
    std::vector<Bond> step_bonds(std::size_t i) const;
};

SemiInfinitePath translate(const SemiInfinitePath& p, Point t);

struct Cone {
    Point apex;
    Point ray1; // clockwise boundary direction
    Point ray2; // counter-clockwise boundary direction

    // Rays may be given in either order; the opening angle must lie strictly in (0, pi).
    static Cone make(Point apex, Point r1, Point r2);
    bool contains_point(Point q) const;
    bool contains(const Bond& b) const;
    bool operator==(const Cone&) const = default;
};

Cone translate(const Cone& c, Point t);
bool cone_contains(const Cone& c, const Bond& b);
// Region-level intersection test of two closed cones.
bool cones_intersect(const Cone& a, const Cone& b);
// Some cone containing both, if their directions span less than pi.
std::optional<Cone> common_cone(const Cone& a, const Cone& b);

// All bonds with both endpoints in [x0,x1] x [y0,y1].
BondSet box_bonds(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1);

struct BBox {
    std::int64_t x0, y0, x1, y1;
    bool contains(Point q) const { return q.x >= x0 && q.x <= x1 && q.y >= y0 && q.y <= y1; }
};
std::optional<BBox> bounding_box(const BondSet& s);

} // namespace anyonlab
