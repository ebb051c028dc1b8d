#pragma once

#include "anyonlab/braiding.hpp"
#include "anyonlab/double.hpp"
#include "anyonlab/spectral.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

namespace anyonlab::io {

using nlohmann::json;

// Malformed input: wrong shape, unknown field, bad token. Maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_file(const std::string& path);

json to_json(const Point& p);
json to_json(const Bond& b);
json to_json(const PauliOperator& p);
json to_json(const QuasiLocalOperator& q);
json to_json(const FinitePath& p);
json to_json(const SemiInfinitePath& p);
json to_json(const Cone& c);
json to_json(const SectorSpec& s);
json to_json(const ConeFrame& f);
json to_json(const Syndrome& s);
json to_json(const CatReport& r);
json to_json(const SpectrumResult& r);
json to_json(const RepObject& r);

Point point_from(const json& j);
Bond bond_from(const json& j);
Dir dir_from(const json& j);
std::string dir_name(Dir d);
PauliOperator pauli_from(const json& j);
QuasiLocalOperator quasi_local_from(const json& j);
// Either encoding; monomials come back as a one-term combination.
std::variant<PauliOperator, QuasiLocalOperator> operator_from(const json& j);
FinitePath finite_path_from(const json& j);
SemiInfinitePath semi_infinite_from(const json& j);
Cone cone_from(const json& j);
SectorSpec sector_from(const json& j);
ConeFrame frame_from(const json& j);
// {"box":[x0,y0,x1,y1]} or {"bonds":[...]}.
BondSet region_from(const json& j);

std::string phase_name(int k);
std::string complex_str(std::complex<double> z);

} // namespace anyonlab::io
