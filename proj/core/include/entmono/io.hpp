/* Shared file formats.
 *
 * Operator files are JSON documents
 *   {"dim_a": int, "dim_b": int, "entries": [[[re, im], ...], ...]}
 * in row-major composite-index order (k = i*dim_b + j). The parser rejects
 * hermiticity deviations above 1e-8 unless symmetrization is requested. */

#ifndef ENTMONO_IO_HPP
#define ENTMONO_IO_HPP

#include <string>

#include <json.hpp>

#include "entmono/channels.hpp"
#include "entmono/cones.hpp"
#include "entmono/monotones.hpp"
#include "entmono/operator.hpp"

namespace entmono {

inline constexpr double kParseHermiticityTol = 1e-8;

nlohmann::json operator_to_json(const HermitianOperator& h);
HermitianOperator operator_from_json(const nlohmann::json& j, bool symmetrize = false);

void write_operator_file(const std::string& path, const HermitianOperator& h);
HermitianOperator read_operator_file(const std::string& path, bool symmetrize = false);

nlohmann::json result_to_json(const MonotoneResult& r);
nlohmann::json verdict_to_json(const ConeVerdict& v);
nlohmann::json harness_to_json(const HarnessReport& r);
std::string harness_to_csv(const HarnessReport& r);

// Fixed-format double for byte-stable CSV output.
std::string format_double(double v);

}  // namespace entmono

#endif
