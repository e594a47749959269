#ifndef GERMKIT_IO_HPP
#define GERMKIT_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "germkit/coarse.hpp"
#include "germkit/germ.hpp"
#include "germkit/inverse_monoid.hpp"

namespace germkit {

/// Accepts {"elements", "table", "zero", "one"} or {"points": n} for I(X).
/// InputError on malformed documents.
FiniteInverseMonoid monoid_from_json(const nlohmann::json& j,
                                     std::size_t element_cap = kDefaultElementCap,
                                     std::size_t point_cap = kDefaultPointCap);
nlohmann::ordered_json monoid_to_json(const FiniteInverseMonoid& s);

/// Accepts {"points", "edges"} or {"points", "dist", "radius"}.
CoarseSpace coarse_space_from_json(const nlohmann::json& j);

/// Units as nodes labelled by atom name, arrows as edges labelled by the
/// canonical representative. Nodes and edges follow canonical order.
void write_dot(std::ostream& os, const GermGroupoid& g);
/// {"units": [...], "arrows": [{"src", "dst", "label"}], "composition": [[i, j, k]]}.
nlohmann::ordered_json groupoid_to_json(const GermGroupoid& g);

std::string read_file(const std::string& path);
/// Parses a file as JSON; InputError with the path on failure.
nlohmann::json read_json_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace germkit

#endif // GERMKIT_IO_HPP
