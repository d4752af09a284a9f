#pragma once

#include <variant>

#include <json.hpp>

#include "ptolemy/crossratio.hpp"
#include "ptolemy/isometry.hpp"

namespace ptolemy {

using ojson = nlohmann::ordered_json;

// Infinite values travel as the strings "inf" / "-inf"; everything finite is
// a plain JSON number. Decoders throw std::invalid_argument on bad input.
[[nodiscard]] ojson json_real(double x);
[[nodiscard]] double real_from_json(const ojson& j);

[[nodiscard]] ojson encode_scalar(const Scalar& s);
[[nodiscard]] Scalar decode_scalar(const ojson& j);
[[nodiscard]] Scalar decode_scalar(const ojson& j, Field expect);

// Finite points are objects, the point at infinity is the string "inf".
[[nodiscard]] ojson encode_boundary_point(const BoundaryPoint& p);
[[nodiscard]] BoundaryPoint decode_boundary_point(const ojson& j, Field f, int n);

[[nodiscard]] ojson encode_oct_point(const OctPoint& p);
[[nodiscard]] OctPoint decode_oct_point(const ojson& j);

using AnyQuadruple = std::variant<Quadruple, OctQuadruple>;

[[nodiscard]] ojson encode_quadruple(const Quadruple& q);
[[nodiscard]] ojson encode_quadruple(const OctQuadruple& q);
// Dispatches on the top-level "field" key.
[[nodiscard]] AnyQuadruple decode_quadruple(const ojson& j);

[[nodiscard]] ojson encode_motion(const Motion& m);
[[nodiscard]] Motion decode_motion(const ojson& j, Field f, int n);

}  // namespace ptolemy
