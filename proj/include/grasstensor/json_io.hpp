#ifndef GRASSTENSOR_JSON_IO_HPP
#define GRASSTENSOR_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "grasstensor/geometry.hpp"
#include "grasstensor/tensor3.hpp"

namespace grasstensor {

// File formats.  Setups:
//   { "k": int, "views": [ {"h": int, "P": [[rational]]} x3 ],
//     "profile": [a1, a2, a3] }
// with rational entries accepted as JSON integers, "p/q" strings or exact
// decimal strings.  Tensors:
//   { "dims": [n1, n2, n3], "entries": [...] }
// entries in (i,j,k) row-major order with k fastest; rationals are written
// as "p/q" strings, complex entries as doubles (or [re, im] when the
// imaginary part is nonzero).

using Json = nlohmann::json;

Rational rational_from_json(const Json& v);
Json rational_to_json(const Rational& v);

ProjectionSetup setup_from_json(const Json& j);
Json setup_to_json(const ProjectionSetup& setup);

Tensor3<Rational> rational_tensor_from_json(const Json& j);
Json tensor_to_json(const Tensor3<Rational>& t);
Json tensor_to_json(const Tensor3<Complex>& t);

Json matrix_to_json(const RationalMatrix& m);
Json matrix_to_json(const Matrix<Complex>& m);
RationalMatrix rational_matrix_from_json(const Json& j);

/// FNV-1a hash of the canonical serialization, as fixed-width hex.  Used in
/// build sidecars so tensor files can be traced back to their setup.
std::string setup_hash(const ProjectionSetup& setup);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace grasstensor

#endif
