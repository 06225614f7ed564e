#ifndef POLYGRAPH_SERIALIZE_HPP
#define POLYGRAPH_SERIALIZE_HPP

#include <json.hpp>

#include "polygraph/bipoly.hpp"

namespace polygraph {

using json = nlohmann::json;

/// {"mode":"exact"|"float","coeffs":[[i,j,re,im],...]}; exact parts are
/// strings "p/q", float parts are numbers. Terms ordered by (i, j).
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const UniPoly<GaussRat>& p);
json to_json(const UniPoly<Complex>& p);

json complex_to_json(Complex z);

} // namespace polygraph

#endif
