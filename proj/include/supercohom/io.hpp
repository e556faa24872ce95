#ifndef SUPERCOHOM_IO_HPP
#define SUPERCOHOM_IO_HPP

#include "supercohom/cohomology.hpp"
#include "supercohom/cup.hpp"
#include "supercohom/superalgebra.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace supercohom {

using Json = nlohmann::ordered_json;

/// Reads {"name", "even_basis", "odd_basis", "brackets": [{"left","right","result":{name:"p/q"}}]}.
/// Basis order is even names then odd names. Unknown fields, unknown names
/// and malformed scalars throw InputError.
LieSuperalgebra parse_algebra_json(std::string_view text);
LieSuperalgebra load_algebra_file(const std::string& path);

/// Inverse of parse_algebra_json; lists every nonzero bracket with left <= right.
Json algebra_to_json(const LieSuperalgebra& alg);

Json cohomology_report_json(const CochainComplex& complex, const CohomologyReport& report);
Json cup_table_json(const CochainComplex& complex, const CupTable& table);

} // namespace supercohom

#endif
