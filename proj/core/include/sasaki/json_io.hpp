#ifndef SASAKI_JSON_IO_HPP
#define SASAKI_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "sasaki/checks.hpp"

namespace sasaki {

using ojson = nlohmann::ordered_json;

/// Every floating value in a report is rendered as a fixed "%.12e" string so
/// identical configs produce byte-identical documents.
std::string format_sci(double v);
ojson jnum(double v);

ojson to_json(const CheckReport& c);
ojson to_json(const CheckList& l);
ojson to_json(const Params& p);
ojson to_json(const PointModel& m);  // {n, alpha, delta, frame convention, phi row-major}
ojson to_json(const SpectrumReport& r);
ojson to_json(const EinsteinClassification& c);
ojson to_json(const EinsteinEquivalenceReport& r);
ojson to_json(const PositivityCertificate& c);
ojson to_json(const CisbigResult& r);
ojson matrix_to_json(const Matrix& m);  // dense row-major

/// Structure-constant document {dim, triples: [[i,j,k,c]...], sp1_indices,
/// g1_indices, h_indices}; built-in models are addressed by name elsewhere.
LieModel lie_model_from_json(const ojson& doc, double alpha, double delta);

/// Dense symmetric operator from {"dim2": N, "mat": row-major} or a bare
/// row-major nested array.
SymOp symop_from_json(const ojson& doc, int expected_dim2);

}  // namespace sasaki

#endif
