#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "antilinear/functional_model.hpp"
#include "antilinear/operator.hpp"
#include "antilinear/poly.hpp"
#include "antilinear/spectral_data.hpp"

namespace antilinear::io {

using Json = nlohmann::ordered_json;

// Complex numbers are [re, im] pairs everywhere. Parsers accept a bare
// number as a real value and throw ValidationError on malformed input.

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const ComplexPolynomial& p);
ComplexPolynomial polynomial_from_json(const Json& j);

Json to_json(const std::vector<ComplexPolynomial>& polys);
std::vector<ComplexPolynomial> polynomials_from_json(const Json& j);

/// {"nodes": [...], "weights": [...], "phases": [[re, im], ...]}
Json to_json(const SpectralData& data);
SpectralData spectral_data_from_json(const Json& j);

/// {"matrix": [[[re, im], ...], ...]} plus "cyclic" when it is not e_0.
Json to_json(const AntiLinearOperator& op);
AntiLinearOperator operator_from_json(const Json& j);

/// {"a": [...], "b": [[re, im], ...]}
Json to_json(const JacobiParameters& params);
JacobiParameters jacobi_from_json(const Json& j);

/// {"blocks": [{"node": j, "size": 1 | 2}, ...]}
Json layout_to_json(const ModelSpace& space);

/// Parses text, mapping syntax errors to ValidationError.
Json parse(const std::string& text);

/// Writes with fixed key order and every double at 17 significant digits, so
/// equal values always produce identical bytes.
void write(std::ostream& os, const Json& j, int indent = 2);
std::string dump(const Json& j, int indent = 2);

/// CSV with header s,w,re_psi,im_psi,class.
void write_spectral_csv(std::ostream& os, const SpectralData& data,
                        double tol_phase = kDefaultTolPhase);

/// CSV with header n,a,re_b,im_b,error where error is the distance to the
/// reference parameters (empty reference -> column omitted).
void write_coefficient_csv(std::ostream& os, const JacobiParameters& params,
                           const JacobiParameters& reference = {});

/// Generic numeric table with a header row; values at 17 significant digits.
void write_table_csv(std::ostream& os, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

std::string format_double(double x);

}  // namespace antilinear::io
