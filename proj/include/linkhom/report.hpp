#pragma once

#include "linkhom/chambers.hpp"
#include "linkhom/face_ring.hpp"
#include "linkhom/length_vector.hpp"
#include "linkhom/morse.hpp"
#include "linkhom/morse_data.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace linkhom {

using json = nlohmann::json;

// Exact JSON forms: rationals as [numerator, denominator], scalars as arrays
// of eps-coefficient pairs, vectors as arrays of scalars. No floats anywhere.
json to_json(const Rational& r);
json to_json(const EpsRational& v);
json to_json(const LengthVector& lengths);
EpsRational eps_rational_from_json(const json& j);
LengthVector length_vector_from_json(const json& j);

json to_json(const SubsetMask& subset);               // sorted element list
json to_json(const ChamberDescriptor& desc);
json to_json(const FaceComplex& cx);
json to_json(const HomologyGroup& g);
json to_json(const MorseDataTable& table);
json to_json(const DistinguishVerdict& verdict);
json to_json(const SweepReport& report);

// Full per-vector report. Fields whose preconditions fail are null and a
// warning names the reason; nothing is fabricated. Throws NonGenericError for
// non-generic input.
json analysis_report(const LengthVector& lengths, int d);

// One atlas record per chamber: descriptor, representative, regularity, and
// the embedded analysis fields for the requested dimension (d = 0: none).
json chamber_record(const Chamber& chamber, int d);

// Flatten a JSON object into one CSV row; lists are joined with "|".
std::string csv_header(const json& record);
std::string csv_row(const json& record);

}  // namespace linkhom
