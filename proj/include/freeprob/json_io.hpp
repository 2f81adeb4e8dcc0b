#ifndef FREEPROB_JSON_IO_HPP
#define FREEPROB_JSON_IO_HPP

#include <json.hpp>

#include <freeprob/hopf.hpp>
#include <freeprob/ncpart.hpp>
#include <freeprob/onedim.hpp>
#include <freeprob/repr.hpp>
#include <freeprob/series.hpp>

// JSON interchange. Rationals travel as exact strings ("p" or "p/q"); every
// reader throws ValidationError on malformed input.
namespace freeprob::json_io
{

using nlohmann::json;

Rational rational_from_json(const json& j);

// {"s": 2, "maxdeg": 3, "coeffs": [{"word": [1,2], "value": "1/2"}, ...]},
// words by length then lexicographically, zeros omitted.
json to_json(const NCSeries& f);
NCSeries series_from_json(const json& j);

json to_json(const Word& w);
Word word_from_json(const json& j);

// [[1,4],[2,3]]
json to_json(const NCPartition& p);
// n = 0 infers the ground size from the largest element.
NCPartition partition_from_json(const json& j, int n = 0);

// ["1", "-1", "2"], index = degree.
json to_json(const PowerSeries1& p);
PowerSeries1 power_series_from_json(const json& j);

// {"basis": [...], "rows": [["1","0"],["0","1"]]}; the basis manifest is
// omitted when `basis` is empty.
json to_json(const RationalMatrix& m, const std::vector<std::string>& basis = {});
RationalMatrix matrix_from_json(const json& j);

// {"text": "...", "terms": n}
json to_json(const CoordPoly& p);
json to_json(const TensorPoly& t);

// Parses text, mapping parse errors to ValidationError.
json parse(std::string_view text);

} // namespace freeprob::json_io

#endif
