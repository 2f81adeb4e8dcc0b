#include <freeprob/json_io.hpp>

#include <set>

#include <freeprob/errors.hpp>

namespace freeprob::json_io
{

namespace
{

int get_int(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
        throw ValidationError(std::string("expected an integer field '") + key + "'");
    }
    return j.at(key).get<int>();
}

} // namespace

Rational rational_from_json(const json& j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    throw ValidationError("rational values must be strings like \"p/q\"");
}

json to_json(const Word& w)
{
    return json(std::vector<int>(w.begin(), w.end()));
}

Word word_from_json(const json& j)
{
    if (!j.is_array()) {
        throw ValidationError("a word must be an array of letters");
    }
    std::vector<int> letters;
    for (const auto& x : j) {
        if (!x.is_number_integer()) {
            throw ValidationError("word letters must be integers");
        }
        letters.push_back(x.get<int>());
    }
    return Word(std::move(letters));
}

json to_json(const NCSeries& f)
{
    json coeffs = json::array();
    for (const auto& [w, c] : f.terms()) {
        coeffs.push_back({{"word", to_json(w)}, {"value", to_string(c)}});
    }
    return {{"s", f.alphabet_size()}, {"maxdeg", f.max_degree()}, {"coeffs", coeffs}};
}

NCSeries series_from_json(const json& j)
{
    NCSeries f(get_int(j, "s"), get_int(j, "maxdeg"));
    if (!j.contains("coeffs")) {
        return f;
    }
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array()) {
        throw ValidationError("'coeffs' must be an array");
    }
    std::set<Word> seen;
    for (const auto& entry : coeffs) {
        if (!entry.is_object() || !entry.contains("word") || !entry.contains("value")) {
            throw ValidationError("each coefficient needs 'word' and 'value'");
        }
        auto w = word_from_json(entry.at("word"));
        if (!seen.insert(w).second) {
            throw ValidationError("duplicate word " + to_string(w));
        }
        f.set(w, rational_from_json(entry.at("value")));
    }
    return f;
}

json to_json(const NCPartition& p)
{
    json out = json::array();
    for (const auto& b : p.blocks()) {
        out.push_back(b);
    }
    return out;
}

NCPartition partition_from_json(const json& j, int n)
{
    if (!j.is_array()) {
        throw ValidationError("a partition must be an array of blocks");
    }
    std::vector<Block> blocks;
    int largest = 0;
    for (const auto& b : j) {
        if (!b.is_array()) {
            throw ValidationError("each block must be an array");
        }
        Block block;
        for (const auto& x : b) {
            if (!x.is_number_integer()) {
                throw ValidationError("block elements must be integers");
            }
            block.push_back(x.get<int>());
            largest = std::max(largest, block.back());
        }
        blocks.push_back(std::move(block));
    }
    return NCPartition(n > 0 ? n : largest, std::move(blocks));
}

json to_json(const PowerSeries1& p)
{
    json out = json::array();
    for (const auto& c : p.coeffs()) {
        out.push_back(to_string(c));
    }
    return out;
}

PowerSeries1 power_series_from_json(const json& j)
{
    if (!j.is_array() || j.empty()) {
        throw ValidationError("a one-variable series is a non-empty array of coefficients");
    }
    std::vector<Rational> coeffs;
    for (const auto& x : j) {
        coeffs.push_back(rational_from_json(x));
    }
    return PowerSeries1(std::move(coeffs));
}

json to_json(const RationalMatrix& m, const std::vector<std::string>& basis)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back(to_string(m(i, k)));
        }
        rows.push_back(std::move(row));
    }
    json out = {{"rows", rows}};
    if (!basis.empty()) {
        out["basis"] = basis;
    }
    return out;
}

RationalMatrix matrix_from_json(const json& j)
{
    const json& rows = j.is_object() && j.contains("rows") ? j.at("rows") : j;
    if (!rows.is_array()) {
        throw ValidationError("a matrix is an array of rows");
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    RationalMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = rows.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw ValidationError("matrix must be square");
        }
        for (Eigen::Index k = 0; k < n; ++k) {
            m(i, k) = rational_from_json(row.at(static_cast<std::size_t>(k)));
        }
    }
    return m;
}

json to_json(const CoordPoly& p)
{
    return {{"text", to_string(p)}, {"terms", p.terms().size()}};
}

json to_json(const TensorPoly& t)
{
    return {{"text", to_string(t)}, {"terms", t.size()}};
}

json parse(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace freeprob::json_io
