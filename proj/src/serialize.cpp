#include "polygraph/serialize.hpp"

namespace polygraph {

json to_json(const Polynomial& p)
{
    json coeffs = json::array();
    if (p.is_exact()) {
        for (auto& [i, j, v] : p.exact().terms())
            coeffs.push_back({i, j, v.re.get_str(), v.im.get_str()});
    } else {
        for (auto& [i, j, v] : p.to_float().terms())
            coeffs.push_back({i, j, v.real(), v.imag()});
    }
    return {{"mode", p.mode()}, {"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const json& j)
{
    try {
        const std::string mode = j.at("mode").get<std::string>();
        if (mode == "exact") {
            std::vector<std::vector<GaussRat>> rows;
            for (const auto& t : j.at("coeffs")) {
                auto i = t.at(0).get<std::size_t>(), k = t.at(1).get<std::size_t>();
                if (rows.size() <= i)
                    rows.resize(i + 1);
                if (rows[i].size() <= k)
                    rows[i].resize(k + 1, GaussRat(0));
                rows[i][k] = GaussRat(GaussRat::parse_rational(t.at(2).get<std::string>()),
                                      GaussRat::parse_rational(t.at(3).get<std::string>()));
            }
            return Polynomial(ExactPoly(std::move(rows)));
        }
        if (mode == "float") {
            std::vector<std::vector<Complex>> rows;
            for (const auto& t : j.at("coeffs")) {
                auto i = t.at(0).get<std::size_t>(), k = t.at(1).get<std::size_t>();
                if (rows.size() <= i)
                    rows.resize(i + 1);
                if (rows[i].size() <= k)
                    rows[i].resize(k + 1, Complex(0.0, 0.0));
                rows[i][k] = Complex(t.at(2).get<double>(), t.at(3).get<double>());
                require_finite(rows[i][k], "polynomial JSON");
            }
            return Polynomial(FloatPoly(std::move(rows)));
        }
        throw DomainError("unknown polynomial mode '" + mode + "'");
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

json to_json(const UniPoly<GaussRat>& p)
{
    json out = json::array();
    for (const auto& v : p.coeffs())
        out.push_back({v.re.get_str(), v.im.get_str()});
    return out;
}

json to_json(const UniPoly<Complex>& p)
{
    json out = json::array();
    for (const auto& v : p.coeffs())
        out.push_back({v.real(), v.imag()});
    return out;
}

json complex_to_json(Complex z)
{
    // + 0.0 turns -0.0 into 0.0
    return {{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}};
}

} // namespace polygraph
