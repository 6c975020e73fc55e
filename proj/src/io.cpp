#include "faberlab/io.hpp"

#include <sstream>

namespace faberlab {

namespace {

std::string csv_prefix(const std::string& extra_header) {
    if (extra_header.empty()) return {};
    std::string out;
    std::istringstream in(extra_header);
    std::string line;
    while (std::getline(in, line)) out += "# " + line + "\n";
    return out;
}

} // namespace

Json curve_to_json(const CurveSpec& spec) {
    switch (spec.kind()) {
    case CurveKind::Circle:
        return Json{{"kind", "circle"}, {"radius", spec.radius()}};
    case CurveKind::Ellipse:
        return Json{{"kind", "ellipse"}, {"a", spec.semi_axis_a()}, {"b", spec.semi_axis_b()}};
    case CurveKind::Custom:
        throw Error(ErrorKind::Config, "custom curves serialize as tabulated CSV, not JSON");
    }
    throw Error(ErrorKind::Config, "unknown curve kind");
}

CurveSpec curve_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "circle") return CurveSpec::circle(j.value("radius", 1.0));
    if (kind == "ellipse")
        return CurveSpec::ellipse(j.at("a").get<double>(), j.at("b").get<double>());
    throw Error(ErrorKind::Config, "unknown curve kind '" + kind + "'");
}

Json weight_to_json(const WeightSpec& w) {
    return Json{{"points", w.points}, {"alphas", w.alphas}, {"p", w.p}};
}

WeightSpec weight_from_json(const Json& j) {
    WeightSpec w;
    w.points = j.value("points", std::vector<double>{});
    w.alphas = j.value("alphas", std::vector<double>{});
    w.p = j.value("p", 2.0);
    if (w.points.size() != w.alphas.size())
        throw Error(ErrorKind::Config, "weight points and alphas differ in length");
    return w;
}

Json map_to_json(const LaurentMap& map) {
    auto pack = [](const std::vector<Complex>& v) {
        Json arr = Json::array();
        for (const auto& c : v) arr.push_back(Json::array({c.real(), c.imag()}));
        return arr;
    };
    return Json{{"direction", map.direction() == MapDirection::Phi ? "phi" : "psi"},
                {"truncation", map.truncation()},
                {"leading", map.leading()},
                {"roundtrip_residual", map.roundtrip_residual()},
                {"tail_estimate", map.tail_estimate()},
                {"curve", curve_to_json(map.curve())},
                {"coeffs", pack(map.coeffs())},
                {"inverse_coeffs", pack(map.inverse_coeffs())}};
}

Json faber_to_json(const FaberPolynomial& poly) {
    Json coeffs = Json::array();
    const int n = static_cast<int>(poly.coeffs.size());
    for (int i = 0; i < n; ++i) {
        const int degree = poly.side == FaberSide::Plus ? i : -(i + 1);
        coeffs.push_back(Json{{"degree", degree},
                              {"re", poly.coeffs[i].real()},
                              {"im", poly.coeffs[i].imag()}});
    }
    return Json{{"side", poly.side == FaberSide::Plus ? "plus" : "minus"},
                {"n", poly.n},
                {"p", poly.p},
                {"extraction_radius", poly.extraction_radius},
                {"residual", poly.residual},
                {"dropped_factor", Json::array({poly.dropped_factor.real(),
                                                poly.dropped_factor.imag()})},
                {"coeffs", coeffs}};
}

std::string faber_to_csv(const FaberPolynomial& poly, const std::string& extra_header) {
    std::ostringstream out;
    out.precision(17);
    out << csv_prefix(extra_header) << "degree,re,im\n";
    const int n = static_cast<int>(poly.coeffs.size());
    for (int i = 0; i < n; ++i) {
        const int degree = poly.side == FaberSide::Plus ? i : -(i + 1);
        out << degree << ',' << poly.coeffs[i].real() << ',' << poly.coeffs[i].imag() << '\n';
    }
    return out.str();
}

std::string boundary_to_csv(const BoundaryFunction& f, const std::string& extra_header) {
    std::ostringstream out;
    out.precision(17);
    out << csv_prefix(extra_header) << "s,re,im\n";
    for (int j = 0; j < f.size(); ++j)
        out << f.curve().nodes()[j].s << ',' << f[j].real() << ',' << f[j].imag() << '\n';
    return out.str();
}

BoundaryFunction boundary_from_csv(std::shared_ptr<const DiscretizedCurve> curve,
                                   const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::vector<Complex> samples;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 's') continue;
        std::istringstream row(line);
        std::string cell;
        double vals[3] = {0, 0, 0};
        for (int c = 0; c < 3 && std::getline(row, cell, ','); ++c) vals[c] = std::stod(cell);
        samples.emplace_back(vals[1], vals[2]);
    }
    if (static_cast<int>(samples.size()) != curve->size())
        throw Error(ErrorKind::Sizing, "CSV rows do not match the curve grid");
    return BoundaryFunction(std::move(curve), std::move(samples));
}

std::string residuals_to_csv(const std::vector<double>& residuals,
                             const std::string& extra_header) {
    std::ostringstream out;
    out.precision(17);
    out << csv_prefix(extra_header) << "M,residual\n";
    for (size_t m = 0; m < residuals.size(); ++m) out << m << ',' << residuals[m] << '\n';
    return out.str();
}

} // namespace faberlab
