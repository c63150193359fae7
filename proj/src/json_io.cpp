#include "diffeo/json_io.hpp"

#include "diffeo/errors.hpp"

namespace diffeo {

Json series_to_json(const Series& series) {
    Json coefficients = Json::array();
    for (int n = 0; n <= series.order(); ++n)
        coefficients.push_back(Json{{"n", n}, {"poly", series.coeff(n).str()}});
    return Json{{"kind", series.kind() == SeriesKind::EGF ? "egf" : "ogf"},
                {"variable", "t"},
                {"truncation", series.order()},
                {"coefficients", std::move(coefficients)}};
}

Series series_from_json(const Json& json) {
    const std::string kind = json.at("kind").get<std::string>();
    if (kind != "egf" && kind != "ogf") throw ParseError("series kind must be 'egf' or 'ogf'");
    if (json.at("variable").get<std::string>() != "t") throw ParseError("series variable must be 't'");
    Series series(kind == "egf" ? SeriesKind::EGF : SeriesKind::OGF, json.at("truncation").get<int>());
    for (const auto& entry : json.at("coefficients"))
        series.set_coeff(entry.at("n").get<int>(), Polynomial::parse(entry.at("poly").get<std::string>()));
    return series;
}

Json report_to_json(const Report& report) {
    Json items = Json::array();
    for (const auto& item : report.items) {
        Json row{{"name", item.name}, {"ok", item.ok}};
        if (!item.ok) {
            row["lhs"] = item.lhs;
            row["rhs"] = item.rhs;
        }
        items.push_back(std::move(row));
    }
    return Json{{"suite", report.suite},
                {"passed", report.all_ok()},
                {"checks", report.items.size()},
                {"items", std::move(items)}};
}

}  // namespace diffeo
