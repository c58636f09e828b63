#include "evoform/serialization.hpp"

#include <filesystem>

namespace evoform {

namespace {

void require(bool cond, const std::string& what, const std::string& pointer) {
  if (!cond) throw SchemaError(what, pointer);
}

}  // namespace

Json chart_to_json(const Chart& chart) {
  Json j;
  j["dimension"] = chart.dimension();
  j["names"] = chart.names();
  Json domain = Json::array();
  Json resolution = Json::array();
  for (int a = 0; a < chart.dimension(); ++a) {
    domain.push_back({chart.interval(a).lo, chart.interval(a).hi});
    resolution.push_back(chart.resolution(a));
  }
  j["domain"] = std::move(domain);
  j["resolution"] = std::move(resolution);
  return j;
}

ChartPtr chart_from_json(const nlohmann::json& j) {
  require(j.is_object(), "chart must be an object", "/chart");
  require(j.contains("dimension") && j["dimension"].is_number_integer(),
          "chart requires an integer dimension", "/chart/dimension");
  int n = j["dimension"].get<int>();
  require(n >= 1 && n <= kMaxDimension, "dimension must be in 1..8",
          "/chart/dimension");

  std::vector<Interval> box;
  if (j.contains("domain")) {
    require(j["domain"].is_array() && static_cast<int>(j["domain"].size()) == n,
            "domain must list one [lo, hi] per axis", "/chart/domain");
    for (const auto& iv : j["domain"]) {
      require(iv.is_array() && iv.size() == 2, "interval must be [lo, hi]",
              "/chart/domain");
      box.push_back({iv[0].get<double>(), iv[1].get<double>()});
    }
  } else {
    box.assign(n, Interval{0.0, 1.0});
  }

  std::vector<int> res(n, 11);
  if (j.contains("resolution")) {
    if (j["resolution"].is_number_integer()) {
      res.assign(n, j["resolution"].get<int>());
    } else {
      require(j["resolution"].is_array() &&
                  static_cast<int>(j["resolution"].size()) == n,
              "resolution must be an integer or one per axis",
              "/chart/resolution");
      res.clear();
      for (const auto& r : j["resolution"]) res.push_back(r.get<int>());
    }
  }

  std::vector<std::string> names;
  if (j.contains("names")) {
    require(j["names"].is_array() && static_cast<int>(j["names"].size()) == n,
            "names must list one identifier per axis", "/chart/names");
    for (const auto& s : j["names"]) names.push_back(s.get<std::string>());
  }
  try {
    return Chart::make(n, std::move(box), std::move(res), std::move(names));
  } catch (const DomainError& e) {
    throw SchemaError(e.what(), "/chart");
  }
}

Json form_to_json(const DifferentialForm& w) {
  Json j;
  j["degree"] = w.degree();
  Json entries = Json::array();
  for (const auto& [idx, field] : w.entries()) {
    Json e;
    Json indices = Json::array();
    for (int i : idx) indices.push_back(i + 1);
    e["indices"] = std::move(indices);
    if (field.is_expression())
      e["coeff"] = field.expression().to_string();
    else
      e["coeff"] = "<non-expression field>";
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

namespace {

ScalarField coeff_from_json(const nlohmann::json& c, const ChartPtr& chart,
                            const std::string& base_dir, const std::string& ptr) {
  if (c.is_string()) {
    try {
      return ScalarField::parse(chart, c.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(e.what(), ptr);
    }
  }
  if (c.is_number()) return ScalarField::constant(chart, c.get<double>());
  if (c.is_object() && c.contains("grid")) {
    std::filesystem::path path = c["grid"].get<std::string>();
    if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
    try {
      return ScalarField::from_grid(chart, GridData::load_csv_file(path.string()));
    } catch (const DomainError& e) {
      throw SchemaError(e.what(), ptr);
    }
  }
  throw SchemaError("coefficient must be an expression string, number, or {grid: path}",
                    ptr);
}

}  // namespace

DifferentialForm form_from_json(const nlohmann::json& j, ChartPtr chart,
                                const std::string& base_dir) {
  require(j.is_object() && j.contains("degree"), "form requires a degree", "/degree");
  int degree = j["degree"].get<int>();
  require(degree >= 0 && degree <= chart->dimension(),
          "form degree must be in 0..n", "/degree");
  DifferentialForm w(chart, degree);
  if (!j.contains("entries")) return w;
  require(j["entries"].is_array(), "entries must be an array", "/entries");
  int count = 0;
  for (const auto& e : j["entries"]) {
    std::string ptr = "/entries/" + std::to_string(count++);
    require(e.is_object() && e.contains("indices") && e.contains("coeff"),
            "entry requires indices and coeff", ptr);
    std::vector<int> idx;
    for (const auto& i : e["indices"]) {
      int v = i.get<int>();
      require(v >= 1 && v <= chart->dimension(), "index out of range 1..n",
              ptr + "/indices");
      idx.push_back(v - 1);
    }
    require(static_cast<int>(idx.size()) == degree,
            "index count must equal the degree", ptr + "/indices");
    w.add_term(std::move(idx), coeff_from_json(e["coeff"], chart, base_dir,
                                               ptr + "/coeff"));
  }
  return w;
}

Json connection_to_json(const Connection& c) {
  Json j;
  Json entries = Json::array();
  for (const auto& [key, field] : c.entries()) {
    auto [sigma, beta, alpha] = key;
    Json e;
    e["sigma"] = sigma + 1;
    e["beta"] = beta + 1;
    e["alpha"] = alpha + 1;
    e["coeff"] = field.is_expression() ? field.expression().to_string()
                                       : "<non-expression field>";
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::shared_ptr<Connection> connection_from_json(const nlohmann::json& j,
                                                 ChartPtr chart) {
  auto conn = std::make_shared<Connection>(chart);
  if (j.is_null()) return conn;
  require(j.is_object(), "connection must be an object", "/connection");
  if (!j.contains("entries")) return conn;
  int count = 0;
  for (const auto& e : j["entries"]) {
    std::string ptr = "/connection/entries/" + std::to_string(count++);
    require(e.is_object() && e.contains("sigma") && e.contains("beta") &&
                e.contains("alpha") && e.contains("coeff"),
            "connection entry requires sigma, beta, alpha, coeff", ptr);
    int s = e["sigma"].get<int>(), b = e["beta"].get<int>(), a = e["alpha"].get<int>();
    int n = chart->dimension();
    require(s >= 1 && s <= n && b >= 1 && b <= n && a >= 1 && a <= n,
            "connection index out of range 1..n", ptr);
    conn->set(s - 1, b - 1, a - 1,
              coeff_from_json(e["coeff"], chart, ".", ptr + "/coeff"));
  }
  return conn;
}

}  // namespace evoform
