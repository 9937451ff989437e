#include "deltakit/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace deltakit {

Json map_to_json(const MonotoneMap& f) {
  return Json{{"dom", f.dom()}, {"cod", f.cod()}, {"values", f.values()}};
}

MonotoneMap map_from_json(const Json& j) {
  if (j.contains("id")) return MonotoneMap::identity(j.at("id").get<int>());
  if (j.contains("d")) {
    const auto pair = j.at("d");
    return MonotoneMap::coface(pair.at(0).get<int>(), pair.at(1).get<int>());
  }
  if (j.contains("s")) {
    const auto pair = j.at("s");
    return MonotoneMap::codegeneracy(pair.at(0).get<int>(), pair.at(1).get<int>());
  }
  return MonotoneMap(j.at("dom").get<int>(), j.at("cod").get<int>(),
                     j.at("values").get<std::vector<int>>());
}

Json span_to_json(const Span& s) {
  return Json{{"f", map_to_json(s.f)}, {"g", map_to_json(s.g)}};
}

Span span_from_json(const Json& j) {
  return Span(map_from_json(j.at("f")), map_from_json(j.at("g")));
}

Json square_to_json(const Square& q) {
  return Json{{"f", map_to_json(q.f)},
              {"g", map_to_json(q.g)},
              {"h", map_to_json(q.h)},
              {"k", map_to_json(q.k)}};
}

Square square_from_json(const Json& j) {
  return Square(map_from_json(j.at("f")), map_from_json(j.at("g")), map_from_json(j.at("h")),
                map_from_json(j.at("k")));
}

Json grid_to_json(const Grid& g) {
  Json cells = Json::array();
  for (const auto& row : g.cells) {
    Json jrow = Json::array();
    for (const auto& sq : row) jrow.push_back(square_to_json(sq));
    cells.push_back(jrow);
  }
  return Json{{"rows", g.rows()}, {"cols", g.cols()}, {"cells", cells}};
}

Grid grid_from_json(const Json& j) {
  std::vector<std::vector<Square>> cells;
  for (const auto& jrow : j.at("cells")) {
    std::vector<Square> row;
    for (const auto& jsq : jrow) row.push_back(square_from_json(jsq));
    cells.push_back(std::move(row));
  }
  return Grid(std::move(cells));
}

Json decomposition_to_json(const VeeDecomposition& dec) {
  return Json{{"base", map_to_json(dec.base)}};
}

VeeDecomposition decomposition_from_json(const Json& j) {
  return VeeDecomposition(map_from_json(j.at("base")));
}

Json family_to_json(const VeeFamily& fam) {
  Json parts = Json::array();
  for (const auto& part : fam.parts) parts.push_back(map_to_json(part));
  return Json{{"parts", parts}};
}

VeeFamily family_from_json(const Json& j) {
  std::vector<MonotoneMap> parts;
  for (const auto& part : j.at("parts")) parts.push_back(map_from_json(part));
  return VeeFamily(std::move(parts));
}

Json complex_to_json(const SimplicialComplex& S, bool directed) {
  Json facets = Json::array();
  for (const auto& facet : S.facets()) facets.push_back(std::vector<int>(facet.begin(), facet.end()));
  return Json{{"ground", S.ground_size()}, {"facets", facets}, {"directed", directed}};
}

std::pair<SimplicialComplex, bool> complex_from_json(const Json& j) {
  std::vector<std::set<int>> facets;
  for (const auto& facet : j.at("facets")) {
    std::set<int> s;
    for (const auto& v : facet) s.insert(v.get<int>());
    facets.push_back(std::move(s));
  }
  const bool directed = j.value("directed", false);
  return {SimplicialComplex(j.at("ground").get<int>(), std::move(facets)), directed};
}

Json rip_order_to_json(const RipOrder& order) {
  Json facets = Json::array();
  for (const auto& facet : order.facets)
    facets.push_back(std::vector<int>(facet.begin(), facet.end()));
  return Json{{"facets", facets}, {"witness", order.witness}};
}

Json sset_to_json(const TruncatedSSet& X) {
  Json cells = Json::object();
  for (int n = 0; n <= X.dim(); ++n) cells[std::to_string(n)] = X.cells(n);
  Json faces = Json::object();
  for (int n = 1; n <= X.dim(); ++n)
    for (int i = 0; i <= n; ++i)
      faces[std::to_string(n) + "," + std::to_string(i)] = X.face_table(n, i);
  Json degeneracies = Json::object();
  for (int n = 0; n < X.dim(); ++n)
    for (int i = 0; i <= n; ++i)
      degeneracies[std::to_string(n) + "," + std::to_string(i)] = X.degeneracy_table(n, i);
  return Json{
      {"dim", X.dim()}, {"cells", cells}, {"faces", faces}, {"degeneracies", degeneracies}};
}

namespace {

std::pair<int, int> parse_table_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("sset_from_json: table key must look like \"n,i\": " + key);
  return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
}

}  // namespace

TruncatedSSet sset_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(dim) + 1);
  for (const auto& [key, value] : j.at("cells").items())
    cells.at(static_cast<size_t>(std::stoi(key))) = value.get<std::vector<std::string>>();
  std::vector<std::vector<TruncatedSSet::CellMap>> faces(static_cast<size_t>(dim) + 1);
  for (int n = 1; n <= dim; ++n) faces[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
  for (const auto& [key, value] : j.at("faces").items()) {
    const auto [n, i] = parse_table_key(key);
    faces.at(static_cast<size_t>(n)).at(static_cast<size_t>(i)) =
        value.get<TruncatedSSet::CellMap>();
  }
  std::vector<std::vector<TruncatedSSet::CellMap>> degeneracies(
      static_cast<size_t>(dim > 0 ? dim : 0));
  for (int n = 0; n < dim; ++n)
    degeneracies[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
  if (j.contains("degeneracies"))
    for (const auto& [key, value] : j.at("degeneracies").items()) {
      const auto [n, i] = parse_table_key(key);
      degeneracies.at(static_cast<size_t>(n)).at(static_cast<size_t>(i)) =
          value.get<TruncatedSSet::CellMap>();
    }
  return TruncatedSSet(dim, std::move(cells), std::move(faces), std::move(degeneracies));
}

Json category_to_json(const FinCategory& C) {
  Json morphisms = Json::array();
  for (const auto& m : C.morphisms)
    morphisms.push_back(Json{{"name", m.name}, {"src", m.src}, {"dst", m.dst}});
  Json compose = Json::object();
  for (const auto& [pair, result] : C.table) compose[pair.first + "," + pair.second] = result;
  return Json{{"objects", C.objects},
              {"morphisms", morphisms},
              {"identities", C.identities},
              {"compose", compose}};
}

FinCategory category_from_json(const Json& j) {
  std::vector<FinCategory::Morphism> morphisms;
  for (const auto& m : j.at("morphisms"))
    morphisms.push_back({m.at("name").get<std::string>(), m.at("src").get<std::string>(),
                         m.at("dst").get<std::string>()});
  std::map<std::pair<std::string, std::string>, std::string> table;
  for (const auto& [key, value] : j.at("compose").items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("category_from_json: compose key must be \"first,then\"");
    table[{key.substr(0, comma), key.substr(comma + 1)}] = value.get<std::string>();
  }
  return FinCategory(j.at("objects").get<std::vector<std::string>>(), std::move(morphisms),
                     j.at("identities").get<std::map<std::string, std::string>>(),
                     std::move(table));
}

std::string table_to_csv(const Table& T) {
  std::ostringstream os;
  for (int c = 0; c < T.arity(); ++c) os << (c ? "," : "") << c;
  os << "\n";
  for (const auto& row : T.rows()) {
    for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
    os << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) {
    while (!item.empty() && (item.back() == '\r' || item.back() == ' ')) item.pop_back();
    out.push_back(item);
  }
  return out;
}

}  // namespace

Table table_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("table_from_csv: empty input");
  const auto header = split_csv_line(line);
  const int arity = static_cast<int>(header.size());
  for (int c = 0; c < arity; ++c)
    if (header[static_cast<size_t>(c)] != std::to_string(c))
      throw std::invalid_argument("table_from_csv: header must list column indices 0.." +
                                  std::to_string(arity - 1));
  std::set<std::vector<std::string>> rows;
  std::vector<std::string> alphabet;
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    auto row = split_csv_line(line);
    if (row.size() != static_cast<size_t>(arity))
      throw std::invalid_argument("table_from_csv: row width mismatch in '" + line + "'");
    for (const auto& v : row) alphabet.push_back(v);
    rows.insert(std::move(row));
  }
  return Table(arity, std::move(alphabet), std::move(rows));
}

}  // namespace deltakit
