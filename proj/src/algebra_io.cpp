#include "qkcf/algebra_io.hpp"

#include "qkcf/error.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qkcf {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string &what) {
  throw Error(ErrorCode::Parse, what);
}

Scalar scalar_of(const json &v) {
  if (v.is_string())
    return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer())
    return Scalar(Rational(v.get<long>()));
  parse_error("coefficient must be a string or an integer");
}

std::size_t index_of(const json &obj, const char *key) {
  if (!obj.contains(key))
    parse_error(std::string("missing \"") + key + "\"");
  const json &v = obj.at(key);
  if (!v.is_number_integer())
    parse_error(std::string("\"") + key + "\" must be an integer");
  const long x = v.get<long>();
  if (x < 1)
    throw Error(ErrorCode::IndexRange,
                std::string("\"") + key + "\" must be >= 1");
  return static_cast<std::size_t>(x - 1);
}

Matrix matrix_of(const json &v, const char *what) {
  if (!v.is_array())
    parse_error(std::string(what) + " must be an array of rows");
  const std::size_t rows = v.size();
  Matrix m(rows, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const json &row = v[r];
    if (!row.is_array() || row.size() != rows)
      throw Error(ErrorCode::DimensionMismatch,
                  std::string(what) + " must be square");
    for (std::size_t c = 0; c < rows; ++c)
      m(r, c) = scalar_of(row[c]);
  }
  return m;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    parse_error(e.what());
  }
}

LoadedAlgebra from_catalog(const std::string &name) {
  CatalogEntry e = catalog(name);
  return {"@" + e.name, std::move(e.pair), e.advertised};
}

} // namespace

LoadedAlgebra parse_algebra(std::string_view text, std::string source) {
  const json doc = parse_json(text);
  if (doc.is_string()) {
    const std::string s = doc.get<std::string>();
    if (s.empty() || s.front() != '@')
      parse_error("a bare string must be a catalog reference \"@name\"");
    return from_catalog(s);
  }
  if (!doc.is_object())
    parse_error("algebra file must be a JSON object");
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer() ||
      doc.at("dim").get<long>() < 0)
    parse_error("\"dim\" must be a non-negative integer");
  const auto n = static_cast<std::size_t>(doc.at("dim").get<long>());
  Field field = Field::Rational;
  if (doc.contains("field")) {
    const json &f = doc.at("field");
    if (f == "Q")
      field = Field::Rational;
    else if (f == "Qi")
      field = Field::GaussianRational;
    else
      parse_error("\"field\" must be \"Q\" or \"Qi\"");
  }
  StructureTensor c(n);
  if (doc.contains("brackets")) {
    const json &bs = doc.at("brackets");
    if (!bs.is_array())
      parse_error("\"brackets\" must be an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const json &b : bs) {
      if (!b.is_object())
        parse_error("bracket entry must be an object");
      const std::size_t i = index_of(b, "i"), j = index_of(b, "j");
      if (i >= n || j >= n)
        throw Error(ErrorCode::IndexRange, "bracket index exceeds dim");
      if (i >= j)
        throw Error(ErrorCode::IndexOrder, "bracket entries need i < j");
      if (!seen.insert({i, j}).second)
        throw Error(ErrorCode::DuplicatePair,
                    "bracket (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") given twice");
      if (!b.contains("out") || !b.at("out").is_array())
        parse_error("bracket entry needs an \"out\" array");
      Vector acc(n);
      for (const json &t : b.at("out")) {
        if (!t.is_object() || !t.contains("coeff"))
          parse_error("output term needs \"k\" and \"coeff\"");
        const std::size_t k = index_of(t, "k");
        if (k >= n)
          throw Error(ErrorCode::IndexRange, "output index exceeds dim");
        acc[k] += scalar_of(t.at("coeff"));
      }
      for (std::size_t k = 0; k < n; ++k)
        if (!acc[k].is_zero())
          c.set(i, j, k, acc[k]);
    }
  }
  LieAlgebra g(std::move(c), field);
  std::optional<AlmostComplexStructure> jstruct;
  if (doc.contains("J")) {
    Matrix jm = matrix_of(doc.at("J"), "\"J\"");
    if (jm.rows() != n)
      throw Error(ErrorCode::DimensionMismatch, "\"J\" size differs from dim");
    jstruct.emplace(std::move(jm));
  }
  return {std::move(source), {std::move(g), std::move(jstruct)}, std::nullopt};
}

LoadedAlgebra load_algebra(const std::string &path_or_name) {
  if (!path_or_name.empty() && path_or_name.front() == '@')
    return from_catalog(path_or_name);
  std::ifstream in(path_or_name);
  if (!in)
    parse_error("cannot open " + path_or_name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str(), path_or_name);
}

std::string write_algebra(const LieAlgebra &g,
                          const std::optional<AlmostComplexStructure> &j) {
  // One bracket and one J row per line; keys in file order.
  using ojson = nlohmann::ordered_json;
  const std::size_t n = g.dim();
  std::ostringstream os;
  os << "{\n  \"dim\": " << n << ",\n  \"field\": \""
     << field_tag(g.field()) << "\",\n  \"brackets\": [";
  bool first = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector v = g.bracket_basis(a, b);
      ojson out = ojson::array();
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero())
          out.push_back({{"k", k + 1}, {"coeff", v[k].str()}});
      if (out.empty())
        continue;
      const ojson entry = {{"i", a + 1}, {"j", b + 1}, {"out", out}};
      os << (first ? "\n    " : ",\n    ") << entry.dump();
      first = false;
    }
  os << (first ? "]" : "\n  ]");
  if (j) {
    os << ",\n  \"J\": [";
    const Matrix &m = j->matrix();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      ojson row = ojson::array();
      for (const Scalar &x : m.row(r))
        row.push_back(x.str());
      os << (r ? ",\n    " : "\n    ") << row.dump();
    }
    os << "\n  ]";
  }
  os << "\n}\n";
  return os.str();
}

HermitianMetric parse_metric(std::string_view text) {
  const json doc = parse_json(text);
  const json &m = doc.is_object() && doc.contains("metric") ? doc.at("metric")
                                                            : doc;
  return HermitianMetric(matrix_of(m, "metric"));
}

HermitianMetric load_metric(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    parse_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_metric(buf.str());
}

std::string matrix_json(const Matrix &m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const Scalar &x : m.row(r))
      row.push_back(x.str());
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

} // namespace qkcf
