#include <fstream>
#include <sstream>

#include "phantomkit/error.hpp"
#include "phantomkit/io.hpp"

namespace phantomkit {

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset; ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// Line of the first occurrence of "key" in the source, 1 when absent.
std::size_t line_of_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  auto pos = text.find(quoted);
  return pos == std::string_view::npos ? 1 : line_of_offset(text, pos);
}

[[noreturn]] void fail_at(std::string_view origin, std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, std::string(origin) + ":" + std::to_string(line) + ": " + msg);
}

struct Reader {
  std::string_view text;
  std::string_view origin;

  [[noreturn]] void fail(std::string_view key, const std::string& msg) const {
    fail_at(origin, line_of_key(text, key), msg);
  }

  const Json& field(const Json& obj, const char* key) const {
    if (!obj.is_object()) fail_at(origin, 1, "expected a JSON object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(key, std::string("missing field \"") + key + "\"");
    return *it;
  }

  long long integer(const Json& v, const char* key) const {
    if (!v.is_number_integer()) fail(key, std::string("field \"") + key + "\" must be an integer");
    return v.get<long long>();
  }

  std::size_t count(const Json& v, const char* key) const {
    long long x = integer(v, key);
    if (x < 0) fail(key, std::string("field \"") + key + "\" must be non-negative");
    return static_cast<std::size_t>(x);
  }

  Mat matrix(const Field& f, const Json& v, std::size_t rows, std::size_t cols, const char* key) const {
    if (!v.is_array() || v.size() != rows)
      fail(key, std::string("\"") + key + "\" needs " + std::to_string(rows) + " rows");
    Mat m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Json& row = v[r];
      if (!row.is_array() || row.size() != cols)
        fail(key, std::string("row ") + std::to_string(r) + " of \"" + key + "\" needs " +
                      std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, f.reduce(integer(row[c], key)));
    }
    return m;
  }
};

// Re-throws library errors raised while building objects from a file.
template <class F>
auto anchored(const Reader& rd, std::string_view key, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    rd.fail(key, e.what());
  }
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ":0: cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    const std::size_t line = line_of_offset(text, byte);
    std::size_t col = 1;
    for (std::size_t i = byte; i > 0 && text[i - 1] != '\n'; --i) ++col;
    fail_at(origin, line, "column " + std::to_string(col) + ": malformed JSON");
  }
}

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json algebra_to_json(const AlgebraPresentation& a) {
  const std::size_t d = a.dim();
  Json mult = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < d; ++j) plane.push_back(a.basis_product(i, j));
    mult.push_back(std::move(plane));
  }
  Json j;
  j["name"] = a.name();
  j["p"] = a.field().p();
  j["dim"] = d;
  j["unit"] = a.unit();
  j["mult"] = std::move(mult);
  j["gorenstein_n"] = a.declared_gorenstein() ? Json(*a.declared_gorenstein()) : Json(nullptr);
  return j;
}

Json module_to_json(const ModuleRep& m) {
  Json action = Json::array();
  for (const auto& a : m.actions()) action.push_back(matrix_to_json(a));
  Json j;
  j["algebra"] = m.ring()->name();
  j["side"] = std::string(to_string(m.side()));
  j["dim"] = m.dim();
  j["action"] = std::move(action);
  return j;
}

Json morphism_to_json(const ModuleMorphism& f) {
  Json j;
  j["source"] = module_to_json(f.source());
  j["target"] = module_to_json(f.target());
  j["matrix"] = matrix_to_json(f.matrix());
  return j;
}

Json witness_to_json(const TestWitness& w) {
  Json j;
  j["functor"] = std::string(to_string(w.functor));
  j["degree"] = w.degree;
  j["failure"] = std::string(to_string(w.failure));
  j["module"] = module_to_json(w.module);
  return j;
}

Json report_to_json(const DecisionReport& r) {
  Json j;
  j["question"] = std::string(to_string(r.question));
  j["degree"] = r.degree;
  j["verdict"] = r.verdict;
  j["confidence"] = std::string(to_string(r.confidence));
  j["justification"] = std::string(to_string(r.justification));
  if (r.factorization) {
    Json fac;
    fac["middle_dim"] = r.factorization->first.target().dim();
    fac["first"] = matrix_to_json(r.factorization->first.matrix());
    fac["second"] = matrix_to_json(r.factorization->second.matrix());
    j["factorization"] = std::move(fac);
  }
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
  j["witnesses"] = std::move(ws);
  j["detail"] = r.detail;
  return j;
}

AlgebraPresentation parse_algebra(std::string_view text, std::string_view origin) {
  Json j = parse_json_text(text, origin);
  Reader rd{text, origin};
  const Json& name = rd.field(j, "name");
  if (!name.is_string()) rd.fail("name", "field \"name\" must be a string");
  const long long p = rd.integer(rd.field(j, "p"), "p");
  if (p < 2 || p > Field::kMaxPrime || !is_prime(static_cast<std::uint32_t>(p)))
    rd.fail("p", "\"p\" must be a prime at most " + std::to_string(Field::kMaxPrime));
  const Field field(static_cast<std::uint32_t>(p));
  const std::size_t d = rd.count(rd.field(j, "dim"), "dim");
  if (d == 0) rd.fail("dim", "\"dim\" must be positive");

  const Json& unit = rd.field(j, "unit");
  if (!unit.is_array() || unit.size() != d) rd.fail("unit", "\"unit\" needs dim entries");
  Vec u(d);
  for (std::size_t i = 0; i < d; ++i) u[i] = field.reduce(rd.integer(unit[i], "unit"));

  const Json& mult = rd.field(j, "mult");
  std::vector<Residue> table(d * d * d);
  if (!mult.is_array() || mult.size() != d) rd.fail("mult", "\"mult\" needs dim planes");
  for (std::size_t a = 0; a < d; ++a) {
    Mat plane = rd.matrix(field, mult[a], d, d, "mult");
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) table[(a * d + b) * d + c] = plane(b, c);
  }

  std::optional<int> declared;
  auto it = j.find("gorenstein_n");
  if (it != j.end() && !it->is_null()) {
    const long long n = rd.integer(*it, "gorenstein_n");
    if (n < 0) rd.fail("gorenstein_n", "\"gorenstein_n\" must be non-negative or null");
    declared = static_cast<int>(n);
  }
  return anchored(rd, "mult", [&] {
    AlgebraPresentation a(name.get<std::string>(), field, d, std::move(table), std::move(u), declared);
    require_valid(a);
    return a;
  });
}

ModuleRep module_from_json(const Json& j, std::string_view text, std::string_view origin,
                           const RingResolver& rings) {
  Reader rd{text, origin};
  const Json& alg = rd.field(j, "algebra");
  if (!alg.is_string()) rd.fail("algebra", "field \"algebra\" must be a string");
  RingPtr ring = anchored(rd, "algebra", [&] { return rings(alg.get<std::string>()); });
  if (!ring) rd.fail("algebra", "unknown algebra \"" + alg.get<std::string>() + "\"");

  const Json& side_j = rd.field(j, "side");
  Side side;
  if (side_j == "right") side = Side::Right;
  else if (side_j == "left") side = Side::Left;
  else rd.fail("side", "\"side\" must be \"right\" or \"left\"");

  const std::size_t m = rd.count(rd.field(j, "dim"), "dim");
  const Json& action = rd.field(j, "action");
  if (!action.is_array() || action.size() != ring->dim())
    rd.fail("action", "\"action\" needs one matrix per basis element of the algebra (" +
                          std::to_string(ring->dim()) + ")");
  std::vector<Mat> mats;
  for (const auto& a : action) mats.push_back(rd.matrix(ring->field(), a, m, m, "action"));
  return anchored(rd, "action", [&] { return ModuleRep(ring, side, std::move(mats)); });
}

ModuleRep parse_module(std::string_view text, std::string_view origin, const RingResolver& rings) {
  return module_from_json(parse_json_text(text, origin), text, origin, rings);
}

ModuleMorphism parse_morphism(std::string_view text, std::string_view origin, const RingResolver& rings,
                              const std::filesystem::path& base_dir) {
  Json j = parse_json_text(text, origin);
  Reader rd{text, origin};
  auto endpoint = [&](const char* key) {
    const Json& v = rd.field(j, key);
    if (v.is_object()) return module_from_json(v, text, origin, rings);
    if (!v.is_string()) rd.fail(key, std::string("\"") + key + "\" must be a path or a module object");
    const auto path = base_dir / v.get<std::string>();
    const std::string sub = read_text_file(path);
    return parse_module(sub, path.string(), rings);
  };
  ModuleRep source = endpoint("source");
  ModuleRep target = endpoint("target");
  Mat matrix = rd.matrix(source.field(), rd.field(j, "matrix"), source.dim(), target.dim(), "matrix");
  return anchored(rd, "matrix", [&] { return ModuleMorphism(source, target, std::move(matrix)); });
}

}  // namespace phantomkit
