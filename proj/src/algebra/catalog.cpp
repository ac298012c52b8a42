#include <charconv>
#include <string>

#include "phantomkit/algebra.hpp"
#include "phantomkit/error.hpp"

namespace phantomkit {

namespace {

std::vector<Residue> zero_table(std::size_t d) { return std::vector<Residue>(d * d * d, 0); }

void put(std::vector<Residue>& t, std::size_t d, std::size_t i, std::size_t j, std::size_t k,
         Residue v = 1) {
  t[(i * d + j) * d + k] = v;
}

std::string params_suffix(const std::vector<int>& params) {
  std::string s;
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : ":") + std::to_string(params[i]);
  return s;
}

std::string canonical_name(std::string_view key, std::uint32_t p, const std::vector<int>& params) {
  return std::string(key) + params_suffix(params) + "@p=" + std::to_string(p);
}

AlgebraPresentation truncated_poly(Field f, int m, std::string name) {
  if (m < 1) throw Error(ErrorKind::BadParams, "truncated_poly needs m >= 1");
  const auto d = static_cast<std::size_t>(m);
  auto t = zero_table(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; i + j < d; ++j) put(t, d, i, j, i + j);
  Vec unit(d, 0);
  unit[0] = 1;
  return AlgebraPresentation(std::move(name), f, d, std::move(t), std::move(unit), 0);
}

AlgebraPresentation cyclic_group(Field f, int n, std::string name) {
  if (n < 1) throw Error(ErrorKind::BadParams, "group_Cn needs n >= 1");
  const auto d = static_cast<std::size_t>(n);
  auto t = zero_table(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) put(t, d, i, j, (i + j) % d);
  Vec unit(d, 0);
  unit[0] = 1;
  // Group algebras are self-injective.
  return AlgebraPresentation(std::move(name), f, d, std::move(t), std::move(unit), 0);
}

AlgebraPresentation triangular(Field f, std::string name) {
  // basis e11, e12, e22 of the upper triangular 2x2 matrices
  constexpr std::size_t d = 3;
  auto t = zero_table(d);
  put(t, d, 0, 0, 0);
  put(t, d, 0, 1, 1);
  put(t, d, 1, 2, 1);
  put(t, d, 2, 2, 2);
  return AlgebraPresentation(std::move(name), f, d, std::move(t), Vec{1, 0, 1}, 1);
}

// Paths p(i, l) starting at vertex i of length l < c_i; arrows i -> i+1 (mod r if cyclic).
AlgebraPresentation nakayama(Field f, const std::vector<int>& kupisch, std::string name) {
  const std::size_t r = kupisch.size();
  if (r == 0) throw Error(ErrorKind::BadParams, "nakayama needs a Kupisch series");
  const bool linear = kupisch.back() == 1;
  for (std::size_t i = 0; i < r; ++i) {
    int c = kupisch[i];
    if (c < 1) throw Error(ErrorKind::BadParams, "Kupisch entries must be >= 1");
    if (linear) {
      if (static_cast<std::size_t>(c) > r - i)
        throw Error(ErrorKind::BadParams, "linear Kupisch entry runs past the last vertex");
      if (i + 1 < r && kupisch[i + 1] < c - 1)
        throw Error(ErrorKind::BadParams, "Kupisch series is not admissible");
    } else {
      if (c < 2) throw Error(ErrorKind::BadParams, "cyclic Kupisch entries must be >= 2");
      if (kupisch[(i + 1) % r] < c - 1)
        throw Error(ErrorKind::BadParams, "Kupisch series is not admissible");
    }
  }
  std::vector<std::size_t> offset(r + 1, 0);
  for (std::size_t i = 0; i < r; ++i) offset[i + 1] = offset[i] + static_cast<std::size_t>(kupisch[i]);
  const std::size_t d = offset[r];
  auto t = zero_table(d);
  for (std::size_t i = 0; i < r; ++i)
    for (int l = 0; l < kupisch[i]; ++l) {
      std::size_t end = (i + static_cast<std::size_t>(l)) % r;
      for (std::size_t j = 0; j < r; ++j) {
        if (j != end) continue;
        for (int m = 0; m < kupisch[j]; ++m)
          if (l + m < kupisch[i])
            put(t, d, offset[i] + static_cast<std::size_t>(l), offset[j] + static_cast<std::size_t>(m),
                offset[i] + static_cast<std::size_t>(l + m));
      }
    }
  Vec unit(d, 0);
  for (std::size_t i = 0; i < r; ++i) unit[offset[i]] = 1;
  return AlgebraPresentation(std::move(name), f, d, std::move(t), std::move(unit), std::nullopt);
}

int parse_int(std::string_view s) {
  int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw Error(ErrorKind::BadParams, "not an integer: '" + std::string(s) + "'");
  return v;
}

std::vector<int> parse_list(std::string_view s) {
  std::vector<int> out;
  while (!s.empty()) {
    auto comma = s.find(',');
    out.push_back(parse_int(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

AlgebraPresentation catalog_algebra(std::string_view key, std::uint32_t p,
                                    const std::vector<int>& params) {
  Field f(p);
  if (key == "field") {
    if (!params.empty()) throw Error(ErrorKind::BadParams, "field takes no parameters");
    return AlgebraPresentation(canonical_name(key, p, params), f, 1, {1}, {1}, 0);
  }
  if (key == "truncated_poly") {
    if (params.size() != 1) throw Error(ErrorKind::BadParams, "truncated_poly takes {m}");
    return truncated_poly(f, params[0], canonical_name(key, p, params));
  }
  if (key.starts_with("group_C")) {
    std::string_view rest = key.substr(7);
    if (!rest.empty()) {
      if (!params.empty()) throw Error(ErrorKind::BadParams, "group_C<n> takes no parameters");
      int n = parse_int(rest);
      return cyclic_group(f, n, canonical_name(key, p, params));
    }
    if (params.size() != 1) throw Error(ErrorKind::BadParams, "group_C takes {n}");
    return cyclic_group(f, params[0], canonical_name("group_C" + std::to_string(params[0]), p, {}));
  }
  if (key == "triangular_2") {
    if (!params.empty()) throw Error(ErrorKind::BadParams, "triangular_2 takes no parameters");
    return triangular(f, canonical_name(key, p, params));
  }
  if (key == "nakayama") return nakayama(f, params, canonical_name(key, p, params));
  throw Error(ErrorKind::UnknownKey, "unknown catalog algebra '" + std::string(key) + "'");
}

AlgebraPresentation catalog_algebra(std::string_view spec) {
  std::uint32_t p = 2;
  if (auto at = spec.find("@p="); at != std::string_view::npos) {
    p = static_cast<std::uint32_t>(parse_int(spec.substr(at + 3)));
    spec = spec.substr(0, at);
  }
  std::vector<int> params;
  auto sep = spec.find_first_of(": ");
  std::string_view key = spec.substr(0, sep);
  if (sep != std::string_view::npos) params = parse_list(spec.substr(sep + 1));
  return catalog_algebra(key, p, params);
}

}  // namespace phantomkit
