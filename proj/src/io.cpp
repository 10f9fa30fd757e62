#include "qca/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qca/error.hpp"

namespace qca {

namespace {

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

IntMatrix matrix_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw ParseError(std::string(what) + " row " + std::to_string(i + 1) + " is not an array");
    try {
      rows.push_back(j[i].get<std::vector<int>>());
    } catch (const Json::exception&) {
      throw ParseError(std::string(what) + " row " + std::to_string(i + 1) + " has non-integer entries");
    }
  }
  try {
    return IntMatrix::from_rows(rows);
  } catch (const std::invalid_argument&) {
    throw ParseError(std::string(what) + " has rows of different lengths");
  }
}

Lattice lattice_from_json(const Json& j, std::size_t m) {
  std::vector<int> v;
  try {
    v = j.get<std::vector<int>>();
  } catch (const Json::exception&) {
    throw ParseError("lattice vector must be an array of integers");
  }
  if (v.size() != m) throw ParseError("lattice vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(m));
  return Lattice(std::move(v));
}

Json seed_to_json(const QuantumSeed& s) {
  std::vector<int> order;
  for (int k : s.order) order.push_back(k + 1);
  Json j{{"m", s.m}, {"n", s.n}, {"B", s.btilde.to_rows()}, {"Lambda", s.lambda.to_rows()}, {"d", s.d}, {"order", order}};
  if (s.weight) j["weight"] = s.weight->entries();
  return j;
}

QuantumSeed seed_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("seed must be a JSON object");
  QuantumSeed s;
  s.m = get_field<int>(j, "m");
  s.n = get_field<int>(j, "n");
  if (!j.contains("B")) throw ParseError("missing field \"B\"");
  if (!j.contains("Lambda")) throw ParseError("missing field \"Lambda\"");
  s.btilde = matrix_from_json(j["B"], "B");
  s.lambda = matrix_from_json(j["Lambda"], "Lambda");
  s.d = get_field<std::vector<int>>(j, "d");
  if (s.btilde.rows() != s.m || s.btilde.cols() != s.n)
    throw ParseError("B is " + std::to_string(s.btilde.rows()) + "x" + std::to_string(s.btilde.cols()) + ", expected " +
                     std::to_string(s.m) + "x" + std::to_string(s.n));
  if (s.lambda.rows() != s.m || s.lambda.cols() != s.m) throw ParseError("Lambda must be m x m");
  if (static_cast<int>(s.d.size()) != s.n) throw ParseError("d must have n entries");
  if (j.contains("order")) {
    for (int k : get_field<std::vector<int>>(j, "order")) s.order.push_back(k - 1);
  } else {
    for (int k = 0; k < s.n; ++k) s.order.push_back(k);
  }
  if (j.contains("weight") && !j["weight"].is_null()) s.weight = lattice_from_json(j["weight"], static_cast<std::size_t>(s.m));
  return s;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

QuantumSeed load_seed(const std::filesystem::path& path, bool validate) {
  QuantumSeed s;
  try {
    s = seed_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  if (validate) {
    const auto rep = seed_validate(s);
    if (!rep.valid) {
      std::string msg = path.string() + ": invalid seed";
      for (const auto& v : rep.violations) msg += "\n  " + v;
      throw ParseError(msg);
    }
  }
  return s;
}

void save_seed(const std::filesystem::path& path, const QuantumSeed& s) { write_json_file(path, seed_to_json(s)); }

Json element_to_json(const TorusElement& x) {
  Json arr = Json::array();
  for (const auto& [e, c] : x.terms()) arr.push_back({{"exp", e.entries()}, {"coeff", c.to_string()}});
  return arr;
}

TorusElement element_from_json(const Json& j, FormPtr form) {
  if (!j.is_array()) throw ParseError("element must be an array of {exp, coeff} records");
  const auto m = static_cast<std::size_t>(form->dim());
  TorusElement x(std::move(form));
  for (const auto& rec : j)
    x.add_term(lattice_from_json(rec.at("exp"), m), LaurentPoly::parse(get_field<std::string>(rec, "coeff")));
  return x;
}

Json expansion_to_json(const EExpansion& x) {
  Json arr = Json::array();
  for (const auto& [a, c] : x) arr.push_back({{"a", a.entries()}, {"coeff", c.to_string()}});
  return arr;
}

EExpansion expansion_from_json(const Json& j, std::size_t m) {
  if (!j.is_array()) throw ParseError("expansion must be an array of {a, coeff} records");
  EExpansion x;
  for (const auto& rec : j) {
    LaurentPoly c = LaurentPoly::parse(get_field<std::string>(rec, "coeff"));
    if (c.is_zero()) continue;
    auto [it, inserted] = x.try_emplace(lattice_from_json(rec.at("a"), m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) x.erase(it);
    }
  }
  return x;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ParseError("expected a comma-separated integer list, got \"" + std::string(text) + "\"");
    out.push_back(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string canonical_seed_text(const QuantumSeed& s) {
  Json j = seed_to_json(s);
  j["weight"] = (s.weight ? *s.weight : default_weight(s)).entries();
  return j.dump();
}

std::string seed_hash(const QuantumSeed& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : canonical_seed_text(s)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace qca
