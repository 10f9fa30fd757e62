#include "qca/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "qca/io.hpp"

namespace qca {

RowCache::RowCache(const QuantumSeed& seed, std::filesystem::path dir) : dir_(std::move(dir)), hash_(seed_hash(seed)) {}

std::filesystem::path RowCache::default_dir() {
  if (const char* env = std::getenv("QCA_CACHE_DIR"); env && *env) return env;
  return ".qca_cache";
}

bool RowCache::header_ok() const {
  std::ifstream in(file());
  std::string line;
  if (!in || !std::getline(in, line)) return false;
  const Json header = Json::parse(line, nullptr, false);
  return !header.is_discarded() && header.is_object() && header.value("seed_hash", "") == hash_;
}

std::map<Lattice, TableRow> RowCache::load(const FormPtr& form) const {
  std::map<Lattice, TableRow> rows;
  if (!header_ok()) return rows;
  std::ifstream in(file());
  std::string line;
  std::getline(in, line);
  const auto m = static_cast<std::size_t>(form->dim());
  while (std::getline(in, line)) {
    const Json rec = Json::parse(line, nullptr, false);
    if (rec.is_discarded()) continue;
    try {
      Lattice a = lattice_from_json(rec.at("a"), m);
      TableRow row{expansion_from_json(rec.at("p_row"), m), element_from_json(rec.at("C"), form)};
      rows.insert_or_assign(std::move(a), std::move(row));
    } catch (const std::exception&) {
      continue;
    }
  }
  return rows;
}

void RowCache::append(const Lattice& a, const TableRow& row) {
  std::lock_guard lock(mu_);
  std::filesystem::create_directories(dir_);
  const bool fresh = !header_ok();
  std::ofstream out(file(), fresh ? std::ios::trunc : std::ios::app);
  if (!out) return;
  if (fresh) out << Json{{"seed_hash", hash_}}.dump() << "\n";
  out << Json{{"a", a.entries()}, {"p_row", expansion_to_json(row.p)}, {"C", element_to_json(row.c)}}.dump() << "\n";
}

std::size_t RowCache::attach(TriangularTable& table) {
  // rows are re-checked before use; the conditions pin C_a down uniquely
  std::size_t used = 0;
  for (auto& [a, row] : load(table.basis().form())) {
    bool ok = false;
    try {
      ok = verify_C_properties(table.basis(), a, row).ok();
    } catch (const std::exception&) {
    }
    if (!ok) continue;
    table.insert(a, std::move(row));
    ++used;
  }
  table.on_computed([this](const Lattice& a, const TableRow& row) { append(a, row); });
  return used;
}

}  // namespace qca
