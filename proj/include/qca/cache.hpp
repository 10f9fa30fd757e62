#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>

#include "qca/lusztig.hpp"
#include "qca/seed.hpp"

namespace qca {

/// On-disk store of triangular-table rows, one JSON-lines file per seed:
/// a header {"seed_hash":...} followed by {"a","p_row","C"} records. A file
/// whose header does not match the seed is ignored and replaced on write.
class RowCache {
public:
  RowCache(const QuantumSeed& seed, std::filesystem::path dir = default_dir());

  /// $QCA_CACHE_DIR, or ./.qca_cache.
  static std::filesystem::path default_dir();

  const std::string& hash() const { return hash_; }
  std::filesystem::path file() const { return dir_ / (hash_ + ".jsonl"); }

  /// Rows stored for this seed; malformed lines are skipped.
  std::map<Lattice, TableRow> load(const FormPtr& form) const;
  void append(const Lattice& a, const TableRow& row);

  /// Preloads the table with stored rows that pass verify_C_properties and
  /// records newly computed rows. Returns the number of rows preloaded.
  std::size_t attach(TriangularTable& table);

private:
  bool header_ok() const;

  std::filesystem::path dir_;
  std::string hash_;
  std::mutex mu_;
};

}  // namespace qca
