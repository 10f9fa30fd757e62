#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>

#include "qca/cache.hpp"
#include "qca/error.hpp"
#include "qca/io.hpp"
#include "qca/lusztig.hpp"
#include "qca/mutation.hpp"
#include "qca/worked/identities.hpp"
#include "qca/worked/kronecker.hpp"
#include "qca/worked/psi.hpp"
#include "qca/worked/rank2.hpp"

namespace fs = std::filesystem;
using namespace qca;

namespace {

constexpr std::uint64_t kDefaultRngSeed = 20240601;

struct Common {
  int jobs = 0;
  std::uint64_t rng_seed = kDefaultRngSeed;
  std::string format = "text";
  bool machine() const { return format == "machine"; }
};

std::string order_text(const std::vector<int>& order) {
  std::string out = "[";
  for (std::size_t i = 0; i < order.size(); ++i) out += (i ? "," : "") + std::to_string(order[i] + 1);
  return out + "]";
}

// writes to `out` or stdout
void emit_json(const Json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(out, j);
}

int finish(const Report& rep, const Common& opt) {
  if (opt.machine())
    std::cout << rep.machine() << "\n";
  else
    std::cout << rep.text();
  return rep.ok() ? 0 : 1;
}

int seed_check(const std::string& file, const Common& opt) {
  const QuantumSeed s = load_seed(file, false);
  const SeedReport rep = seed_validate(s);
  const auto orders = rep.valid ? compatible_orders(s) : std::vector<std::vector<int>>{};
  if (opt.machine()) {
    Json j{{"valid", rep.valid}, {"violations", rep.violations}, {"acyclic", rep.acyclic},
           {"order_compatible", rep.order_compatible}};
    Json list = Json::array();
    for (const auto& o : orders) {
      std::vector<int> one;
      for (int k : o) one.push_back(k + 1);
      list.push_back(one);
    }
    j["compatible_orders"] = list;
    std::cout << j.dump() << "\n";
  } else if (!rep.valid) {
    std::cout << "invalid\n";
    for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
  } else {
    std::cout << "valid; " << (rep.acyclic ? "acyclic" : "not acyclic") << "; compatible orders:";
    const std::size_t shown = std::min<std::size_t>(orders.size(), 12);
    for (std::size_t i = 0; i < shown; ++i) std::cout << " " << order_text(orders[i]);
    if (shown < orders.size()) std::cout << " ... (" << orders.size() << " in all)";
    if (orders.empty()) std::cout << " none";
    std::cout << "\n";
    if (!rep.order_compatible) std::cout << "stored order " << order_text(s.order) << " is not compatible\n";
  }
  return rep.valid ? 0 : 1;
}

IntMatrix read_exchange_matrix(const std::string& file) {
  const Json j = read_json_file(file);
  return matrix_from_json(j.is_object() && j.contains("B") ? j["B"] : j, "B");
}

struct BasisArgs {
  std::string kind;
  std::string file;
  std::string a;
  std::string out;
  std::string cache_dir;
  bool no_cache = false;
};

int basis_cmd(const BasisArgs& args, const Common& opt) {
  const QuantumSeed s = load_seed(args.file);
  const auto basis = std::make_shared<const EBasis>(s);
  const Lattice a(parse_int_list(args.a));
  if (static_cast<int>(a.size()) != s.m)
    throw ParseError("--a has " + std::to_string(a.size()) + " entries, the seed has m = " + std::to_string(s.m));

  TorusElement x(basis->form());
  EExpansion coeffs;
  std::string cache_note;
  if (args.kind == "e") {
    x = basis->element(a);
    coeffs = {{a, LaurentPoly(1)}};
  } else {
    TriangularTable table(basis);
    if (!args.no_cache) {
      RowCache cache(s, args.cache_dir.empty() ? RowCache::default_dir() : fs::path(args.cache_dir));
      cache.attach(table);
      const bool hit = table.find(a).has_value();
      const TableRow row = table.row(a);
      x = row.c;
      coeffs = row.p;
      cache_note = std::string(hit ? "hit" : "miss, stored") + " (" + cache.file().string() + ")";
    } else {
      const TableRow row = table.row(a);
      x = row.c;
      coeffs = row.p;
    }
    coeffs.emplace(a, LaurentPoly(1));
  }

  const std::string label = args.kind == "e" ? "E" : "C";
  if (!args.out.empty()) write_json_file(args.out, element_to_json(x));
  if (opt.machine()) {
    Json j{{"kind", label}, {"a", a.entries()}, {"expansion", expansion_to_json(coeffs)}, {"element", element_to_json(x)}};
    if (!cache_note.empty()) j["cache"] = cache_note;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << label << " = " << to_string(coeffs) << "\n";
    std::cout << "  = " << x.to_string() << "\n";
    if (!cache_note.empty()) std::cout << "cache: " << cache_note << "\n";
  }
  return 0;
}

std::vector<Lattice> window_labels(int m, int w) {
  return box(std::vector<int>(static_cast<std::size_t>(m), -w), std::vector<int>(static_cast<std::size_t>(m), w));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qca: quantum cluster algebras and their triangular bases"};
  app.require_subcommand(1);
  Common opt;
  app.add_option("--jobs", opt.jobs, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--rng-seed", opt.rng_seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--format", opt.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  // seed
  auto* seed = app.add_subcommand("seed", "check, mutate or build seeds");
  seed->require_subcommand(1);
  std::string seed_file, out_file, b_file, d_list;
  int mutate_k = 0;
  auto* check = seed->add_subcommand("check", "validate a seed file");
  check->add_option("file", seed_file)->required();
  auto* mutate = seed->add_subcommand("mutate", "mutate at k (1-based)");
  mutate->add_option("file", seed_file)->required();
  mutate->add_option("-k", mutate_k)->required()->check(CLI::PositiveNumber);
  mutate->add_option("-o,--out", out_file);
  auto* principal = seed->add_subcommand("principal", "principal seed from B and d");
  principal->add_option("--B", b_file, "JSON matrix, or an object with \"B\"")->required();
  principal->add_option("--d", d_list, "comma-separated d")->required();
  principal->add_option("-o,--out", out_file);
  auto* dbl = seed->add_subcommand("double", "double seed");
  dbl->add_option("file", seed_file)->required();
  dbl->add_option("-o,--out", out_file);

  // basis
  auto* basis = app.add_subcommand("basis", "compute E_a or C_a");
  basis->require_subcommand(1);
  BasisArgs bargs;
  for (const char* kind : {"e", "c"}) {
    auto* sub = basis->add_subcommand(kind, std::string(kind) == "e" ? "standard monomial E_a" : "triangular basis C_a");
    sub->add_option("file", bargs.file)->required();
    sub->add_option("--a", bargs.a, "label, comma-separated")->required();
    sub->add_option("-o,--out", bargs.out, "write the element as JSON");
    if (std::string(kind) == "c") {
      sub->add_option("--cache-dir", bargs.cache_dir, "default $QCA_CACHE_DIR or ./.qca_cache");
      sub->add_flag("--no-cache", bargs.no_cache);
    }
    sub->callback([&bargs, kind] { bargs.kind = kind; });
  }

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  int rmax = 3, window = 2, b = 1, c = 1, bound = 2, count = 20, max_n = 3, max_entry = 2, samples = 50;
  auto* kron = verify->add_subcommand("kronecker", "the A11 example");
  kron->add_option("--rmax", rmax)->capture_default_str();
  kron->add_option("--window", window)->capture_default_str();
  auto* r2 = verify->add_subcommand("rank2-principal", "rank-2 principal seeds");
  r2->add_option("--b", b)->required()->check(CLI::PositiveNumber);
  r2->add_option("--c", c)->required()->check(CLI::PositiveNumber);
  r2->add_option("--box", bound, "crystal and phi window")->capture_default_str();
  auto* ident = verify->add_subcommand("identities", "commutation and principal identities on random seeds");
  ident->add_option("--count", count)->capture_default_str();
  ident->add_option("--max-n", max_n)->capture_default_str();
  ident->add_option("--max-entry", max_entry)->capture_default_str();
  ident->add_option("--rmax", rmax, "Gaussian identity bound")->default_val(6)->capture_default_str();
  auto* psi = verify->add_subcommand("psi", "the psi embedding into the double seed");
  psi->add_option("--seed", seed_file)->required();
  psi->add_option("--samples", samples)->capture_default_str();
  psi->add_option("--window", window)->default_val(1)->capture_default_str();
  auto* cmp = verify->add_subcommand("compare-bases", "C'_a against C_phi(a) across one mutation");
  cmp->add_option("--seed", seed_file)->required();
  cmp->add_option("--window", window)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    std::mt19937_64 rng(opt.rng_seed);
    if (*check) return seed_check(seed_file, opt);
    if (*mutate) {
      const QuantumSeed s = load_seed(seed_file);
      if (mutate_k > s.n) throw ParseError("-k must be at most n = " + std::to_string(s.n));
      emit_json(seed_to_json(seed_mutate(s, mutate_k - 1)), out_file);
      return 0;
    }
    if (*principal) {
      emit_json(seed_to_json(principal_seed(read_exchange_matrix(b_file), parse_int_list(d_list))), out_file);
      return 0;
    }
    if (*dbl) {
      emit_json(seed_to_json(double_seed(load_seed(seed_file))), out_file);
      return 0;
    }
    if (*basis) return basis_cmd(bargs, opt);
    if (*kron) return finish(verify_kronecker(rmax, window), opt);
    if (*r2) return finish(verify_rank2(b, c, bound, bound, rng, opt.jobs), opt);
    if (*ident) return finish(verify_identities(count, max_n, max_entry, rmax, rng), opt);
    if (*psi) return finish(verify_psi(load_seed(seed_file), samples, window, rng), opt);
    if (*cmp) {
      const QuantumSeed s = load_seed(seed_file);
      return finish(compare_bases(MutationPair(s), window_labels(s.m, window), opt.jobs), opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
