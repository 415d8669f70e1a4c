#include "spherebasis/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spherebasis/bases.hpp"
#include "spherebasis/cells.hpp"
#include "spherebasis/complex.hpp"
#include "spherebasis/conjectures.hpp"
#include "spherebasis/counting.hpp"
#include "spherebasis/decompose.hpp"
#include "spherebasis/serialize.hpp"

namespace sphb::cli {
namespace {

using nlohmann::json;

Family parse_family(const std::string& name) {
  if (name == "cube") return Family::cube;
  if (name == "simplex") return Family::simplex;
  throw std::invalid_argument("unknown family '" + name + "' (expected cube or simplex)");
}

std::string family_name(Family family) {
  return family == Family::cube ? "cube" : "simplex";
}

std::string cell_text(const Cell& cell) { return format_cell(cell); }

std::string indices_text(const std::vector<std::size_t>& indices) {
  std::ostringstream s;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s << ' ';
    s << indices[i];
  }
  return s.str();
}

json indices_json(const std::vector<std::size_t>& indices) {
  json a = json::array();
  for (std::size_t i : indices) a.push_back(i);
  return a;
}

// Loads the basis from `<cache_dir>/basis-<family>-<n>-<k>.json` when that
// file exists and passes validation; otherwise builds it and (re)writes the
// file. Output is identical either way because loading revalidates.
SphereBasis cached_basis(Family family, int n, int k, const std::string& cache_dir) {
  const SkeletonSpec want{Ambient{family, n}, k};
  std::filesystem::path path;
  if (!cache_dir.empty()) {
    path = std::filesystem::path(cache_dir) /
           ("basis-" + family_name(family) + "-" + std::to_string(n) + "-" +
            std::to_string(k) + ".json");
    std::ifstream in(path);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      try {
        SphereBasis loaded = io::basis_file_load(buf.str());
        if (loaded.spec.ambient == want.ambient && loaded.spec.k == want.k) {
          return loaded;
        }
      } catch (const std::exception&) {
        // fall through to rebuild
      }
    }
  }
  SphereBasis basis = family == Family::cube ? cube_basis(n, k) : simplex_basis(n, k);
  if (!cache_dir.empty()) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    out << io::basis_file_dump(basis);
  }
  return basis;
}

SphereBasis make_basis(Family family, int n, int k, const std::string& cache_dir) {
  if (!cache_dir.empty()) return cached_basis(family, n, k, cache_dir);
  return family == Family::cube ? cube_basis(n, k) : simplex_basis(n, k);
}

int run_cells(Family family, int n, int j, bool as_json, std::ostream& out) {
  const Ambient ambient{family, n};
  for (const Cell& cell : enumerate_cells(ambient, j)) {
    if (as_json) {
      json line;
      line["cell"] = io::cell_to_json(cell);
      out << line.dump() << '\n';
    } else {
      out << cell_text(cell) << '\n';
    }
  }
  return 0;
}

int run_betti(Family family, int n, int k, std::optional<int> ell, bool as_json,
              std::ostream& out) {
  const SkeletonSpec spec{Ambient{family, n}, k};
  const auto emit = [&](int e, std::size_t value) {
    if (as_json) {
      json line;
      line["ell"] = e;
      line["family"] = family_name(family);
      line["k"] = k;
      line["n"] = n;
      line["value"] = value;
      out << line.dump() << '\n';
    } else {
      out << "b_" << e << " = " << value << '\n';
    }
  };
  if (ell) {
    emit(*ell, betti(spec, *ell));
  } else {
    const std::vector<std::size_t> profile = betti_profile(spec);
    for (int e = 0; e < static_cast<int>(profile.size()); ++e) emit(e, profile[e]);
  }
  return 0;
}

int run_basis(Family family, int n, int k, const std::string& out_file,
              const std::string& cache_dir, bool as_json, std::ostream& out,
              std::ostream& err) {
  const SphereBasis basis = make_basis(family, n, k, cache_dir);
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    const BasisElement& e = basis.elements[i];
    if (as_json) {
      json line;
      line["cells"] = io::chain_to_json(e.chain)["cells"];
      line["generator"] = io::cell_to_json(e.generator);
      line["index"] = i;
      line["level"] = e.level;
      line["private_face"] = io::cell_to_json(e.private_face);
      out << line.dump() << '\n';
    } else {
      out << '[' << i << "] level=" << e.level << " generator=" << cell_text(e.generator)
          << " private=" << cell_text(e.private_face) << " size=" << e.chain.size()
          << '\n';
    }
  }
  if (!out_file.empty()) {
    std::ofstream file(out_file, std::ios::trunc);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_file + "'");
    file << io::basis_file_dump(basis);
    err << "wrote " << out_file << '\n';
  }
  return 0;
}

DecompositionResult decompose_with(const std::string& method, const Chain& z,
                                   const SphereBasis& basis) {
  const Family family = z.family();
  if (method == "solve") return oracle_decompose(z, basis);
  if (method == "cone") {
    if (family != Family::simplex)
      throw std::invalid_argument("method cone applies to the simplex family only");
    return simplex_decompose(z, basis);
  }
  if (method == "peel") {
    if (family != Family::cube)
      throw std::invalid_argument("method peel applies to the cube family only");
    return cube_decompose(z, basis);
  }
  if (method == "auto") {
    return family == Family::cube ? cube_decompose(z, basis) : simplex_decompose(z, basis);
  }
  throw std::invalid_argument("unknown method '" + method +
                              "' (expected auto, cone, peel, or solve)");
}

int run_decompose_single(const std::vector<std::string>& cell_texts, Family family, int n,
                         int k, const std::string& method, const SphereBasis& basis,
                         bool as_json, std::ostream& out) {
  const Ambient ambient{family, n};
  std::vector<Cell> cells;
  cells.reserve(cell_texts.size());
  for (const std::string& text : cell_texts) {
    Cell cell = parse_cell(text, ambient);
    if (cell.dim() != k)
      throw std::invalid_argument("cell '" + text + "' has dimension " +
                                  std::to_string(cell.dim()) + ", expected " +
                                  std::to_string(k));
    cells.push_back(std::move(cell));
  }
  const Chain z = Chain::from_cells(ambient, k, cells);
  const DecompositionResult result = decompose_with(method, z, basis);
  if (as_json) {
    out << io::decomposition_to_json(result).dump() << '\n';
  } else {
    out << "indices: " << indices_text(result.indices) << '\n';
    out << "method: " << result.method << '\n';
    if (result.residual.empty()) {
      out << "residual: empty\n";
    } else {
      std::ostringstream r;
      for (std::size_t i = 0; i < result.residual.cells().size(); ++i) {
        if (i) r << ' ';
        r << cell_text(result.residual.cells()[i]);
      }
      out << "residual: " << r.str() << '\n';
    }
  }
  return result.residual.empty() ? 0 : 1;
}

int run_decompose_random(int count, std::uint64_t seed, Family family, int n, int k,
                         const std::string& method, const SphereBasis& basis, bool as_json,
                         std::ostream& out) {
  std::mt19937_64 rng(seed);
  const Ambient ambient{family, n};
  int mismatches = 0;
  for (int trial = 0; trial < count; ++trial) {
    std::vector<std::size_t> chosen;
    Chain z(ambient, k);
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
      if (rng() & 1u) {
        chosen.push_back(i);
        z += basis.elements[i].chain;
      }
    }
    const DecompositionResult result = decompose_with(method, z, basis);
    const DecompositionResult oracle = oracle_decompose(z, basis);
    const bool match = result.indices == chosen && oracle.indices == chosen &&
                       result.residual.empty() && oracle.residual.empty();
    if (!match) ++mismatches;
    if (as_json) {
      json line;
      line["chosen"] = indices_json(chosen);
      line["match"] = match;
      line["method"] = result.method;
      line["oracle"] = indices_json(oracle.indices);
      line["recovered"] = indices_json(result.indices);
      line["seed"] = seed;
      line["trial"] = trial;
      out << line.dump() << '\n';
    } else {
      out << "trial " << trial << ": " << (match ? "ok" : "MISMATCH") << " ("
          << chosen.size() << " elements)\n";
    }
  }
  if (!as_json) {
    out << (count - mismatches) << '/' << count << " round trips exact (seed " << seed
        << ")\n";
  }
  return mismatches == 0 ? 0 : 1;
}

int run_counts(const std::string& fn, int nmax, std::optional<int> k_opt, bool as_json,
               std::ostream& out) {
  using counting::Count;
  const auto value_of = [&fn](int n, int k) -> Count {
    if (fn == "s") return counting::s_formula(n, k);
    if (fn == "m") return counting::m_formula(n, k);
    if (fn == "mprime") return counting::m_prime_formula(n, k);
    if (fn == "bw") return counting::bw_formula(n, k);
    if (fn == "gr") return counting::gr_formula(n, k);
    if (fn == "basisCardSimplex") return counting::binomial(n, k + 1);
    throw std::invalid_argument(
        "unknown fn '" + fn + "' (expected s, m, mprime, bw, gr, or basisCardSimplex)");
  };
  const int kmin = fn == "bw" ? 1 : 0;
  if (nmax < 1) throw std::invalid_argument("--nmax must be at least 1");
  const auto emit = [&](int n, int k) {
    const Count v = value_of(n, k);
    if (as_json) {
      json line;
      line["fn"] = fn;
      line["k"] = k;
      line["n"] = n;
      line["value"] = v.str();
      out << line.dump() << '\n';
    } else {
      out << fn << '(' << n << ',' << k << ") = " << v.str() << '\n';
    }
  };
  if (k_opt) {
    const int k = *k_opt;
    if (k < kmin) throw std::invalid_argument("--k below the domain of " + fn);
    for (int n = std::max(k, 1); n <= nmax; ++n) emit(n, k);
  } else {
    for (int n = 1; n <= nmax; ++n) {
      for (int k = kmin; k <= n; ++k) emit(n, k);
    }
  }
  return 0;
}

int run_identities(int nmax_sm, int nmax_bw, bool as_json, std::ostream& out) {
  const std::vector<counting::IdentityReport> reports =
      counting::verify_identities(nmax_sm, nmax_bw);
  bool all = true;
  for (const counting::IdentityReport& r : reports) {
    all = all && r.holds;
    if (as_json) {
      out << io::identity_report_to_json(r).dump() << '\n';
    } else {
      out << r.name << ": " << (r.holds ? "ok" : "FAIL");
      if (!r.holds) out << " at (n=" << r.n << ", k=" << r.k << ")";
      out << '\n';
    }
  }
  return all ? 0 : 1;
}

int run_torus(const std::string& out_file, bool as_json, std::ostream& out,
              std::ostream& err) {
  const TorusReport report = torus_build();
  if (!out_file.empty()) {
    std::ofstream file(out_file, std::ios::trunc);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_file + "'");
    file << io::off_export(report.torus);
    err << "wrote " << out_file << '\n';
  }
  if (as_json) {
    json line = io::torus_report_to_json(report);
    if (!out_file.empty()) line["off_file"] = out_file;
    out << line.dump() << '\n';
  } else {
    out << "excluded indices: " << indices_text(report.excluded) << '\n';
    out << "squares: " << report.torus.size() << '\n';
    out << "closed_surface: " << (report.certificate.closed_surface ? "yes" : "no")
        << '\n';
    out << "connected: " << (report.certificate.connected ? "yes" : "no") << '\n';
    out << "euler: " << report.certificate.euler << '\n';
    out << "betti:";
    for (std::size_t b : report.certificate.betti) out << ' ' << b;
    out << '\n';
    out << "decomposition: " << indices_text(report.decomposition.indices) << '\n';
    out << "note: " << report.note << '\n';
  }
  const bool is_torus = report.certificate.closed_surface && report.certificate.connected &&
                        report.certificate.euler == 0;
  return is_torus ? 0 : 1;
}

int run_robust(int n, std::size_t budget, bool as_json, std::ostream& out) {
  const RobustReport report = robust_check_all(n, budget);
  if (as_json) {
    out << io::robust_report_to_json(report).dump() << '\n';
  } else {
    out << "n=" << report.n << ": circuits=" << report.circuits
        << " verified=" << report.verified << " failed=" << report.failed
        << " inconclusive=" << report.inconclusive << '\n';
  }
  return report.verified == report.circuits ? 0 : 1;
}

int run_treecheck(Family family, std::optional<int> n_opt, std::optional<int> k_opt,
                  std::optional<int> nmax_opt, bool as_json, std::ostream& out) {
  std::vector<std::pair<int, int>> pairs;
  if (nmax_opt) {
    for (int n = 2; n <= *nmax_opt; ++n) {
      for (int k = 1; k <= n - 1; ++k) pairs.emplace_back(n, k);
    }
  } else if (n_opt && k_opt) {
    pairs.emplace_back(*n_opt, *k_opt);
  } else {
    throw std::invalid_argument("treecheck needs either --n and --k, or --nmax");
  }
  bool all = true;
  for (const auto& [n, k] : pairs) {
    const TreeCheckReport report = spanning_tree_check(family, n, k);
    all = all && report.verdict;
    if (as_json) {
      out << io::tree_report_to_json(report).dump() << '\n';
    } else {
      out << family_name(family) << " n=" << n << " k=" << k
          << ": facets=" << report.facet_count << " rank=" << report.boundary_rank
          << " independent=" << (report.independent ? "yes" : "no")
          << " verdict=" << (report.verdict ? "ok" : "FAIL") << " [Z2 analog only]\n";
    }
  }
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sphere bases for skeleta of the cube and the simplex over Z2"};
  app.require_subcommand(1);

  std::string family_str = "cube";
  int n = 0;
  int k = 0;
  int j = 0;
  std::optional<int> ell;
  std::optional<int> opt_n;
  std::optional<int> opt_k;
  std::optional<int> opt_nmax;
  std::string out_file;
  std::string cache_dir;
  std::vector<std::string> cell_texts;
  std::string method = "auto";
  int random_count = 0;
  std::uint64_t seed = 0;
  std::string fn;
  int nmax = 0;
  int nmax_sm = 25;
  int nmax_bw = 20;
  int robust_n = 0;
  std::size_t budget = 1000000;

  bool json_cells = false, json_betti = false, json_basis = false, json_dec = false;
  bool json_counts = false, json_ident = false, json_torus = false, json_robust = false;
  bool json_tree = false;

  CLI::App* c_cells = app.add_subcommand("cells", "enumerate the j-cells of an ambient");
  c_cells->add_option("--family", family_str, "cube or simplex")->required();
  c_cells->add_option("--n", n, "ambient size")->required();
  c_cells->add_option("--j", j, "cell dimension")->required();
  c_cells->add_flag("--json", json_cells, "emit JSON lines");

  CLI::App* c_betti = app.add_subcommand("betti", "Z2 Betti numbers of the k-skeleton");
  c_betti->add_option("--family", family_str, "cube or simplex")->required();
  c_betti->add_option("--n", n, "ambient size")->required();
  c_betti->add_option("--k", k, "skeleton dimension")->required();
  c_betti->add_option("--ell", ell, "single homological degree (default: full profile)");
  c_betti->add_flag("--json", json_betti, "emit JSON lines");

  CLI::App* c_basis = app.add_subcommand("basis", "construct the canonical sphere basis");
  c_basis->add_option("--family", family_str, "cube or simplex")->required();
  c_basis->add_option("--n", n, "ambient size")->required();
  c_basis->add_option("--k", k, "skeleton dimension")->required();
  c_basis->add_option("--out", out_file, "write the basis file here");
  c_basis->add_option("--cache", cache_dir, "basis file cache directory");
  c_basis->add_flag("--json", json_basis, "emit JSON lines");

  CLI::App* c_dec = app.add_subcommand("decompose", "decompose an even complex");
  c_dec->add_option("--family", family_str, "cube or simplex")->required();
  c_dec->add_option("--n", n, "ambient size")->required();
  c_dec->add_option("--k", k, "cell dimension")->required();
  c_dec->add_option("--cell", cell_texts, "k-cell of the input (repeatable)");
  c_dec->add_option("--method", method, "auto, cone, peel, or solve");
  c_dec->add_option("--random", random_count, "run this many random round trips");
  c_dec->add_option("--seed", seed, "random seed (echoed in output)");
  c_dec->add_option("--cache", cache_dir, "basis file cache directory");
  c_dec->add_flag("--json", json_dec, "emit JSON lines");

  CLI::App* c_counts = app.add_subcommand("counts", "closed-form counting tables");
  c_counts
      ->add_option("--fn", fn, "one of s, m, mprime, bw, gr, basisCardSimplex")
      ->required();
  c_counts->add_option("--nmax", nmax, "largest n")->required();
  c_counts->add_option("--k", opt_k, "fix k (default: all k up to n)");
  c_counts->add_flag("--json", json_counts, "emit JSON lines");

  CLI::App* c_ident = app.add_subcommand("identities", "verify the counting identities");
  c_ident->add_option("--nmax-sm", nmax_sm, "bound for the s/m family (default 25)");
  c_ident->add_option("--nmax-bw", nmax_bw, "bound for the bw/gr family (default 20)");
  c_ident->add_flag("--json", json_ident, "emit JSON lines");

  CLI::App* c_torus = app.add_subcommand("torus", "exclusion search for a torus in Q4");
  c_torus->add_option("--out", out_file, "write an OFF file of the surface");
  c_torus->add_flag("--json", json_torus, "emit JSON lines");

  CLI::App* c_robust =
      app.add_subcommand("robust", "connected-sum orderings for all circuits");
  c_robust->add_option("--n", robust_n, "simplex ambient size (2..5)")->required();
  c_robust->add_option("--budget", budget, "search node budget per circuit");
  c_robust->add_flag("--json", json_robust, "emit JSON lines");

  CLI::App* c_tree = app.add_subcommand("treecheck", "spanning-tree analogy check");
  c_tree->add_option("--family", family_str, "cube or simplex")->required();
  c_tree->add_option("--n", opt_n, "ambient size");
  c_tree->add_option("--k", opt_k, "skeleton dimension");
  c_tree->add_option("--nmax", opt_nmax, "sweep all 2<=n<=nmax, 1<=k<=n-1");
  c_tree->add_flag("--json", json_tree, "emit JSON lines");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (*c_cells) return run_cells(parse_family(family_str), n, j, json_cells, out);
    if (*c_betti) return run_betti(parse_family(family_str), n, k, ell, json_betti, out);
    if (*c_basis) {
      return run_basis(parse_family(family_str), n, k, out_file, cache_dir, json_basis,
                       out, err);
    }
    if (*c_dec) {
      const Family family = parse_family(family_str);
      const SphereBasis basis = make_basis(family, n, k, cache_dir);
      if (random_count > 0) {
        if (!cell_texts.empty())
          throw std::invalid_argument("--random and --cell are mutually exclusive");
        return run_decompose_random(random_count, seed, family, n, k, method, basis,
                                    json_dec, out);
      }
      if (cell_texts.empty())
        throw std::invalid_argument("decompose needs --cell entries or --random COUNT");
      return run_decompose_single(cell_texts, family, n, k, method, basis, json_dec, out);
    }
    if (*c_counts) return run_counts(fn, nmax, opt_k, json_counts, out);
    if (*c_ident) return run_identities(nmax_sm, nmax_bw, json_ident, out);
    if (*c_torus) return run_torus(out_file, json_torus, out, err);
    if (*c_robust) return run_robust(robust_n, budget, json_robust, out);
    if (*c_tree) {
      return run_treecheck(parse_family(family_str), opt_n, opt_k, opt_nmax, json_tree,
                           out);
    }
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    (void)e;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotACycleError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace sphb::cli
