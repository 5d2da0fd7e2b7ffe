#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "orbitcensus/asymptotics.hpp"
#include "orbitcensus/baker.hpp"
#include "orbitcensus/census.hpp"
#include "orbitcensus/census_io.hpp"
#include "orbitcensus/error.hpp"
#include "orbitcensus/fourier.hpp"
#include "orbitcensus/graph.hpp"
#include "orbitcensus/parallel.hpp"
#include "orbitcensus/validation.hpp"

namespace orbitcensus::cli {

namespace {

struct RunConfig {
  int n = -1;
  int p = 3;
  std::vector<int> k_list;
  std::vector<double> thresholds;
  std::string engine = "best";
  std::string level = "word";
  int grid = 0;
  int bins = 100;
  std::string out_dir = ".";
  std::string format = "csv";
  unsigned workers = 0;
  bool necklaces = false;
  bool prime_only = false;
};

auto bits_only(const std::string& word) -> std::string {
  std::string s;
  for (char c : word) {
    if (c == '0' || c == '1') s.push_back(c);
  }
  return s;
}

auto base_params(const std::string& command, const RunConfig& c) -> io::Params {
  io::Params params{{"command", command}};
  if (c.n >= 0) params.emplace_back("n", std::to_string(c.n));
  params.emplace_back("p", std::to_string(c.p));
  return params;
}

auto join(const std::vector<int>& v) -> std::string {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

class Session {
 public:
  Session(RunConfig config, std::ostream& out) : c_(std::move(config)), out_(out) {}

  auto census() -> int {
    const auto table = build_table(parse_engine(c_.engine), c_.necklaces);
    auto params = base_params("census", c_);
    params.emplace_back("engine", c_.engine);
    params.emplace_back("necklaces", c_.necklaces ? "1" : "0");
    params.emplace_back("prime_only", table.prime_only() ? "1" : "0");
    emit("census", io::census_document(table, params));
    out_ << "clusters=" << table.size() << " max_cluster=" << to_decimal(census::max_cluster(table).size_words)
         << " Z_2=" << to_decimal(census::moments(table, 2)) << '\n';
    return 0;
  }

  auto moments() -> int {
    const Level level = parse_level(c_.level);
    if (c_.k_list.empty()) c_.k_list = {2, 3, 4, 5};
    std::optional<CensusTable> table;
    if (level == Level::necklace && !is_prime(static_cast<std::uint64_t>(std::max(c_.n, 0)))) {
      if (c_.n > census::kBruteNecklaceMaxN) {
        throw CapacityError("necklace-level moments for composite n need a brute necklace census (n <= " +
                            std::to_string(census::kBruteNecklaceMaxN) + ")");
      }
      table = census::brute_census(c_.n, c_.p, {true, c_.prime_only, c_.workers});
    } else {
      table = build_table(parse_engine(c_.engine), false);
    }
    auto params = base_params("moments", c_);
    params.emplace_back("engine", to_string(table->engine()));
    params.emplace_back("level", c_.level);
    params.emplace_back("k", join(c_.k_list));
    io::Document doc{params, {"n", "p", "k", "level", "exact", "exact_log2", "asymptotic_log2", "ratio"}, {}};
    for (int k : c_.k_list) {
      if (k < 1) throw ParameterError("moment orders must be positive");
      const BigInt z = census::moments(*table, static_cast<unsigned>(k), level);
      const double exact_log2 = log2(z);
      double asym_log2 = k == 1 ? c_.n : asym::asymptotic_Zk(c_.n, c_.p, k).log2_value;
      if (level == Level::necklace) asym_log2 -= k * std::log2(static_cast<double>(c_.n));
      const double ratio = std::exp2(exact_log2 - asym_log2);
      doc.rows.push_back({static_cast<long long>(c_.n), static_cast<long long>(c_.p), static_cast<long long>(k),
                          c_.level, to_decimal(z), exact_log2, asym_log2, ratio});
      out_ << "k=" << k << " exact=" << to_decimal(z) << " ratio=" << io::format_real(ratio) << '\n';
    }
    emit("moments", doc);
    return 0;
  }

  auto distribution() -> int {
    const auto table = build_table(parse_engine(c_.engine), false);
    auto params = base_params("distribution", c_);
    params.emplace_back("bins", std::to_string(c_.bins));
    io::Document doc{params, {"t", "empirical", "theoretical"}, {}};
    double sup = 0;
    for (const auto& s : census::empirical_distribution(table, c_.bins)) {
      doc.rows.push_back({s.t, s.empirical, s.theoretical});
      sup = std::max(sup, std::abs(s.empirical - s.theoretical));
    }
    emit("distribution", doc);
    out_ << "sup_deviation=" << io::format_real(sup) << '\n';
    return 0;
  }

  auto anisotropy() -> int {
    const auto table = build_table(parse_engine(c_.engine), false);
    auto params = base_params("anisotropy", c_);
    io::Document doc{{}, {"edge", "k_or_t", "value"}, {}};
    auto edge_name = [&](std::size_t a) {
      return bits_only(PWord{c_.p, static_cast<std::uint32_t>(a)}.to_string());
    };
    if (!c_.thresholds.empty()) {
      std::string ts;
      for (double t : c_.thresholds) ts += (ts.empty() ? "" : ",") + io::format_real(t);
      params.emplace_back("thresholds", ts);
      for (double t : c_.thresholds) {
        const auto v = census::thresholded_edge_visits(table, t);
        for (std::size_t a = 0; a < v.size(); ++a) doc.rows.push_back({edge_name(a), t, v[a]});
      }
    } else {
      if (c_.k_list.empty()) c_.k_list = {1, 2};
      params.emplace_back("k", join(c_.k_list));
      for (int k : c_.k_list) {
        if (k < 1) throw ParameterError("k must be positive");
        const auto v = census::mean_edge_visits(table, static_cast<unsigned>(k));
        for (std::size_t a = 0; a < v.size(); ++a) doc.rows.push_back({edge_name(a), static_cast<long long>(k), v[a]});
      }
    }
    doc.params = params;
    emit("anisotropy", doc);
    return 0;
  }

  auto max_cluster() -> int {
    const auto table = build_table(parse_engine(c_.engine), false);
    const auto& best = census::max_cluster(table);
    const auto estimate = asym::asymptotic_max_cluster(c_.n, c_.p, Level::word);
    const double exact_log2 = log2(best.size_words);
    bool homogeneous = c_.n % (1 << c_.p) == 0;
    for (std::size_t a = 0; homogeneous && a < best.vector.size(); ++a) {
      homogeneous = best.vector[a] == static_cast<std::uint32_t>(c_.n >> c_.p);
    }
    io::Document doc{base_params("max-cluster", c_),
                     {"n", "p", "vector", "size_words", "size_necklaces", "exact_log2", "asymptotic_log2", "ratio",
                      "homogeneous"},
                     {}};
    const double ratio = std::exp2(exact_log2 - estimate.log2_value);
    doc.rows.push_back({static_cast<long long>(c_.n), static_cast<long long>(c_.p), best.vector.to_string(),
                        to_decimal(best.size_words), best.size_necklaces ? to_decimal(*best.size_necklaces) : "",
                        exact_log2, estimate.log2_value, ratio, static_cast<long long>(homogeneous)});
    emit("max-cluster", doc);
    out_ << "max_cluster=" << to_decimal(best.size_words) << " vector=" << best.vector.to_string()
         << " ratio=" << io::format_real(ratio) << '\n';
    return 0;
  }

  auto count_clusters() -> int {
    const auto count = graph::count_admissible(c_.n, c_.p);
    io::Document doc{base_params("count-clusters", c_), {"n", "p", "count", "leading", "ratio"}, {}};
    doc.rows.push_back({static_cast<long long>(c_.n), static_cast<long long>(c_.p), to_decimal(count.count),
                        count.leading ? io::Cell{*count.leading} : io::Cell{std::string()},
                        count.ratio ? io::Cell{*count.ratio} : io::Cell{std::string()}});
    emit("count-clusters", doc);
    out_ << "clusters=" << to_decimal(count.count) << '\n';
    return 0;
  }

  auto validate() -> int {
    const auto report = validation::validate_spectral(c_.p);
    const auto path = output_path("validate_p" + std::to_string(c_.p) + ".json");
    std::ofstream f(path);
    f << report.to_json() << '\n';
    std::size_t failed = 0;
    for (const auto& e : report.entries) {
      if (!e.pass) {
        ++failed;
        out_ << "FAIL " << e.check << " residual=" << io::format_real(e.residual) << '\n';
      }
    }
    out_ << "checks=" << report.entries.size() << " failed=" << failed << '\n';
    return failed ? static_cast<int>(ExitCode::validation) : 0;
  }

  auto fourier() -> int {
    const int k = c_.k_list.empty() ? 0 : c_.k_list.front();
    const int grid = c_.grid == 0 ? c_.n + 1 : c_.grid;
    auto params = base_params("fourier", c_);
    params.emplace_back("grid", std::to_string(grid));
    params.emplace_back("k", std::to_string(k));
    bool all_match = true;
    io::Document doc{params, {}, {}};
    if (k == 0) {
      if (c_.p != 2) throw CapacityError("per-cluster Fourier inversion supports p = 2 only");
      const fourier::FullTraceGrid traces(c_.n, grid, c_.workers);
      doc.columns = {"vector", "fourier", "best", "match"};
      graph::enumerate_admissible_vectors(c_.n, 2, [&](const EdgeCountVector& v) {
        const BigInt f = traces.cluster_size(v);
        const BigInt b = census::best_cluster_size(v);
        all_match &= f == b;
        doc.rows.push_back({v.to_string(), to_decimal(f), to_decimal(b), static_cast<long long>(f == b)});
        return true;
      });
    } else {
      const BigInt f = fourier::fourier_moment(c_.n, c_.p, static_cast<unsigned>(k), grid, c_.workers);
      const BigInt z = census::moments(census::best_census(c_.n, c_.p, c_.workers), static_cast<unsigned>(k));
      all_match = f == z;
      doc.columns = {"n", "p", "k", "grid", "fourier", "census", "match"};
      doc.rows.push_back({static_cast<long long>(c_.n), static_cast<long long>(c_.p), static_cast<long long>(k),
                          static_cast<long long>(grid), to_decimal(f), to_decimal(z),
                          static_cast<long long>(all_match)});
    }
    emit("fourier", doc);
    out_ << "rows=" << doc.rows.size() << " match=" << (all_match ? "yes" : "no") << '\n';
    return all_match ? 0 : static_cast<int>(ExitCode::validation);
  }

  auto baker_check() -> int {
    const auto rep = baker::symbolic_metric_sweep(c_.n, c_.p);
    io::Document doc{base_params("baker-check", c_),
                     {"n", "p", "close_pairs", "failures_2^-p", "failures_2^-floor(p/2)", "example"},
                     {}};
    std::string example;
    if (!rep.first_failures.empty()) {
      example = rep.first_failures.front().first.to_string() + "~" + rep.first_failures.front().second.to_string();
    }
    doc.rows.push_back({static_cast<long long>(rep.n), static_cast<long long>(rep.p),
                        static_cast<long long>(rep.close_pairs), static_cast<long long>(rep.failures_at_2_pow_minus_p),
                        static_cast<long long>(rep.failures_at_half_window), example});
    emit("baker-check", doc);
    out_ << "close_pairs=" << rep.close_pairs << " failures=" << rep.failures_at_2_pow_minus_p
         << " failures_half_window=" << rep.failures_at_half_window << '\n';
    return rep.failures_at_2_pow_minus_p ? static_cast<int>(ExitCode::validation) : 0;
  }

 private:
  auto build_table(Engine engine, bool necklaces) -> CensusTable {
    if (engine == Engine::brute) return census::brute_census(c_.n, c_.p, {necklaces, c_.prime_only, c_.workers});
    if (necklaces) throw ParameterError("--necklaces requires --engine brute");
    return census::best_census(c_.n, c_.p, c_.workers);
  }

  auto output_path(const std::string& name) -> std::filesystem::path {
    std::filesystem::create_directories(c_.out_dir);
    return std::filesystem::path(c_.out_dir) / name;
  }

  void emit(const std::string& command, const io::Document& doc) {
    const auto format = io::parse_format(c_.format);
    const auto path =
        output_path(command + "_n" + std::to_string(c_.n) + "_p" + std::to_string(c_.p) + "." + io::extension(format));
    std::ofstream f(path);
    if (!f) throw ParameterError("cannot write " + path.string());
    io::write(f, doc, format);
    out_ << "wrote " << path.string() << '\n';
  }

  RunConfig c_;
  std::ostream& out_;
};

}  // namespace

auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int {
  CLI::App app{"Exact censuses of p-close periodic orbit clusters of the baker's map"};
  app.name(args.empty() ? "orbit-census" : args.front());
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub, bool needs_n) {
    auto* n = sub->add_option("--n", c.n, "word length / orbit period")->check(CLI::Range(1, 1000));
    if (needs_n) n->required();
    sub->add_option("--p", c.p, "closeness order (de Bruijn graph order)")->check(CLI::Range(2, 20));
    sub->add_option("--out", c.out_dir, "output directory");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--workers", c.workers, "worker threads (default: ORBIT_CENSUS_WORKERS or all cores)");
  };
  auto engine = [&](CLI::App* sub) {
    sub->add_option("--engine", c.engine, "brute or best")->check(CLI::IsMember({"brute", "best"}));
  };

  auto* census = app.add_subcommand("census", "write the full cluster census");
  common(census, true);
  engine(census);
  census->add_flag("--necklaces", c.necklaces, "count necklaces per cluster (brute engine, n <= 24)");
  census->add_flag("--prime-only", c.prime_only, "restrict necklace counts to prime orbits");

  auto* moments = app.add_subcommand("moments", "exact moments Z_k against their asymptotics");
  common(moments, true);
  engine(moments);
  moments->add_option("--k", c.k_list, "moment orders, comma separated")->delimiter(',');
  moments->add_option("--level", c.level, "word or necklace")->check(CLI::IsMember({"word", "necklace"}));
  moments->add_flag("--prime-only", c.prime_only, "prime orbits only (composite n, necklace level)");

  auto* distribution = app.add_subcommand("distribution", "size-weighted CDF of cluster sizes");
  common(distribution, true);
  engine(distribution);
  distribution->add_option("--bins", c.bins, "number of bins")->check(CLI::Range(1, 1000000));

  auto* anisotropy = app.add_subcommand("anisotropy", "mean edge visits weighted by cluster size");
  common(anisotropy, true);
  engine(anisotropy);
  auto* k_opt = anisotropy->add_option("--k", c.k_list, "weights |C|^k, comma separated")->delimiter(',');
  anisotropy->add_option("--thresholds", c.thresholds, "size thresholds t in (0, 1], comma separated")
      ->delimiter(',')
      ->excludes(k_opt);

  auto* max_cluster = app.add_subcommand("max-cluster", "the largest cluster and its asymptotic size");
  common(max_cluster, true);
  engine(max_cluster);

  auto* count = app.add_subcommand("count-clusters", "number of non-empty clusters");
  common(count, true);

  auto* validate = app.add_subcommand("validate", "transfer-matrix identities as a pass/fail report");
  common(validate, false);

  auto* fourier = app.add_subcommand("fourier", "cluster sizes or moments by discrete Fourier inversion");
  common(fourier, true);
  fourier->add_option("--k", c.k_list, "moment order; omit for per-cluster sizes (p = 2)")->expected(1);
  fourier->add_option("--grid", c.grid, "grid size L >= n + 1 (default n + 1)")->check(CLI::NonNegativeNumber);

  auto* baker = app.add_subcommand("baker-check", "symbolic closeness versus phase-space closeness");
  common(baker, true);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("orbit-census");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    }
    return static_cast<int>(ExitCode::usage);
  }
  if (c.workers == 0) c.workers = default_worker_count();

  try {
    Session session(c, out);
    if (*census) return session.census();
    if (*moments) return session.moments();
    if (*distribution) return session.distribution();
    if (*anisotropy) return session.anisotropy();
    if (*max_cluster) return session.max_cluster();
    if (*count) return session.count_clusters();
    if (*validate) return session.validate();
    if (*fourier) return session.fourier();
    if (*baker) return session.baker_check();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  }
  return static_cast<int>(ExitCode::usage);
}

}  // namespace orbitcensus::cli
