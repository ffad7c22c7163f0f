#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "lili/boolfn.hpp"
#include "lili/error.hpp"
#include "lili/generator.hpp"
#include "lili/gf2poly.hpp"
#include "lili/reconstruct.hpp"
#include "lili/stats.hpp"

namespace lili::cli {

namespace {

struct KeyFlags {
  std::string ascii;
  std::string hex;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--key-ascii", ascii, "16-character ASCII key");
    auto* h = cmd->add_option("--key-hex", hex, "32 hex digit key");
    a->excludes(h);
  }

  bool given() const { return !ascii.empty() || !hex.empty(); }

  cipher::KeyMaterial load() const {
    if (!ascii.empty()) return cipher::KeyMaterial::from_ascii(ascii);
    if (!hex.empty()) return cipher::KeyMaterial::from_hex(hex);
    throw CLI::RequiredError("--key-ascii or --key-hex");
  }
};

struct ConfigFlags {
  std::vector<int> clock_positions;
  std::vector<int> data_positions;
  std::string filter_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--clock-positions", clock_positions, "LFSR_c stages y1,y2 feeding the clock function")
        ->delimiter(',')
        ->expected(2);
    cmd->add_option("--data-positions", data_positions, "LFSR_d stages feeding the filter")->delimiter(',');
    cmd->add_option("--filter-file", filter_file, "ANF file for the filter");
  }

  cipher::GeneratorConfig build() const {
    cipher::GeneratorConfig config;
    if (!clock_positions.empty()) config.clock_positions = {clock_positions[0], clock_positions[1]};
    if (!filter_file.empty()) config.filter = boolfn::read_anf_file(filter_file, 10);
    if (!data_positions.empty()) config.data_positions = data_positions;
    config.validate();
    return config;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << data;
  if (!out) throw Error(Errc::InvalidArgument, "write failed for " + path);
}

cipher::KeystreamFormat parse_format(const std::string& f) {
  return f == "bits" ? cipher::KeystreamFormat::Bits : cipher::KeystreamFormat::Hex;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

// ---------------------------------------------------------------------------

struct KeystreamCmd {
  KeyFlags key;
  ConfigFlags config;
  std::size_t bits = 0;
  std::string format = "hex";
  std::string out_path;

  int run(std::ostream& out) const {
    const auto cfg = config.build();
    const auto k = key.load();
    const auto stream = cipher::keystream(k, bits, cfg);
    const auto text = cipher::format_keystream(stream, parse_format(format));
    out << "config: " << cfg.fingerprint() << "\n";
    out << "key: " << k.source << "\n";
    out << "bits: " << bits << "\n";
    out << "format: " << format << "\n";
    if (out_path.empty()) {
      out << "keystream: " << text << "\n";
    } else {
      write_file(out_path, text + "\n");
      out << "written: " << out_path << "\n";
    }
    return kSuccess;
  }
};

struct VerifyCmd {
  KeyFlags key;
  ConfigFlags config;
  std::size_t bits = 65536;
  std::string expanded_file;

  int run(std::ostream& out) const {
    const auto cfg = config.build();
    const auto k = key.load();
    const auto expanded = expanded_file.empty() ? cipher::default_expanded_filter()
                                                : boolfn::read_anf_file(expanded_file, cfg.data_spec.length);
    const auto r = cipher::equivalence_check(k, bits, cfg, expanded);
    out << "config: " << cfg.fingerprint() << "\n";
    out << "key: " << k.source << "\n";
    if (r.equivalent) {
      out << "EQUIVALENT n=" << bits << "\n";
      return kSuccess;
    }
    out << "MISMATCH first-index=" << *r.first_mismatch << " n=" << bits << "\n";
    return kVerificationFailed;
  }
};

struct ReconstructCmd {
  KeyFlags key;
  ConfigFlags config;
  std::size_t budget = 8192;
  std::string anf_out;
  std::string observations_in;
  std::string observations_out;

  int run(std::ostream& out) const {
    recon::ObservationSet obs;
    if (!observations_in.empty()) {
      obs = recon::parse_observations(read_file(observations_in));
      if (obs.pairs.size() > budget) obs.pairs.resize(budget);
      out << "source: " << observations_in << "\n";
    } else {
      const auto cfg = config.build();
      const auto k = key.load();
      obs = cipher::replay(k, budget, cfg);
      out << "config: " << cfg.fingerprint() << "\n";
      out << "key: " << k.source << "\n";
    }
    if (!observations_out.empty()) write_file(observations_out, recon::format_observations(obs));
    out << "budget: " << budget << "\n";
    const auto acc = recon::accumulate(obs);
    try {
      recon::AttackResult result{recon::interpolate(acc), acc.report};
      out << recon::format_report(result);
      if (!anf_out.empty()) write_file(anf_out, boolfn::format_anf_document(result.recovered));
      return kSuccess;
    } catch (const Error& e) {
      if (e.code() != Errc::Underdetermined && e.code() != Errc::Conflicted) throw;
      out << "observations: " << acc.report.observations << "\n";
      out << "coverage: " << acc.report.distinct_inputs_seen << "/" << recon::kInputSpace << "\n";
      out << "conflicts: " << acc.report.conflicts.size() << "\n";
      out << "FAILED " << to_string(e.code()) << "\n";
      return kVerificationFailed;
    }
  }
};

struct MinBitsCmd {
  ConfigFlags config;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t budget = recon::kDefaultTrialBudget;
  bool serial = false;

  int run(std::ostream& out) const {
    recon::ExperimentOptions options;
    options.budget = budget;
    options.config = config.build();
    const auto summary = serial ? recon::min_bits_experiment_serial(trials, seed, options)
                                : recon::min_bits_experiment(trials, seed, options);
    out << "seed: " << seed << "\n";
    out << "budget: " << budget << "\n";
    out << recon::format_summary(summary);
    return kSuccess;
  }
};

struct PolycheckCmd {
  std::string poly;
  std::string poly_file;

  int run(std::ostream& out) const {
    std::string text = poly;
    if (!poly_file.empty()) text = read_file(poly_file);
    const auto f = gf2::FeedbackPolynomial::parse(text);
    const int n = f.degree();
    out << "polynomial: " << f.to_string() << "\n";
    out << "degree: " << n << "\n";
    if (n < 1) throw Error(Errc::InvalidArgument, "polynomial must have degree >= 1");
    const bool irreducible = gf2::is_irreducible(f);
    if (n > static_cast<int>(gf2::kMaxFactorBits)) {
      out << "irreducible: " << yes_no(irreducible) << ", primitive: unknown (degree > 96)\n";
      return irreducible ? kSuccess : kVerificationFailed;
    }
    const gf2::u128 order = gf2::mersenne(static_cast<unsigned>(n));
    gf2::FactorSet factors;
    if (order >= 2) factors = gf2::factorize(order);
    std::string fac;
    for (auto p : factors.primes) fac += (fac.empty() ? "" : " * ") + gf2::to_string(p);
    out << "factorization: 2^" << n << "-1 = " << (fac.empty() ? "1" : fac) << "\n";
    const bool primitive = irreducible && gf2::is_primitive(f, factors);
    out << "irreducible: " << yes_no(irreducible) << ", primitive: " << yes_no(primitive) << "\n";
    return primitive ? kSuccess : kVerificationFailed;
  }
};

struct BoolfnCmd {
  std::string anf;
  std::string anf_file;
  int vars = 10;

  int run(std::ostream& out) const {
    const auto f = anf_file.empty() ? boolfn::parse_anf(anf, vars) : boolfn::read_anf_file(anf_file, vars);
    out << "anf: " << boolfn::print_anf(f) << "\n";
    out << "variables: " << f.variables() << "\n";
    out << "terms: " << f.term_count() << ", degree: " << f.degree() << "\n";
    std::string profile;
    const auto p = f.degree_profile();
    for (std::size_t d = 0; d < p.size(); ++d)
      if (p[d]) profile += (profile.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(p[d]);
    out << "degree-profile: " << (profile.empty() ? "-" : profile) << "\n";
    if (f.variables() > boolfn::kMaxTableVariables) {
      out << "weight: unavailable (more than 24 variables)\n";
      return kSuccess;
    }
    const auto m = boolfn::metrics(f);
    out << "weight: " << m.weight << "\n";
    out << "balanced: " << yes_no(m.balanced) << "\n";
    out << "nonlinearity: " << m.nonlinearity << "\n";
    return kSuccess;
  }
};

struct StatsCmd {
  std::string in_path;
  std::string format = "hex";
  std::size_t bits = 0;
  std::size_t block_size = 128;
  double alpha = stats::kDefaultAlpha;

  int run(std::ostream& out) const {
    auto text = read_file(in_path);
    // Accept a raw keystream file as well as a captured "keystream: ..." report line.
    if (const auto pos = text.find("keystream:"); pos != std::string::npos) {
      const auto eol = text.find('\n', pos);
      text = text.substr(pos + 10, eol == std::string::npos ? std::string::npos : eol - pos - 10);
    }
    auto stream = cipher::parse_keystream(text, parse_format(format));
    if (bits != 0) {
      if (bits > stream.size())
        throw Error(Errc::TooFewBits, "file holds " + std::to_string(stream.size()) + " bits");
      stream.resize(bits);
    }
    bool all_pass = true;
    for (const auto& r : stats::battery(stream, block_size, alpha)) {
      out << stats::format_report(r) << "\n";
      all_pass &= r.pass;
    }
    return all_pass ? kSuccess : kVerificationFailed;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"LILI-128 keystream generator and filter-reconstruction workbench", "lili"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"hex", "bits"};

  KeystreamCmd ks;
  auto* ks_cmd = app.add_subcommand("keystream", "Generate keystream bits");
  ks.key.attach(ks_cmd);
  ks.config.attach(ks_cmd);
  ks_cmd->add_option("--bits", ks.bits, "Number of bits")->required()->check(CLI::PositiveNumber);
  ks_cmd->add_option("--format", ks.format, "hex or bits")->check(CLI::IsMember(formats));
  ks_cmd->add_option("--out", ks.out_path, "Write the keystream to this file");

  VerifyCmd verify;
  auto* verify_cmd = app.add_subcommand("verify-equivalence", "Compare extracted-input and expanded filter forms");
  verify.key.attach(verify_cmd);
  verify.config.attach(verify_cmd);
  verify_cmd->add_option("--bits", verify.bits, "Bits to compare")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--expanded-filter-file", verify.expanded_file, "ANF over the 89 LFSR_d stages");

  ReconstructCmd rec;
  auto* rec_cmd = app.add_subcommand("reconstruct", "Recover the filter ANF from replayed keystream");
  rec.key.attach(rec_cmd);
  rec.config.attach(rec_cmd);
  rec_cmd->add_option("--budget", rec.budget, "Keystream bits available")->check(CLI::PositiveNumber);
  rec_cmd->add_option("--anf-out", rec.anf_out, "Write the recovered ANF here");
  rec_cmd->add_option("--observations-in", rec.observations_in, "Read observations instead of replaying a key");
  rec_cmd->add_option("--observations-out", rec.observations_out, "Write the replayed observations here");

  MinBitsCmd mb;
  auto* mb_cmd = app.add_subcommand("min-bits", "Distribution of bits needed for full input coverage");
  mb.config.attach(mb_cmd);
  mb_cmd->add_option("--trials", mb.trials, "Number of random keys")->check(CLI::PositiveNumber);
  mb_cmd->add_option("--seed", mb.seed, "RNG seed")->required();
  mb_cmd->add_option("--budget", mb.budget, "Per-trial bit cap")->check(CLI::PositiveNumber);
  mb_cmd->add_flag("--serial", mb.serial, "Use the single-threaded reference loop");

  PolycheckCmd pc;
  auto* pc_cmd = app.add_subcommand("polycheck", "Irreducibility and primitivity of a GF(2) polynomial");
  auto* pc_text = pc_cmd->add_option("--poly", pc.poly, "Polynomial text, e.g. x^4+x+1");
  auto* pc_file = pc_cmd->add_option("--poly-file", pc.poly_file, "File holding the polynomial");
  pc_text->excludes(pc_file);
  pc_cmd->require_option(1);

  BoolfnCmd bf;
  auto* bf_cmd = app.add_subcommand("boolfn", "Metrics of a Boolean function given in ANF");
  auto* bf_text = bf_cmd->add_option("--anf", bf.anf, "ANF expression");
  auto* bf_file = bf_cmd->add_option("--anf-file", bf.anf_file, "ANF file");
  bf_text->excludes(bf_file);
  bf_cmd->add_option("--vars", bf.vars, "Variable count when no '# n=' header is present")
      ->check(CLI::Range(0, boolfn::kMaxVariables));
  bf_cmd->require_option(1, 2);

  StatsCmd st;
  auto* st_cmd = app.add_subcommand("stats", "Monobit, runs and block-frequency tests on a keystream file");
  st_cmd->add_option("--in", st.in_path, "Keystream file")->required();
  st_cmd->add_option("--format", st.format, "hex or bits")->check(CLI::IsMember(formats));
  st_cmd->add_option("--bits", st.bits, "Use only the first N bits");
  st_cmd->add_option("--block-size", st.block_size, "Block length for block-frequency")->check(CLI::PositiveNumber);
  st_cmd->add_option("--alpha", st.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));

  std::vector<std::string> argv_store{"lili"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*ks_cmd) {
      if (!ks.key.given()) throw CLI::RequiredError("--key-ascii or --key-hex");
      return ks.run(out);
    }
    if (*verify_cmd) {
      if (!verify.key.given()) throw CLI::RequiredError("--key-ascii or --key-hex");
      return verify.run(out);
    }
    if (*rec_cmd) {
      if (!rec.key.given() && rec.observations_in.empty())
        throw CLI::RequiredError("--key-ascii, --key-hex or --observations-in");
      return rec.run(out);
    }
    if (*mb_cmd) return mb.run(out);
    if (*pc_cmd) return pc.run(out);
    if (*bf_cmd) return bf.run(out);
    if (*st_cmd) return st.run(out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::BadKeyLength ? kUsageError : kDataError;
  }
  return kUsageError;
}

}  // namespace lili::cli
