#include "bicross/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicross/bicrossed.hpp"
#include "bicross/cyclic.hpp"
#include "bicross/factorization.hpp"
#include "bicross/iso.hpp"
#include "bicross/json_io.hpp"

namespace bicross {

namespace {

using json = nlohmann::ordered_json;

long long env_default_budget() {
  if (const char* env = std::getenv("BICROSS_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return v;
  }
  return kDefaultSeedBudget;
}

struct Options {
  int n = 1, m = 1, p = 2;
  std::string input, output, format = "text";
  bool trace = false;
  long long budget = env_default_budget();
  int parallelism = 1;
};

std::string profile_string(const OrderProfile& profile) {
  std::string s = "[";
  for (size_t i = 0; i < profile.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(profile[i]);
  }
  return s + "]";
}

std::string perm_string(const std::vector<int>& p) {
  return profile_string(p);  // same rendering
}

// JSON payload goes to --output when given, stdout otherwise; text mode
// prints a summary instead and still honors --output for the payload.
void emit(const Options& opt, const std::string& payload, const std::string& summary,
          std::ostream& out) {
  if (!opt.output.empty()) write_text_file(opt.output, payload + "\n");
  if (opt.format == "json") {
    if (opt.output.empty()) out << payload << "\n";
  } else {
    out << summary;
  }
}

json seed_json(const CyclicSeed& seed) {
  auto tables = expand_seed_tables(seed);
  json entry;
  entry["theta"] = seed.theta;
  entry["phi"] = seed.phi;
  json alpha = json::array(), beta = json::array();
  for (int g = 0; g < seed.m; ++g) {
    json arow = json::array(), brow = json::array();
    for (int h = 0; h < seed.n; ++h) {
      arow.push_back(tables.alpha[g * seed.n + h]);
      brow.push_back(tables.beta[g * seed.n + h]);
    }
    alpha.push_back(std::move(arow));
    beta.push_back(std::move(brow));
  }
  entry["alpha"] = std::move(alpha);
  entry["beta"] = std::move(beta);
  return entry;
}

void cmd_construct(const Options& opt, std::ostream& out) {
  const MatchedPair mp = matched_pair_from_json(read_text_file(opt.input));
  const BicrossedGroup bi = build_bicrossed(mp);
  std::ostringstream summary;
  summary << "constructed H |><| G of order " << bi.group.order() << " (|H|="
          << bi.h_order() << ", |G|=" << bi.g_order() << ")\n"
          << "order profile: " << profile_string(order_profile(bi.group)) << "\n";
  emit(opt, bicrossed_to_json(bi), summary.str(), out);
}

void cmd_enumerate(const Options& opt, std::ostream& out) {
  const auto seeds = enumerate_matched_seeds(opt.n, opt.m, opt.budget, opt.parallelism);
  json j;
  j["n"] = opt.n;
  j["m"] = opt.m;
  j["count"] = seeds.size();
  json pairs = json::array();
  for (const auto& seed : seeds) pairs.push_back(seed_json(seed));
  j["pairs"] = std::move(pairs);

  std::ostringstream summary;
  summary << seeds.size() << " matched pair(s) between C_" << opt.n << " and C_"
          << opt.m << "\n";
  for (size_t i = 0; i < seeds.size(); ++i)
    summary << "pair " << i << ": theta=" << perm_string(seeds[i].theta)
            << " phi=" << perm_string(seeds[i].phi) << "\n";
  emit(opt, j.dump(), summary.str(), out);
}

void cmd_classify(const Options& opt, std::ostream& out) {
  const auto pairs = enumerate_matched_pairs(opt.n, opt.m, opt.budget, opt.parallelism);
  std::vector<FiniteGroup> groups;
  groups.reserve(pairs.size());
  for (const auto& mp : pairs) groups.push_back(build_bicrossed(mp).group);
  const auto classes = classify(groups);

  json j;
  j["n"] = opt.n;
  j["m"] = opt.m;
  j["count"] = classes.size();
  json cl = json::array();
  for (const auto& c : classes) {
    json entry;
    entry["representative"] = c.representative;
    entry["members"] = c.members;
    entry["order"] = groups.empty() ? 0 : groups[c.representative].order();
    entry["order_profile"] =
        groups.empty() ? OrderProfile{} : order_profile(groups[c.representative]);
    cl.push_back(std::move(entry));
  }
  j["classes"] = std::move(cl);

  std::ostringstream summary;
  summary << pairs.size() << " matched pair(s), " << classes.size()
          << " isomorphism class(es)\n";
  for (const auto& c : classes)
    summary << "class rep " << c.representative << " ("
            << profile_string(order_profile(groups[c.representative]))
            << "): " << c.members.size() << " member(s)\n";
  emit(opt, j.dump(), summary.str(), out);
}

void cmd_verify_theorem(const Options& opt, std::ostream& out) {
  if (!is_prime(opt.p)) throw Error(ErrorCode::NotPrime, "p must be prime");
  const TheoremReport report =
      verify_main_theorem(opt.p, opt.m, opt.budget, opt.parallelism);

  std::ostringstream summary;
  summary << "theorem check p=" << report.p << " m=" << report.m << "\n"
          << "matched pairs: " << report.pairs.size() << "\n"
          << "matched to semidirect products: " << report.matches.size() << "/"
          << report.pairs.size() << "\n";
  int counts[3] = {0, 0, 0};
  for (const auto& w : report.witnesses) ++counts[static_cast<int>(w.branch)];
  summary << "witness branches: NormalH=" << counts[0] << " NormalG=" << counts[1]
          << " Corrected=" << counts[2] << "\n"
          << "all_matched: " << (report.all_matched ? "true" : "false") << "\n";
  if (opt.trace) {
    for (size_t i = 0; i < report.pairs.size(); ++i) {
      const auto& w = report.witnesses[i];
      summary << "pair " << i << ": theta=" << perm_string(report.pairs[i].theta)
              << " phi=" << perm_string(report.pairs[i].phi)
              << " profile=" << profile_string(report.profiles[i]) << " -> r="
              << report.matches[i].residue << " ("
              << witness_branch_name(report.matches[i].orientation) << "), witness "
              << witness_branch_name(w.branch);
      if (w.branch != WitnessBranch::NormalG) summary << " t=" << w.t;
      if (w.branch == WitnessBranch::NormalG) summary << " s=" << w.m_exponent;
      if (w.branch == WitnessBranch::Corrected)
        summary << " c=" << w.c << " u=" << *w.u << " a~=" << *w.a_tilde;
      summary << "\n";
    }
  }
  emit(opt, theorem_report_to_json(report), summary.str(), out);
}

void cmd_factorize(const Options& opt, std::ostream& out) {
  const FiniteGroup e = group_from_json(read_text_file(opt.input));
  const auto factorizations = find_exact_factorizations(e);

  std::ostringstream summary;
  summary << factorizations.size() << " exact factorization(s) of a group of order "
          << e.order() << "\n";
  for (size_t i = 0; i < factorizations.size(); ++i)
    summary << "factorization " << i << ": |H|=" << factorizations[i].H.order()
            << " |G|=" << factorizations[i].G.order() << "\n";
  emit(opt, factorizations_to_json(factorizations), summary.str(), out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-group engine for bicrossed (Zappa-Szep) products"};
  app.name("bicross");
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool takes_budget) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--output", opt.output, "Write the JSON payload to this file");
    if (takes_budget) {
      cmd->add_option("--budget", opt.budget, "Candidate-seed budget")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--parallelism", opt.parallelism, "Worker thread cap")
          ->check(CLI::PositiveNumber);
    }
  };

  CLI::App* construct = app.add_subcommand(
      "construct", "Build the bicrossed product from a matched-pair file");
  construct->add_option("--input", opt.input, "Matched-pair JSON file")->required();
  add_common(construct, false);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Enumerate all matched pairs between C_n and C_m");
  enumerate->add_option("--n", opt.n, "Order of the left factor")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--m", opt.m, "Order of the right factor")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(enumerate, true);

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Enumerate, build and classify the products up to isomorphism");
  classify_cmd->add_option("--n", opt.n, "Order of the left factor")
      ->required()
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("--m", opt.m, "Order of the right factor")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(classify_cmd, true);

  CLI::App* verify = app.add_subcommand(
      "verify-theorem",
      "Check that every C_p |><| C_m is a semidirect product of the same orders");
  verify->add_option("--p", opt.p, "Prime order of the left factor")->required();
  verify->add_option("--m", opt.m, "Order of the right factor")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_flag("--trace", opt.trace, "Per-pair detail in text output");
  add_common(verify, true);

  CLI::App* factorize = app.add_subcommand(
      "factorize", "Find exact factorizations of a group file and recover the actions");
  factorize->add_option("--input", opt.input, "Group JSON file")->required();
  add_common(factorize, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (construct->parsed()) cmd_construct(opt, out);
    if (enumerate->parsed()) cmd_enumerate(opt, out);
    if (classify_cmd->parsed()) cmd_classify(opt, out);
    if (verify->parsed()) cmd_verify_theorem(opt, out);
    if (factorize->parsed()) cmd_factorize(opt, out);
  } catch (const Error& e) {
    err << error_code_name(e.code()) << ": " << e.what() << "\n";
    if (opt.format == "json") {
      json j;
      j["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
      out << j.dump() << "\n";
    }
    return 1;
  }
  return 0;
}

}  // namespace bicross
