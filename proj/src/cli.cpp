#include "bsdh/cli.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsdh/enumerate.hpp"
#include "bsdh/errors.hpp"
#include "bsdh/extremal.hpp"
#include "bsdh/intersect.hpp"
#include "bsdh/json_io.hpp"

namespace bsdh::cli {
namespace {

int parse_int(std::string_view s, const std::string& what) {
  int value = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw usage_error("cannot parse integer \"" + std::string(s) + "\" in " + what);
  return value;
}

std::vector<int> parse_csv(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t begin = 0;
  while (true) {
    std::size_t comma = s.find(',', begin);
    std::string_view item(s.data() + begin,
                          (comma == std::string::npos ? s.size() : comma) - begin);
    out.push_back(parse_int(item, flag));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return out;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open file " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw usage_error("malformed JSON in " + path + ": " + e.what());
  }
}

struct RootSystemInput {
  RootSystem rs;
  nlohmann::ordered_json echo;  // for the report document
};

RootSystemInput load_root_system(const RunConfig& config) {
  if (config.type_token.has_value()) {
    const std::string& token = *config.type_token;
    if (token.size() < 2 || !std::isalpha(static_cast<unsigned char>(token[0])))
      throw usage_error("--type expects a family letter followed by a rank, like A3");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    int rank = parse_int(std::string_view(token).substr(1), "--type");
    nlohmann::ordered_json echo;
    echo["family"] = std::string(1, family);
    echo["rank"] = rank;
    return {RootSystem::named(family, rank), std::move(echo)};
  }
  nlohmann::json fragment = load_json_file(*config.cartan_file);
  RootSystem rs = root_system_from_json(fragment);
  nlohmann::ordered_json echo;
  if (fragment.contains("type")) {
    echo["family"] = fragment["type"]["family"].get<std::string>();
    echo["rank"] = fragment["type"]["rank"].get<int>();
  } else {
    echo["cartan"] = rs.cartan();
  }
  return {rs, std::move(echo)};
}

std::string positions_subscript(const Word& w, const std::vector<int>& positions) {
  std::ostringstream os;
  bool compact = w.length() <= 9;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k && !compact) os << ",";
    os << positions[k];
  }
  return os.str();
}

std::string positions_tuple(const std::vector<int>& positions) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k) os << ",";
    os << positions[k];
  }
  os << ")";
  return os.str();
}

std::string coeff_tuple(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ", ";
    os << v[k];
  }
  os << ")";
  return os.str();
}

std::string class_formula(const CurveClass& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    std::int64_t v = c.coeffs[k];
    if (v == 0) continue;
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    std::uint64_t mag = v < 0 ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    if (mag != 1) os << mag << " ";
    os << "L_" << (k + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// First reason L_r fails to span a Mori ray, empty when it does.
std::string mori_failure_reason(const Word& w, int r) {
  int negatives = 0;
  for (int j = r + 1; j <= w.length(); ++j) {
    std::int64_t v = w.pos_pairing(j, r);
    if (v > 0) {
      std::ostringstream os;
      os << "not extremal ((" << j << "," << r << ")=" << v << ")";
      return os.str();
    }
    if (v < 0 && (v != -1 || ++negatives > 1)) {
      std::ostringstream os;
      os << "not Mori (K.L_" << r << " = " << canonical_dot_schubert(w, r) << ")";
      return os.str();
    }
  }
  return "";
}

void emit(std::ostream& out, Format format, const std::string& text,
          const nlohmann::ordered_json& doc) {
  if (format == Format::json)
    out << doc.dump() << "\n";
  else
    out << text;
}

void run_expand(const RunConfig& config, const Word& w, std::ostream& out) {
  AdmissibleSeq seq(*config.seq);
  CurveClass c = config.method == Method::oracle   ? expand_oracle(w, seq)
                 : config.method == Method::coroot ? expand_coroot(w, seq)
                                                   : expand(w, seq);
  nlohmann::ordered_json doc;
  doc["seq"] = seq.positions();
  doc["coeffs"] = c.coeffs;
  std::string text =
      "L_{" + positions_subscript(w, seq.positions()) + "} = " + class_formula(c) + "\n";
  emit(out, config.format, text, doc);
}

void run_basis(const RunConfig& config, const Word& w, std::ostream& out) {
  ExtremalBasis basis = extremal_basis(w);
  nlohmann::ordered_json doc;
  std::ostringstream text;
  auto subsequences = nlohmann::ordered_json::array();
  auto rays = nlohmann::ordered_json::array();
  for (int j = 1; j <= w.length(); ++j) {
    const AdmissibleSeq& seq = basis.subsequences[j - 1];
    const CurveClass& ray = basis.rays[j - 1];
    subsequences.push_back(seq.positions());
    rays.push_back(ray.coeffs);
    text << "L_" << j << "(w): I = " << positions_tuple(seq.positions())
         << ", class = " << coeff_tuple(ray.coeffs) << "\n";
  }
  doc["subsequences"] = std::move(subsequences);
  doc["rays"] = std::move(rays);
  emit(out, config.format, text.str(), doc);
}

void run_mori(const RunConfig& config, const Word& w, std::ostream& out) {
  std::vector<int> rays = mori_rays(w);
  nlohmann::ordered_json doc;
  doc["mori_rays"] = rays;
  std::ostringstream text;
  text << "Mori rays:";
  if (rays.empty()) text << " none";
  for (std::size_t k = 0; k < rays.size(); ++k)
    text << (k ? ", L_" : " L_") << rays[k];
  text << "\n";
  emit(out, config.format, text.str(), doc);
}

void run_fano(const RunConfig& config, const Word& w, std::ostream& out) {
  bool fano = is_fano(w);
  std::vector<std::string> reasons(w.length());
  nlohmann::ordered_json lines = nlohmann::ordered_json::array();
  std::string first_reason;
  int first_failure = 0;
  for (int r = 1; r <= w.length(); ++r) {
    reasons[r - 1] = mori_failure_reason(w, r);
    nlohmann::ordered_json line;
    line["position"] = r;
    line["mori"] = reasons[r - 1].empty();
    if (!reasons[r - 1].empty()) {
      line["reason"] = reasons[r - 1];
      if (first_failure == 0) {
        first_failure = r;
        first_reason = reasons[r - 1];
      }
    }
    lines.push_back(std::move(line));
  }
  std::ostringstream text;
  if (fano)
    text << "Fano: every Schubert line spans a Mori ray\n";
  else
    text << "not Fano: L_" << first_failure << " " << first_reason << "\n";
  for (int r = 1; r <= w.length(); ++r)
    text << "L_" << r << ": " << (reasons[r - 1].empty() ? "Mori" : reasons[r - 1]) << "\n";
  nlohmann::ordered_json doc;
  doc["fano"] = fano;
  doc["schubert_lines"] = std::move(lines);
  emit(out, config.format, text.str(), doc);
}

nlohmann::ordered_json ample_doc(const Word& w, const DivisorClass& d) {
  nlohmann::ordered_json doc;
  doc["toric_ample"] = toric_ample(w, d);
  if (d.basis() == DivisorClass::Basis::lt)
    doc["bsdh_ample"] = bsdh_ample(w, d);
  else
    doc["bsdh_ample"] = nullptr;
  return doc;
}

void run_ample(const RunConfig& config, const Word& w, std::ostream& out) {
  DivisorClass d = divisor_from_json(load_json_file(*config.divisor_file));
  nlohmann::ordered_json doc = ample_doc(w, d);
  std::ostringstream text;
  text << "toric ample: " << (doc["toric_ample"].get<bool>() ? "yes" : "no") << "\n";
  if (doc["bsdh_ample"].is_null())
    text << "bsdh ample: n/a (divisor not in the LT basis)\n";
  else
    text << "bsdh ample: " << (doc["bsdh_ample"].get<bool>() ? "yes" : "no") << "\n";
  emit(out, config.format, text.str(), doc);
}

void run_enumerate(const RunConfig& config, const Word& w, std::ostream& out) {
  VerifyReport report = verify_report(w, EnumerationOptions{config.max_enumerate});
  nlohmann::ordered_json doc = report_to_json(report);
  std::ostringstream text;
  text << "fixed points: " << report.fixed_points << "\n";
  text << "invariant curves: " << report.curves << "\n";
  for (const ClauseResult& clause : report.clauses) {
    text << clause.name << ": " << (clause.pass ? "pass" : "FAIL");
    if (!clause.pass) text << " (" << clause.witness << ")";
    text << "\n";
  }
  text << (report.all_pass() ? "verdict: all clauses pass\n" : "verdict: FAILURES\n");
  emit(out, config.format, text.str(), doc);
}

void run_report(const RunConfig& config, const RootSystemInput& rsi, const Word& w,
                std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["root_system"] = rsi.echo;
  doc["word"] = w.letters();
  if (config.seq.has_value()) {
    AdmissibleSeq seq(*config.seq);
    CurveClass c = config.method == Method::oracle   ? expand_oracle(w, seq)
                   : config.method == Method::coroot ? expand_coroot(w, seq)
                                                     : expand(w, seq);
    nlohmann::ordered_json e;
    e["seq"] = seq.positions();
    e["coeffs"] = c.coeffs;
    doc["expand"] = std::move(e);
  }
  ExtremalBasis basis = extremal_basis(w);
  {
    nlohmann::ordered_json b;
    auto subsequences = nlohmann::ordered_json::array();
    auto rays = nlohmann::ordered_json::array();
    for (int j = 1; j <= w.length(); ++j) {
      subsequences.push_back(basis.subsequences[j - 1].positions());
      rays.push_back(basis.rays[j - 1].coeffs);
    }
    b["subsequences"] = std::move(subsequences);
    b["rays"] = std::move(rays);
    doc["basis"] = std::move(b);
  }
  doc["mori_rays"] = mori_rays(w);
  {
    nlohmann::ordered_json f;
    f["fano"] = is_fano(w);
    auto lines = nlohmann::ordered_json::array();
    for (int r = 1; r <= w.length(); ++r) {
      std::string reason = mori_failure_reason(w, r);
      nlohmann::ordered_json line;
      line["position"] = r;
      line["mori"] = reason.empty();
      if (!reason.empty()) line["reason"] = reason;
      lines.push_back(std::move(line));
    }
    f["schubert_lines"] = std::move(lines);
    doc["fano"] = std::move(f);
  }
  if (config.divisor_file.has_value()) {
    DivisorClass d = divisor_from_json(load_json_file(*config.divisor_file));
    doc["ample"] = ample_doc(w, d);
  }
  if (w.length() <= config.max_enumerate)
    doc["enumerate"] = report_to_json(verify_report(w, EnumerationOptions{config.max_enumerate}));
  else
    doc["enumerate"] = nullptr;
  out << doc.dump() << "\n";
}

}  // namespace

RunConfig parse_input(const std::vector<std::string>& args, std::ostream& out) {
  RunConfig config;
  std::string type_token, cartan_file, word_csv, seq_csv, divisor_file;
  std::string method = "fast", algorithm = "comp", format = "text";

  CLI::App app{"intersection theory of toric degenerations of Bott-Samelson varieties"};
  app.require_subcommand(1);

  struct SubSpec {
    Command command;
    const char* name;
    const char* desc;
    bool seq_required, seq_allowed, divisor_required, divisor_allowed;
    bool method_allowed, algorithm_allowed, cap_allowed;
  };
  const SubSpec specs[] = {
      {Command::expand, "expand", "expand L_I over the Schubert-line basis",
       true, true, false, false, true, false, false},
      {Command::basis, "basis", "extremal rays lying over each Schubert line",
       false, false, false, false, false, true, false},
      {Command::mori, "mori", "positions whose Schubert line spans a Mori ray",
       false, false, false, false, false, false, false},
      {Command::fano, "fano", "Fano test with a per-line diagnosis",
       false, false, false, false, false, false, false},
      {Command::ample, "ample", "toric and LT ampleness tests for a divisor",
       false, false, true, true, false, false, false},
      {Command::enumerate_cmd, "enumerate", "brute-force fixed points and invariant curves",
       false, false, false, false, false, false, true},
      {Command::report, "report", "everything above as one JSON document",
       false, true, false, true, true, true, true},
  };

  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const SubSpec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.desc);
    sub->add_option("--type", type_token, "named root system, family letter plus rank (A3)");
    sub->add_option("--cartan", cartan_file, "JSON file holding the root system fragment");
    sub->add_option("--word", word_csv, "comma separated letters of the word")->required();
    sub->add_option("--format", format, "text or json");
    if (spec.seq_allowed) {
      auto* opt = sub->add_option("--seq", seq_csv, "comma separated admissible positions");
      if (spec.seq_required) opt->required();
    }
    if (spec.divisor_allowed) {
      auto* opt = sub->add_option("--divisor", divisor_file, "JSON file holding the divisor fragment");
      if (spec.divisor_required) opt->required();
    }
    if (spec.method_allowed)
      sub->add_option("--method", method, "expansion route: fast, oracle or coroot");
    if (spec.algorithm_allowed)
      sub->add_option("--algorithm", algorithm, "subsequence derivation: comp or weyl");
    if (spec.cap_allowed)
      sub->add_option("--max-enumerate", config.max_enumerate, "enumeration length cap");
    subs.emplace_back(sub, spec.command);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    throw early_exit{};
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  CLI::App* active = nullptr;
  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) {
      config.command = command;
      active = sub;
    }
  }

  if (!type_token.empty()) config.type_token = type_token;
  if (!cartan_file.empty()) config.cartan_file = cartan_file;
  if (config.type_token.has_value() == config.cartan_file.has_value())
    throw usage_error("provide exactly one of --type and --cartan");

  config.word = parse_csv(word_csv, "--word");
  const CLI::Option* seq_opt = active->get_option_no_throw("--seq");
  if (seq_opt != nullptr && seq_opt->count() > 0) config.seq = parse_csv(seq_csv, "--seq");
  if (!divisor_file.empty()) config.divisor_file = divisor_file;

  if (method == "fast") config.method = Method::fast;
  else if (method == "oracle") config.method = Method::oracle;
  else if (method == "coroot") config.method = Method::coroot;
  else throw usage_error("--method must be fast, oracle or coroot");

  if (algorithm == "comp") config.algorithm = Algorithm::comp;
  else if (algorithm == "weyl") config.algorithm = Algorithm::weyl;
  else throw usage_error("--algorithm must be comp or weyl");

  if (format == "text") config.format = Format::text;
  else if (format == "json") config.format = Format::json;
  else throw usage_error("--format must be text or json");

  if (config.max_enumerate < 1) throw usage_error("--max-enumerate must be >= 1");
  return config;
}

void run(const RunConfig& config, std::ostream& out) {
  RootSystemInput rsi = load_root_system(config);
  Word w(rsi.rs, config.word);
  switch (config.command) {
    case Command::expand: run_expand(config, w, out); break;
    case Command::basis: run_basis(config, w, out); break;
    case Command::mori: run_mori(config, w, out); break;
    case Command::fano: run_fano(config, w, out); break;
    case Command::ample: run_ample(config, w, out); break;
    case Command::enumerate_cmd: run_enumerate(config, w, out); break;
    case Command::report: run_report(config, rsi, w, out); break;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    RunConfig config = parse_input(args, out);
    run(config, out);
    return 0;
  } catch (const early_exit&) {
    return 0;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const json_shape_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const validation_error& e) {
    err << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const overflow_error& e) {
    err << "overflow error: " << e.what() << "\n";
    return 3;
  } catch (const consistency_error& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace bsdh::cli
