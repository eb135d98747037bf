#include "gapsets/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gapsets/enumerate.hpp"
#include "gapsets/families.hpp"
#include "gapsets/verify.hpp"

namespace gapsets::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, csv, json };

struct Options {
  std::string format = "text";

  // enumerate
  int genus = 0;
  std::optional<int> kappa;
  bool pure = false;
  bool sparse = false;
  std::optional<int> depth;
  std::optional<int> max_depth;
  std::string symmetry;

  // table / sequence-s
  int max_genus = 19;
  int max_n = 7;

  // families
  std::string kind;
  int n = 1;
  bool all_choices = false;
  std::string choice;

  // sigma
  std::string apply;
  std::optional<int> sigma_genus;
  bool all = false;

  // verify
  std::string check;
  bool verify_all = false;
  std::optional<int> verify_max_genus;
  std::optional<int> verify_max_n;
  std::optional<int> verify_lo;

  // oeis
  std::string oeis_id;
  int terms = 0;
};

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  return Format::text;
}

std::string braces(std::span<const int> gaps) { return "{" + join_gaps(gaps) + "}"; }

Json gaps_json(std::span<const int> gaps) { return Json(std::vector<int>(gaps.begin(), gaps.end())); }

Json gapset_json(const GapSet& g) {
  const Invariants inv = invariants(g);
  Json j;
  j["genus"] = inv.genus;
  j["kappa"] = inv.sparsity;
  j["depth"] = inv.depth;
  j["multiplicity"] = inv.multiplicity;
  j["frobenius"] = inv.frobenius;
  j["symmetry"] = to_string(symmetry_class(g));
  j["gaps"] = gaps_json(g.elements());
  return j;
}

std::string gapset_text(const GapSet& g) {
  const Invariants inv = invariants(g);
  std::ostringstream os;
  os << braces(g.elements()) << "  genus=" << inv.genus << " kappa=" << inv.sparsity << " depth=" << inv.depth
     << " m=" << inv.multiplicity << " F=" << inv.frobenius << " " << to_string(symmetry_class(g));
  return os.str();
}

void emit_gapsets(const std::vector<GapSet>& list, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::csv:
      out << kGapsetHeader << "\n";
      for (const auto& g : list) out << gapset_csv_row(g) << "\n";
      break;
    case Format::json: {
      Json arr = Json::array();
      for (const auto& g : list) arr.push_back(gapset_json(g));
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::text:
      for (const auto& g : list) out << gapset_text(g) << "\n";
      out << list.size() << " gapset" << (list.size() == 1 ? "" : "s") << "\n";
      break;
  }
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const Options& o, Format fmt, std::ostream& out) {
  FamilyFilter f;
  f.genus = o.genus;
  f.kappa = o.kappa;
  f.pure = !o.sparse;
  if (o.depth) f.depth = DepthConstraint{DepthConstraint::Kind::exact, *o.depth};
  if (o.max_depth) f.depth = DepthConstraint{DepthConstraint::Kind::at_most, *o.max_depth};
  if (!o.symmetry.empty()) f.symmetry = parse_symmetry(o.symmetry);
  if ((o.pure || o.sparse) && !o.kappa) throw std::invalid_argument("--pure/--sparse need --kappa");
  emit_gapsets(enumerate_filtered(f), fmt, out);
  return kExitOk;
}

int cmd_table(const Options& o, Format fmt, std::ostream& out) {
  if (o.max_genus < 0) throw std::invalid_argument("--max-genus must be nonnegative");
  const CountTable t = count_table(o.max_genus);
  switch (fmt) {
    case Format::csv:
      out << kCountHeader << "\n";
      for (int g = 0; g <= t.max_genus; ++g) {
        for (int k = 0; k <= g; ++k) out << g << "," << k << "," << t.cell(g, k) << "\n";
        out << g << ",," << t.total(g) << "\n";
      }
      break;
    case Format::json: {
      Json arr = Json::array();
      for (int g = 0; g <= t.max_genus; ++g) {
        for (int k = 0; k <= g; ++k) arr.push_back(Json{{"genus", g}, {"kappa", k}, {"count", t.cell(g, k)}});
        arr.push_back(Json{{"genus", g}, {"kappa", nullptr}, {"count", t.total(g)}});
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::text: {
      const int width = static_cast<int>(std::to_string(t.total(t.max_genus)).size()) + 1;
      out << std::setw(4) << "g\\k";
      for (int k = 0; k <= t.max_genus; ++k) out << std::setw(width) << k;
      out << std::setw(width + 1) << "n_g" << "\n";
      for (int g = 0; g <= t.max_genus; ++g) {
        out << std::setw(4) << g;
        for (int k = 0; k <= t.max_genus; ++k) {
          const auto c = k <= g ? t.cell(g, k) : 0;
          out << std::setw(width) << (c == 0 ? std::string{} : std::to_string(c));
        }
        out << std::setw(width + 1) << t.total(g) << "\n";
      }
      break;
    }
  }
  return kExitOk;
}

int cmd_sequence(const Options& o, Format fmt, std::ostream& out) {
  if (o.max_n < 1) throw std::invalid_argument("--max-n must be at least 1");
  if (3 * o.max_n + 1 > kMaxGenus) throw std::invalid_argument("--max-n too large");
  const auto terms = sequence_s(o.max_n);
  auto prev = [](const SequenceTerm& t) { return t.ratio_prev ? format_ratio(t.s, t.prev) : std::string{}; };
  auto cum = [](const SequenceTerm& t) { return format_ratio(t.cumsum, t.s); };
  switch (fmt) {
    case Format::csv:
      out << kSequenceHeader << "\n";
      for (const auto& t : terms) out << t.n << "," << t.s << "," << prev(t) << "," << cum(t) << "\n";
      break;
    case Format::json: {
      Json arr = Json::array();
      for (const auto& t : terms) {
        Json j{{"n", t.n}, {"s_n", t.s}};
        j["ratio_prev"] = t.ratio_prev ? Json(prev(t)) : Json(nullptr);
        j["ratio_cumsum"] = cum(t);
        arr.push_back(j);
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::text:
      out << std::setw(3) << "n" << std::setw(10) << "s_n" << std::setw(12) << "ratio_prev" << std::setw(14)
          << "ratio_cumsum" << "\n";
      for (const auto& t : terms) {
        out << std::setw(3) << t.n << std::setw(10) << t.s << std::setw(12) << prev(t) << std::setw(14) << cum(t)
            << "\n";
      }
      break;
  }
  return kExitOk;
}

std::vector<int> parse_choice_bits(const std::string& text) {
  std::vector<int> bits;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    if (ch != '0' && ch != '1') throw std::invalid_argument("--choice entries must be 0 or 1");
    bits.push_back(ch - '0');
  }
  return bits;
}

int cmd_families(const Options& o, Format fmt, std::ostream& out) {
  Symmetry kind;
  if (o.kind == "symmetric") {
    kind = Symmetry::symmetric;
  } else if (o.kind == "pseudo" || o.kind == "pseudo-symmetric" || o.kind == "pseudo_symmetric") {
    kind = Symmetry::pseudo_symmetric;
  } else {
    throw std::invalid_argument("--kind must be symmetric or pseudo");
  }
  std::vector<PairChoice> choices;
  if (o.all_choices) {
    choices = all_pair_choices(o.n);
  } else if (!o.choice.empty()) {
    PairChoice c{o.n, {}};
    for (int b : parse_choice_bits(o.choice)) c.take_lower.push_back(b == 1);
    c.validate();
    choices.push_back(c);
  } else {
    choices.push_back(PairChoice::lower(o.n));
  }
  std::vector<GapSet> list;
  for (const auto& c : choices) {
    list.push_back(kind == Symmetry::symmetric ? construct_symmetric(o.n, c) : construct_pseudo_symmetric(o.n, c));
  }
  emit_gapsets(list, fmt, out);
  return kExitOk;
}

int cmd_sigma(const Options& o, Format fmt, std::ostream& out) {
  std::vector<std::pair<GapSet, GapSet>> pairs;
  if (!o.apply.empty()) {
    const GapSet g(std::span<const int>(parse_gaps(o.apply)));
    pairs.emplace_back(g, sigma(g));
  } else if (o.sigma_genus && o.all) {
    const int n = diagonal_n_for_even_family(*o.sigma_genus);
    if (n == 0) throw std::invalid_argument("--genus must be of the form 3n+1 with n >= 1");
    FamilyFilter f;
    f.genus = *o.sigma_genus;
    f.kappa = 2 * n;
    f.depth = DepthConstraint{DepthConstraint::Kind::at_most, 3};
    for (const auto& g : enumerate_filtered(f)) pairs.emplace_back(g, sigma(g));
  } else {
    throw std::invalid_argument("sigma needs --apply GAPS or --genus G --all");
  }
  if (fmt == Format::text) {
    for (const auto& [pre, img] : pairs) out << braces(pre.elements()) << " -> " << braces(img.elements()) << "\n";
    return kExitOk;
  }
  std::vector<GapSet> images;
  for (const auto& p : pairs) images.push_back(p.second);
  emit_gapsets(images, fmt, out);
  return kExitOk;
}

std::string report_status(const VerificationReport& r) {
  if (!r.expected_fail) return r.passed() ? "PASS" : "FAIL";
  return r.behaves_as_documented() ? "EXPECTED-FAIL" : "UNEXPECTED";
}

void emit_reports(const std::vector<VerificationReport>& reports, Format fmt, std::ostream& out) {
  auto evidence = [](const VerificationReport& r) { return r.evidence == Evidence::proved ? "proved" : "empirical"; };
  auto first_cx = [](const VerificationReport& r) {
    if (r.documented_counterexample) return braces(r.documented_counterexample->elements());
    return r.counterexamples.empty() ? std::string{} : braces(r.counterexamples.front().set.elements());
  };
  switch (fmt) {
    case Format::csv:
      out << kReportHeader << "\n";
      for (const auto& r : reports) {
        out << r.check_id << "," << to_string(r.kind) << "," << r.range.lo << "," << r.range.hi << ","
            << evidence(r) << "," << report_status(r) << "," << r.instances_checked << "," << r.failures << ",\""
            << first_cx(r) << "\"\n";
      }
      break;
    case Format::json: {
      Json arr = Json::array();
      for (const auto& r : reports) {
        Json j;
        j["check"] = r.check_id;
        j["kind"] = to_string(r.kind);
        j["lo"] = r.range.lo;
        j["hi"] = r.range.hi;
        j["evidence"] = evidence(r);
        j["status"] = report_status(r);
        j["instances"] = r.instances_checked;
        j["failures"] = r.failures;
        j["statement"] = r.statement;
        Json cx = Json::array();
        for (const auto& c : r.counterexamples) cx.push_back(Json{{"gaps", gaps_json(c.set.elements())}, {"detail", c.detail}});
        j["counterexamples"] = cx;
        j["documented_counterexample"] =
            r.documented_counterexample ? gaps_json(r.documented_counterexample->elements()) : Json(nullptr);
        arr.push_back(j);
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::text:
      for (const auto& r : reports) {
        out << std::left << std::setw(14) << report_status(r) << std::setw(14) << r.check_id << std::right
            << to_string(r.kind) << " " << r.range.lo << ".." << r.range.hi << "  instances=" << r.instances_checked
            << " failures=" << r.failures << " (" << evidence(r) << ")\n";
        if (!r.passed()) {
          const std::size_t shown = std::min<std::size_t>(r.counterexamples.size(), 3);
          for (std::size_t i = 0; i < shown; ++i) {
            out << "    " << braces(r.counterexamples[i].set.elements()) << ": " << r.counterexamples[i].detail << "\n";
          }
        }
      }
      break;
  }
}

int cmd_verify(const Options& o, Format fmt, std::ostream& out) {
  const int g_ceiling = o.verify_max_genus.value_or(16);
  const int n_ceiling = o.verify_max_n.value_or(5);
  if (o.verify_all) {
    const SuiteResult r = run_all(g_ceiling, n_ceiling);
    std::vector<VerificationReport> all = r.checks;
    all.insert(all.end(), r.probes.begin(), r.probes.end());
    emit_reports(all, fmt, out);
    if (fmt == Format::text) {
      const auto passed = std::count_if(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.passed(); });
      out << passed << "/" << r.checks.size() << " checks passed; probes "
          << (r.probes_as_documented() ? "as documented" : "NOT as documented") << "\n";
    }
    return r.all_checks_pass() ? kExitOk : kExitFailure;
  }
  if (o.check.empty()) throw std::invalid_argument("verify needs --check ID or --all");
  const CheckInfo& info = find_check(o.check);
  ParamRange range;
  switch (info.kind) {
    case RangeKind::genus: range = {0, g_ceiling}; break;
    case RangeKind::multiplicity: range = {2, std::min(g_ceiling, 16)}; break;
    case RangeKind::n: range = {std::max(1, info.hypothesis_min), n_ceiling}; break;
  }
  if (o.verify_lo) range.lo = *o.verify_lo;
  const VerificationReport r = run_check(o.check, range);
  emit_reports({r}, fmt, out);
  return r.passed() ? kExitOk : kExitFailure;
}

int cmd_oeis(const Options& o, Format fmt, std::ostream& out) {
  const OeisReference& ref = find_oeis(o.oeis_id);
  if (o.terms < 1) throw std::invalid_argument("--terms must be at least 1");
  const auto computed = compute_oeis(ref.id, o.terms);
  const std::size_t checked = std::min(computed.size(), ref.terms.size());
  const bool match = std::equal(computed.begin(), computed.begin() + static_cast<std::ptrdiff_t>(checked),
                                ref.terms.begin());
  auto term_status = [&](std::size_t i) -> std::string {
    if (i >= ref.terms.size()) return "unchecked";
    return computed[i] == ref.terms[i] ? "match" : "mismatch";
  };
  switch (fmt) {
    case Format::csv:
      out << kOeisHeader << "\n";
      for (std::size_t i = 0; i < computed.size(); ++i) {
        out << ref.id << "," << ref.offset + static_cast<int>(i) << "," << computed[i] << ","
            << (i < ref.terms.size() ? std::to_string(ref.terms[i]) : std::string{}) << "," << term_status(i) << "\n";
      }
      break;
    case Format::json: {
      Json j;
      j["id"] = ref.id;
      j["description"] = ref.description;
      j["offset"] = ref.offset;
      j["computed"] = computed;
      j["expected"] = std::vector<std::uint64_t>(ref.terms.begin(), ref.terms.begin() + static_cast<std::ptrdiff_t>(checked));
      j["checked"] = checked;
      j["status"] = match ? "MATCH" : "MISMATCH";
      out << j.dump(2) << "\n";
      break;
    }
    case Format::text: {
      std::ostringstream os;
      for (std::size_t i = 0; i < computed.size(); ++i) os << (i ? "," : "") << computed[i];
      out << ref.id << " (" << ref.description << ")\n";
      out << "computed: " << os.str() << "\n";
      out << (match ? "MATCH" : "MISMATCH") << " (" << checked << " of " << computed.size()
          << " terms checked against the embedded prefix)\n";
      break;
    }
  }
  return match ? kExitOk : kExitFailure;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r' && c != '\n') {
      cur += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV row");
  fields.push_back(cur);
  return fields;
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<OeisReference>& oeis_references() {
  static const std::vector<OeisReference> refs = {
      {"A007323", "numerical semigroups by genus", 0,
       {1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857, 4806, 8045, 13467, 22464}},
      {"A374773", "pure 2n-sparse gapsets of genus 3n+1", 1, {3, 8, 22, 54, 135, 331, 808}},
      {"A348619", "pure 2w-sparse gapsets of genus 3w", 0, {1, 2, 5, 12, 30, 70, 167, 395, 936, 2212}},
  };
  return refs;
}

const OeisReference& find_oeis(const std::string& id) {
  for (const auto& r : oeis_references()) {
    if (r.id == id) return r;
  }
  throw std::invalid_argument("unknown OEIS id '" + id + "'");
}

std::vector<std::uint64_t> compute_oeis(const std::string& id, int terms) {
  const OeisReference& ref = find_oeis(id);
  if (terms < 1) throw std::invalid_argument("terms must be at least 1");
  const int needed = ref.id == "A007323" ? terms - 1 : ref.id == "A374773" ? 3 * terms + 1 : 3 * (terms - 1);
  if (needed > kMaxOeisGenus) {
    throw std::out_of_range(std::to_string(terms) + " terms of " + ref.id + " need genus " + std::to_string(needed) +
                            ", above " + std::to_string(kMaxOeisGenus));
  }
  std::vector<std::uint64_t> out;
  if (ref.id == "A007323") {
    const CountTable t = count_table(terms - 1);
    for (int g = 0; g < terms; ++g) out.push_back(t.total(g));
  } else if (ref.id == "A374773") {
    for (const auto& s : sequence_s(terms)) out.push_back(s.s);
  } else {
    const CountTable t = count_table(3 * (terms - 1));
    for (int w = 0; w < terms; ++w) out.push_back(t.cell(3 * w, 2 * w));
  }
  return out;
}

std::string gapset_csv_row(const GapSet& g) {
  const Invariants inv = invariants(g);
  std::ostringstream os;
  os << inv.genus << "," << inv.sparsity << "," << inv.depth << "," << inv.multiplicity << "," << inv.frobenius << ","
     << to_string(symmetry_class(g)) << ",\"" << join_gaps(g.elements()) << "\"";
  return os.str();
}

GapSet parse_gapset_csv_row(const std::string& line) {
  const auto fields = split_csv(line);
  if (fields.size() != 7) throw std::invalid_argument("gapset row needs 7 fields, got " + std::to_string(fields.size()));
  const GapSet g(std::span<const int>(parse_gaps(fields[6])));
  if (gapset_csv_row(g) != line) throw std::invalid_argument("gapset row fields disagree with the gap sequence");
  return g;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Enumerate and verify gapsets (gap sets of numerical semigroups)", "gapsets"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  auto* en = app.add_subcommand("enumerate", "List gapsets of one genus, optionally filtered");
  en->add_option("--genus", o.genus, "Genus")->required()->check(CLI::Range(0, kMaxGenus));
  en->add_option("--kappa", o.kappa, "Sparsity bound")->check(CLI::NonNegativeNumber);
  auto* pure = en->add_flag("--pure", o.pure, "Largest consecutive difference exactly kappa (default)");
  en->add_flag("--sparse", o.sparse, "Largest consecutive difference at most kappa")->excludes(pure);
  auto* dep = en->add_option("--depth", o.depth, "Exact depth")->check(CLI::PositiveNumber);
  en->add_option("--max-depth", o.max_depth, "Depth upper bound")->check(CLI::PositiveNumber)->excludes(dep);
  en->add_option("--symmetry", o.symmetry, "symmetric, pseudo or neither");

  auto* tb = app.add_subcommand("table", "Pure kappa-sparse counts by genus");
  tb->add_option("--max-genus", o.max_genus, "Largest genus")->check(CLI::Range(0, kMaxGenus))->capture_default_str();

  auto* sq = app.add_subcommand("sequence-s", "s_n = #pure 2n-sparse gapsets of genus 3n+1");
  sq->add_option("--max-n", o.max_n, "Largest n")->check(CLI::Range(1, (kMaxGenus - 1) / 3))->capture_default_str();

  auto* fa = app.add_subcommand("families", "Symmetric / pseudo-symmetric diagonal families by construction");
  fa->add_option("--kind", o.kind, "symmetric or pseudo")->required()->check(CLI::IsMember({"symmetric", "pseudo"}));
  fa->add_option("--n", o.n, "Family index")->required()->check(CLI::PositiveNumber);
  auto* ac = fa->add_flag("--all-choices", o.all_choices, "Every pair choice");
  fa->add_option("--choice", o.choice, "Pair choices as 0/1 list, 1 = lower element")->excludes(ac);

  auto* sg = app.add_subcommand("sigma", "Apply the sigma map");
  auto* ap = sg->add_option("--apply", o.apply, "Gap sequence, comma separated");
  sg->add_option("--genus", o.sigma_genus, "Genus 3n+1 of the domain")->excludes(ap);
  sg->add_flag("--all", o.all, "Whole domain at --genus")->excludes(ap);

  auto* vf = app.add_subcommand("verify", "Run registered checks");
  auto* chk = vf->add_option("--check", o.check, "Check id");
  vf->add_flag("--all", o.verify_all, "Every check plus the documented probes")->excludes(chk);
  vf->add_option("--max-genus", o.verify_max_genus, "Genus ceiling (default 16)")
      ->check(CLI::Range(0, kVerifyGenusCeiling));
  vf->add_option("--max-n", o.verify_max_n, "n ceiling (default 5)")->check(CLI::Range(1, 8));
  vf->add_option("--lo", o.verify_lo, "Start of the range for --check (default: the hypothesis)")->needs(chk);

  auto* oe = app.add_subcommand("oeis", "Cross-check against embedded OEIS prefixes");
  oe->add_option("--id", o.oeis_id, "A007323, A374773 or A348619")->required();
  oe->add_option("--terms", o.terms, "Number of terms")->required()->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"gapsets"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n";
    const CLI::App* scope = &app;
    for (const auto* sub : app.get_subcommands()) scope = sub;
    err << scope->help();
    return kExitUsage;
  }

  const Format fmt = parse_format(o.format);
  try {
    if (en->parsed()) return cmd_enumerate(o, fmt, out);
    if (tb->parsed()) return cmd_table(o, fmt, out);
    if (sq->parsed()) return cmd_sequence(o, fmt, out);
    if (fa->parsed()) return cmd_families(o, fmt, out);
    if (sg->parsed()) return cmd_sigma(o, fmt, out);
    if (vf->parsed()) return cmd_verify(o, fmt, out);
    if (oe->parsed()) return cmd_oeis(o, fmt, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace gapsets::cli
