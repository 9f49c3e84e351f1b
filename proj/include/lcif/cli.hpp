#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lcif/document.hpp"
#include "lcif/genfam.hpp"
#include "lcif/mlcif.hpp"
#include "lcif/sampling.hpp"
#include "lcif/setcore.hpp"
#include "lcif/shifting.hpp"
#include "lcif/sicheck.hpp"

namespace lcif::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kUsage = 2 };

struct Options {
  std::string input = "-";
  std::string output;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultEnumerationBudget;
  std::size_t size = 0;
  std::vector<int> pair;
  int n = 0;
  int k = 0;
  std::string name;
};

namespace detail {

inline std::string pair_text(const SortedSet& a, const SortedSet& b) {
  return "(" + to_string(a) + "," + to_string(b) + ")";
}

inline SetFamily as_family(const InputDocument& doc) {
  if (doc.is_generators()) {
    return build_family(std::get<GeneratorCollection>(doc.payload));
  }
  return std::get<SetFamily>(doc.payload);
}

inline GeneratorCollection as_generators(const InputDocument& doc) {
  if (doc.is_generators()) return std::get<GeneratorCollection>(doc.payload);
  std::vector<GeneratorSet> g;
  for (const KSet& s : std::get<SetFamily>(doc.payload)) {
    g.emplace_back(doc.context, s.to_vector());
  }
  return GeneratorCollection(doc.context, std::move(g));
}

inline std::vector<SortedSet> as_sets(const InputDocument& doc) {
  std::vector<SortedSet> out;
  std::visit([&](const auto& c) { out.assign(c.begin(), c.end()); },
             doc.payload);
  return out;
}

inline std::pair<std::size_t, std::size_t> selected_pair(
    const Options& opt, std::size_t count) {
  if (opt.pair.size() != 2) {
    throw DomainError("--pair needs two 1-based indices");
  }
  for (int idx : opt.pair) {
    if (idx < 1 || static_cast<std::size_t>(idx) > count) {
      throw DomainError("--pair index " + std::to_string(idx) +
                        " outside [1, " + std::to_string(count) + "]");
    }
  }
  return {static_cast<std::size_t>(opt.pair[0] - 1),
          static_cast<std::size_t>(opt.pair[1] - 1)};
}

inline void print_trace(std::ostream& out, const WitnessTrace& t) {
  for (const auto& lv : t.levels) {
    out << "trace " << lv.level << ' ' << lv.x << ' ' << lv.y << ' ' << lv.z
        << ' ' << to_string(lv.g_part) << ' ' << to_string(lv.h_part) << '\n';
  }
  out << "witness " << pair_text(t.a, t.b) << '\n';
}

// --- per-document commands -------------------------------------------------

inline int cmd_build(const InputDocument& doc, const Options&, std::ostream& out,
                     std::ostream&) {
  if (!doc.is_generators()) throw DomainError("build expects G lines");
  out << format_document(build_family(as_generators(doc)));
  return kHolds;
}

inline int cmd_check_generators(const InputDocument& doc, const Options& opt,
                                std::ostream& out, std::ostream&) {
  auto gc = as_generators(doc);
  auto verdict = check_collection(gc, opt.threads);
  for (const auto& pr : verdict.pairs) {
    out << "pair " << pair_text(gc[pr.first], gc[pr.second]);
    if (pr.verdict.holds) {
      out << " level " << *pr.verdict.level << '\n';
    } else {
      out << " fails\n";
    }
  }
  if (verdict.first_failure) print_trace(out, verdict.first_failure->trace);
  out << "verdict " << (verdict.passes ? "intersecting" : "not-intersecting")
      << '\n';
  return verdict.passes ? kHolds : kFails;
}

inline int cmd_check_family(const InputDocument& doc, const Options&,
                            std::ostream& out, std::ostream&) {
  auto f = as_family(doc);
  auto common = common_elements(f);
  out << "has-common-element " << (common.empty() ? "false" : "true") << '\n';
  out << "total-intersection-empty " << (common.empty() ? "true" : "false")
      << '\n';
  if (auto d = find_disjoint_members(f)) {
    out << "disjoint " << pair_text(d->first, d->second) << '\n';
    out << "verdict not-intersecting\n";
    return kFails;
  }
  out << "verdict intersecting\n";
  return kHolds;
}

inline int cmd_compressed(const InputDocument& doc, const Options&,
                          std::ostream& out, std::ostream&) {
  auto f = as_family(doc);
  auto dv = find_downclosure_violation(f);
  auto sv = find_shift_violation(f);
  out << "downclosed " << (dv ? "false" : "true");
  if (dv) {
    out << " violation " << to_string(dv->member) << " missing "
        << to_string(dv->missing);
  }
  out << '\n' << "shiftstable " << (sv ? "false" : "true");
  if (sv) {
    out << " violation " << to_string(sv->member) << " shift " << sv->i << ' '
        << sv->j << " missing " << to_string(sv->missing);
  }
  out << '\n';
  return dv || sv ? kFails : kHolds;
}

inline int cmd_compress(const InputDocument& doc, const Options&,
                        std::ostream& out, std::ostream& err) {
  auto result = compress(as_family(doc));
  out << format_document(result.family);
  // The report goes to the diagnostic stream so the document output stays
  // pipeable.
  for (const auto& s : result.report.applied) {
    err << s.i << ' ' << s.j << ' ' << s.moved << '\n';
  }
  err << "# rounds " << result.report.rounds << '\n';
  return kHolds;
}

inline int cmd_generators(const InputDocument& doc, const Options&,
                          std::ostream& out, std::ostream&) {
  auto f = as_family(doc);
  if (f.empty()) throw DomainError("empty input");
  if (auto v = find_downclosure_violation(f)) {
    out << "not-left-compressed " << to_string(v->member) << " missing "
        << to_string(v->missing) << '\n';
    return kFails;
  }
  out << format_document(extract_generators(f));
  return kHolds;
}

inline int cmd_pi(const InputDocument& doc, const Options&, std::ostream& out,
                  std::ostream&) {
  auto gc = as_generators(doc);
  std::vector<std::string> comments;
  for (const auto& g : gc) {
    if (g.front() > doc.context.k()) {
      out << "incompatible " << to_string(g) << '\n';
      return kFails;
    }
    auto t = type_of(g, doc.context);
    comments.push_back("type " + to_string(g) + " " +
                       std::to_string(t.type_index));
  }
  out << format_document(pi_collection(gc), comments);
  return kHolds;
}

inline int cmd_bond(const InputDocument& doc, const Options& opt,
                    std::ostream& out, std::ostream&) {
  auto sets = as_sets(doc);
  auto [i, j] = selected_pair(opt, sets.size());
  const auto& a = sets[i];
  const auto& b = sets[j];
  const auto k = static_cast<std::size_t>(doc.context.k());
  if (a.size() != k || b.size() != k) {
    throw DomainError("bond needs two sets of size k=" + std::to_string(k));
  }
  if (auto idx = bond_indices(a, b)) {
    out << "bond true indices " << idx->first << ' ' << idx->second << '\n';
    return kHolds;
  }
  out << "bond false\n";
  GeneratorSet g(doc.context, a.to_vector());
  GeneratorSet h(doc.context, b.to_vector());
  print_trace(out, witness_construct(g, h, doc.context));
  return kFails;
}

inline int cmd_oracle(const InputDocument& doc, const Options& opt,
                      std::ostream& out, std::ostream&) {
  auto sets = as_sets(doc);
  auto [i, j] = selected_pair(opt, sets.size());
  if (auto d = find_disjoint_dominated(sets[i], sets[j])) {
    out << "oracle false witness " << pair_text(d->first, d->second) << '\n';
    return kFails;
  }
  out << "oracle true\n";
  return kHolds;
}

inline int cmd_maximal(const InputDocument& doc, const Options&,
                       std::ostream& out, std::ostream&) {
  auto f = as_family(doc);
  if (auto d = find_disjoint_members(f)) {
    out << "not-intersecting " << pair_text(d->first, d->second) << '\n';
    return kFails;
  }
  auto v = is_maximal_intersecting(f);
  if (v.is_maximal) {
    out << "maximal true\n";
    return kHolds;
  }
  out << "maximal false blocker " << to_string(*v.blocker) << '\n';
  return kFails;
}

inline int cmd_extend(const InputDocument& doc, const Options&,
                      std::ostream& out, std::ostream&) {
  auto f = as_family(doc);
  if (f.empty()) throw DomainError("empty input");
  if (auto v = find_downclosure_violation(f)) {
    out << "not-left-compressed " << to_string(v->member) << " missing "
        << to_string(v->missing) << '\n';
    return kFails;
  }
  if (auto d = find_disjoint_members(f)) {
    out << "not-intersecting " << pair_text(d->first, d->second) << '\n';
    return kFails;
  }
  auto audit = extend_and_audit(f);
  std::vector<std::string> comments{
      std::string("maximal-intersecting ") +
      (audit.maximality.is_maximal ? "true" : "false")};
  if (audit.finding) comments.push_back("finding " + *audit.finding);
  out << format_document(audit.family, comments);
  return kHolds;
}

// --- generating commands ---------------------------------------------------

inline int cmd_named(const Options& opt, std::ostream& out) {
  out << format_document(named_family(opt.name, GroundContext(opt.n, opt.k)));
  return kHolds;
}

inline int cmd_enumerate(const Options& opt, std::ostream& out) {
  auto cat = enumerate_mlcif(GroundContext(opt.n, opt.k), opt.budget);
  out << "# mlcif n " << opt.n << " k " << opt.k << " count "
      << cat.families.size() << '\n';
  for (const auto& e : cat.families) {
    std::string gens = "generators:";
    for (const auto& g : e.generators) gens += " " + to_string(g);
    std::string reduced = "reduced:";
    for (const auto& g : e.reduced) reduced += " " + to_string(g);
    out << '\n' << format_document(e.family, {gens, reduced});
  }
  return kHolds;
}

inline int cmd_sample(const Options& opt, std::ostream& out) {
  GroundContext ctx(opt.n, opt.k);
  Rng rng(opt.seed);
  out << format_document(random_intersecting_family(ctx, rng, opt.size),
                         {"seed " + std::to_string(opt.seed)});
  return kHolds;
}

inline std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace detail

/// Runs one CLI invocation. `args[0]` is the program name.
inline int run(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersecting left-compressed set families: build, check, "
               "compress, extend and enumerate."};
  app.require_subcommand(1);
  Options opt;

  using DocCommand = int (*)(const InputDocument&, const Options&,
                             std::ostream&, std::ostream&);
  std::vector<std::pair<CLI::App*, DocCommand>> doc_commands;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "input document ('-' for stdin)");
    sub->add_option("--output", opt.output, "output file (default stdout)");
    sub->add_option("--threads", opt.threads, "worker threads")
        ->check(CLI::PositiveNumber);
  };
  auto doc_command = [&](const std::string& name, const std::string& help,
                         DocCommand fn) {
    auto* sub = app.add_subcommand(name, help);
    add_io(sub);
    doc_commands.emplace_back(sub, fn);
    return sub;
  };

  doc_command("build", "expand a generator collection into its family",
              detail::cmd_build);
  doc_command("check-generators",
              "decide intersection pair by pair; print the smallest level per "
              "pair or a disjoint witness",
              detail::cmd_check_generators);
  doc_command("check-family", "brute-force intersecting check",
              detail::cmd_check_family);
  doc_command("compressed?", "test both left-compressed definitions",
              detail::cmd_compressed);
  doc_command("compress",
              "shift to the left-compressed fixed point; pairs (i,j) are swept "
              "in lexicographic order, each pass applied against its start "
              "state; report lines 'i j moved'",
              detail::cmd_compress);
  doc_command("generators", "maximal k-sets of a left-compressed family",
              detail::cmd_generators);
  doc_command("pi", "truncate generators to their type", detail::cmd_pi);
  doc_command("maximal?", "maximal-intersecting verdict with blocker",
              detail::cmd_maximal);
  doc_command("extend",
              "greedy closure extension in lexicographic candidate order",
              detail::cmd_extend);
  doc_command("bond", "index condition for two k-sets", detail::cmd_bond)
      ->add_option("--pair", opt.pair, "1-based indices of the two sets")
      ->expected(2)
      ->required();
  doc_command("oracle", "strong intersection by exhaustive enumeration",
              detail::cmd_oracle)
      ->add_option("--pair", opt.pair, "1-based indices of the two sets")
      ->expected(2)
      ->required();

  auto* named = app.add_subcommand("named", "emit star, a23 or hm");
  named->add_option("name", opt.name, "star | a23 | hm")->required();
  named->add_option("--n", opt.n)->required();
  named->add_option("--k", opt.k)->required();
  named->add_option("--output", opt.output);

  auto* enumerate = app.add_subcommand(
      "enumerate-mlcif", "all maximal left-compressed intersecting families");
  enumerate->add_option("--n", opt.n)->required();
  enumerate->add_option("--k", opt.k)->required();
  enumerate->add_option("--budget", opt.budget, "maximum number of k-sets");
  enumerate->add_option("--output", opt.output);

  auto* sample = app.add_subcommand(
      "sample", "random intersecting family (shuffle and insert greedily)");
  sample->add_option("--n", opt.n)->required();
  sample->add_option("--k", opt.k)->required();
  sample->add_option("--seed", opt.seed);
  sample->add_option("--size", opt.size, "member cap (0 = maximal)");
  sample->add_option("--output", opt.output);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }

  std::ofstream file;
  if (!opt.output.empty()) {
    file.open(opt.output);
    if (!file) {
      err << "error: cannot open " << opt.output << '\n';
      return kUsage;
    }
  }
  std::ostream& sink = opt.output.empty() ? out : file;

  try {
    if (named->parsed()) return detail::cmd_named(opt, sink);
    if (enumerate->parsed()) return detail::cmd_enumerate(opt, sink);
    if (sample->parsed()) return detail::cmd_sample(opt, sink);

    std::string text;
    if (opt.input == "-") {
      text = detail::read_all(in);
    } else {
      std::ifstream f(opt.input);
      if (!f) {
        err << "error: cannot open " << opt.input << '\n';
        return kUsage;
      }
      text = detail::read_all(f);
    }
    auto docs = parse_documents(text);
    for (const auto& [sub, fn] : doc_commands) {
      if (!sub->parsed()) continue;
      int code = kHolds;
      for (std::size_t d = 0; d < docs.size(); ++d) {
        if (docs[d].empty()) {
          err << "error: empty input\n";
          return kUsage;
        }
        if (d > 0) sink << '\n';
        code = std::max(code, fn(docs[d], opt, sink, err));
      }
      return code;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    sink << "precondition " << e.what() << '\n';
    return kFails;
  }
  return kUsage;
}

}  // namespace lcif::cli
