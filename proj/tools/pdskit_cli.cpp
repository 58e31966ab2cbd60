// pdskit command line: construct / verify / restrict / nonexistence /
// classify / search. Every result is printed as compact JSON (plus the
// subset text form where one exists); diagnostics go to stderr.
//
// Exit codes: 0 success, 1 domain rejection (hypothesis violated),
// 2 malformed input, 3 internal error.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "pdskit.h"

namespace {

bool g_verbose = false;

void note(const std::string& message) {
  if (g_verbose) std::fprintf(stderr, "pdskit: %s\n", message.c_str());
}

int exit_code(pdskit_status status) {
  if (status != PDSKIT_OK) std::fprintf(stderr, "error: %s\n", pdskit_last_error());
  return static_cast<int>(status);
}

struct String {
  char* ptr = nullptr;
  ~String() { pdskit_string_free(ptr); }
};

struct Subset {
  pdskit_subset* ptr = nullptr;
  ~Subset() { pdskit_subset_free(ptr); }
};

struct Group {
  pdskit_group* ptr = nullptr;
  ~Group() { pdskit_group_free(ptr); }
};

// prints the subset's text form and its parameter document
int print_subset_with_params(pdskit_subset* subset) {
  String text;
  if (pdskit_status s = pdskit_subset_text(subset, &text.ptr); s != PDSKIT_OK)
    return exit_code(s);
  String params;
  if (pdskit_status s = pdskit_subset_params_json(subset, &params.ptr); s != PDSKIT_OK)
    return exit_code(s);
  std::printf("%s\n%s\n", text.ptr, params.ptr);
  return 0;
}

int run_construct_paley(std::uint64_t q) {
  Subset subset;
  if (pdskit_status s = pdskit_paley(q, &subset.ptr); s != PDSKIT_OK) return exit_code(s);
  String text;
  if (pdskit_status s = pdskit_subset_text(subset.ptr, &text.ptr); s != PDSKIT_OK)
    return exit_code(s);
  String doc;
  if (pdskit_status s = pdskit_paley_construct_json(q, &doc.ptr); s != PDSKIT_OK)
    return exit_code(s);
  std::printf("%s\n%s\n", text.ptr, doc.ptr);
  return 0;
}

int run_construct_trivial(const std::string& group, const std::string& hall,
                          const std::string& gens) {
  if (hall.empty() == gens.empty()) {
    std::fprintf(stderr, "error: give exactly one of --hall and --gens\n");
    return 2;
  }
  Group g;
  if (pdskit_status s = pdskit_group_parse(group.c_str(), &g.ptr); s != PDSKIT_OK)
    return exit_code(s);
  Subset subset;
  pdskit_status s = hall.empty()
                        ? pdskit_trivial_from_generators(g.ptr, gens.c_str(), &subset.ptr)
                        : pdskit_trivial_from_hall(g.ptr, hall.c_str(), &subset.ptr);
  if (s != PDSKIT_OK) return exit_code(s);
  return print_subset_with_params(subset.ptr);
}

int run_construct_lines(std::uint64_t n, std::uint64_t r) {
  Subset subset;
  if (pdskit_status s = pdskit_latin_square_lines(n, r, &subset.ptr); s != PDSKIT_OK)
    return exit_code(s);
  return print_subset_with_params(subset.ptr);
}

int run_verify(const std::string& text) {
  Subset subset;
  if (pdskit_status s = pdskit_subset_parse(text.c_str(), &subset.ptr); s != PDSKIT_OK)
    return exit_code(s);
  String doc;
  if (pdskit_status s = pdskit_verify_json(subset.ptr, &doc.ptr); s != PDSKIT_OK)
    return exit_code(s);
  std::printf("%s\n", doc.ptr);
  return 0;
}

int run_restrict(const std::string& text, const std::string& primes) {
  Subset subset;
  if (pdskit_status s = pdskit_subset_parse(text.c_str(), &subset.ptr); s != PDSKIT_OK)
    return exit_code(s);
  String doc;
  if (pdskit_status s = pdskit_restrict_json(subset.ptr, primes.c_str(), &doc.ptr);
      s != PDSKIT_OK)
    return exit_code(s);
  std::printf("%s\n", doc.ptr);
  return 0;
}

int run_nonexistence(const std::string& arg) {
  std::uint64_t v = 0;
  try {
    v = std::stoull(arg);
  } catch (const std::exception&) {
    std::fprintf(stderr, "error: malformed order '%s'\n", arg.c_str());
    return 2;
  }
  String doc;
  if (pdskit_status s = pdskit_nonexistence_json(v, &doc.ptr); s != PDSKIT_OK)
    return exit_code(s);
  std::printf("%s\n", doc.ptr);
  return 0;
}

// single order or inclusive range "lo..hi"; emits one verdict per odd order
int run_classify(const std::string& arg) {
  std::uint64_t lo = 0, hi = 0;
  auto dots = arg.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoull(arg);
    } else {
      lo = std::stoull(arg.substr(0, dots));
      hi = std::stoull(arg.substr(dots + 2));
    }
  } catch (const std::exception&) {
    std::fprintf(stderr, "error: malformed order or range '%s'\n", arg.c_str());
    return 2;
  }
  if (hi < lo) {
    std::fprintf(stderr, "error: empty range\n");
    return 2;
  }
  std::uint64_t emitted = 0;
  for (std::uint64_t v = lo; v <= hi; ++v) {
    if (v <= 1 || v % 2 == 0) continue;
    String doc;
    if (pdskit_status s = pdskit_classify_json(v, &doc.ptr); s != PDSKIT_OK)
      return exit_code(s);
    std::printf("%s\n", doc.ptr);
    ++emitted;
  }
  if (emitted == 0) {
    std::fprintf(stderr, "error: order must be odd and > 1\n");
    return 2;
  }
  note("classified " + std::to_string(emitted) + " order(s)");
  return 0;
}

int stream_subset(const char* text, void*) {
  std::printf("%s\n", text);
  return 0;
}

int run_search(const std::string& group, bool no_prune, std::uint64_t limit, std::uint64_t bound,
               unsigned threads) {
  note("searching " + group + (no_prune ? " without pruning" : " with pruning"));
  std::uint64_t found = 0;
  if (pdskit_status s = pdskit_search(group.c_str(), no_prune ? 0 : 1, bound, limit, threads,
                                      stream_subset, nullptr, &found);
      s != PDSKIT_OK)
    return exit_code(s);
  Group g;
  if (pdskit_status s = pdskit_group_parse(group.c_str(), &g.ptr); s != PDSKIT_OK)
    return exit_code(s);
  String canonical;
  if (pdskit_status s = pdskit_group_descriptor(g.ptr, &canonical.ptr); s != PDSKIT_OK)
    return exit_code(s);
  std::printf("{\"found\":%" PRIu64 ",\"group\":\"%s\"}\n", found, canonical.ptr);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial difference set toolkit"};
  app.set_version_flag("--version", pdskit_version());
  app.add_flag("-v,--verbose", g_verbose, "diagnostics on stderr");
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build a known PDS");
  construct->require_subcommand(1);
  std::uint64_t q = 0;
  auto* c_paley = construct->add_subcommand("paley", "nonzero squares of GF(q), q ≡ 1 (mod 4)");
  c_paley->add_option("q", q, "odd prime power ≡ 1 (mod 4)")->required();
  std::string t_group, t_hall, t_gens;
  auto* c_trivial = construct->add_subcommand("trivial", "subgroup minus identity");
  c_trivial->add_option("--group", t_group, "group descriptor, e.g. 3,15")->required();
  c_trivial->add_option("--hall", t_hall, "comma-separated Hall primes");
  c_trivial->add_option("--gens", t_gens, "comma-separated generator ranks");
  std::uint64_t lines_n = 0, lines_r = 0;
  auto* c_lines = construct->add_subcommand("lines", "union of r lines in Z_n x Z_n minus origin");
  c_lines->add_option("n", lines_n, "odd n >= 3")->required();
  c_lines->add_option("r", lines_r, "line count")->required();

  std::string verify_text;
  auto* verify = app.add_subcommand("verify", "classify a subset and cross-check it");
  verify->add_option("subset", verify_text, "subset text, e.g. \"13 : [1,3,4,9,10,12]\"")
      ->required();

  std::string restrict_text, restrict_primes;
  auto* restrict_cmd = app.add_subcommand("restrict", "intersect with a Hall subgroup and verify");
  restrict_cmd->add_option("subset", restrict_text, "subset text")->required();
  restrict_cmd->add_option("--primes", restrict_primes, "comma-separated Hall primes")->required();

  std::string nonexist_arg;
  auto* nonexist = app.add_subcommand("nonexistence", "restriction contradiction certificate");
  nonexist->add_option("v", nonexist_arg, "odd order > 1")->required();

  std::string classify_arg;
  auto* classify = app.add_subcommand("classify", "Paley type existence verdict");
  classify->add_option("v", classify_arg, "odd order or range lo..hi")->required();

  std::string search_group;
  bool search_no_prune = false;
  std::uint64_t search_limit = 0, search_bound = 0;
  unsigned search_threads = 1;
  auto* search = app.add_subcommand("search", "exhaustive Paley type search");
  search->add_option("group", search_group, "group descriptor")->required();
  search->add_flag("--no-prune", search_no_prune, "disable count pruning");
  search->add_option("--limit", search_limit, "cap the number of results (0 = all)");
  search->add_option("--bound", search_bound, "order bound override (0 = default)");
  search->add_option("--threads", search_threads, "worker threads (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (c_paley->parsed()) return run_construct_paley(q);
  if (c_trivial->parsed()) return run_construct_trivial(t_group, t_hall, t_gens);
  if (c_lines->parsed()) return run_construct_lines(lines_n, lines_r);
  if (verify->parsed()) return run_verify(verify_text);
  if (restrict_cmd->parsed()) return run_restrict(restrict_text, restrict_primes);
  if (nonexist->parsed()) return run_nonexistence(nonexist_arg);
  if (classify->parsed()) return run_classify(classify_arg);
  if (search->parsed())
    return run_search(search_group, search_no_prune, search_limit, search_bound, search_threads);
  return 2;
}
