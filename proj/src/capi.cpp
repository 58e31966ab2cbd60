#include "pdskit.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "pdskit/construct.hpp"
#include "pdskit/json_io.hpp"
#include "pdskit/pds.hpp"
#include "pdskit/search.hpp"

struct pdskit_group {
  pdskit::AbelianGroup value;
};

struct pdskit_subset {
  pdskit::SubsetInGroup value;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
pdskit_status wrap(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return PDSKIT_OK;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return PDSKIT_DOMAIN_ERROR;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return PDSKIT_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PDSKIT_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PDSKIT_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return PDSKIT_INTERNAL_ERROR;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<std::uint64_t> parse_csv_u64(const char* csv, const char* what) {
  require(csv != nullptr, "missing list argument");
  std::vector<std::uint64_t> out;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw std::invalid_argument(std::string("empty entry in ") + what);
    out.push_back(std::stoull(token));
    token.clear();
  };
  for (const char* c = csv; *c; ++c) {
    if (*c == ' ' || *c == '\t') continue;
    if (*c == ',') {
      flush();
    } else if (*c >= '0' && *c <= '9') {
      token.push_back(*c);
    } else {
      throw std::invalid_argument(std::string("bad character in ") + what);
    }
  }
  flush();
  return out;
}

}  // namespace

extern "C" {

const char* pdskit_version(void) { return "0.1.0"; }

const char* pdskit_last_error(void) { return g_last_error.c_str(); }

void pdskit_string_free(char* s) { delete[] s; }

pdskit_status pdskit_group_parse(const char* descriptor, pdskit_group** out_group) {
  return wrap([&] {
    require(descriptor && out_group, "null argument");
    auto* handle = new pdskit_group{pdskit::parse_group_descriptor(descriptor)};
    *out_group = handle;
  });
}

void pdskit_group_free(pdskit_group* group) { delete group; }

pdskit_status pdskit_group_descriptor(const pdskit_group* group, char** out_text) {
  return wrap([&] {
    require(group && out_text, "null argument");
    *out_text = dup_string(pdskit::group_descriptor(group->value));
  });
}

uint64_t pdskit_group_order(const pdskit_group* group) {
  return group ? group->value.order : 0;
}

pdskit_status pdskit_subset_parse(const char* text, pdskit_subset** out_subset) {
  return wrap([&] {
    require(text && out_subset, "null argument");
    *out_subset = new pdskit_subset{pdskit::parse_subset(text)};
  });
}

void pdskit_subset_free(pdskit_subset* subset) { delete subset; }

pdskit_status pdskit_subset_text(const pdskit_subset* subset, char** out_text) {
  return wrap([&] {
    require(subset && out_text, "null argument");
    *out_text = dup_string(pdskit::subset_text(subset->value));
  });
}

uint64_t pdskit_subset_size(const pdskit_subset* subset) {
  return subset ? subset->value.size() : 0;
}

pdskit_status pdskit_subset_params_json(const pdskit_subset* subset, char** out_json) {
  return wrap([&] {
    require(subset && out_json, "null argument");
    *out_json = dup_string(pdskit::subset_params_json(subset->value));
  });
}

pdskit_status pdskit_paley(uint64_t q, pdskit_subset** out_subset) {
  return wrap([&] {
    require(out_subset != nullptr, "null argument");
    *out_subset = new pdskit_subset{pdskit::paley(q)};
  });
}

pdskit_status pdskit_paley_construct_json(uint64_t q, char** out_json) {
  return wrap([&] {
    require(out_json != nullptr, "null argument");
    *out_json = dup_string(pdskit::paley_construct_json(q));
  });
}

pdskit_status pdskit_trivial_from_hall(const pdskit_group* group, const char* primes_csv,
                                       pdskit_subset** out_subset) {
  return wrap([&] {
    require(group && out_subset, "null argument");
    auto primes = parse_csv_u64(primes_csv, "prime list");
    *out_subset = new pdskit_subset{pdskit::trivial_pds_from_hall(group->value, primes)};
  });
}

pdskit_status pdskit_trivial_from_generators(const pdskit_group* group, const char* ranks_csv,
                                             pdskit_subset** out_subset) {
  return wrap([&] {
    require(group && out_subset, "null argument");
    auto ranks = parse_csv_u64(ranks_csv, "generator list");
    *out_subset = new pdskit_subset{pdskit::trivial_pds_from_generators(group->value, ranks)};
  });
}

pdskit_status pdskit_latin_square_lines(uint64_t n, uint64_t r, pdskit_subset** out_subset) {
  return wrap([&] {
    require(out_subset != nullptr, "null argument");
    *out_subset = new pdskit_subset{pdskit::latin_square_lines(n, r)};
  });
}

pdskit_status pdskit_verify_json(const pdskit_subset* subset, char** out_json) {
  return wrap([&] {
    require(subset && out_json, "null argument");
    *out_json = dup_string(pdskit::verify_json(subset->value));
  });
}

pdskit_status pdskit_restrict_json(const pdskit_subset* subset, const char* primes_csv,
                                   char** out_json) {
  return wrap([&] {
    require(subset && out_json, "null argument");
    auto primes = parse_csv_u64(primes_csv, "prime list");
    auto report = pdskit::restrict_and_verify(subset->value, primes);
    *out_json = dup_string(pdskit::restrict_report_json(report));
  });
}

pdskit_status pdskit_nonexistence_json(uint64_t v, char** out_json) {
  return wrap([&] {
    require(out_json != nullptr, "null argument");
    *out_json = dup_string(pdskit::nonexistence_json(v));
  });
}

pdskit_status pdskit_classify_json(uint64_t v, char** out_json) {
  return wrap([&] {
    require(out_json != nullptr, "null argument");
    *out_json = dup_string(pdskit::classify_order_json(v));
  });
}

pdskit_status pdskit_search(const char* group_descriptor, int prune, uint64_t order_bound,
                            uint64_t max_results, unsigned threads, pdskit_subset_sink sink,
                            void* user, uint64_t* out_found) {
  return wrap([&] {
    require(group_descriptor != nullptr, "null argument");
    pdskit::AbelianGroup g = pdskit::parse_group_descriptor(group_descriptor);
    pdskit::SearchOptions options;
    options.prune = prune != 0;
    options.order_bound = order_bound;
    options.max_results = max_results;
    options.threads = threads == 0 ? 1 : threads;
    auto results = pdskit::exhaustive_paley_search(g, options);
    if (out_found) *out_found = results.size();
    if (sink) {
      for (const auto& d : results) {
        if (sink(pdskit::subset_text(d).c_str(), user) != 0) break;
      }
    }
  });
}

}  // extern "C"
