#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sdkit/cat.hpp"
#include "sdkit/sset.hpp"

namespace sdkit {

// Built-in instances addressed by `corpus:<name>` URIs. Advertised verdicts
// are metadata only; verify-all and the test suites re-derive every one.
struct CorpusObjectEntry {
  std::string name;
  SSetPtr sset;
  bool advertised_segal = false;
  bool advertised_decomposition = false;
  bool advertised_rezk_complete = false;
};

struct CorpusMapEntry {
  std::string name;
  SMap map;
  bool advertised_culf = false;
  bool advertised_rfib = false;
  bool advertised_lfib = false;
  // base object name when the map lives over a corpus nerve (for roundtrips)
  std::string base_name;
};

struct CorpusCategoryEntry {
  std::string name;
  std::shared_ptr<const FinCat> cat;
};

const std::vector<CorpusObjectEntry>& corpus_objects();
const std::vector<CorpusMapEntry>& corpus_maps();
const std::vector<CorpusCategoryEntry>& corpus_categories();

const CorpusObjectEntry& corpus_object(const std::string& name);
const CorpusMapEntry& corpus_map(const std::string& name);
const CorpusCategoryEntry& corpus_category(const std::string& name);

// Shared helpers used by corpus construction, the CLI, and the test suites.

// Unstraightening of a presheaf over the nerve of its base: level n is the
// set of pairs (chain, x in P(last object)); faces compose into the fiber.
SMap discfib_nerve(const Presheaf& p, int d);

// The levelwise isomorphism N(Tw C) -> Sd(N C) under the primes-first
// convention.
SMap sd_nerve_iso(const FinCat& c, int d_prime);

// Simplicial map induced on nerves by a functor, as an SMap between freshly
// built nerves (thin wrapper kept here for corpus registration).
SMap corpus_nerve_map(const Functor& f, int d);

}  // namespace sdkit
