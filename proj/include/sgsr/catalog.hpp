#ifndef SGSR_CATALOG_HPP
#define SGSR_CATALOG_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "sgsr/signed_graph.hpp"
#include "sgsr/srsg_check.hpp"

namespace sgsr {

enum class Provenance { Constructed, SearchDerived };

struct CatalogFixtureMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CatalogEntry {
  std::string name;
  SignedGraph graph;
  SrsgParams expected;
  ClassLabel expected_class = ClassLabel::C1;
  Provenance provenance = Provenance::Constructed;
};

// The seven connected net-regular degree-5 SRSGs. Constructed entries are
// built from their defining rules with a fixed vertex labeling; S8_1 and
// S10_1 have no closed-form construction and are loaded from .sg fixtures
// recovered by the classify search (CatalogFixtureMissing tells how to
// regenerate them).
std::vector<CatalogEntry> build_catalog(const std::filesystem::path& fixture_dir);

struct EntryVerdict {
  std::string name;
  bool ok = true;
  std::vector<std::string> problems;
};

// Per-entry recheck: exact parameters and class, connectivity, zero net
// constraint residual, negation parameter swap, the negative-walk parity
// lemma where the class admits it, entry-specific structure, and pairwise
// non-isomorphism across the catalog.
std::vector<EntryVerdict> verify_catalog(const std::vector<CatalogEntry>& entries);

}  // namespace sgsr

#endif  // SGSR_CATALOG_HPP
