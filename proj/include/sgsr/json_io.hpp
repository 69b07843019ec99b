#ifndef SGSR_JSON_IO_HPP
#define SGSR_JSON_IO_HPP

#include <json.hpp>

#include "sgsr/catalog.hpp"
#include "sgsr/classify.hpp"
#include "sgsr/feasibility.hpp"
#include "sgsr/srsg_check.hpp"

namespace sgsr {

// Insertion-ordered JSON keeps CLI output byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const SrsgParams& p);
Json to_json(const CheckFailure& f);
Json to_json(const CheckResult& r);
Json to_json(const Candidate& c);
Json to_json(const Lemma2Result& r);
Json to_json(const Survivor& s);
Json to_json(const SearchReport& r);
Json catalog_sidecar(const CatalogEntry& e);

}  // namespace sgsr

#endif  // SGSR_JSON_IO_HPP
