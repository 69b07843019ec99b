#include "sgsr/json_io.hpp"

#include "sgsr/formats.hpp"

namespace sgsr {

namespace {

Json opt(const std::optional<int>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const SrsgParams& p) {
  return Json{{"n", p.n}, {"r", p.r}, {"a", opt(p.a)}, {"b", opt(p.b)},
              {"c", opt(p.c)}};
}

Json to_json(const CheckFailure& f) {
  Json j{{"kind", to_string(f.kind)}};
  if (f.witness)
    j["witness"] = Json{{"u", f.witness->u},
                        {"v", f.witness->v},
                        {"expected", f.witness->expected},
                        {"actual", f.witness->actual}};
  else
    j["witness"] = nullptr;
  return j;
}

Json to_json(const CheckResult& r) {
  if (std::holds_alternative<SrsgParams>(r)) {
    const auto& p = std::get<SrsgParams>(r);
    return Json{{"srsg", true},
                {"params", to_json(p)},
                {"class", to_string(classify_class(p))}};
  }
  return Json{{"srsg", false}, {"failure", to_json(std::get<CheckFailure>(r))}};
}

Json to_json(const Candidate& c) {
  return Json{{"n", opt(c.n)},      {"r", c.r}, {"rho", c.rho}, {"a", c.a},
              {"b", c.b},           {"c", opt(c.c)},
              {"complete", c.complete()}, {"stratum", c.stratum()}};
}

Json to_json(const Lemma2Result& r) {
  Json j;
  switch (r.status) {
    case Lemma2Result::Status::Holds:
      j["holds"] = true;
      break;
    case Lemma2Result::Status::Violated:
      j["holds"] = false;
      break;
    case Lemma2Result::Status::PreconditionFailed:
      j["holds"] = nullptr;
      j["precondition"] = r.note;
      return j;
  }
  if (r.witness) j["witness"] = Json{{"u", r.witness->first}, {"v", r.witness->second}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const Survivor& s) {
  return Json{{"n", s.params.n},
              {"params", to_json(s.params)},
              {"class", to_string(s.label)},
              {"canonical", s.form.to_string()},
              {"sg", write_sg(s.graph)}};
}

Json to_json(const SearchReport& r) {
  Json runs = Json::array();
  for (const auto& run : r.runs) {
    Json j{{"n", run.n},
           {"underlying_count", run.underlying_count},
           {"signing_count", run.signing_count},
           {"engine_nodes", run.engine_nodes}};
    if (r.query.mode == SearchMode::Constrained)
      j["candidate_tuples"] = run.candidate_tuples;
    runs.push_back(std::move(j));
  }
  Json survivors = Json::array();
  for (const auto& s : r.survivors) survivors.push_back(to_json(s));
  return Json{
      {"query",
       Json{{"r", r.query.r},
            {"net", r.query.rho},
            {"nmin", r.query.n_min},
            {"nmax", r.query.n_max},
            {"mode", r.query.mode == SearchMode::Full ? "full" : "constrained"},
            {"source",
             r.query.source == SearchSource::Generated ? "generated" : "census"},
            {"paper_filters", r.query.paper_filters}}},
      {"complete", r.complete},
      {"runs", runs},
      {"survivor_count", survivors.size()},
      {"survivors", survivors},
      {"notes", r.notes}};
}

Json catalog_sidecar(const CatalogEntry& e) {
  Json j{{"name", e.name},
         {"expected", to_json(e.expected)},
         {"class", to_string(e.expected_class)},
         {"provenance", e.provenance == Provenance::Constructed
                            ? "constructed"
                            : "search-derived"}};
  if (e.provenance == Provenance::SearchDerived)
    j["source"] = Json{{"command", "classify"},
                       {"r", e.expected.r},
                       {"net", 3},
                       {"n", e.expected.n},
                       {"mode", "full"},
                       {"source", "generated"}};
  return j;
}

}  // namespace sgsr
