#ifndef ALTLIFT_JSON_IO_HPP_
#define ALTLIFT_JSON_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "datasets.hpp"
#include "egroup.hpp"
#include "error.hpp"
#include "lift.hpp"
#include "notation.hpp"

// JSON forms. Every data-set reader also accepts a plain string in table
// notation.
//
//   cyclic  {"n": 10, "g0": 3239, "pairs": [{"c": 1, "nj": 10, "mult": 5}, ...]}
//   E-data  {"n": 7, "m": 10, "i": 0, "g0": 1,
//            "entries": [{"sigma": "(1 2 3 4 5)", "x": 1, "mj": 10, "tj": 10, "mult": 1}, ...]}
// Entry orders are optional on input; when present they are checked by
// validation. A nested "group" object is read as well.

namespace altlift {

  using json = nlohmann::json;

  namespace detail {
    template <class T>
    T field(const json& j, const char* key, const char* what) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string(what) + ": missing field '" + key + "'");
      }
      try {
        return j.at(key).get<T>();
      } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": field '" + key + "': " + e.what());
      }
    }
  }  // namespace detail

  inline json to_json(const GroupSpec& s) { return {{"n", s.n}, {"m", s.m}, {"i", s.i}}; }

  inline GroupSpec group_from_json(const json& j) {
    GroupSpec s{detail::field<int>(j, "n", "group"), detail::field<std::int64_t>(j, "m", "group"),
                detail::field<int>(j, "i", "group")};
    s.validate();
    return s;
  }

  inline json to_json(const Signature& s) { return {{"g0", s.g0}, {"periods", s.periods}}; }

  inline Signature signature_from_json(const json& j) {
    return {detail::field<std::int64_t>(j, "g0", "signature"),
            detail::field<std::vector<std::int64_t>>(j, "periods", "signature")};
  }

  inline json to_json(const CyclicDataSet& d) {
    json pairs = json::array();
    for (const auto& p : d.normalized().pairs) {
      pairs.push_back({{"c", p.c}, {"nj", p.nj}, {"mult", p.mult}});
    }
    return {{"n", d.n}, {"g0", d.g0}, {"pairs", pairs}};
  }

  inline CyclicDataSet cyclic_from_json(const json& j) {
    if (j.is_string()) {
      return parse_cyclic(j.get<std::string>());
    }
    CyclicDataSet d{detail::field<std::int64_t>(j, "n", "cyclic data set"),
                    detail::field<std::int64_t>(j, "g0", "cyclic data set"), {}};
    for (const auto& p : detail::field<json>(j, "pairs", "cyclic data set")) {
      std::int64_t nj = p.contains("nj") ? detail::field<std::int64_t>(p, "nj", "pair")
                                         : detail::field<std::int64_t>(p, "n", "pair");
      d.pairs.push_back({detail::field<std::int64_t>(p, "c", "pair"), nj, p.value("mult", std::int64_t{1})});
    }
    return d;
  }

  inline json to_json(const GroupElement& e) { return {{"sigma", e.sigma.to_string()}, {"x", e.x}}; }

  inline GroupElement element_from_json(const json& j, const GroupSpec& spec) {
    if (j.is_string()) {
      return parse_element(j.get<std::string>(), spec);
    }
    GroupElement e{Permutation::parse(detail::field<std::string>(j, "sigma", "element"), spec.n),
                   mod(j.value("x", std::int64_t{0}), spec.m)};
    return e;
  }

  inline json to_json(const EDataSet& d) {
    json entries = json::array();
    for (const auto& e : d.entries) {
      entries.push_back({{"sigma", e.elem.sigma.to_string()},
                         {"x", e.elem.x},
                         {"mj", element_order(d.spec, e.elem)},
                         {"tj", additive_order(e.elem.x, d.spec.m)},
                         {"mult", e.mult}});
    }
    return {{"n", d.spec.n}, {"m", d.spec.m}, {"i", d.spec.i}, {"g0", d.g0}, {"entries", entries}};
  }

  // Stated orders "m"/"t" are carried into the entries, so a wrong value
  // shows up as an order/residue_order issue in validation.
  inline EDataSet edataset_from_json(const json& j) {
    if (j.is_string()) {
      return parse_edataset(j.get<std::string>());
    }
    GroupSpec spec = group_from_json(j.contains("group") ? detail::field<json>(j, "group", "data set") : j);
    EDataSet d{spec, detail::field<std::int64_t>(j, "g0", "data set"), {}};
    for (const auto& e : detail::field<json>(j, "entries", "data set")) {
      Entry en;
      en.elem = element_from_json(e, spec);
      en.mj = e.value("mj", e.value("m", std::int64_t{0}));
      en.tj = e.value("tj", e.value("t", std::int64_t{0}));
      en.mult = e.value("mult", std::int64_t{1});
      d.entries.push_back(en);
    }
    return d;
  }

  inline json to_json(const WeakLiftablePair& w) {
    return {{"alt", to_json(w.alt)},
            {"quotient_cyclic", to_json(w.quotient_cyclic)},
            {"cone_perm", w.cone_perm.to_string()},
            {"text", w.to_string()}};
  }

  inline WeakLiftablePair wlp_from_json(const json& j) {
    WeakLiftablePair w;
    w.alt = edataset_from_json(detail::field<json>(j, "alt", "weak-liftable pair"));
    w.quotient_cyclic = cyclic_from_json(detail::field<json>(j, "quotient_cyclic", "weak-liftable pair"));
    w.cone_perm = ConePermutation::parse(detail::field<std::string>(j, "cone_perm", "weak-liftable pair"),
                                         static_cast<int>(w.alt.r()));
    return w;
  }

  inline json to_json(const GeneratingVector& v) {
    json imgs = json::array(), hs = json::array();
    for (const auto& e : v.images) {
      imgs.push_back(to_json(e));
    }
    for (const auto& e : v.handles) {
      hs.push_back(to_json(e));
    }
    return {{"signature", to_json(v.sig)}, {"images", imgs}, {"handles", hs}};
  }

  inline GeneratingVector vector_from_json(const json& j, const GroupSpec& spec) {
    GeneratingVector v{spec, signature_from_json(detail::field<json>(j, "signature", "vector")), {}, {}};
    for (const auto& e : detail::field<json>(j, "images", "vector")) {
      v.images.push_back(element_from_json(e, spec));
    }
    for (const auto& e : detail::field<json>(j, "handles", "vector")) {
      v.handles.push_back(element_from_json(e, spec));
    }
    return v;
  }

  inline json to_json(const ValidationResult& r) {
    json issues = json::array();
    for (const auto& is : r.issues) {
      issues.push_back({{"code", is.code}, {"message", is.message}});
    }
    json out = {{"valid", r.ok()}, {"issues", issues}, {"indeterminate", r.indeterminate}};
    out["genus"] = r.genus ? json(*r.genus) : json(nullptr);
    return out;
  }

  inline json to_json(const ClassificationRecord& rec) {
    json classes = json::array();
    for (const auto& c : rec.classes) {
      json cj = {{"data", to_json(c.data)},
                 {"text", c.data.to_string()},
                 {"canonical", c.canonical},
                 {"vector", to_json(c.vector)}};
      if (c.wlp) {
        cj["wlp"] = to_json(*c.wlp);
      }
      if (c.pair && c.factors) {
        cj["pair"] = {to_json(c.pair->first), to_json(c.pair->second)};
        cj["factors"] = {to_json(c.factors->first), to_json(c.factors->second)};
      }
      classes.push_back(cj);
    }
    return {{"group", to_json(rec.spec)}, {"name", rec.spec.display_name()}, {"genus", rec.genus},
            {"complete", rec.complete},   {"flags", rec.flags},                {"classes", classes}};
  }

  inline ClassificationRecord record_from_json(const json& j) {
    ClassificationRecord rec;
    rec.spec = group_from_json(detail::field<json>(j, "group", "record"));
    rec.genus = detail::field<std::int64_t>(j, "genus", "record");
    rec.complete = detail::field<bool>(j, "complete", "record");
    rec.flags = detail::field<std::vector<std::string>>(j, "flags", "record");
    for (const auto& cj : detail::field<json>(j, "classes", "record")) {
      ClassifiedClass c;
      c.data = edataset_from_json(detail::field<json>(cj, "data", "class"));
      c.canonical = detail::field<std::string>(cj, "canonical", "class");
      c.vector = vector_from_json(detail::field<json>(cj, "vector", "class"), rec.spec);
      if (cj.contains("wlp")) {
        c.wlp = wlp_from_json(cj.at("wlp"));
      }
      if (cj.contains("pair")) {
        c.pair = std::make_pair(element_from_json(cj.at("pair").at(0), rec.spec),
                                element_from_json(cj.at("pair").at(1), rec.spec));
        c.factors = std::make_pair(cyclic_from_json(cj.at("factors").at(0)), cyclic_from_json(cj.at("factors").at(1)));
      }
      rec.classes.push_back(std::move(c));
    }
    return rec;
  }

}  // namespace altlift

#endif  // ALTLIFT_JSON_IO_HPP_
