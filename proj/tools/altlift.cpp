// altlift: batch front end for data-set validation, factors, lifts,
// equivalence and catalogs.
//
// Exit status: 0 success, 1 invalid input (issues are listed), 2 a search
// ran out of budget, 64 bad command line.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altlift/altlift.hpp"

using namespace altlift;

namespace {

  constexpr int kExitInvalid = 1;
  constexpr int kExitIndeterminate = 2;
  constexpr int kExitUsage = 64;

  // Thrown for flag combinations CLI11 cannot express.
  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Options {
    std::string type = "edata";
    std::string in, text, a, b, element, df, dg, out;
    std::string format;
    std::int64_t genus = 0;
    int n = 0;
    std::int64_t m = 0;
    int i = -1;
    std::int64_t order = 0;
    int jobs = 1;
  };

  std::string slurp(const std::string& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(path);
    if (!f) {
      throw ParseError("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  // A document is JSON if it parses as JSON, else bracket notation.
  json read_document(const std::string& arg) {
    std::string body = arg;
    if (!arg.empty() && arg.front() != '(') {
      body = slurp(arg);
    }
    auto j = json::parse(body, nullptr, false);
    if (j.is_discarded()) {
      std::string t = body;
      t.erase(t.find_last_not_of(" \t\r\n") + 1);
      t.erase(0, t.find_first_not_of(" \t\r\n"));
      return json(t);
    }
    return j;
  }

  json input_document(const Options& o, const std::string& path_flag, const std::string& what) {
    if (!o.text.empty()) {
      return json(o.text);
    }
    if (path_flag.empty()) {
      throw UsageError(what + ": give --in FILE or --text NOTATION");
    }
    return read_document(path_flag);
  }

  void emit(const Options& o, const std::string& doc) {
    if (o.out.empty()) {
      std::cout << doc;
      if (!doc.empty() && doc.back() != '\n') {
        std::cout << '\n';
      }
      return;
    }
    std::ofstream f(o.out);
    if (!f) {
      throw ParseError("cannot write '" + o.out + "'");
    }
    f << doc;
    if (!doc.empty() && doc.back() != '\n') {
      f << '\n';
    }
  }

  std::string fmt(const Options& o, const char* fallback) { return o.format.empty() ? fallback : o.format; }

  void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
      if (f == a) {
        return;
      }
    }
    throw UsageError("format '" + f + "' is not available for this command");
  }

  int report_issues(const Options& o, const ValidationResult& v, const std::string& f) {
    if (f == "json") {
      emit(o, to_json(v).dump(2));
    } else {
      std::ostringstream os;
      os << (v.indeterminate ? "indeterminate" : "invalid") << "\n";
      for (const auto& is : v.issues) {
        os << is.code << ": " << is.message << "\n";
      }
      emit(o, os.str());
    }
    return v.indeterminate && v.issues.empty() ? kExitIndeterminate : kExitInvalid;
  }

  // ---- commands ------------------------------------------------------------

  int cmd_validate(const Options& o) {
    std::string f = fmt(o, "text");
    require_format(f, {"text", "json"});
    json doc = input_document(o, o.in, "validate");
    ValidationResult v;
    if (o.type == "cyclic") {
      v = validate_cyclic(cyclic_from_json(doc));
    } else if (o.type == "edata") {
      v = validate_edataset(edataset_from_json(doc));
    } else if (o.type == "wlp") {
      v = validate_wlp(wlp_from_json(doc));
    } else {
      throw UsageError("--type must be cyclic, edata or wlp");
    }
    if (!v.ok()) {
      return report_issues(o, v, f);
    }
    emit(o, f == "json" ? to_json(v).dump(2) : "genus: " + std::to_string(*v.genus));
    return 0;
  }

  EDataSet valid_edataset(const Options& o, const json& doc, int& status) {
    EDataSet D = edataset_from_json(doc);
    ValidationResult v = validate_edataset(D);
    if (!v.ok()) {
      status = report_issues(o, v, fmt(o, "text") == "json" ? "json" : "text");
    }
    return D;
  }

  int cmd_factor(const Options& o) {
    std::string f = fmt(o, "text");
    require_format(f, {"text", "json"});
    if (o.element.empty()) {
      throw UsageError("factor: --element SIGMA|X is required");
    }
    int status = 0;
    EDataSet D = valid_edataset(o, input_document(o, o.in, "factor"), status);
    if (status) {
      return status;
    }
    GroupElement a = parse_element(o.element, D.spec);
    CyclicDataSet c = cyclic_factor(D, a);
    if (f == "json") {
      json j = to_json(c);
      j["text"] = c.to_string();
      j["element"] = to_json(a);
      emit(o, j.dump(2));
    } else {
      emit(o, c.to_string());
    }
    return 0;
  }

  int cmd_lift(const Options& o) {
    std::string f = fmt(o, "json");
    require_format(f, {"text", "json"});
    int status = 0;
    EDataSet D = valid_edataset(o, input_document(o, o.in, "lift"), status);
    if (status) {
      return status;
    }
    WeakLiftablePair w = psi(D);
    emit(o, f == "json" ? to_json(w).dump(2) : w.to_string());
    return 0;
  }

  int cmd_equiv(const Options& o) {
    std::string f = fmt(o, "text");
    require_format(f, {"text", "json"});
    if (o.a.empty() || o.b.empty()) {
      throw UsageError("equiv: --a and --b are required");
    }
    json ja = read_document(o.a), jb = read_document(o.b);
    json out;
    std::string line;
    if (o.type == "wlp") {
      bool eq = wlp_equivalent(wlp_from_json(ja), wlp_from_json(jb));
      out = {{"equivalent", eq}};
      line = eq ? "equivalent" : "not equivalent";
    } else if (o.type == "edata") {
      EDataSet A = edataset_from_json(ja), B = edataset_from_json(jb);
      auto w = equivalent(A, B);
      out = {{"equivalent", w.has_value()}, {"canonical_a", canonical_form(A)}, {"canonical_b", canonical_form(B)}};
      line = w ? "equivalent" : "not equivalent";
      if (w) {
        std::vector<int> pi1;
        for (int p : w->pi) {
          pi1.push_back(p + 1);
        }
        out["witness"] = {{"pi", pi1}, {"tau", w->chi.tau.to_string()}, {"ell", w->chi.ell}};
        std::ostringstream os;
        os << "\npi:";
        for (int p : pi1) {
          os << ' ' << p;
        }
        os << "\ntau: " << w->chi.tau.to_string() << "\nell: " << w->chi.ell;
        line += os.str();
      }
    } else {
      throw UsageError("--type must be edata or wlp for equiv");
    }
    emit(o, f == "json" ? out.dump(2) : line);
    return 0;
  }

  std::vector<GroupSpec> selected_specs(const Options& o) {
    if (o.n && o.m && o.i >= 0) {
      GroupSpec s{o.n, o.m, o.i};
      s.validate();
      return {s};
    }
    std::vector<GroupSpec> out;
    for (const auto& s : catalog_specs(o.genus, std::max(9, o.n))) {
      if ((o.n == 0 || s.n == o.n) && (o.m == 0 || s.m == o.m) && (o.i < 0 || s.i == o.i)) {
        out.push_back(s);
      }
    }
    return out;
  }

  std::string render_catalog(const std::vector<ClassificationRecord>& recs, const std::string& f) {
    if (f == "json") {
      return catalog_json(recs).dump(2);
    }
    if (f == "csv") {
      return catalog_csv(recs);
    }
    if (f == "md") {
      return catalog_markdown(recs);
    }
    std::ostringstream os;
    for (const auto& r : catalog_order(recs)) {
      os << r.spec.display_name() << " " << r.spec.tuple_string() << ", g = " << r.genus << ": " << r.classes.size()
         << (r.classes.size() == 1 ? " class" : " classes") << (r.complete ? "" : " (incomplete)") << "\n";
      for (const auto& c : r.classes) {
        os << "  " << c.data.to_string() << "\n";
      }
      for (const auto& fl : r.flags) {
        os << "  note: " << fl << "\n";
      }
    }
    return os.str();
  }

  int cmd_classify(const Options& o) {
    std::string f = fmt(o, "md");
    require_format(f, {"text", "json", "csv", "md"});
    std::vector<ClassificationRecord> recs;
    if (!o.in.empty()) {
      // re-render a stored catalog
      recs = catalog_from_json(read_document(o.in));
    } else {
      if (o.genus == 0) {
        throw UsageError("classify: --genus is required");
      }
      auto specs = selected_specs(o);
      recs = classify_all(o.genus, specs, o.jobs);
      if (specs.size() > 1) {
        recs = nonempty(recs);
      }
    }
    emit(o, render_catalog(recs, f));
    bool complete = std::all_of(recs.begin(), recs.end(), [](const auto& r) { return r.complete; });
    return complete ? 0 : kExitIndeterminate;
  }

  CyclicDataSet cyclic_arg(const std::string& arg) { return cyclic_from_json(read_document(arg)); }

  int cmd_weakgen(const Options& o) {
    std::string f = fmt(o, "text");
    require_format(f, {"text", "json"});
    if (o.df.empty() || o.dg.empty() || o.genus == 0 || !o.n || !o.m || o.i < 0) {
      throw UsageError("weakgen: --genus, --n, --m, --i, --df and --dg are required");
    }
    GroupSpec spec{o.n, o.m, o.i};
    spec.validate();
    CyclicDataSet DF = cyclic_arg(o.df), DG = cyclic_arg(o.dg);
    for (const auto* c : {&DF, &DG}) {
      ValidationResult v = validate_cyclic(*c);
      if (v.ok() && *v.genus != o.genus) {
        v.issues.push_back({"genus", c->to_string() + " has genus " + std::to_string(*v.genus) + ", not "
                                         + std::to_string(o.genus)});
      }
      if (!v.ok()) {
        return report_issues(o, v, f);
      }
    }
    auto found = find_weakly_generated(o.genus, spec, DF, DG);
    if (f == "json") {
      json arr = json::array();
      for (const auto& d : found) {
        arr.push_back(to_json(d));
      }
      emit(o, json{{"count", found.size()}, {"data_sets", arr}}.dump(2));
    } else {
      std::ostringstream os;
      os << "count: " << found.size() << "\n";
      for (const auto& d : found) {
        os << d.to_string() << "\n";
      }
      emit(o, os.str());
    }
    return 0;
  }

  int cmd_landau(const Options& o) {
    if (o.n < 1) {
      throw UsageError("landau: --n is required");
    }
    emit(o, std::to_string(landau(o.n)));
    return 0;
  }

  int cmd_signatures(const Options& o) {
    std::string f = fmt(o, "text");
    require_format(f, {"text", "json"});
    if (o.genus == 0) {
      throw UsageError("signatures: --genus is required");
    }
    std::vector<Signature> sigs;
    if (o.order) {
      sigs = admissible_signatures_for_order(o.genus, o.order);
    } else if (o.n && o.m && o.i >= 0) {
      GroupSpec s{o.n, o.m, o.i};
      s.validate();
      sigs = admissible_signatures(o.genus, s);
    } else {
      throw UsageError("signatures: give --order or all of --n, --m, --i");
    }
    if (f == "json") {
      json arr = json::array();
      for (const auto& s : sigs) {
        arr.push_back(to_json(s));
      }
      emit(o, arr.dump(2));
    } else {
      std::ostringstream os;
      for (const auto& s : sigs) {
        os << s.to_string() << "\n";
      }
      emit(o, os.str());
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite A_n, A_n x Z_m and A_n x| Z_m actions on surfaces"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App* sc) {
    sc->add_option("--n", o.n, "degree of the alternating group")->check(CLI::Range(1, 64));
    sc->add_option("--m", o.m, "order of the cyclic part")->check(CLI::PositiveNumber);
    sc->add_option("--i", o.i, "0 direct, 1 semidirect")->check(CLI::Range(0, 1));
  };
  auto add_io = [&](CLI::App* sc, const char* formats) {
    sc->add_option("--format", o.format, formats);
    sc->add_option("--out", o.out, "write the document here instead of standard output");
  };

  auto* validate = app.add_subcommand("validate", "check a data set and print its genus");
  validate->add_option("--type", o.type, "cyclic, edata or wlp");
  validate->add_option("--in", o.in, "JSON file, or '-' for standard input");
  validate->add_option("--text", o.text, "data set in bracket notation");
  add_io(validate, "text or json");

  auto* factor = app.add_subcommand("factor", "cyclic data set of the subgroup generated by an element");
  factor->add_option("--in", o.in, "E-data set file");
  factor->add_option("--text", o.text, "E-data set in bracket notation");
  factor->add_option("--element", o.element, "SIGMA|X, e.g. '(1 2 3 4 5)|1'");
  add_io(factor, "text or json");

  auto* lift = app.add_subcommand("lift", "weak-liftable pair of an E-data set");
  lift->add_option("--in", o.in, "E-data set file");
  lift->add_option("--text", o.text, "E-data set in bracket notation");
  add_io(lift, "json (default) or text");

  auto* equiv = app.add_subcommand("equiv", "test two data sets or two pairs for equivalence");
  equiv->add_option("--a", o.a, "first file or notation");
  equiv->add_option("--b", o.b, "second file or notation");
  equiv->add_option("--type", o.type, "edata (default) or wlp");
  add_io(equiv, "text or json");

  auto* classify = app.add_subcommand("classify", "all weak conjugacy classes at a genus");
  classify->add_option("--genus", o.genus, "surface genus")->check(CLI::PositiveNumber);
  add_group(classify);
  classify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  classify->add_option("--in", o.in, "stored JSON catalog to re-render");
  add_io(classify, "md (default), csv, json or text");

  auto* weakgen = app.add_subcommand("weakgen", "classes weakly generated by two cyclic data sets");
  weakgen->add_option("--genus", o.genus, "surface genus")->check(CLI::PositiveNumber);
  add_group(weakgen);
  weakgen->add_option("--df", o.df, "first cyclic data set (file or notation)");
  weakgen->add_option("--dg", o.dg, "second cyclic data set (file or notation)");
  add_io(weakgen, "text or json");

  auto* landau_cmd = app.add_subcommand("landau", "largest element order in the symmetric group");
  landau_cmd->add_option("--n", o.n, "degree")->required()->check(CLI::PositiveNumber);
  landau_cmd->add_option("--out", o.out, "output file");

  auto* signatures = app.add_subcommand("signatures", "signatures allowed by Riemann-Hurwitz");
  signatures->add_option("--genus", o.genus, "surface genus")->check(CLI::PositiveNumber);
  signatures->add_option("--order", o.order, "group order; periods range over its divisors");
  add_group(signatures);
  add_io(signatures, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*factor) return cmd_factor(o);
    if (*lift) return cmd_lift(o);
    if (*equiv) return cmd_equiv(o);
    if (*classify) return cmd_classify(o);
    if (*weakgen) return cmd_weakgen(o);
    if (*landau_cmd) return cmd_landau(o);
    if (*signatures) return cmd_signatures(o);
  } catch (const UsageError& e) {
    std::cerr << "altlift: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IndeterminateError& e) {
    std::cerr << "altlift: indeterminate: " << e.what() << "\n";
    return kExitIndeterminate;
  } catch (const Error& e) {
    // parse, domain and consistency failures all mean the input was bad
    std::cerr << "altlift: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const json::exception& e) {
    std::cerr << "altlift: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}
