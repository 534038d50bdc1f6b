// One PASS/FAIL line per criterion. The exit status ignores failures on
// the known-defect list below and nothing else.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace altlift;

namespace {
  using Clock = std::chrono::steady_clock;

  // time limits in seconds
  constexpr double kFactorLimit = 10;
  constexpr double kPsiLimit = 5;
  constexpr double kTableLimit = 600;
  constexpr double kInvolutionLimit = 60;

  // criterion -> why its reference value cannot be matched
  const std::map<int, std::string> kKnownDefects = {
      {1, "printed second factor omits (1,70); without it the residues sum to 69 mod 70 and the genus is 67613/2"},
      {3, "A_4 x Z_3 has 4 classes at genus 10, not 2; the two extra classes validate and are pairwise inequivalent; the central automorphisms through A_4/V_4 merge only two of them"},
      {4, "A_4 x Z_2 has 4 classes at genus 11, not 1; the three extra classes validate and are pairwise inequivalent"},
  };

  struct Outcome {
    bool pass = true;
    std::vector<std::string> detail;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
      if (!ok) {
        pass = false;
        detail.push_back(what);
      }
    }
  };

  EDataSet worked_example() {
    return parse_edataset("((7,10,0),1;[((1 2 3 4 5),1);10,10],[((1 2 3 4 5 6 7),1);70,10],[(id,-2);5,5])");
  }

  EDataSet a7z30(int i) {
    return parse_edataset("((7,30," + std::to_string(i)
                          + "),2;[((1 2 3),-1)],[((1 2 3 4 5),-3)],[((1 2)(3 4),-1)],[((1 2 3)(4 5 6),0)],[(id,5)])");
  }

  std::vector<std::string> read_rows(const std::string& name) {
    std::ifstream in(std::string(ALTLIFT_DATA_DIR) + "/" + name);
    return json::parse(in).at("rows").get<std::vector<std::string>>();
  }

  Outcome factor_criterion() {
    Outcome o;
    auto D = worked_example();
    auto v = validate_edataset(D);
    o.check(v.ok() && *v.genus == 33841, "validation genus is not 33841");
    GroupElement a{Permutation::parse("(1 2 3 4 5)", 7), 1}, b{Permutation::parse("(1 2 3 4 5 6 7)", 7), 1};
    auto fa = cyclic_factor(D, a);
    o.check(fa == parse_cyclic("(10,3239;(1,10)^[5],(1,2)^[575])"), "first factor " + fa.to_string());
    auto fb = cyclic_factor(D, b);
    auto printed = parse_cyclic("(70,298;(11,70),(51,70),(1,10)^[51],(2,5)^[360],(1,2)^[72])");
    o.check(fb == printed, "second factor is " + fb.to_string());
    return o;
  }

  Outcome psi_criterion() {
    Outcome o;
    const std::string direct_alt = "(7,86;[(1 2 3)(4 5 6);3]^[30])";
    const std::string semi_alt = "(7,86;[(1 4)(3 5);2]^[3],[(1 2 3)(4 5 6);3]^[30])";
    auto DG = parse_cyclic("(30,2;(29,30),(9,10),(29,30),(1,6))");
    std::string long_cycle = "(";
    for (int k = 1; k <= 30; ++k) {
      long_cycle += std::to_string(k) + (k < 30 ? " " : ")");
    }
    std::string split_cycle = "(1 2 3)(";
    for (int k = 4; k <= 33; ++k) {
      split_cycle += std::to_string(k) + (k < 33 ? " " : ")");
    }
    auto wd = psi(a7z30(0));
    o.check(wd.alt.to_string() == direct_alt, "direct alt " + wd.alt.to_string());
    o.check(wd.quotient_cyclic == DG, "direct D_G " + wd.quotient_cyclic.to_string());
    o.check(wd.cone_perm.to_string() == long_cycle, "direct Pi " + wd.cone_perm.to_string());
    auto ws = psi(a7z30(1));
    o.check(ws.alt.to_string() == semi_alt, "semidirect alt " + ws.alt.to_string());
    o.check(ws.quotient_cyclic == DG, "semidirect D_G " + ws.quotient_cyclic.to_string());
    o.check(ws.cone_perm.to_string() == split_cycle, "semidirect Pi " + ws.cone_perm.to_string());
    return o;
  }

  Outcome table_criterion(std::int64_t genus, const std::map<GroupSpec, std::size_t>& expected,
                          const std::string& rows_file) {
    Outcome o;
    auto recs = classify_all(genus, catalog_specs(genus));
    std::map<GroupSpec, const ClassificationRecord*> by_spec;
    for (const auto& r : recs) {
      o.check(r.complete, r.spec.display_name() + " search incomplete");
      if (!r.classes.empty()) {
        by_spec[r.spec] = &r;
        if (!expected.count(r.spec)) {
          o.check(false, r.spec.display_name() + " has " + std::to_string(r.classes.size()) + " unexpected classes");
        }
      }
    }
    for (const auto& [spec, n] : expected) {
      std::size_t got = by_spec.count(spec) ? by_spec[spec]->classes.size() : 0;
      o.check(got == n, spec.display_name() + ": " + std::to_string(got) + " classes, expected " + std::to_string(n));
    }
    for (const auto& row : read_rows(rows_file)) {
      auto D = parse_edataset(row);
      int hits = 0;
      if (by_spec.count(D.spec)) {
        for (const auto& c : by_spec[D.spec]->classes) {
          hits += equivalent(c.data, D).has_value() ? 1 : 0;
        }
      }
      o.check(hits == 1, row + " matches " + std::to_string(hits) + " computed classes");
    }
    return o;
  }

  Outcome involution_criterion() {
    Outcome o;
    CyclicDataSet DG = parse_cyclic("(2,0;(1,2)^[2])");
    auto nontrivial = [](const EDataSet& alt) {
      std::set<std::string> out;
      for (const auto& p : admissible_permutations(alt, 2)) {
        if (!p.is_identity()) {
          out.insert(p.to_string());
        }
      }
      return out;
    };
    auto verdict = [&](const EDataSet& alt, const char* pi) {
      return classify_involution_extension(alt, DG, ConePermutation::parse(pi, static_cast<int>(alt.r())));
    };
    const std::set<std::string> expected{"(1 2)", "(3 4)", "(1 2)(3 4)"};

    auto ico = parse_edataset("(5,0;[(1 2)(3 4);2]^[2],[(1 5 4 3 2);5],[(1 2 3 4 5);5])");
    o.check(*validate_edataset(ico).genus == 19, "icosahedral genus");
    o.check(nontrivial(ico) == expected, "icosahedral admissible set");
    auto Ds = parse_edataset("((5,2,1),0;[((1 4)(2 5),1);4,2],[((2 1 4 3 5),1);4,2],[((1 2 3 4 5),0);5,1])");
    auto Ds2 = parse_edataset("((5,2,1),0;[((1 2 4),1);2,2],[((1 2 5),1);2,2],[((1 3)(2 4),0);2,1],"
                              "[((1 2 4 5 3),0);5,1])");
    auto sym = enumerate_classes(19, {5, 2, 1});
    o.check(sym.complete && sym.classes.size() == 2, "Σ_5 at genus 19 has " + std::to_string(sym.classes.size()) + " classes");
    for (const auto* D : {&Ds, &Ds2}) {
      int hits = 0;
      for (const auto& c : sym.classes) {
        hits += equivalent(c.data, *D).has_value() ? 1 : 0;
      }
      o.check(hits == 1, D->to_string() + " matches " + std::to_string(hits) + " computed classes");
    }
    auto ws = psi(Ds), ws2 = psi(Ds2);
    o.check(quotient_signature(ws) == Signature{0, {4, 4, 5}} && ws.cone_perm.to_string() == "(3 4)"
                && ws.quotient_cyclic == DG,
            "Psi of the first symmetric data set");
    o.check(quotient_signature(ws2) == Signature{0, {2, 2, 2, 5}} && ws2.cone_perm.to_string() == "(1 2)(3 4)"
                && ws2.quotient_cyclic == DG,
            "Psi of the second symmetric data set");
    auto vs = classify_involution_extension(ws.alt, DG, ws.cone_perm);
    auto vs2 = classify_involution_extension(ws2.alt, DG, ws2.cone_perm);
    o.check(vs.kind == ExtensionKind::symmetric && vs.witness && equivalent(*vs.witness, Ds), "WLS verdict (0;4,4,5)");
    o.check(vs2.kind == ExtensionKind::symmetric && vs2.witness && equivalent(*vs2.witness, Ds2),
            "WLS verdict (0;2,2,2,5)");
    auto c = verdict(ico, "(1 2)");
    o.check(c.kind != ExtensionKind::symmetric && c.signature == Signature{0, {2, 10, 10}}
                && c.reason.find("no element in Σ_5 has order 10") != std::string::npos,
            "icosahedral (1 2): " + c.reason);
    if (!equivalent(ws.alt, ico)) {
      o.notes.push_back("the symmetric data sets map to " + ws.alt.to_string()
                        + ", whose 5-cycles lie in both A_5-classes; the listed one has c and c^-1, a single class");
    }

    auto dod = parse_edataset("(5,0;[(1 3)(2 4);2]^[2],[(3 5 4);3],[(3 4 5);3])");
    o.check(*validate_edataset(dod).genus == 11, "dodecahedral genus");
    o.check(nontrivial(dod) == expected, "dodecahedral admissible set");
    auto d = verdict(dod, "(1 2)");
    o.check(d.kind == ExtensionKind::symmetric && d.signature == Signature{0, {2, 6, 6}} && d.witness
                && equivalent(*d.witness, parse_edataset("((5,2,1),0;[((2 4 1 3 5),1);6,2],[((3 4 5),1);6,2],"
                                                         "[((1 3)(2 4),0);2,1])")),
            "dodecahedral (1 2)");
    auto e = verdict(dod, "(3 4)");
    o.check(e.kind == ExtensionKind::symmetric && e.signature == Signature{0, {3, 4, 4}}, "dodecahedral (3 4)");
    auto f = verdict(dod, "(1 2)(3 4)");
    o.check(f.kind == ExtensionKind::direct_product && f.signature == Signature{0, {2, 2, 2, 3}},
            "dodecahedral (1 2)(3 4)");
    return o;
  }

  std::vector<GroupElement> image_under(const GroupSpec& s, const AutomorphismSpec& chi, const EDataSet& D) {
    std::vector<GroupElement> out;
    for (const auto& e : D.flat()) {
      out.push_back(apply_automorphism(s, chi, e));
    }
    return out;
  }

  Outcome property_criterion(const std::vector<ClassificationRecord>& g10, const std::vector<ClassificationRecord>& g11) {
    Outcome o;
    std::mt19937_64 rng(20261014);
    std::vector<const ClassificationRecord*> all;
    for (const auto* v : {&g10, &g11}) {
      for (const auto& r : *v) {
        all.push_back(&r);
      }
    }
    std::vector<EDataSet> sets{worked_example(), a7z30(0), a7z30(1)};
    for (const auto* r : all) {
      for (const auto& c : r->classes) {
        sets.push_back(c.data);
      }
    }
    // RH consistency of factors and of Ψ
    for (const auto& D : sets) {
      std::int64_t g = *integral(D.genus_rational());
      auto reps = class_representatives(D.spec);
      std::shuffle(reps.begin(), reps.end(), rng);
      int done = 0;
      for (const auto& a : reps) {
        if (element_order(D.spec, a) == 1 || (D.spec.order() > 1000 && done >= 2)) {
          continue;
        }
        ++done;
        auto f = cyclic_factor(D, a);
        auto v = validate_cyclic(f);
        o.check(v.ok() && *v.genus == g, "factor genus " + D.to_string() + " at " + a.to_string());
      }
      if (D.spec.m >= 2) {
        auto w = psi(D);
        auto va = validate_edataset(w.alt);
        auto vq = validate_cyclic(w.quotient_cyclic);
        o.check(va.ok() && *va.genus == g && vq.ok() && *vq.genus == w.alt.g0, "psi genus " + D.to_string());
      }
    }
    // equivalence axioms, canonical forms, wlp_equivalent
    for (const auto& D : sets) {
      if (D.spec.order() > 5000) {
        continue;
      }
      auto autos = automorphism_classes(D.spec);
      std::vector<EDataSet> imgs{D};
      for (int k = 0; k < 3; ++k) {
        std::vector<int> img(D.spec.n);
        std::iota(img.begin(), img.end(), 1);
        std::shuffle(img.begin(), img.end(), rng);
        auto us = units(D.spec.m);
        AutomorphismSpec chi{Permutation::from_images(img), D.spec.m == 1 ? 1 : us[rng() % us.size()]};
        auto moved = image_under(D.spec, chi, imgs.back());
        std::shuffle(moved.begin(), moved.end(), rng);
        imgs.push_back(EDataSet::make(D.spec, D.g0, moved));
      }
      for (const auto& x : imgs) {
        for (const auto& y : imgs) {
          o.check(equivalent(x, y).has_value(), "equivalent fails on images of " + D.to_string());
          o.check(canonical_form(x) == canonical_form(y), "canonical form differs on images of " + D.to_string());
          if (D.spec.m >= 2) {
            o.check(wlp_equivalent(psi(x), psi(y)), "wlp_equivalent fails on images of " + D.to_string());
          }
        }
      }
    }
    for (const auto* r : all) {
      for (std::size_t a = 0; a < r->classes.size(); ++a) {
        for (std::size_t b = 0; b < r->classes.size(); ++b) {
          bool eq = equivalent(r->classes[a].data, r->classes[b].data).has_value();
          bool cf = canonical_form(r->classes[a].data) == canonical_form(r->classes[b].data);
          o.check(eq == cf && eq == (a == b), "canonical/equivalent disagree in " + r->spec.display_name());
        }
      }
    }
    // centralizer times orbit, generating pairs
    std::set<GroupSpec> specs;
    for (const auto* r : all) {
      specs.insert(r->spec);
    }
    for (GroupSpec s : {GroupSpec{7, 10, 0}, GroupSpec{7, 30, 1}, GroupSpec{6, 4, 1}, GroupSpec{8, 2, 1}}) {
      specs.insert(s);
    }
    for (const auto& s : specs) {
      auto [a, b] = generating_pair(s);
      o.check(generates(s, {a, b}), "generating_pair " + s.to_string());
      if (s.order() > 3000) {
        continue;
      }
      oracle::Group G(s);
      const auto& cls = G.classes();
      std::map<int, std::int64_t> size;
      for (int k = 0; k < G.size(); ++k) {
        size[cls[k]]++;
      }
      for (int k = 0; k < G.size(); k += 1 + G.size() / 200) {
        auto e = G.elem(k);
        GroupElement ge{oracle::to_lib(e.s), e.x};
        o.check(centralizer_order(s, ge) * size[cls[k]] == s.order(), "centralizer orbit " + s.to_string());
      }
    }
    // pruned enumeration against the brute force
    for (int n : {4, 5}) {
      for (std::int64_t g : {10, 11}) {
        GroupSpec s{n, 1, 0};
        oracle::Group G(s);
        std::set<oracle::BruteClass> lib;
        for (const auto& c : enumerate_classes(g, s).classes) {
          lib.insert(oracle::brute_key(G, c.data));
        }
        o.check(lib == oracle::brute_alternating_classes(n, g),
                "A_" + std::to_string(n) + " brute force disagrees at g=" + std::to_string(g));
      }
    }
    return o;
  }

  Outcome predicate_criterion(const std::vector<ClassificationRecord>& g10, const std::vector<ClassificationRecord>& g11) {
    Outcome o;
    for (const auto* v : {&g10, &g11}) {
      for (const auto& r : *v) {
        auto ob = order_bound_check(r);
        auto ex = exclusion_predicates(r);
        for (const auto& s : ob.violations) {
          o.check(false, s);
        }
        for (const auto& s : ex.violations) {
          o.check(false, s);
        }
      }
    }
    return o;
  }
}

int main() {
  int unexpected = 0;
  auto run = [&](int id, const std::string& name, double limit, const std::function<Outcome()>& f) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit > 0 && secs > limit) {
      o.check(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " " << id << " " << name << " (" << std::fixed << std::setprecision(2) << secs
         << " s)";
    if (!o.pass) {
      auto known = kKnownDefects.find(id);
      if (known != kKnownDefects.end()) {
        line << " [known defect: " << known->second << "]";
      } else {
        ++unexpected;
      }
    }
    std::cout << line.str() << "\n";
    for (const auto& d : o.detail) {
      std::cout << "    " << d << "\n";
    }
    for (const auto& d : o.notes) {
      std::cout << "    note: " << d << "\n";
    }
    std::cout.flush();
  };

  run(1, "cyclic factors of the A_7 x Z_10 example", kFactorLimit, factor_criterion);
  run(2, "weak-liftable pairs of the A_7 x Z_30 examples", kPsiLimit, psi_criterion);
  run(3, "genus 10 classification", kTableLimit, [] {
    return table_criterion(10,
                           {{{4, 1, 0}, 2}, {{5, 1, 0}, 1}, {{6, 1, 0}, 1}, {{4, 2, 1}, 2}, {{4, 3, 0}, 2},
                            {{4, 6, 1}, 1}, {{5, 3, 0}, 1}},
                           "table_g10.json");
  });
  run(4, "genus 11 classification", kTableLimit, [] {
    return table_criterion(11,
                           {{{4, 1, 0}, 1}, {{5, 1, 0}, 1}, {{4, 2, 1}, 2}, {{5, 2, 1}, 2}, {{4, 2, 0}, 1},
                            {{5, 2, 0}, 1}},
                           "table_g11.json");
  });
  run(5, "involution extensions", kInvolutionLimit, involution_criterion);

  std::vector<ClassificationRecord> g10, g11;
  run(6, "property suites", 0, [&] {
    g10 = classify_all(10, catalog_specs(10));
    g11 = classify_all(11, catalog_specs(11));
    return property_criterion(g10, g11);
  });
  run(7, "order and exclusion predicates", 0, [&] { return predicate_criterion(g10, g11); });
  return unexpected == 0 ? 0 : 1;
}
