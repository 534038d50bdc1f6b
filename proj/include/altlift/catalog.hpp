#ifndef ALTLIFT_CATALOG_HPP_
#define ALTLIFT_CATALOG_HPP_

#include <algorithm>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "classify.hpp"
#include "json_io.hpp"

namespace altlift {

  // Rows grouped as in the printed tables: alternating groups, then
  // symmetric groups, then the remaining extensions, each by (n, m, i).
  inline std::vector<ClassificationRecord> catalog_order(std::vector<ClassificationRecord> recs) {
    auto rank = [](const GroupSpec& s) {
      int kind = s.m == 1 ? 0 : (s.m == 2 && s.i == 1 ? 1 : 2);
      return std::make_tuple(kind, s.n, s.m, s.i);
    };
    std::stable_sort(recs.begin(), recs.end(), [&](const auto& a, const auto& b) { return rank(a.spec) < rank(b.spec); });
    return recs;
  }

  namespace detail {
    struct AltRow {
      int index;
      EDataSet data;
    };

    inline std::vector<AltRow> alternating_rows(const std::vector<ClassificationRecord>& recs) {
      std::vector<AltRow> out;
      for (const auto& r : recs) {
        if (r.spec.m != 1) {
          continue;
        }
        for (const auto& c : r.classes) {
          out.push_back({static_cast<int>(out.size()) + 1, c.data});
        }
      }
      return out;
    }

    inline std::string annotation(const ClassifiedClass& c, const std::vector<AltRow>& alts, bool markdown) {
      if (c.factors) {
        return "[" + c.factors->first.to_string() + "; " + c.factors->second.to_string() + "]";
      }
      if (c.wlp) {
        std::string name = c.wlp->alt.to_string();
        for (const auto& a : alts) {
          if (equivalent(c.wlp->alt, a.data)) {
            name = markdown ? "D_a^" + std::to_string(a.index) : "D_a" + std::to_string(a.index);
            break;
          }
        }
        return "[" + name + "; " + c.wlp->quotient_cyclic.to_string() + "]";
      }
      return "";
    }

    inline std::string csv_quote(const std::string& s) {
      std::string out = "\"";
      for (char ch : s) {
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      }
      return out + "\"";
    }
  }  // namespace detail

  inline std::string catalog_markdown(const std::vector<ClassificationRecord>& input) {
    auto recs = catalog_order(input);
    auto alts = detail::alternating_rows(recs);
    std::ostringstream os;
    os << "| Groups | Weak conjugacy classes | Cyclic factors or WLP |\n";
    os << "| --- | --- | --- |\n";
    int alt_no = 0;
    for (const auto& r : recs) {
      for (const auto& c : r.classes) {
        std::string text = c.data.to_string();
        if (r.spec.m == 1) {
          text = "D_a^" + std::to_string(++alt_no) + " = " + text;
        }
        os << "| " << r.spec.display_name() << " | " << text << " | " << detail::annotation(c, alts, true) << " |\n";
      }
    }
    for (const auto& r : recs) {
      for (const auto& f : r.flags) {
        os << "\n" << r.spec.display_name() << ": " << f << "\n";
      }
    }
    return os.str();
  }

  inline std::string catalog_csv(const std::vector<ClassificationRecord>& input) {
    auto recs = catalog_order(input);
    auto alts = detail::alternating_rows(recs);
    std::ostringstream os;
    os << "group,n,m,i,genus,signature,data_set,annotation\n";
    for (const auto& r : recs) {
      for (const auto& c : r.classes) {
        os << detail::csv_quote(r.spec.display_name()) << "," << r.spec.n << "," << r.spec.m << "," << r.spec.i << ","
           << r.genus << "," << detail::csv_quote(c.data.signature().sorted().to_string()) << ","
           << detail::csv_quote(c.data.to_string()) << "," << detail::csv_quote(detail::annotation(c, alts, false))
           << "\n";
      }
    }
    return os.str();
  }

  inline json catalog_json(const std::vector<ClassificationRecord>& input) {
    auto recs = catalog_order(input);
    json arr = json::array();
    for (const auto& r : recs) {
      arr.push_back(to_json(r));
    }
    return {{"records", arr}};
  }

  inline std::vector<ClassificationRecord> catalog_from_json(const json& j) {
    std::vector<ClassificationRecord> out;
    for (const auto& r : detail::field<json>(j, "records", "catalog")) {
      out.push_back(record_from_json(r));
    }
    return out;
  }

  // Only records that found something or gave up.
  inline std::vector<ClassificationRecord> nonempty(const std::vector<ClassificationRecord>& recs) {
    std::vector<ClassificationRecord> out;
    for (const auto& r : recs) {
      if (!r.classes.empty() || !r.complete) {
        out.push_back(r);
      }
    }
    return out;
  }

}  // namespace altlift

#endif  // ALTLIFT_CATALOG_HPP_
