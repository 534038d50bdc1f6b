#ifndef ALTLIFT_NOTATION_HPP_
#define ALTLIFT_NOTATION_HPP_

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "datasets.hpp"
#include "egroup.hpp"
#include "error.hpp"
#include "perm.hpp"

// Readers for the bracket notation used in tables:
//   cyclic      (10,3239;(1,10)^[5],(1,2)^[575])
//   alternating (4,0;[(1 4)(2 3);2]^[3],[(1 2 4);3])
//   general     ((4,3,0),0;[((1 2)(3 4),0);2,1],[(id,1);3,3])
// Orders in the entries are kept as given so validation can compare them;
// they may be omitted, as in [((1 2 3),2)].

namespace altlift {

  namespace detail {
    class Reader {
     public:
      explicit Reader(std::string s) : s_(std::move(s)) {}

      void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) {
          ++p_;
        }
      }
      bool peek(char c) {
        skip();
        return p_ < s_.size() && s_[p_] == c;
      }
      bool accept(char c) {
        if (peek(c)) {
          ++p_;
          return true;
        }
        return false;
      }
      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }
      bool accept_word(const std::string& w) {
        skip();
        if (s_.compare(p_, w.size(), w) == 0) {
          p_ += w.size();
          return true;
        }
        return false;
      }
      std::int64_t integer() {
        skip();
        std::size_t start = p_;
        if (p_ < s_.size() && s_[p_] == '-') {
          ++p_;
        }
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
          ++p_;
        }
        if (start == p_ || (p_ == start + 1 && s_[start] == '-')) {
          fail("expected an integer");
        }
        return std::stoll(s_.substr(start, p_ - start));
      }
      // "id", "()" or a run of parenthesized cycles
      std::string cycles() {
        skip();
        if (accept_word("id")) {
          return "id";
        }
        std::size_t start = p_;
        while (peek('(')) {
          std::size_t close = s_.find(')', p_);
          if (close == std::string::npos) {
            fail("unterminated cycle");
          }
          p_ = close + 1;
        }
        if (start == p_) {
          fail("expected a permutation");
        }
        return s_.substr(start, p_ - start);
      }
      std::int64_t power_suffix() {
        if (accept('^')) {
          expect('[');
          std::int64_t k = integer();
          expect(']');
          return k;
        }
        return 1;
      }
      void end() {
        skip();
        if (p_ != s_.size()) {
          fail("trailing text");
        }
      }
      [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(p_) + " in '" + s_ + "'");
      }
      // true if the text at the cursor is '(' followed by '(' or "id"
      bool nested_open() {
        skip();
        if (p_ >= s_.size() || s_[p_] != '(') {
          return false;
        }
        std::size_t q = p_ + 1;
        while (q < s_.size() && std::isspace(static_cast<unsigned char>(s_[q]))) {
          ++q;
        }
        return q < s_.size() && (s_[q] == '(' || s_.compare(q, 2, "id") == 0);
      }

     private:
      std::string s_;
      std::size_t p_ = 0;
    };
  }  // namespace detail

  inline CyclicDataSet parse_cyclic(const std::string& text) {
    detail::Reader r(text);
    r.expect('(');
    CyclicDataSet d;
    d.n = r.integer();
    r.expect(',');
    d.g0 = r.integer();
    r.expect(';');
    if (!r.accept('-')) {
      do {
        r.expect('(');
        CyclicPair p;
        p.c = r.integer();
        r.expect(',');
        p.nj = r.integer();
        r.expect(')');
        p.mult = r.power_suffix();
        d.pairs.push_back(p);
      } while (r.accept(','));
    }
    r.expect(')');
    r.end();
    return d;
  }

  inline EDataSet parse_edataset(const std::string& text) {
    detail::Reader r(text);
    r.expect('(');
    GroupSpec spec;
    if (r.accept('(')) {
      spec.n = static_cast<int>(r.integer());
      r.expect(',');
      spec.m = r.integer();
      r.expect(',');
      spec.i = static_cast<int>(r.integer());
      r.expect(')');
    } else {
      spec = GroupSpec{static_cast<int>(r.integer()), 1, 0};
    }
    spec.validate();
    r.expect(',');
    EDataSet d{spec, r.integer(), {}};
    r.expect(';');
    if (!r.accept('-')) {
      do {
        r.expect('[');
        Entry e;
        if (spec.m == 1 && !r.nested_open()) {
          e.elem = {Permutation::parse(r.cycles(), spec.n), 0};
        } else {
          r.expect('(');
          Permutation s = Permutation::parse(r.cycles(), spec.n);
          r.expect(',');
          e.elem = {s, mod(r.integer(), spec.m)};
          r.expect(')');
        }
        e.mj = 0;
        e.tj = 0;
        // orders may be left out: [((1 2 3),2)]
        if (r.accept(';')) {
          e.mj = r.integer();
          if (r.accept(',')) {
            e.tj = r.integer();
          } else if (spec.m == 1) {
            e.tj = 1;
          }
        }
        r.expect(']');
        e.mult = r.power_suffix();
        d.entries.push_back(e);
      } while (r.accept(','));
    }
    r.expect(')');
    r.end();
    return d;
  }

}  // namespace altlift

#endif  // ALTLIFT_NOTATION_HPP_
