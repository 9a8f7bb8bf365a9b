#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxcurves/poly.hpp"

namespace mc {

// Named constants substituted while parsing.
template <class F>
using Bindings = std::vector<std::pair<std::string, typename F::E>>;

namespace detail {

template <class F>
class ExprParser {
 public:
  ExprParser(const F& f, std::string_view src, std::string_view xname, std::string_view yname, const Bindings<F>& consts)
      : f_(f), s_(src), x_(xname), y_(yname), consts_(consts) {}

  BiPoly<F> run() {
    BiPoly<F> r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DataFormat("expression error (" + what + ") at " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  BiPoly<F> constant(const typename F::E& v) const {
    BiPoly<F> r;
    bipoly_add_term(f_, r, 0, 0, v);
    return bipoly_trim(f_, std::move(r));
  }

  BiPoly<F> expr() {
    BiPoly<F> r = term();
    while (true) {
      if (eat("+")) {
        r = bipoly_add(f_, std::move(r), term());
      } else if (eat("-")) {
        r = bipoly_add(f_, std::move(r), bipoly_scale(f_, term(), f_.neg(f_.one())));
      } else {
        return r;
      }
    }
  }

  BiPoly<F> term() {
    BiPoly<F> r = unary();
    while (true) {
      skip();
      if (s_.substr(pos_, 2) == "**") return r;
      if (eat("*")) {
        r = bipoly_mul(f_, r, unary());
      } else if (eat("/")) {
        BiPoly<F> d = unary();
        if (d.c.size() > 1 || (d.c.size() == 1 && d.c[0].size() > 1)) fail("division by a non-constant");
        if (d.is_zero()) throw BadCharacteristic("denominator vanishes mod p in '" + std::string(s_) + "'");
        r = bipoly_scale(f_, std::move(r), f_.inv(d.c[0][0]));
      } else {
        return r;
      }
    }
  }

  BiPoly<F> unary() {
    if (eat("-")) return bipoly_scale(f_, unary(), f_.neg(f_.one()));
    if (eat("+")) return unary();
    return power();
  }

  BiPoly<F> power() {
    BiPoly<F> base = atom();
    if (eat("**") || eat("^")) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      BiPoly<F> r = constant(f_.one());
      for (unsigned i = 0; i < e; ++i) r = bipoly_mul(f_, r, base);
      return r;
    }
    return base;
  }

  BiPoly<F> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      BiPoly<F> r = expr();
      if (!eat(")")) fail("missing ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(f_.from_decimal(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      BiPoly<F> r;
      if (name == x_) {
        bipoly_add_term(f_, r, 1, 0, f_.one());
        return r;
      }
      if (name == y_) {
        bipoly_add_term(f_, r, 0, 1, f_.one());
        return r;
      }
      for (const auto& [k, v] : consts_) {
        if (k == name) return constant(v);
      }
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  const F& f_;
  std::string_view s_;
  std::string_view x_;
  std::string_view y_;
  const Bindings<F>& consts_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
BiPoly<F> parse_bipoly(const F& f, std::string_view src, std::string_view xname = "x", std::string_view yname = "y",
                       const Bindings<F>& consts = {}) {
  return detail::ExprParser<F>(f, src, xname, yname, consts).run();
}

template <class F>
Poly<F> parse_poly(const F& f, std::string_view src, std::string_view xname = "x", const Bindings<F>& consts = {}) {
  BiPoly<F> b = detail::ExprParser<F>(f, src, xname, "", consts).run();
  std::vector<typename F::E> c;
  for (const auto& row : b.c) c.push_back(row.empty() ? f.zero() : row[0]);
  return poly_trim(f, std::move(c));
}

template <class F>
typename F::E parse_const(const F& f, std::string_view src, const Bindings<F>& consts = {}) {
  BiPoly<F> b = detail::ExprParser<F>(f, src, "", "", consts).run();
  return bipoly_coeff(f, b, 0, 0);
}

}  // namespace mc
