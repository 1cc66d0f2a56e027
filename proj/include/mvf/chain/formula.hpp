#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mvf/chain/base.hpp"
#include "mvf/exact/poly.hpp"

namespace mvf {

// Atoms of the quantifier-free part. Terms are polynomials in the bound
// variable y with rational coefficients.
struct Atom {
  enum class Kind { Zero, Nonzero, Gt, ValGe, ValGt, NthPower };
  Kind kind = Kind::Zero;
  int index = -1;  // base place index; unused for Zero/Nonzero
  Poly t1, t2;
  unsigned n = 0;  // NthPower exponent

  static Atom zero(Poly t) { return {Kind::Zero, -1, std::move(t), {}, 0}; }
  static Atom nonzero(Poly t) { return {Kind::Nonzero, -1, std::move(t), {}, 0}; }
  static Atom gt(int i, Poly t) { return {Kind::Gt, i, std::move(t), {}, 0}; }
  static Atom val_ge(int i, Poly a, Poly b) { return {Kind::ValGe, i, std::move(a), std::move(b), 0}; }
  static Atom val_gt(int i, Poly a, Poly b) { return {Kind::ValGt, i, std::move(a), std::move(b), 0}; }
  static Atom nth_power(int i, Poly t, unsigned n) { return {Kind::NthPower, i, std::move(t), {}, n}; }
};

bool operator==(const Atom& a, const Atom& b);
const char* atom_kind_name(Atom::Kind k);

class QFFormula {
 public:
  enum class Op { True, False, Atom, Not, And, Or };

  QFFormula() = default;  // True
  static QFFormula truth() { return QFFormula(); }
  static QFFormula falsity();
  static QFFormula atom(Atom a);
  static QFFormula negation(QFFormula f);
  static QFFormula conj(std::vector<QFFormula> parts);
  static QFFormula disj(std::vector<QFFormula> parts);
  static QFFormula exclusive_or(const QFFormula& a, const QFFormula& b);

  Op op() const { return op_; }
  const Atom& atom_value() const { return atom_; }
  const std::vector<QFFormula>& children() const { return kids_; }

  // Visit every atom.
  template <class F>
  void for_each_atom(F&& f) const {
    if (op_ == Op::Atom) f(atom_);
    for (const auto& k : kids_) k.for_each_atom(f);
  }
  std::string to_string() const;

  friend bool operator==(const QFFormula& a, const QFFormula& b);

 private:
  Op op_ = Op::True;
  Atom atom_;
  std::vector<QFFormula> kids_;
};

// Exists y: witness(y) = 0 and psi(y). The witness is monic over Q.
struct Sentence {
  Poly witness;
  QFFormula psi;

  // InvalidArgument unless the witness is monic of degree >= 1 and every
  // atom's index and kind fit the base.
  void validate(const BaseStructure& base) const;
  std::string to_string() const;
};

inline bool operator==(const Sentence& a, const Sentence& b) {
  return a.witness == b.witness && a.psi == b.psi;
}

// One sentence whose truth set is the union: witness w1*w2 and
// psi = (w1(y) = 0 and psi1) or (w2(y) = 0 and psi2).
Sentence disjoin(const Sentence& a, const Sentence& b);

// Boolean combinations of sentences, evaluated state by state at maximal
// states where each sentence has a definite truth value.
class SentenceExpr {
 public:
  enum class Op { Leaf, Not, And, Or };
  static SentenceExpr leaf(Sentence s);
  static SentenceExpr negation(SentenceExpr e);
  static SentenceExpr conj(SentenceExpr a, SentenceExpr b);
  static SentenceExpr disj(SentenceExpr a, SentenceExpr b);

  Op op() const { return op_; }
  const Sentence& sentence() const { return *leaf_; }
  const std::vector<SentenceExpr>& children() const { return kids_; }
  // Product of all leaf witnesses, for building a common closure.
  Poly witness_product() const;
  void validate(const BaseStructure& base) const;

 private:
  Op op_ = Op::Leaf;
  std::shared_ptr<const Sentence> leaf_;
  std::vector<SentenceExpr> kids_;
};

}  // namespace mvf
