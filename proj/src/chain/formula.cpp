#include "mvf/chain/formula.hpp"

#include "mvf/errors.hpp"

namespace mvf {

bool operator==(const Atom& a, const Atom& b) {
  return a.kind == b.kind && a.index == b.index && a.t1 == b.t1 && a.t2 == b.t2 && a.n == b.n;
}

const char* atom_kind_name(Atom::Kind k) {
  switch (k) {
    case Atom::Kind::Zero: return "zero";
    case Atom::Kind::Nonzero: return "nonzero";
    case Atom::Kind::Gt: return "gt";
    case Atom::Kind::ValGe: return "val_ge";
    case Atom::Kind::ValGt: return "val_gt";
    case Atom::Kind::NthPower: return "nth_power";
  }
  return "?";
}

QFFormula QFFormula::falsity() {
  QFFormula f;
  f.op_ = Op::False;
  return f;
}

QFFormula QFFormula::atom(Atom a) {
  QFFormula f;
  f.op_ = Op::Atom;
  f.atom_ = std::move(a);
  return f;
}

QFFormula QFFormula::negation(QFFormula g) {
  QFFormula f;
  f.op_ = Op::Not;
  f.kids_.push_back(std::move(g));
  return f;
}

QFFormula QFFormula::conj(std::vector<QFFormula> parts) {
  QFFormula f;
  f.op_ = Op::And;
  f.kids_ = std::move(parts);
  return f;
}

QFFormula QFFormula::disj(std::vector<QFFormula> parts) {
  QFFormula f;
  f.op_ = Op::Or;
  f.kids_ = std::move(parts);
  return f;
}

QFFormula QFFormula::exclusive_or(const QFFormula& a, const QFFormula& b) {
  return disj({conj({a, negation(b)}), conj({negation(a), b})});
}

bool operator==(const QFFormula& a, const QFFormula& b) {
  if (a.op_ != b.op_) return false;
  if (a.op_ == QFFormula::Op::Atom) return a.atom_ == b.atom_;
  return a.kids_ == b.kids_;
}

namespace {

std::string atom_string(const Atom& a) {
  std::string i = std::to_string(a.index);
  switch (a.kind) {
    case Atom::Kind::Zero: return a.t1.to_string("y") + " = 0";
    case Atom::Kind::Nonzero: return a.t1.to_string("y") + " != 0";
    case Atom::Kind::Gt: return a.t1.to_string("y") + " >_" + i + " 0";
    case Atom::Kind::ValGe:
      return "v_" + i + "(" + a.t1.to_string("y") + ") >= v_" + i + "(" + a.t2.to_string("y") + ")";
    case Atom::Kind::ValGt:
      return "v_" + i + "(" + a.t1.to_string("y") + ") > v_" + i + "(" + a.t2.to_string("y") + ")";
    case Atom::Kind::NthPower:
      return "P" + std::to_string(a.n) + "_" + i + "(" + a.t1.to_string("y") + ")";
  }
  return "?";
}

}  // namespace

std::string QFFormula::to_string() const {
  switch (op_) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return atom_string(atom_);
    case Op::Not: return "not (" + kids_[0].to_string() + ")";
    case Op::And:
    case Op::Or: {
      if (kids_.empty()) return op_ == Op::And ? "true" : "false";
      std::string s;
      for (size_t i = 0; i < kids_.size(); ++i) {
        if (i) s += op_ == Op::And ? " and " : " or ";
        s += "(" + kids_[i].to_string() + ")";
      }
      return s;
    }
  }
  return "?";
}

void Sentence::validate(const BaseStructure& base) const {
  if (witness.degree() < 1 || witness.lead() != 1)
    fail(ErrorCode::InvalidArgument, "witness polynomial must be monic of degree >= 1");
  psi.for_each_atom([&](const Atom& a) {
    if (a.kind == Atom::Kind::Zero || a.kind == Atom::Kind::Nonzero) return;
    if (a.index < 0 || a.index >= base.size())
      fail(ErrorCode::InvalidArgument, "atom refers to missing place index " + std::to_string(a.index));
    Theory k = base[a.index].kind;
    bool ok = true;
    switch (a.kind) {
      case Atom::Kind::Gt: ok = k == Theory::RCF; break;
      case Atom::Kind::ValGe:
      case Atom::Kind::ValGt: ok = k != Theory::RCF; break;
      case Atom::Kind::NthPower: ok = k == Theory::PCF && a.n >= 1; break;
      default: break;
    }
    if (!ok)
      fail(ErrorCode::InvalidArgument, std::string("atom ") + atom_kind_name(a.kind) +
                                           " does not fit place " + base[a.index].to_string());
  });
}

std::string Sentence::to_string() const {
  return "exists y: " + witness.to_string("y") + " = 0 and " + psi.to_string();
}

Sentence disjoin(const Sentence& a, const Sentence& b) {
  Sentence s;
  s.witness = a.witness * b.witness;
  s.psi = QFFormula::disj({QFFormula::conj({QFFormula::atom(Atom::zero(a.witness)), a.psi}),
                           QFFormula::conj({QFFormula::atom(Atom::zero(b.witness)), b.psi})});
  return s;
}

SentenceExpr SentenceExpr::leaf(Sentence s) {
  SentenceExpr e;
  e.op_ = Op::Leaf;
  e.leaf_ = std::make_shared<const Sentence>(std::move(s));
  return e;
}

SentenceExpr SentenceExpr::negation(SentenceExpr a) {
  SentenceExpr e;
  e.op_ = Op::Not;
  e.kids_.push_back(std::move(a));
  return e;
}

SentenceExpr SentenceExpr::conj(SentenceExpr a, SentenceExpr b) {
  SentenceExpr e;
  e.op_ = Op::And;
  e.kids_.push_back(std::move(a));
  e.kids_.push_back(std::move(b));
  return e;
}

SentenceExpr SentenceExpr::disj(SentenceExpr a, SentenceExpr b) {
  SentenceExpr e;
  e.op_ = Op::Or;
  e.kids_.push_back(std::move(a));
  e.kids_.push_back(std::move(b));
  return e;
}

Poly SentenceExpr::witness_product() const {
  if (op_ == Op::Leaf) return leaf_->witness;
  Poly p = Poly::constant(1);
  for (const auto& k : kids_) p = p * k.witness_product();
  return p;
}

void SentenceExpr::validate(const BaseStructure& base) const {
  if (op_ == Op::Leaf) leaf_->validate(base);
  for (const auto& k : kids_) k.validate(base);
}

}  // namespace mvf
